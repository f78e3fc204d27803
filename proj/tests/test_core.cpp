#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "hypow/comb.hpp"
#include "hypow/io.hpp"
#include "hypow/kgraph.hpp"
#include "hypow/rational.hpp"
#include "hypow/vertex_set.hpp"

using namespace hypow;

TEST_CASE("rationals normalize and compare exactly") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, 4) == Rat(1, -2));
  CHECK(Rat(0, 7) == Rat(0));
  CHECK(Rat(3, 7) + Rat(4, 7) == Rat(1));
  CHECK(Rat(1, 3) * Rat(3, 5) == Rat(1, 5));
  CHECK(Rat(1, 2) - Rat(2, 3) == Rat(-1, 6));
  CHECK(Rat(7, 3) / Rat(7, 6) == Rat(2));
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 2) < Rat(-1, 3));
  CHECK(Rat(5, 3).floor() == 1);
  CHECK(Rat(5, 3).ceil() == 2);
  CHECK(Rat(-5, 3).floor() == -2);
  CHECK(Rat(-5, 3).ceil() == -1);
  CHECK(Rat(6, 3).floor() == 2);
  CHECK(Rat(6, 3).ceil() == 2);
  CHECK(Rat(2, 3).pow(3) == Rat(8, 27));
  CHECK(Rat(5, 7).pow(0) == Rat(1));
  CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
}

TEST_CASE("rational parse and str round trip") {
  for (const Rat& q : {Rat(0), Rat(7), Rat(-3, 8), Rat(22, 7), Rat(-1)}) {
    CHECK(Rat::parse(q.str()) == q);
  }
  CHECK(Rat::parse("3/6") == Rat(1, 2));
  CHECK(Rat::parse("-4") == Rat(-4));
  CHECK_THROWS_AS(Rat::parse("x/2"), std::invalid_argument);
}

TEST_CASE("binomials match Pascal's rule") {
  std::map<std::pair<int, int>, long long> pascal;
  for (int n = 0; n <= 40; ++n)
    for (int r = 0; r <= n; ++r) {
      long long v = (r == 0 || r == n)
                        ? 1
                        : pascal[{n - 1, r - 1}] + pascal[{n - 1, r}];
      pascal[{n, r}] = v;
      CHECK(binom(n, r) == v);
    }
  CHECK(binom(5, -1) == 0);
  CHECK(binom(4, 7) == 0);
  CHECK(binom(-2, 1) == 0);
  CHECK_THROWS_AS(binom(80, 40), std::overflow_error);
}

TEST_CASE("vertex sets behave like sets of small ints") {
  VertexSet s;
  CHECK(s.empty());
  s.insert(3);
  s.insert(100);
  s.insert(3);
  CHECK(s.size() == 2);
  CHECK(s.contains(3));
  CHECK(!s.contains(4));
  CHECK(s.contains(100));
  s.erase(3);
  CHECK(!s.contains(3));
  CHECK(s.to_vector() == std::vector<int>{100});
  CHECK_THROWS_AS(s.insert(256), std::out_of_range);
  CHECK(!s.contains(-1));

  const VertexSet a({1, 2, 3});
  const VertexSet b({3, 4});
  CHECK((a & b).to_vector() == std::vector<int>{3});
  CHECK((a | b).to_vector() == std::vector<int>{1, 2, 3, 4});
  CHECK((a - b).to_vector() == std::vector<int>{1, 2});
  CHECK(VertexSet({3}).is_subset_of(a));
  CHECK(!a.is_subset_of(b));
  CHECK(a.intersects(b));
  CHECK(!VertexSet({9}).intersects(a));
  CHECK(a.min() == 1);
  CHECK(full_set(4).to_vector() == std::vector<int>{0, 1, 2, 3});
  CHECK(VertexSet({1, 2}).hash() == VertexSet({2, 1}).hash());
}

TEST_CASE("subset and permutation iteration") {
  const std::vector<int> elems = {2, 5, 7, 8, 11};
  std::vector<std::vector<int>> seen;
  for_each_subset(elems, 3, [&](const std::vector<int>& s) {
    seen.push_back(s);
    return true;
  });
  CHECK(static_cast<long long>(seen.size()) == binom(5, 3));
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(std::set<std::vector<int>>(seen.begin(), seen.end()).size() == seen.size());

  int count = 0;
  const bool finished = for_each_subset(elems, 2, [&](const std::vector<int>&) {
    return ++count < 4;
  });
  CHECK(!finished);
  CHECK(count == 4);

  int perms = 0;
  for_each_permutation({3, 1, 2}, [&](const std::vector<int>&) {
    ++perms;
    return true;
  });
  CHECK(perms == 6);
}

TEST_CASE("graphs canonicalize edges and validate input") {
  const KGraph H(5, 3, {{4, 2, 0}, {0, 1, 2}});
  CHECK(H.edges == std::vector<std::vector<int>>{{0, 1, 2}, {0, 2, 4}});
  CHECK(H.has_edge({2, 4, 0}));
  CHECK(!H.has_edge({1, 2, 4}));
  CHECK(H.has_edge_set(VertexSet({0, 1, 2})));
  CHECK_THROWS_AS(KGraph(5, 3, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(KGraph(5, 3, {{0, 1, 5}}), std::invalid_argument);
  CHECK_THROWS_AS(KGraph(5, 3, {{0, 1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(KGraph(5, 3, {{0, 1, 2}, {2, 1, 0}}), std::invalid_argument);
  CHECK(KGraph::complete(6, 3).edge_count() == binom(6, 3));
  CHECK(KGraph::complete(4, 4).edge_count() == 1);
}

TEST_CASE("extenders and support match direct counting") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 4);
    std::vector<int> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = i;
    std::vector<std::vector<int>> edges;
    for_each_subset(verts, 3, [&](const std::vector<int>& e) {
      if (rng() % 2) edges.push_back(e);
      return true;
    });
    const KGraph H(n, 3, edges);
    for_each_subset(verts, 2, [&](const std::vector<int>& f) {
      VertexSet expect;
      for (int v = 0; v < n; ++v) {
        if (v == f[0] || v == f[1]) continue;
        std::vector<int> e = {f[0], f[1], v};
        std::sort(e.begin(), e.end());
        if (H.has_edge(e)) expect.insert(v);
      }
      CHECK(H.extenders(VertexSet(f)) == expect);
      return true;
    });
    VertexSet supp;
    for (const auto& e : H.edges)
      for (int v : e) supp.insert(v);
    CHECK(H.support() == supp);
  }
}

TEST_CASE("shadow, codegree and link against naive enumeration") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 6 + static_cast<int>(rng() % 3);
    std::vector<int> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = i;
    std::vector<std::vector<int>> edges;
    for_each_subset(verts, 3, [&](const std::vector<int>& e) {
      if (rng() % 3) edges.push_back(e);
      return true;
    });
    const KGraph H(n, 3, edges);

    for (int j = 1; j <= 3; ++j) {
      std::set<std::vector<int>> expect;
      for (const auto& e : H.edges)
        for_each_subset(e, j, [&](const std::vector<int>& s) {
          expect.insert(s);
          return true;
        });
      const KGraph S = shadow(H, j);
      CHECK(std::set<std::vector<int>>(S.edges.begin(), S.edges.end()) == expect);
    }

    int mind = n;
    for_each_subset(verts, 2, [&](const std::vector<int>& f) {
      mind = std::min(mind, static_cast<int>(H.extenders(VertexSet(f)).size()));
      return true;
    });
    CHECK(min_codegree(H) == mind);

    const int v = static_cast<int>(rng() % n);
    const KGraph L = link_graph(H, v);
    CHECK(L.k == 2);
    for (const auto& f : L.edges) {
      std::vector<int> e = {f[0], f[1], v};
      std::sort(e.begin(), e.end());
      CHECK(H.has_edge(e));
    }
    long long link_count = 0;
    for (const auto& e : H.edges)
      if (std::find(e.begin(), e.end(), v) != e.end()) ++link_count;
    CHECK(L.edge_count() == link_count);
  }
}

TEST_CASE("degree restriction and removal keep vertex ids") {
  const KGraph H = KGraph::complete(6, 3);
  VertexSet W({0, 2, 4, 5});
  CHECK(degree_into(H, {0, 2}, W) == 2);
  VertexSet U({1, 3});
  const KGraph R = remove_vertices(H, U);
  CHECK(R.n == 6);
  CHECK(R.edge_count() == binom(4, 3));
  for (const auto& e : R.edges)
    for (int v : e) CHECK(!U.contains(v));

  std::vector<int> perm = {5, 4, 3, 2, 1, 0};
  const KGraph P = relabel(H, perm);
  CHECK(P.edge_count() == H.edge_count());
}

TEST_CASE("partner-set counts by brute force") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 7;
    std::vector<int> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = i;
    std::vector<std::vector<int>> edges;
    for_each_subset(verts, 2, [&](const std::vector<int>& e) {
      if (rng() % 3) edges.push_back(e);
      return true;
    });
    if (edges.empty()) continue;
    const KGraph H(n, 2, edges);
    const std::vector<int> e = H.edges[rng() % H.edges.size()];
    // k = 2: {a, b} counts when every mixed pair of some pairing is an edge
    long long expect = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (a == e[0] || a == e[1] || b == e[0] || b == e[1]) continue;
        if (!H.has_edge({a, b})) continue;
        const bool p1 = H.has_edge({a, e[1]}) && H.has_edge({e[0], b});
        const bool p2 = H.has_edge({b, e[1]}) && H.has_edge({e[0], a});
        if (p1 || p2) ++expect;
      }
    CHECK(k22_count(H, e) == expect);
  }
}

TEST_CASE("ordered shadow membership") {
  const KGraph H(5, 3, {{0, 1, 2}});
  CHECK(in_ordered_shadow(H, {1, 0}));
  CHECK(in_ordered_shadow(H, {1, 2}));
  CHECK(!in_ordered_shadow(H, {3, 4}));
  CHECK(!in_ordered_shadow(H, {1, 1}));
  CHECK_THROWS_AS(in_ordered_shadow(H, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("khg text round trip with comments") {
  const std::string text =
      "# sample graph\n"
      "5 3\n"
      "0 1 2  # an edge\n"
      "\n"
      "1 3 4\n";
  std::istringstream in(text);
  const KGraph H = read_khg(in);
  CHECK(H.n == 5);
  CHECK(H.k == 3);
  CHECK(H.edges == std::vector<std::vector<int>>{{0, 1, 2}, {1, 3, 4}});
  std::ostringstream out;
  write_khg(out, H);
  std::istringstream back(out.str());
  const KGraph H2 = read_khg(back);
  CHECK(H2.edges == H.edges);
}

TEST_CASE("khg rejections name the offending line") {
  const auto expect_line = [](const std::string& text, const std::string& what) {
    std::istringstream in(text);
    try {
      read_khg(in);
      FAIL("expected a parse failure");
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find(what) != std::string::npos);
    }
  };
  expect_line("3 2\n1 0\n", "line 2");
  expect_line("3 2\n0 1\n0 1\n", "line 3");
  expect_line("3 2\n0 3\n", "out of range");
  expect_line("3 2\n0 1 2\n", "expected 2");
  expect_line("nonsense\n", "integers");
  expect_line("", "header");
}

TEST_CASE("khg json mirror") {
  const KGraph H(4, 2, {{0, 1}, {2, 3}});
  const nlohmann::json j = khg_to_json(H);
  CHECK(j["n"] == 4);
  CHECK(j["k"] == 2);
  const KGraph H2 = khg_from_json(j);
  CHECK(H2.edges == H.edges);
  nlohmann::json bad = j;
  bad["edges"] = {{1, 0}};
  CHECK_THROWS_AS(khg_from_json(bad), std::invalid_argument);
  CHECK_THROWS_AS(khg_from_json(nlohmann::json{{"n", 3}}), std::invalid_argument);
}

TEST_CASE("tree format round trip and validation") {
  RTree T;
  T.n = 5;
  T.r = 3;
  T.edges = {{0, 1, 2}, {1, 2, 3}, {0, 1, 4}};
  std::ostringstream out;
  write_rtree(out, T);
  std::istringstream in(out.str());
  const RTree T2 = read_rtree(in);
  CHECK(T2.n == 5);
  CHECK(T2.r == 3);
  CHECK(T2.edges == T.edges);

  std::istringstream bad("4 3\n0 1 2\n0 3 3\n");
  CHECK_THROWS_AS(read_rtree(bad), std::invalid_argument);
}

TEST_CASE("vertex lists, parts files and digests") {
  CHECK(parse_vertex_list("3,1,2") == std::vector<int>{3, 1, 2});
  CHECK(parse_vertex_list("4 5") == std::vector<int>{4, 5});
  CHECK(parse_vertex_list("") == std::vector<int>{});
  CHECK_THROWS_AS(parse_vertex_list("1,x"), std::invalid_argument);

  std::istringstream parts(
      "0 1 2\n"
      "3 4 5\n"
      "\n"
      "0 3\n"
      "1 4\n");
  const auto tuples = read_parts(parts);
  REQUIRE(tuples.size() == 2);
  CHECK(tuples[0] == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}});
  CHECK(tuples[1] == std::vector<std::vector<int>>{{0, 3}, {1, 4}});

  const KGraph A = KGraph::complete(5, 2);
  const KGraph B(5, 2, {{0, 1}});
  CHECK(graph_digest(A) == graph_digest(KGraph::complete(5, 2)));
  CHECK(graph_digest(A) != graph_digest(B));
  CHECK(fnv1a_digest("").size() == 16);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "hypow/clique_graph.hpp"
#include "hypow/comb.hpp"
#include "hypow/kgraph.hpp"
#include "hypow/rational.hpp"

using namespace hypow;

namespace {

KGraph random_graph(std::mt19937_64& rng, int n, int k, int num, int den) {
  std::vector<int> verts(n);
  for (int i = 0; i < n; ++i) verts[i] = i;
  std::vector<std::vector<int>> edges;
  for_each_subset(verts, k, [&](const std::vector<int>& e) {
    if (static_cast<int>(rng() % den) < num) edges.push_back(e);
    return true;
  });
  return KGraph(n, k, edges);
}

bool naive_clique(const KGraph& H, const std::vector<int>& S) {
  if (static_cast<int>(S.size()) < H.k) return true;
  return for_each_subset(S, H.k,
                         [&](const std::vector<int>& f) { return H.has_edge(f); });
}

KGraph naive_clique_graph(const KGraph& H, int r) {
  std::vector<int> verts(H.n);
  for (int i = 0; i < H.n; ++i) verts[i] = i;
  std::vector<std::vector<int>> edges;
  for_each_subset(verts, r, [&](const std::vector<int>& S) {
    if (naive_clique(H, S)) edges.push_back(S);
    return true;
  });
  return KGraph(H.n, r, edges);
}

std::vector<int> all_vertices(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

TEST_CASE("clique graphs match direct subset enumeration") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 12; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 2);
    const int n = 6 + static_cast<int>(rng() % 3);
    const KGraph H = random_graph(rng, n, k, 3, 4);
    for (int r = k; r <= std::min(n, k + 2); ++r) {
      const KGraph got = clique_graph(H, r);
      const KGraph want = naive_clique_graph(H, r);
      CHECK(got.edges == want.edges);
      CHECK(clique_graph(H, r, 2).edges == want.edges);
    }
    CHECK(clique_graph(H, k).edges == H.edges);
  }
}

TEST_CASE("clique graph pinned values") {
  const KGraph C5(5, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  CHECK(clique_graph(C5, 3).edge_count() == 0);
  CHECK(clique_graph(KGraph::complete(6, 2), 3).edge_count() == binom(6, 3));
  CHECK(clique_graph(KGraph::complete(7, 3), 5).edge_count() == binom(7, 5));
  CHECK_THROWS_AS(clique_graph(KGraph::complete(5, 3), 2), std::invalid_argument);
}

TEST_CASE("clique cache answers match uncached checks") {
  std::mt19937_64 rng(12);
  const KGraph H = random_graph(rng, 8, 3, 2, 3);
  const CliqueCache cache(H);
  const std::vector<int> verts = all_vertices(H.n);
  for (int s = 0; s <= 5; ++s) {
    for_each_subset(verts, s, [&](const std::vector<int>& S) {
      const bool want = naive_clique(H, S);
      CHECK(cache.is_clique(VertexSet(S)) == want);
      if (want) {
        VertexSet expect;
        for (int v = 0; v < H.n; ++v) {
          if (std::find(S.begin(), S.end(), v) != S.end()) continue;
          std::vector<int> ext = S;
          ext.push_back(v);
          std::sort(ext.begin(), ext.end());
          if (naive_clique(H, ext)) expect.insert(v);
        }
        CHECK(cache.extenders(VertexSet(S)) == expect);
      }
      return true;
    });
  }
}

TEST_CASE("clique degree bound holds and is exact on complete graphs") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 7 + static_cast<int>(rng() % 2);
    const KGraph H = random_graph(rng, n, 3, 5, 6);
    const KGraph K4 = clique_graph(H, 4);
    int checked = 0;
    for (const auto& F : clique_graph(H, 3).edges) {
      if (checked >= 8) break;
      ++checked;
      const RDegBound b = rdeg_bound_check(H, F);

      long long actual = 0;
      for (int v = 0; v < n; ++v) {
        if (std::find(F.begin(), F.end(), v) != F.end()) continue;
        std::vector<int> e = F;
        e.push_back(v);
        std::sort(e.begin(), e.end());
        if (K4.has_edge(e)) ++actual;
      }
      CHECK(b.actual == actual);

      // discard, per (k-1)-subset f of F, the vertices that fail f
      long long bound = n - static_cast<long long>(F.size());
      for_each_subset(F, H.k - 1, [&](const std::vector<int>& f) {
        bound -= (n - (H.k - 1)) -
                 static_cast<long long>(H.extenders(VertexSet(f)).size());
        return true;
      });
      CHECK(b.bound == bound);
      CHECK(b.holds == (b.actual >= b.bound));
      CHECK(b.holds);
    }
  }

  const KGraph K = KGraph::complete(8, 3);
  const RDegBound b = rdeg_bound_check(K, {0, 1, 2});
  CHECK(b.actual == 5);
  CHECK(b.bound == 5);
  CHECK(b.holds);
  CHECK_THROWS_AS(rdeg_bound_check(KGraph(6, 3, {}), {0, 1, 2}),
                  std::invalid_argument);
}

TEST_CASE("common extension sets match brute force") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 8;
    const KGraph H = random_graph(rng, n, 2, 5, 6);
    if (min_codegree(H) == 0) continue;
    for (int j = 1; j <= 3; ++j) {
      const KGraph Kj = j == 1 ? KGraph::complete(n, 1) : clique_graph(H, j);
      bool done = false;
      for (const auto& C1 : Kj.edges) {
        if (done) break;
        for (const auto& C2 : Kj.edges) {
          if (C1 == C2) continue;
          std::vector<int> inter;
          std::set_intersection(C1.begin(), C1.end(), C2.begin(), C2.end(),
                                std::back_inserter(inter));
          if (static_cast<int>(inter.size()) != j - 1) continue;
          const CommonExtenders ce = common_extenders(H, C1, C2);

          VertexSet expect;
          const CliqueCache cache(H);
          for (int v = 0; v < n; ++v) {
            if (std::find(C1.begin(), C1.end(), v) != C1.end()) continue;
            if (std::find(C2.begin(), C2.end(), v) != C2.end()) continue;
            VertexSet s1(C1), s2(C2);
            s1.insert(v);
            s2.insert(v);
            if (cache.is_clique(s1) && cache.is_clique(s2)) expect.insert(v);
          }
          CHECK(ce.vertices == expect);

          const long long delta = min_codegree(H);
          const long long want =
              n - j - 1 - (binom(j, 1) + binom(j - 1, 0)) * (n - delta);
          CHECK(ce.bound == want);
          CHECK(static_cast<long long>(ce.vertices.size()) >= ce.bound);
          done = true;
          break;
        }
      }
    }
  }
}

TEST_CASE("common extension validation") {
  const KGraph K = KGraph::complete(7, 2);
  CHECK_THROWS_AS(common_extenders(K, {0, 1}, {2}), std::invalid_argument);
  CHECK_THROWS_AS(common_extenders(K, {0, 1}, {2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(common_extenders(K, {0, 0}, {0, 1}), std::invalid_argument);
  const KGraph sparse(7, 2, {{0, 1}});
  CHECK_THROWS_AS(common_extenders(sparse, {2, 3}, {3, 4}), std::invalid_argument);
  const CommonExtenders ce = common_extenders(K, {0, 1}, {1, 2});
  CHECK(ce.vertices.size() == 4);
}

TEST_CASE("pair clique counts match brute force") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 8;
    const int k = 2 + static_cast<int>(rng() % 2);
    const KGraph H = random_graph(rng, n, k, 4, 5);
    const int r = k + static_cast<int>(rng() % 2);
    const int u = static_cast<int>(rng() % n);
    int v = static_cast<int>(rng() % n);
    if (v == u) v = (v + 1) % n;

    std::vector<int> rest;
    for (int w = 0; w < n; ++w)
      if (w != u && w != v) rest.push_back(w);
    const CliqueCache cache(H);
    long long expect = 0;
    for_each_subset(rest, r - 1, [&](const std::vector<int>& C) {
      VertexSet cu(C), cv(C);
      cu.insert(u);
      cv.insert(v);
      if (cache.is_clique(cu) && cache.is_clique(cv)) ++expect;
      return true;
    });
    CHECK(common_clique_count(H, u, v, r) == expect);
  }
  CHECK_THROWS_AS(common_clique_count(KGraph::complete(5, 2), 1, 1, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(common_clique_count(KGraph::complete(5, 3), 0, 1, 2),
                  std::invalid_argument);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "hypow/comb.hpp"
#include "hypow/kgraph.hpp"
#include "hypow/rational.hpp"
#include "hypow/tilings.hpp"

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

// disjoint union of two complete 2-graphs on {0..a-1} and {a..a+b-1}
KGraph two_cliques(int a, int b) {
  std::vector<std::vector<int>> edges;
  for (int u = 0; u < a; ++u)
    for (int v = u + 1; v < a; ++v) edges.push_back({u, v});
  for (int u = a; u < a + b; ++u)
    for (int v = u + 1; v < a + b; ++v) edges.push_back({u, v});
  return KGraph(a + b, 2, edges);
}

// minimum (i+1)-degrees of the down-closure, recomputed from scratch
std::vector<std::optional<long long>> closure_degrees(const KGraph& Jr) {
  std::vector<std::set<std::vector<int>>> level(Jr.k + 1);
  for (const auto& e : Jr.edges)
    for (int i = 0; i <= Jr.k; ++i)
      for_each_subset(e, i, [&](const std::vector<int>& s) {
        level[i].insert(s);
        return true;
      });
  std::vector<std::optional<long long>> out(Jr.k);
  for (int i = 0; i < Jr.k; ++i) {
    if (level[i].empty()) continue;
    long long best = -1;
    for (const auto& f : level[i]) {
      long long d = 0;
      for (const auto& g : level[i + 1])
        if (std::includes(g.begin(), g.end(), f.begin(), f.end())) ++d;
      if (best < 0 || d < best) best = d;
    }
    out[i] = best;
  }
  return out;
}

// first uniform-density violation in the same (h, lex) order, or nothing
struct DenseViolation {
  int h = 0;
  std::vector<std::vector<int>> witness;
  long long edges = 0;
};

std::optional<DenseViolation> brute_dense_violation(
    const KGraph& G, const std::vector<std::vector<int>>& parts, const Rat& eps,
    const Rat& d) {
  const int k = G.k;
  const int m = static_cast<int>(parts.front().size());
  std::vector<std::vector<int>> W(k);
  std::optional<DenseViolation> found;
  auto crossing = [&]() {
    long long cnt = 0;
    for (const auto& e : G.edges) {
      bool good = true;
      for (int i = 0; i < k && good; ++i) {
        int hits = 0;
        for (int v : e)
          if (std::find(W[i].begin(), W[i].end(), v) != W[i].end()) ++hits;
        good = hits == 1;
      }
      if (good) ++cnt;
    }
    return cnt;
  };
  for (int h = 1; h <= m && !found; ++h) {
    if (Rat(h) < eps * Rat(m)) continue;
    std::function<bool(int)> pick = [&](int i) -> bool {
      if (i == k) {
        long long cnt = crossing();
        if (Rat(cnt) < d * Rat(h).pow(k)) {
          found = DenseViolation{h, W, cnt};
          return false;
        }
        return true;
      }
      return for_each_subset(parts[i], h, [&](const std::vector<int>& s) {
        W[i] = s;
        return pick(i + 1);
      });
    };
    pick(0);
  }
  return found;
}

// does the pattern embed onto exactly these vertices, avoiding forbidden images
bool embeds_on(const KGraph& G, const KGraph& Hpat, const std::vector<int>& verts,
               const std::set<std::vector<int>>& forbidden) {
  bool ok = false;
  for_each_permutation(verts, [&](const std::vector<int>& image) {
    bool good = true;
    for (const auto& e : Hpat.edges) {
      std::vector<int> img;
      for (int u : e) img.push_back(image[u]);
      std::sort(img.begin(), img.end());
      if (!G.has_edge(img) || forbidden.count(img)) {
        good = false;
        break;
      }
    }
    if (good) ok = true;
    return !ok;
  });
  return ok;
}

// largest vertex count coverable by disjoint pattern copies
int max_packing_cover(const KGraph& G, const KGraph& Hpat,
                      const std::set<std::vector<int>>& forbidden) {
  std::vector<int> verts(G.n);
  std::iota(verts.begin(), verts.end(), 0);
  std::vector<std::vector<int>> spots;
  for_each_subset(verts, Hpat.n, [&](const std::vector<int>& s) {
    if (embeds_on(G, Hpat, s, forbidden)) spots.push_back(s);
    return true;
  });
  std::vector<char> used(G.n, 0);
  std::function<int(size_t)> go = [&](size_t i) -> int {
    if (i == spots.size()) return 0;
    int best = go(i + 1);
    bool free = true;
    for (int v : spots[i])
      if (used[v]) free = false;
    if (free) {
      for (int v : spots[i]) used[v] = 1;
      best = std::max(best, Hpat.n + go(i + 1));
      for (int v : spots[i]) used[v] = 0;
    }
    return best;
  };
  return go(0);
}

}  // namespace

TEST_CASE("partition validation accepts covers and rejects malformed input") {
  validate_partition({5, {{0, 1}, {2, 3, 4}}});
  validate_partition({1, {{0}}});
  CHECK_THROWS_AS(validate_partition({3, {{0, 1, 2}, {}}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_partition({3, {{0, 1}, {1, 2}}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_partition({3, {{0, 1}, {2, 3}}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_partition({4, {{0, 1}, {2}}}), std::invalid_argument);
}

TEST_CASE("tiling threshold fractions") {
  CHECK(f_threshold(2, 2) == Rat(1, 2));
  CHECK(f_threshold(3, 3) == Rat(1, 2));
  CHECK(f_threshold(3, 4) == Rat(1, 5));
  CHECK(f_threshold(4, 5) == Rat(1, 7));
  CHECK(f_threshold(2, 5) == Rat(1, 5));
  CHECK_THROWS_AS(f_threshold(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(f_threshold(3, 2), std::invalid_argument);
}

TEST_CASE("binomial divisibility inequality holds across small parameters") {
  for (int k = 3; k <= 9; ++k)
    for (int r = k; r <= 9; ++r) {
      CAPTURE(r);
      CAPTURE(k);
      CHECK(binomial_inequality_check(r, k));
      // recheck the claim directly
      const long long lhs = binom(r - 1, k - 1) + binom(r - 2, k - 2);
      for (long long i = 0; i < r; ++i) CHECK(i * lhs >= r * binom(i, k - 1));
    }
  CHECK_THROWS_AS(binomial_inequality_check(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(binomial_inequality_check(3, 4), std::invalid_argument);
}

TEST_CASE("complex degree minima match a closure recount") {
  auto one = complex_degrees(KGraph(5, 3, {{0, 1, 2}}));
  REQUIRE(one.size() == 3);
  CHECK(one[0] == 3);  // the empty set sits under three vertices
  CHECK(one[1] == 2);
  CHECK(one[2] == 1);

  auto full = complex_degrees(KGraph::complete(6, 3));
  REQUIRE(full.size() == 3);
  CHECK(full[0] == 6);
  CHECK(full[1] == 5);
  CHECK(full[2] == 4);

  auto none = complex_degrees(KGraph(4, 3, {}));
  REQUIRE(none.size() == 3);
  for (const auto& d : none) CHECK(!d.has_value());

  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 8; ++trial) {
    KGraph Jr = random_graph(rng, 7, 3, 1, 3);
    auto got = complex_degrees(Jr);
    auto want = closure_degrees(Jr);
    REQUIRE(got.size() == want.size());
    for (size_t i = 0; i < got.size(); ++i) CHECK(got[i] == want[i]);
  }
}

TEST_CASE("index vectors count part intersections") {
  VertexPartition P{6, {{0, 1}, {2, 3, 4}, {5}}};
  CHECK(index_vector(P, {0, 2, 3}) == std::vector<long long>{1, 2, 0});
  CHECK(index_vector(P, {5}) == std::vector<long long>{0, 0, 1});
  CHECK(index_vector(P, {}) == std::vector<long long>{0, 0, 0});
  CHECK(index_vector(P, {0, 1, 2, 3, 4, 5}) == std::vector<long long>{2, 3, 1});
  CHECK_THROWS_AS(index_vector(P, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(index_vector(P, {6}), std::invalid_argument);
}

TEST_CASE("robust edge vectors keep exactly the frequent index vectors") {
  // three crossing edges, one inside the first part
  KGraph G(6, 2, {{0, 3}, {1, 4}, {2, 5}, {0, 1}});
  VertexPartition P{6, {{0, 1, 2}, {3, 4, 5}}};
  auto all = robust_edge_vectors(G, P, Rat(1, 36));
  CHECK(all == std::set<std::vector<long long>>{{1, 1}, {2, 0}});
  auto tight = robust_edge_vectors(G, P, Rat(3, 36));
  CHECK(tight == std::set<std::vector<long long>>{{1, 1}});  // 3 >= 3 stays
  auto over = robust_edge_vectors(G, P, Rat(3, 36) + Rat(1, 1000));
  CHECK(over.empty());

  std::mt19937_64 rng(405);
  for (int trial = 0; trial < 10; ++trial) {
    KGraph H = random_graph(rng, 6, 2, 1, 2);
    Rat mu(1 + static_cast<int>(rng() % 4), 36);
    auto got = robust_edge_vectors(H, P, mu);
    std::map<std::vector<long long>, long long> counts;
    for (const auto& e : H.edges) ++counts[index_vector(P, e)];
    std::set<std::vector<long long>> want;
    for (const auto& [v, c] : counts)
      if (Rat(c) >= mu * Rat(36)) want.insert(v);
    CHECK(got == want);
  }

  CHECK_THROWS_AS(robust_edge_vectors(G, VertexPartition{5, {{0, 1, 2}, {3, 4}}},
                                      Rat(1, 36)),
                  std::invalid_argument);
}

TEST_CASE("index lattice membership, completeness, transferrals") {
  auto L = IndexLattice::from_generators(2, {{2, 0}, {0, 2}});
  CHECK(L.contains({0, 0}));
  CHECK(L.contains({2, 0}));
  CHECK(L.contains({2, 2}));
  CHECK(L.contains({-2, 4}));
  CHECK(!L.contains({1, 1}));
  CHECK(!L.contains({2, 1}));
  CHECK(!L.is_complete(2));
  CHECK(!L.is_complete(3));
  CHECK(!L.find_transferral().has_value());

  L.add({1, 1});
  CHECK(L.contains({1, 1}));
  CHECK(L.contains({1, -1}));
  CHECK(L.is_complete(2));  // now every even-sum vector is in
  CHECK(!L.is_complete(3));
  auto tr = L.find_transferral();
  REQUIRE(tr.has_value());
  CHECK(*tr == std::make_pair(0, 1));

  auto D = IndexLattice::from_generators(3, {{1, -1, 0}, {0, 1, -1}});
  CHECK(D.contains({1, 0, -1}));
  CHECK(D.contains({1, 1, -2}));
  CHECK(!D.contains({1, 0, 0}));  // everything in D has zero coordinate sum
  CHECK(!D.is_complete(1));
  auto dt = D.find_transferral();
  REQUIRE(dt.has_value());
  CHECK(*dt == std::make_pair(0, 1));

  auto E = IndexLattice::from_generators(2, {});
  CHECK(E.contains({0, 0}));
  CHECK(!E.contains({1, 0}));
  CHECK(!E.find_transferral().has_value());
  E.add({0, 0});
  CHECK(!E.contains({0, 1}));

  // random sanity: integer combinations of the generators are members
  std::mt19937_64 rng(406);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::vector<long long>> gens(2, std::vector<long long>(3));
    for (auto& g : gens)
      for (auto& x : g) x = static_cast<long long>(rng() % 5) - 2;
    auto R = IndexLattice::from_generators(3, gens);
    const long long c0 = static_cast<long long>(rng() % 7) - 3;
    const long long c1 = static_cast<long long>(rng() % 7) - 3;
    std::vector<long long> v(3);
    for (int i = 0; i < 3; ++i) v[i] = c0 * gens[0][i] + c1 * gens[1][i];
    CHECK(R.contains(v));
  }

  CHECK_THROWS_AS(IndexLattice::from_generators(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(L.add({1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(L.contains({1}), std::invalid_argument);
}

TEST_CASE("divisibility barrier scan flags two-clique splits only") {
  // complete graphs have no barrier at any partition
  auto clean = divisibility_barrier_scan(KGraph::complete(6, 3), Rat(1, 1000), 1);
  CHECK(clean.empty());

  // two complete components force the component split and nothing else
  auto found = divisibility_barrier_scan(two_cliques(3, 5), Rat(1, 100), 1);
  REQUIRE(found.size() == 1);
  CHECK(found[0] == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5, 6, 7}});

  // the small side falls under the part-size floor
  CHECK(divisibility_barrier_scan(two_cliques(3, 5), Rat(1, 100), 4).empty());

  // same effect one uniformity up
  std::vector<std::vector<int>> e3;
  std::vector<int> left{0, 1, 2, 3, 4}, right{5, 6, 7, 8, 9};
  for_each_subset(left, 3, [&](const std::vector<int>& e) {
    e3.push_back(e);
    return true;
  });
  for_each_subset(right, 3, [&](const std::vector<int>& e) {
    e3.push_back(e);
    return true;
  });
  KGraph blocks(10, 3, e3);
  auto deep = divisibility_barrier_scan(blocks, Rat(1, 1000), 1);
  bool has_split = false;
  for (const auto& parts : deep) {
    CHECK(parts.size() >= 2);
    CHECK(parts.size() <= 3);
    int covered = 0;
    for (const auto& p : parts) {
      CHECK(!p.empty());
      covered += static_cast<int>(p.size());
    }
    CHECK(covered == 10);
    if (parts == std::vector<std::vector<int>>{left, right}) has_split = true;
  }
  CHECK(has_split);

  CHECK_THROWS_AS(divisibility_barrier_scan(blocks, Rat(1, 1000), 0),
                  std::invalid_argument);
}

TEST_CASE("pattern matchings agree with an exhaustive packing oracle") {
  KGraph c5(5, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  KGraph k3 = KGraph::complete(3, 2);
  CHECK(!find_H_matching(c5, k3, 3, {}).found);  // no triangle anywhere

  KGraph c6(6, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  KGraph k2 = KGraph::complete(2, 2);
  auto pm = find_H_matching(c6, k2, 6, {});
  REQUIRE(pm.found);
  REQUIRE(pm.copies.size() == 3);
  std::set<int> touched;
  for (const auto& img : pm.copies) {
    std::vector<int> e = img;
    std::sort(e.begin(), e.end());
    CHECK(c6.has_edge(e));
    for (int v : img) CHECK(touched.insert(v).second);
  }
  CHECK(touched.size() == 6);

  // forbidden edges steer the matching, or kill it
  KGraph c4(4, 2, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  auto steered = find_H_matching(c4, k2, 4, {{0, 1}, {2, 3}});
  REQUIRE(steered.found);
  for (const auto& img : steered.copies) {
    std::vector<int> e = img;
    std::sort(e.begin(), e.end());
    CHECK((e == std::vector<int>{1, 2} || e == std::vector<int>{0, 3}));
  }
  CHECK(!find_H_matching(c4, k2, 4, {{0, 1}, {1, 2}}).found);

  auto trivial = find_H_matching(c4, k2, 0, {});
  CHECK(trivial.found);
  CHECK(trivial.copies.empty());

  auto deep = find_H_matching(KGraph::complete(6, 3), KGraph::complete(3, 3), 6, {});
  REQUIRE(deep.found);
  CHECK(deep.copies.size() == 2);

  KGraph p3(3, 2, {{0, 1}, {1, 2}});
  std::mt19937_64 rng(407);
  for (int trial = 0; trial < 6; ++trial) {
    KGraph G = random_graph(rng, 7, 2, 1, 2);
    for (const KGraph& pat : {p3, k3}) {
      const int best = max_packing_cover(G, pat, {});
      for (int need : {0, 3, 6, 7}) {
        auto res = find_H_matching(G, pat, need, {});
        CHECK(res.found == (best >= need));
        if (res.found) {
          std::set<int> seen;
          for (const auto& img : res.copies) {
            for (int v : img) CHECK(seen.insert(v).second);
            for (const auto& e : pat.edges) {
              std::vector<int> im;
              for (int u : e) im.push_back(img[u]);
              std::sort(im.begin(), im.end());
              CHECK(G.has_edge(im));
            }
          }
          CHECK(static_cast<int>(seen.size()) >= need);
        }
      }
    }
  }

  CHECK_THROWS_AS(find_H_matching(c4, KGraph::complete(3, 3), 0, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(find_H_matching(c4, KGraph(0, 2, {}), 0, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(find_H_matching(c4, k2, -1, {}), std::invalid_argument);
  CHECK_THROWS_AS(find_H_matching(c4, k2, 5, {}), std::invalid_argument);
  CHECK_THROWS_AS(find_H_matching(c4, k2, 0, {{0}}), std::invalid_argument);
  CHECK_THROWS_AS(find_H_matching(c4, k2, 0, {{0, 9}}), std::invalid_argument);
}

TEST_CASE("bounded colourings verified by recount") {
  KGraph G = KGraph::complete(6, 2);
  std::vector<std::vector<int>> all_edges = G.edges;

  auto res = mu_bounded_colouring(G, all_edges, Rat(3), 11);
  REQUIRE(res.ok);
  CHECK(res.attempts == 1);
  CHECK(res.seed_used == 11);
  CHECK(res.palette == 12);  // ceil(14*15 / (3*6))
  REQUIRE(res.colour.size() == G.edges.size());
  const Rat edge_cap = Rat(3) * Rat(6);
  const Rat set_cap = Rat(3) * Rat(6);
  std::map<int, std::vector<int>> classes;
  for (size_t i = 0; i < G.edges.size(); ++i) {
    CHECK(res.colour[i] >= 0);
    CHECK(res.colour[i] < res.palette);
    classes[res.colour[i]].push_back(static_cast<int>(i));
  }
  long long worst_edges = 0, worst_sets = 0;
  for (const auto& [c, idxs] : classes) {
    worst_edges = std::max(worst_edges, static_cast<long long>(idxs.size()));
    CHECK(Rat(static_cast<long long>(idxs.size())) <= edge_cap);
    std::map<int, long long> per_vertex;
    for (int idx : idxs)
      for (int v : G.edges[idx]) ++per_vertex[v];
    for (const auto& [v, cnt] : per_vertex) {
      worst_sets = std::max(worst_sets, cnt);
      CHECK(Rat(cnt) <= set_cap);
    }
  }
  CHECK(res.max_colour_edges == worst_edges);
  CHECK(res.max_set_edges == worst_sets);

  auto again = mu_bounded_colouring(G, all_edges, Rat(3), 11);
  CHECK(again.colour == res.colour);
  CHECK(again.seed_used == res.seed_used);

  // edges outside I take consecutive fresh colours past the palette
  std::vector<std::vector<int>> I{{0, 1}, {2, 3}, {4, 5}};
  auto part = mu_bounded_colouring(G, I, Rat(3), 7);
  REQUIRE(part.ok);
  CHECK(part.palette == 3);  // ceil(14*3 / (3*6))
  std::set<std::vector<int>> iset(I.begin(), I.end());
  int fresh = part.palette;
  for (size_t i = 0; i < G.edges.size(); ++i) {
    if (iset.count(G.edges[i])) {
      CHECK(part.colour[i] < part.palette);
    } else {
      CHECK(part.colour[i] == fresh);
      ++fresh;
    }
  }

  auto zero = mu_bounded_colouring(G, I, Rat(0), 1);
  CHECK(!zero.ok);
  CHECK(zero.attempts == 0);
  CHECK(zero.palette == 0);

  // shared colours too scarce: every seed fails, all get tried
  auto scarce = mu_bounded_colouring(G, {{0, 1}}, Rat(1, 100), 1);
  CHECK(!scarce.ok);
  CHECK(scarce.attempts == 64);

  // no shared edges and a fresh singleton already over cap: one attempt settles it
  KGraph K5 = KGraph::complete(5, 2);
  auto hopeless = mu_bounded_colouring(K5, {}, Rat(1, 100), 1);
  CHECK(!hopeless.ok);
  CHECK(hopeless.attempts == 1);

  auto empty_ok = mu_bounded_colouring(K5, {}, Rat(1), 1);
  REQUIRE(empty_ok.ok);
  CHECK(empty_ok.palette == 0);
  std::set<int> distinct(empty_ok.colour.begin(), empty_ok.colour.end());
  CHECK(distinct.size() == K5.edges.size());

  CHECK_THROWS_AS(mu_bounded_colouring(KGraph(4, 2, {{0, 1}}), {{0, 2}}, Rat(1), 1),
                  std::invalid_argument);
}

TEST_CASE("uniform density check finds the first violation") {
  KGraph G = KGraph::complete(6, 2);
  std::vector<std::vector<int>> parts{{0, 1, 2}, {3, 4, 5}};
  CHECK(uniformly_dense_check(G, parts, Rat(1, 3), Rat(1)).ok);

  auto tight = uniformly_dense_check(G, parts, Rat(1, 3), Rat(1) + Rat(1, 100));
  REQUIRE(!tight.ok);
  CHECK(tight.h == 1);
  CHECK(tight.witness == std::vector<std::vector<int>>{{0}, {3}});
  CHECK(tight.edges == 1);

  KGraph c6(6, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  std::vector<std::vector<int>> parity{{0, 2, 4}, {1, 3, 5}};
  auto gap = uniformly_dense_check(c6, parity, Rat(1, 3), Rat(1, 10));
  REQUIRE(!gap.ok);
  CHECK(gap.h == 1);
  CHECK(gap.witness == std::vector<std::vector<int>>{{0}, {3}});
  CHECK(gap.edges == 0);

  // eps = 1 keeps only the full parts in play: 6 crossing pairs against 9
  CHECK(uniformly_dense_check(c6, parity, Rat(1), Rat(2, 3)).ok);
  auto full = uniformly_dense_check(c6, parity, Rat(1), Rat(2, 3) + Rat(1, 100));
  REQUIRE(!full.ok);
  CHECK(full.h == 3);
  CHECK(full.witness == parity);
  CHECK(full.edges == 6);

  // eps beyond 1 leaves nothing to check
  CHECK(uniformly_dense_check(KGraph(4, 2, {}), {{0, 1}, {2, 3}}, Rat(2), Rat(1)).ok);

  std::mt19937_64 rng(408);
  std::vector<std::vector<int>> tri{{0, 1}, {2, 3}, {4, 5}};
  for (int trial = 0; trial < 8; ++trial) {
    KGraph H = random_graph(rng, 6, 3, 2, 3);
    auto got = uniformly_dense_check(H, tri, Rat(1, 2), Rat(1, 4));
    auto want = brute_dense_violation(H, tri, Rat(1, 2), Rat(1, 4));
    CHECK(got.ok == !want.has_value());
    if (want) {
      CHECK(got.h == want->h);
      CHECK(got.witness == want->witness);
      CHECK(got.edges == want->edges);
    }
  }

  CHECK_THROWS_AS(uniformly_dense_check(G, {{0, 1}, {2, 3}, {4, 5}}, Rat(1), Rat(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(uniformly_dense_check(G, {{0}, {1, 2}}, Rat(1), Rat(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(uniformly_dense_check(G, {{0, 1}, {1, 2}}, Rat(1), Rat(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(uniformly_dense_check(G, {{0, 1}, {2, 9}}, Rat(1), Rat(1)),
                  std::invalid_argument);
}

TEST_CASE("matching density check reports the offending tuple") {
  KGraph G = KGraph::complete(8, 2);
  std::vector<std::vector<std::vector<int>>> M{{{0, 1}, {2, 3}}, {{4, 5}, {6, 7}}};
  auto ok = uniformly_dense_matching_check(G, M, Rat(1, 2), Rat(1));
  CHECK(ok.ok);
  CHECK(ok.reason.empty());
  CHECK(ok.bad_edge == -1);

  auto short_edge =
      uniformly_dense_matching_check(G, {{{0, 1, 2, 3}}, {{4, 5}, {6, 7}}}, Rat(1), Rat(1));
  CHECK(!short_edge.ok);
  CHECK(short_edge.reason == "matching edge 0 does not have k parts");
  CHECK(short_edge.bad_edge == 0);

  auto lopsided = uniformly_dense_matching_check(
      G, {{{0, 1}, {2}}, {{3, 4}, {5, 6}}}, Rat(1), Rat(1));
  CHECK(!lopsided.ok);
  CHECK(lopsided.reason == "parts differ in size");
  CHECK(lopsided.bad_edge == 0);

  auto reused = uniformly_dense_matching_check(
      G, {{{0, 1}, {2, 3}}, {{3, 4}, {6, 7}}}, Rat(1), Rat(1));
  CHECK(!reused.ok);
  CHECK(reused.reason == "parts do not partition the vertex set");
  CHECK(reused.bad_edge == 1);

  auto missing = uniformly_dense_matching_check(
      KGraph::complete(9, 2), M, Rat(1), Rat(1));
  CHECK(!missing.ok);
  CHECK(missing.reason == "parts do not partition the vertex set");

  // drop one crossing edge so the second tuple thins out
  std::vector<std::vector<int>> holed;
  for (const auto& e : G.edges)
    if (e != std::vector<int>{4, 6}) holed.push_back(e);
  auto bad = uniformly_dense_matching_check(KGraph(8, 2, holed), M, Rat(1, 2), Rat(1));
  REQUIRE(!bad.ok);
  CHECK(bad.reason == "matching edge 1 is not uniformly dense");
  CHECK(bad.bad_edge == 1);
  CHECK(bad.detail.h == 1);
  CHECK(bad.detail.witness == std::vector<std::vector<int>>{{4}, {6}});
  CHECK(bad.detail.edges == 0);
}

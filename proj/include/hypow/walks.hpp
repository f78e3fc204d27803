// Tight walks and paths, cycle powers, connecting-walk enumeration, walk
// lifting between clique graphs, and exact end-to-end path search.
#ifndef HYPOW_WALKS_HPP
#define HYPOW_WALKS_HPP

#include <optional>
#include <vector>

#include "hypow/clique_graph.hpp"
#include "hypow/kgraph.hpp"
#include "hypow/rational.hpp"

namespace hypow {

struct CyclePowerSpec {
  int n = 0;
  int k = 0;
  int j = 1;
};

// k-graph on n cyclically ordered vertices with every k-subset of every
// window of k+j-1 consecutive vertices; complete when k+j-1 >= n.
KGraph cycle_power(const CyclePowerSpec& spec);
inline KGraph cycle_power(int n, int k, int j) { return cycle_power({n, k, j}); }

// Linear analogue: no wraparound windows.
KGraph path_power(int n, int k, int j);

// Index of the first window of seq that is not an edge of K, or nullopt if
// seq is a walk.  Requires |seq| >= k.
std::optional<int> walk_violation(const KGraph& K, const std::vector<int>& seq);
bool is_walk(const KGraph& K, const std::vector<int>& seq);

struct WalkParts {
  std::vector<int> start;  // first k-1 vertices
  std::vector<int> end;    // last k-1 vertices
  VertexSet interior;      // V(seq) minus both end sets
};
// Requires |seq| >= 2(k-1).
WalkParts walk_parts(const std::vector<int>& seq, int k);

struct WalkCount {
  unsigned long long count = 0;
  bool saturated = false;
  std::vector<std::vector<int>> witnesses;
};

// Exact number of walks of the given length with sta = v1 and ter = v2
// (coordinatewise) and exactly q internal vertices, where every non-end
// position avoids forbidden ∪ v1 ∪ v2.  Internal positions may repeat each
// other; q counts distinct internal vertices.  Witnesses are collected up
// to witness_limit (collection disables memoization).
WalkCount enumerate_connecting_walks(const KGraph& K, const std::vector<int>& v1,
                                     const std::vector<int>& v2, int length,
                                     int q, const VertexSet& forbidden,
                                     int witness_limit = 0);

// Per-q counts (index q = 0..length-k+1) in one pass; shared core of
// enumerate_connecting_walks and is_connecting.
std::vector<WalkCount> count_connecting_walks_by_q(const KGraph& K,
                                                   const std::vector<int>& v1,
                                                   const std::vector<int>& v2,
                                                   int length,
                                                   const VertexSet& forbidden);

struct ConnectingReport {
  bool connecting = false;
  int q = -1;  // smallest witnessing q when connecting
  // Worst pair at the best q (diagnostics for failures).
  std::vector<int> worst_v1, worst_v2;
  unsigned long long worst_count = 0;
};

// True iff some q <= ell gives every ordered pair of shadow tuples at
// least (alpha·n)^q walks of length exactly ell with exactly q internal
// vertices avoiding both tuples.  Comparisons are exact rationals.
// Requires a nonempty shadow.
ConnectingReport is_connecting(const KGraph& K, const Rat& alpha, int ell);

struct LiftResult {
  bool ok = false;
  std::vector<int> walk;
  int fail_position = -1;  // 1-based j with no admissible x_j
};

// Lifts a walk W in K_{i-1}(H) of length l to a walk in K_i(H) of length
// i(l-i+1) by interleaving, after each step, a vertex x_j extending both
// the jth and (j+1)st windows of W to i-cliques.  The x_j are pairwise
// distinct, avoid forbidden ∪ V(W), and are smallest-id admissible.
// Requires i >= k+1 and walk length >= i.
LiftResult lift_walk(const KGraph& H, const std::vector<int>& W, int i,
                     const VertexSet& forbidden);

enum class SearchStatus { Found, NotFound, Inconclusive };

struct PathSearchResult {
  SearchStatus status = SearchStatus::NotFound;
  std::vector<int> seq;
  unsigned long long explored = 0;
};

// Tight path of exactly ell edges in K_r(H - U) from v1 to v2 (distinct
// vertices, prescribed ends, no U vertices).  Greedy end extension first,
// then exhaustive middle search, then a full exhaustive fallback.
// NotFound is definitive; Inconclusive means the node budget ran out.
PathSearchResult connect_pair(const KGraph& H, int r, const std::vector<int>& v1,
                              const std::vector<int>& v2, const VertexSet& U,
                              int ell, unsigned long long budget = 10'000'000);

// Spanning power-of-a-tight-cycle search (windows of r consecutive cycle
// vertices are r-cliques).  Exhaustive within budget.
PathSearchResult find_hamilton_power_cycle(const KGraph& H, int r,
                                           unsigned long long budget = 10'000'000);

// Spanning power path on exactly the vertices of `inside`.
PathSearchResult find_spanning_power_path(const KGraph& H, int r,
                                          const VertexSet& inside,
                                          unsigned long long budget = 10'000'000);

// Validators, independent of the searches: distinct vertices and every
// window of r consecutive entries (cyclic for cycles) an r-clique; when
// fewer than r vertices, the whole set must be a clique.
bool is_power_cycle(const KGraph& H, int r, const std::vector<int>& cyc);
bool is_power_path(const KGraph& H, int r, const std::vector<int>& seq);

}  // namespace hypow

#endif

// r-clique r-graphs K_r(H) and the clique-extension counting bounds.
#ifndef HYPOW_CLIQUE_GRAPH_HPP
#define HYPOW_CLIQUE_GRAPH_HPP

#include <unordered_map>
#include <vector>

#include "hypow/kgraph.hpp"

namespace hypow {

// r-graph whose edges are the r-sets of V(H) inducing a complete k-graph.
// Requires r >= k.  `threads` > 1 partitions the enumeration by first
// vertex; the result is canonical either way.
KGraph clique_graph(const KGraph& H, int r, int threads = 1);

// Memoized clique queries against a fixed graph.  extenders(S) is the set
// of v outside the clique S with S ∪ {v} again a clique (every vertex when
// |S| < k-1).  Not thread-safe; create one per worker.
class CliqueCache {
 public:
  explicit CliqueCache(const KGraph& H) : H_(&H) {}

  bool is_clique(const VertexSet& S) const;
  // Requires S to be a clique.
  const VertexSet& extenders(const VertexSet& S) const;

  const KGraph& graph() const { return *H_; }

 private:
  const KGraph* H_;
  mutable std::unordered_map<VertexSet, VertexSet, VertexSetHash> memo_;
};

// Lower bound on deg_{K_r}(F) derived by discarding, for each (k-1)-subset
// f of F, the at most (n-(k-1)) - deg_H(f) vertices outside F that fail f.
struct RDegBound {
  long long actual = 0;
  long long bound = 0;
  bool holds = false;  // actual >= bound
};
// F must be an (r-1)-clique of H with r-1 = |F|; r = |F|+1.
RDegBound rdeg_bound_check(const KGraph& H, const std::vector<int>& F);

struct CommonExtenders {
  VertexSet vertices;    // v outside C1 ∪ C2 extending both to (j+1)-cliques
  long long bound = 0;   // n-j-1 - (C(j,k-1)+C(j-1,k-2))·(n-δ(H)); may be < 0
};
// C1, C2 must be j-cliques with |C1 ∩ C2| = j-1 (validated).
CommonExtenders common_extenders(const KGraph& H, const std::vector<int>& C1,
                                 const std::vector<int>& C2);

// Number of (r-1)-cliques C avoiding {u,v} with C ∪ {u} and C ∪ {v} both
// r-cliques.  Requires u != v and r >= k.
long long common_clique_count(const KGraph& H, int u, int v, int r);

}  // namespace hypow

#endif

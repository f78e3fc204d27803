// k-uniform hypergraphs on dense vertex ids with shadows, codegrees and
// link graphs.
#ifndef HYPOW_KGRAPH_HPP
#define HYPOW_KGRAPH_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hypow/vertex_set.hpp"

namespace hypow {

// Immutable after construction.  Edges are canonical: each edge sorted
// ascending, the edge list sorted lexicographically, no duplicates.
struct KGraph {
  int n = 0;
  int k = 0;
  std::vector<std::vector<int>> edges;

  KGraph() = default;
  // Canonicalizes and validates; throws std::invalid_argument on edges of
  // the wrong size, out-of-range vertices, in-edge duplicates, or duplicate
  // edges.
  KGraph(int n, int k, std::vector<std::vector<int>> edge_list);

  static KGraph complete(int n, int k);

  long long edge_count() const { return static_cast<long long>(edges.size()); }

  bool has_edge(std::vector<int> e) const;  // any order, size k
  bool has_edge_set(const VertexSet& s) const;

  // Extension bitset of a (k-1)-set f: all v with f ∪ {v} an edge.
  // Returns the empty set for f outside the (k-1)-shadow.
  const VertexSet& extenders(const VertexSet& f) const;

  // Vertices covered by at least one edge.
  VertexSet support() const;

 private:
  // (k-1)-subset -> extension bitset, built once at construction.
  std::unordered_map<VertexSet, VertexSet, VertexSetHash> ext_;
};

// j-graph of all j-sets contained in some edge of H.  Requires 1 <= j <= k.
KGraph shadow(const KGraph& H, int j);

// True iff t has k-1 distinct entries whose set lies in the (k-1)-shadow.
// Throws on wrong tuple length.
bool in_ordered_shadow(const KGraph& H, const std::vector<int>& t);

// Minimum over all (k-1)-sets of the number of edges containing the set.
// Requires n >= k.
int min_codegree(const KGraph& H);

// |{v in W \ f : f ∪ {v} in H}| for a (k-1)-set f.
int degree_into(const KGraph& H, const std::vector<int>& f, const VertexSet& W);

// Number of k-sets B (disjoint from e; inside W when given) such that some
// pairing of e with B makes every one-per-pair selection an edge, i.e. the
// number of complete k-partite graphs with pair-sized parts through e.
// Requires e in H.
long long k22_count(const KGraph& H, const std::vector<int>& e,
                    const VertexSet* W = nullptr);

// (k-1)-graph of all f with f ∪ {v} in H; vertex ids unchanged.
KGraph link_graph(const KGraph& H, int v);

// Same vertex range, edges meeting U dropped.
KGraph remove_vertices(const KGraph& H, const VertexSet& U);

// Relabels vertices through perm (perm[v] = new id); used by tests for
// invariance checks.
KGraph relabel(const KGraph& H, const std::vector<int>& perm);

}  // namespace hypow

#endif

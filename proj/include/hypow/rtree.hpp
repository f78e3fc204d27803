// r-trees with explicit valid orderings, tree-width witness checks,
// layerings, tree surgery, and the strong-product decomposition.
#ifndef HYPOW_RTREE_HPP
#define HYPOW_RTREE_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hypow/kgraph.hpp"
#include "hypow/rational.hpp"

namespace hypow {

// Edges are stored in a valid ordering: edges[0] lists the root edge in
// vertex order, every later edge lists its witness first and its unique
// new vertex last.  Vertex ids live in [0, n) but need not be contiguous.
struct RTree {
  int n = 0;
  int r = 0;
  std::vector<std::vector<int>> edges;

  int vertex_count() const { return static_cast<int>(edges.size()) + r - 1; }
  std::vector<int> vertex_order() const;
  VertexSet vertex_set() const;
};

struct RTreeViolation {
  int edge_index = -1;
  std::string rule;  // "structure", "T1" or "T2"
};

// Checks the incremental r-tree conditions; reports the first failure.
std::optional<RTreeViolation> validate_rtree(const RTree& T);

// parent[i] = smallest j < i whose edge contains edge i's witness
// (parent[0] = -1).  Throws if the tree is invalid.
std::vector<int> rtree_parents(const RTree& T);

// Largest number of edges through a single vertex.
int max_vertex_degree(const RTree& T);

KGraph rtree_as_kgraph(const RTree& T);

// True iff every edge of G lies inside some edge of T, i.e. G is a
// subgraph of the k-shadow of T (the tree-width witness property).
bool admits(const KGraph& G, const RTree& T, int k);

// Re-expresses T in a valid ordering that starts at the given edge.
RTree reroot(const RTree& T, int edge_index);

// layers[i] holds L_{i+1}; root is the (r-1)-tuple with root[i] in
// L_{i+1}.  Valid when the layers partition V(T), |L_1| = 1, every vertex
// of L_{i+1} shares an edge with L_i, and every edge meets r consecutive
// layers once each.
struct Layering {
  std::vector<std::vector<int>> layers;
  std::vector<int> root;
};

// First violated rule as text, or nullopt for a valid layering.
std::optional<std::string> layering_violation(const RTree& T, const Layering& L);

// Layering rooted at x: the root edge occupies layers 1..r consistent
// with x, then every new vertex takes the slot forced by its witness
// layers, preferring the deeper slot when two are open.  Falls back to an
// exhaustive slot search if the preference ever fails validation.
Layering compute_layering(const RTree& T, const std::vector<int>& x);

// The j with s_i in L_{i+j-1} for all i, if any.
std::optional<int> layered_rank(const RTree& T, const Layering& L,
                                const std::vector<int>& s);

struct InducedSubtree {
  RTree sub;            // subtree spanned by the child closure of s
  Layering sub_layering;  // inherited layering, rooted at s
  RTree rest;           // T minus the subtree's edges
  bool sub_empty = false;
  bool rest_empty = false;
};

// Child closure below a layered tuple s: the edges extending s one layer
// deeper together with all their descendants.  A tuple without child
// edges yields the empty-subtree result rather than an error.
InducedSubtree induced_subtree(const RTree& T, const Layering& L,
                               const std::vector<int>& s);

struct FirstLayerCut {
  std::vector<int> edge_indices;           // edges meeting L_1
  std::vector<std::vector<int>> tuples;    // e minus L_1, in layer order
};

// Splits E(T) into the edges through L_1 and the subtrees below their
// rank-2 tuples; the size and partition conclusions are asserted.
FirstLayerCut cut_at_first_layer(const RTree& T, const Layering& L);

struct SmallSubtreeResult {
  bool found = false;
  std::vector<int> tuple;
  int subtree_edges = 0;
  std::string reason;  // set when not found
};

// Deepest-rank layered tuple whose subtree has at least ceil(gamma*n/(2*Delta))
// edges; verifies the at-most-floor(gamma*n) size bound and that the subtree
// meets the rest of the tree exactly in the tuple.
SmallSubtreeResult find_small_subtree(const RTree& T, const Layering& L,
                                      const Rat& gamma, int Delta);

struct StrongProduct {
  KGraph graph;  // T2 strong-product K_m
  RTree tree;    // witness tree with edges of size 2m (m for one blob)
};

// Replaces every vertex of the 2-uniform tree T2 by an m-clique, joins
// blobs of adjacent vertices completely, and builds a (2m)-tree containing
// every edge of the product.
StrongProduct strong_product_decomposition(const KGraph& T2, int m);

// Random valid r-tree on vertices 0..n-1: random vertex order, each new
// vertex attached through a random witness inside a random earlier edge.
RTree random_rtree(std::mt19937_64& rng, int n, int r);

}  // namespace hypow

#endif

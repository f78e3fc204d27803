// Codegree thresholds, clique/pattern matchings and factors, partition
// index vectors, robust edge-vector lattices with transferral tests,
// divisibility-barrier scans, bounded colourings, and the uniform-density
// predicates.
#ifndef HYPOW_TILINGS_HPP
#define HYPOW_TILINGS_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hypow/kgraph.hpp"
#include "hypow/rational.hpp"

namespace hypow {

struct VertexPartition {
  int n = 0;                            // ground set [0, n)
  std::vector<std::vector<int>> parts;  // disjoint, nonempty, covering
};

// Throws std::invalid_argument on empty parts, overlaps, out-of-range
// vertices, or incomplete coverage.
void validate_partition(const VertexPartition& P);

// 1 / (C(j-1,k-1) + C(j-2,k-2)), the codegree threshold coefficient.
Rat f_threshold(int k, int j);

// i*(C(r-1,k-1)+C(r-2,k-2)) >= r*C(i,k-1) for all 0 <= i < r, exactly.
bool binomial_inequality_check(int r, int k);

// Minimum (i+1)-degrees of the down-closure complex of an r-uniform graph,
// for i = 0..r-1; a level with no i-edges reports no value.
std::vector<std::optional<long long>> complex_degrees(const KGraph& Jr);

// Coordinatewise |S ∩ part|.
std::vector<long long> index_vector(const VertexPartition& P, const std::vector<int>& S);

// All index vectors v with at least mu*n^k edges e of G having
// index_vector(P, e) = v; exact rational comparison.
std::set<std::vector<long long>> robust_edge_vectors(const KGraph& G,
                                                     const VertexPartition& P,
                                                     const Rat& mu);

// Integer lattice with an echelon basis (one row per pivot column, zeros
// left of each pivot), supporting exact membership.
struct IndexLattice {
  int t = 0;
  std::vector<std::vector<long long>> rows;  // sorted by pivot column

  static IndexLattice from_generators(int t,
                                      const std::vector<std::vector<long long>>& gens);
  void add(std::vector<long long> v);
  bool contains(std::vector<long long> v) const;
  // every nonnegative vector with coordinate sum k lies in the lattice
  bool is_complete(int k) const;
  // some unit-vector difference u_i - u_j in the lattice
  std::optional<std::pair<int, int>> find_transferral() const;
};

// All partitions of V(Jr) into 2..r parts of size >= min_part whose
// robust-vector lattice is incomplete and transferral-free.  One-part
// partitions are never reported.
std::vector<std::vector<std::vector<int>>> divisibility_barrier_scan(
    const KGraph& Jr, const Rat& mu, int min_part);

struct MatchingResult {
  bool found = false;
  // copies[j][u] is the image of pattern vertex u
  std::vector<std::vector<int>> copies;
};

// Exhaustive search for vertex-disjoint copies of Hpat in G, none using an
// edge from `forbidden`, together covering at least min_covered vertices.
// A negative answer is definitive.
MatchingResult find_H_matching(const KGraph& G, const KGraph& Hpat, int min_covered,
                               const std::vector<std::vector<int>>& forbidden);

struct ColouringResult {
  bool ok = false;
  int palette = 0;             // shared colours are 0..palette-1
  std::vector<int> colour;     // per edge, aligned with G.edges
  unsigned long long seed_used = 0;
  int attempts = 0;
  long long max_colour_edges = 0;  // worst per-colour edge count seen
  long long max_set_edges = 0;     // worst per-(k-1)-set count within a colour
};

// Random palette of ceil(14|I| / (mu n^{k-1})) colours on I, a fresh unique
// colour on every other edge, then both boundedness conditions verified
// exactly; retries nearby seeds.
ColouringResult mu_bounded_colouring(const KGraph& G,
                                     const std::vector<std::vector<int>>& I,
                                     const Rat& mu, unsigned long long seed);

struct UDenseResult {
  bool ok = false;
  int h = 0;
  std::vector<std::vector<int>> witness;  // W_1..W_k of the first violation
  long long edges = 0;                    // crossing count at the witness
};

// For every common size h >= eps*m, every choice of W_i inside part i with
// |W_i| = h spans at least d*h^k crossing edges.
UDenseResult uniformly_dense_check(const KGraph& G,
                                   const std::vector<std::vector<int>>& parts,
                                   const Rat& eps, const Rat& d);

struct UDenseMatchingResult {
  bool ok = false;
  std::string reason;
  int bad_edge = -1;
  UDenseResult detail;
};

// Matching edges are k-tuples of parts: all parts together must partition
// V(G) into equal sizes, and each tuple must pass uniformly_dense_check.
UDenseMatchingResult uniformly_dense_matching_check(
    const KGraph& G, const std::vector<std::vector<std::vector<int>>>& M,
    const Rat& eps, const Rat& d);

}  // namespace hypow

#endif

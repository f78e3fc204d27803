// Absorption machinery: path-absorbing tuples and the cycle rewrite,
// absorber families, X-tuples and their Lambda counts, reservoirs, and the
// three-step Hamilton-power pipeline with exhaustive desk-scale fallbacks.
#ifndef HYPOW_ABSORBING_HPP
#define HYPOW_ABSORBING_HPP

#include <map>
#include <string>
#include <vector>

#include "hypow/kgraph.hpp"
#include "hypow/rational.hpp"
#include "hypow/rtree.hpp"
#include "hypow/walks.hpp"

namespace hypow {

struct PathAbsorber {
  std::vector<int> tuple;  // 2r-2 distinct vertices
  int target = -1;         // vertex it was selected for, when bound
};

// True iff both t and t with v spliced after its first r-1 entries are
// (r-k+1)th powers of tight paths in H (all r-windows are r-cliques).
bool is_path_absorbing(const KGraph& H, const std::vector<int>& t, int v, int r);

struct AbsorberList {
  std::vector<PathAbsorber> members;
  bool truncated = false;
};

// All v-path-absorbing (2r-2)-tuples in lexicographic order, up to limit
// (limit <= 0: unlimited), pruned by checking each clique window as soon
// as it completes.
AbsorberList enumerate_path_absorbers(const KGraph& H, int v, int r, long long limit);

struct AbsorberFamily {
  std::vector<PathAbsorber> members;   // pairwise vertex-disjoint
  std::map<int, int> coverage;         // vertex -> members absorbing it
};

struct FamilyResult {
  bool ok = false;
  AbsorberFamily family;
  int bottleneck = -1;  // least-covered vertex when infeasible
};

// Greedy family selection: repeatedly give the least-covered vertex its
// lexicographically first absorber disjoint from everything chosen.
FamilyResult select_family(const KGraph& H, int r, int per_vertex, int cap);

struct AbsorbOutcome {
  bool ok = false;
  std::vector<int> cycle;
  int stuck = -1;                     // vertex with no usable absorber
  std::map<int, int> remaining;       // coverage left when stuck
  std::vector<PathAbsorber> used;     // members consumed, in absorption order
};

// Inserts x at the midpoint of a family member that absorbs x and sits as
// a consecutive segment of the cycle (earliest segment wins); the member
// is consumed.  The rewritten cycle is revalidated.
AbsorbOutcome absorb_step(const KGraph& H, const std::vector<int>& cycle,
                          AbsorberFamily& A, int x);

// Absorbs the leftover vertices in input order after checking the segment,
// disjointness and availability preconditions.
AbsorbOutcome absorb_all(const KGraph& H, const std::vector<int>& cycle,
                         AbsorberFamily A, const std::vector<int>& leftover);

// X-tuple conditions for an r-uniform K: t = (u_1..u_h, u*) with
// (A) target's first r-1 vertices plus u* forming an edge of K, and
// (B) a copy of X on {u_1..u_h} inside the link intersection K(v_r)∩K(u*).
bool is_absorbing_xtuple(const KGraph& K, const std::vector<int>& t, const RTree& X,
                         const std::vector<int>& target);

struct LambdaResult {
  std::vector<std::vector<int>> tuples;
  bool truncated = false;
};

// Exact enumeration of the absorbing X-tuples for the target, outer loop
// over u*, then copies of X found by backtracking along X's vertex order;
// limit <= 0 means unlimited.  Requires the target's (r-1)-prefix to lie
// in the (r-1)-shadow of K.
LambdaResult enumerate_lambda_X(const KGraph& K, const RTree& X,
                                const std::vector<int>& target, long long limit);

// True iff the phi-preimage of t is an X-tuple of T: the preimage of u*
// has link exactly the preimage of (u_1..u_h) carrying an ordered copy
// of X along X's vertex order.
bool is_x_covered(const std::map<int, int>& phi, const RTree& T,
                  const std::vector<int>& t, const RTree& X);

struct Reservoir {
  VertexSet W;
  Rat gamma;
  Rat mu;
};

struct ReservoirResult {
  bool ok = false;
  Reservoir reservoir;
  unsigned long long seed_used = 0;
  int attempts = 0;
  // failure counts per condition across attempts
  int size_failures = 0;
  int codegree_failures = 0;
  int pair_degree_failures = 0;
};

// Exact check of the three reservoir conditions for a candidate W:
// size within (gamma +- mu)n, every shadow codegree into W proportional up
// to mu, every edge's partner-set count into W proportional up to mu.
// Optional counters record which condition failed.
bool verify_reservoir(const KGraph& H, const VertexSet& W, const Rat& gamma,
                      const Rat& mu, int* size_fail = nullptr,
                      int* codegree_fail = nullptr, int* pair_fail = nullptr);

// Samples W vertexwise with probability gamma (seeded), then verifies the
// size, codegree-proportionality and partner-count-proportionality
// conditions exactly in rationals; retries nearby seeds.
ReservoirResult reservoir_sample(const KGraph& H, const Rat& gamma, const Rat& mu,
                                 unsigned long long seed);

struct PipelineParams {
  Rat gamma = Rat(1, 2);
  Rat mu = Rat(1, 4);
  int per_vertex = 1;
  int family_cap = 0;  // 0: number of vertices
  int ell = 0;         // connector length; 0: r-1
  unsigned long long seed = 1;
  unsigned long long budget = 10'000'000;
};

struct StageReport {
  std::string name;
  bool ok = false;
  bool fell_back = false;
  std::string note;
};

struct PipelineResult {
  SearchStatus status = SearchStatus::NotFound;
  std::vector<int> cycle;
  std::vector<StageReport> stages;
  std::vector<std::vector<int>> absorbers_used;
  VertexSet reservoir;
};

// Step 1: reservoir and connected absorber path; Step 2: spanning power
// path on the rest, closed through the reservoir into a cycle; Step 3:
// absorb the leftover.  Any failing stage falls back to the exhaustive
// spanning-cycle search; NotFound is reported only when that search also
// exhausts.
PipelineResult hamilton_power_pipeline(const KGraph& H, int r, int k,
                                       const PipelineParams& params);

}  // namespace hypow

#endif

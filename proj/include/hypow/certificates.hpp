// Verifiable result records bound to their input graph by content digest.
#ifndef HYPOW_CERTIFICATES_HPP
#define HYPOW_CERTIFICATES_HPP

#include <string>
#include <vector>

#include "hypow/absorbing.hpp"
#include "hypow/kgraph.hpp"
#include "hypow/rtree.hpp"

#include "json.hpp"

namespace hypow {

// kind is one of cycle-power, path-power, matching, walk, rtree-admit,
// barrier, reservoir; payload is kind-specific; digest is the content hash
// of the input graph; verdict is recorded only after verification.
struct Certificate {
  std::string kind;
  std::string digest;
  nlohmann::json payload;
  bool verdict = false;
};

nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

// Re-runs the kind-specific validator against the graph.  Malformed or
// tampered payloads verify false; a digest mismatch or unknown kind is an
// input error and throws std::invalid_argument.
bool verify_certificate(const Certificate& cert, const KGraph& graph);

// Builders: fill the payload, stamp the digest, verify, record the verdict.
Certificate make_cycle_power_certificate(const KGraph& H, int r,
                                         const std::vector<int>& cycle,
                                         bool spanning);
Certificate make_path_power_certificate(const KGraph& H, int r,
                                        const std::vector<int>& seq);
Certificate make_walk_certificate(const KGraph& K, const std::vector<int>& seq);
Certificate make_matching_certificate(const KGraph& G, const KGraph& pattern,
                                      const std::vector<std::vector<int>>& copies,
                                      int min_covered,
                                      const std::vector<std::vector<int>>& forbidden);
Certificate make_rtree_admit_certificate(const KGraph& G, const RTree& T, int k);
Certificate make_barrier_certificate(const KGraph& J, const Rat& mu,
                                     const std::vector<std::vector<int>>& parts);
Certificate make_reservoir_certificate(const KGraph& H, const VertexSet& W,
                                       const Rat& gamma, const Rat& mu);

// Spanning cycle-power certificate carrying the pipeline's stage reports
// and the absorbers actually consumed.
Certificate pipeline_certificate(const KGraph& H, int r, const PipelineResult& pr);

}  // namespace hypow

#endif

#include "hypow/certificates.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hypow/io.hpp"
#include "hypow/tilings.hpp"
#include "hypow/walks.hpp"

namespace hypow {

namespace {

Rat rat_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  return Rat::parse(j.get<std::string>());
}

bool verify_cycle_power(const Certificate& c, const KGraph& H) {
  const int r = c.payload.at("r").get<int>();
  const auto cyc = c.payload.at("cycle").get<std::vector<int>>();
  if (!is_power_cycle(H, r, cyc)) return false;
  if (c.payload.value("spanning", false) && static_cast<int>(cyc.size()) != H.n)
    return false;
  return true;
}

bool verify_path_power(const Certificate& c, const KGraph& H) {
  const int r = c.payload.at("r").get<int>();
  const auto seq = c.payload.at("seq").get<std::vector<int>>();
  return is_power_path(H, r, seq);
}

bool verify_walk(const Certificate& c, const KGraph& K) {
  const auto seq = c.payload.at("seq").get<std::vector<int>>();
  if (static_cast<int>(seq.size()) < K.k) return false;
  return is_walk(K, seq);
}

bool verify_matching(const Certificate& c, const KGraph& G) {
  const KGraph pat = khg_from_json(c.payload.at("pattern"));
  if (pat.k != G.k) return false;
  const auto copies = c.payload.at("copies").get<std::vector<std::vector<int>>>();
  const int min_covered = c.payload.at("min_covered").get<int>();
  std::set<std::vector<int>> forbidden;
  if (c.payload.contains("forbidden")) {
    for (auto e : c.payload.at("forbidden").get<std::vector<std::vector<int>>>()) {
      std::sort(e.begin(), e.end());
      forbidden.insert(e);
    }
  }
  VertexSet used;
  for (const auto& copy : copies) {
    if (static_cast<int>(copy.size()) != pat.n) return false;
    for (int v : copy) {
      if (v < 0 || v >= G.n || used.contains(v)) return false;
      used.insert(v);
    }
    for (const auto& pe : pat.edges) {
      std::vector<int> img;
      for (int u : pe) img.push_back(copy[u]);
      std::sort(img.begin(), img.end());
      if (!G.has_edge(img)) return false;
      if (forbidden.count(img)) return false;
    }
  }
  return static_cast<int>(used.size()) >= min_covered;
}

bool verify_rtree_admit(const Certificate& c, const KGraph& G) {
  const auto& jt = c.payload.at("tree");
  RTree T;
  T.n = jt.at("n").get<int>();
  T.r = jt.at("r").get<int>();
  T.edges = jt.at("edges").get<std::vector<std::vector<int>>>();
  if (validate_rtree(T)) return false;
  const int k = c.payload.at("k").get<int>();
  return admits(G, T, k);
}

bool verify_barrier(const Certificate& c, const KGraph& J) {
  const Rat mu = rat_from_json(c.payload.at("mu"));
  VertexPartition P;
  P.n = J.n;
  P.parts = c.payload.at("parts").get<std::vector<std::vector<int>>>();
  validate_partition(P);
  const int t = static_cast<int>(P.parts.size());
  if (t < 2) return false;
  const auto vectors = robust_edge_vectors(J, P, mu);
  const IndexLattice L = IndexLattice::from_generators(
      t, std::vector<std::vector<long long>>(vectors.begin(), vectors.end()));
  return !L.is_complete(J.k) && !L.find_transferral().has_value();
}

bool verify_reservoir_cert(const Certificate& c, const KGraph& H) {
  const Rat gamma = rat_from_json(c.payload.at("gamma"));
  const Rat mu = rat_from_json(c.payload.at("mu"));
  VertexSet W;
  for (int v : c.payload.at("W").get<std::vector<int>>()) {
    if (v < 0 || v >= H.n) return false;
    W.insert(v);
  }
  return verify_reservoir(H, W, gamma, mu);
}

}  // namespace

nlohmann::json certificate_to_json(const Certificate& c) {
  nlohmann::json j;
  j["kind"] = c.kind;
  j["digest"] = c.digest;
  j["payload"] = c.payload;
  j["verdict"] = c.verdict;
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
  Certificate c;
  c.kind = j.at("kind").get<std::string>();
  c.digest = j.at("digest").get<std::string>();
  c.payload = j.at("payload");
  c.verdict = j.at("verdict").get<bool>();
  return c;
}

bool verify_certificate(const Certificate& cert, const KGraph& graph) {
  if (cert.digest != graph_digest(graph))
    throw std::invalid_argument("certificate digest does not match the input graph");
  try {
    if (cert.kind == "cycle-power") return verify_cycle_power(cert, graph);
    if (cert.kind == "path-power") return verify_path_power(cert, graph);
    if (cert.kind == "walk") return verify_walk(cert, graph);
    if (cert.kind == "matching") return verify_matching(cert, graph);
    if (cert.kind == "rtree-admit") return verify_rtree_admit(cert, graph);
    if (cert.kind == "barrier") return verify_barrier(cert, graph);
    if (cert.kind == "reservoir") return verify_reservoir_cert(cert, graph);
  } catch (const nlohmann::json::exception&) {
    return false;
  } catch (const std::invalid_argument&) {
    return false;
  }
  throw std::invalid_argument("unknown certificate kind: " + cert.kind);
}

namespace {

Certificate stamp(const KGraph& input, std::string kind, nlohmann::json payload) {
  Certificate c;
  c.kind = std::move(kind);
  c.digest = graph_digest(input);
  c.payload = std::move(payload);
  c.verdict = verify_certificate(c, input);
  return c;
}

}  // namespace

Certificate make_cycle_power_certificate(const KGraph& H, int r,
                                         const std::vector<int>& cycle,
                                         bool spanning) {
  nlohmann::json p;
  p["r"] = r;
  p["cycle"] = cycle;
  p["spanning"] = spanning;
  return stamp(H, "cycle-power", std::move(p));
}

Certificate make_path_power_certificate(const KGraph& H, int r,
                                        const std::vector<int>& seq) {
  nlohmann::json p;
  p["r"] = r;
  p["seq"] = seq;
  return stamp(H, "path-power", std::move(p));
}

Certificate make_walk_certificate(const KGraph& K, const std::vector<int>& seq) {
  nlohmann::json p;
  p["seq"] = seq;
  return stamp(K, "walk", std::move(p));
}

Certificate make_matching_certificate(const KGraph& G, const KGraph& pattern,
                                      const std::vector<std::vector<int>>& copies,
                                      int min_covered,
                                      const std::vector<std::vector<int>>& forbidden) {
  nlohmann::json p;
  p["pattern"] = khg_to_json(pattern);
  p["copies"] = copies;
  p["min_covered"] = min_covered;
  if (!forbidden.empty()) p["forbidden"] = forbidden;
  return stamp(G, "matching", std::move(p));
}

Certificate make_rtree_admit_certificate(const KGraph& G, const RTree& T, int k) {
  nlohmann::json p;
  p["tree"] = {{"n", T.n}, {"r", T.r}, {"edges", T.edges}};
  p["k"] = k;
  return stamp(G, "rtree-admit", std::move(p));
}

Certificate make_barrier_certificate(const KGraph& J, const Rat& mu,
                                     const std::vector<std::vector<int>>& parts) {
  nlohmann::json p;
  p["mu"] = mu.str();
  p["parts"] = parts;
  return stamp(J, "barrier", std::move(p));
}

Certificate make_reservoir_certificate(const KGraph& H, const VertexSet& W,
                                       const Rat& gamma, const Rat& mu) {
  nlohmann::json p;
  p["gamma"] = gamma.str();
  p["mu"] = mu.str();
  p["W"] = W.to_vector();
  return stamp(H, "reservoir", std::move(p));
}

Certificate pipeline_certificate(const KGraph& H, int r, const PipelineResult& pr) {
  nlohmann::json p;
  p["r"] = r;
  p["cycle"] = pr.cycle;
  p["spanning"] = true;
  p["absorbers_used"] = pr.absorbers_used;
  nlohmann::json stages = nlohmann::json::array();
  for (const auto& s : pr.stages) {
    stages.push_back({{"name", s.name},
                      {"ok", s.ok},
                      {"fell_back", s.fell_back},
                      {"note", s.note}});
  }
  p["stages"] = std::move(stages);
  return stamp(H, "cycle-power", std::move(p));
}

}  // namespace hypow

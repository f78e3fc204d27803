#include "hypow/absorbing.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "hypow/clique_graph.hpp"
#include "hypow/comb.hpp"

namespace hypow {

namespace {

void check_absorber_args(const KGraph& H, int r, const char* who) {
  if (r < 2 || r < H.k)
    throw std::invalid_argument(std::string(who) + ": r must be at least max(k, 2)");
}

// t with v spliced in after the first r-1 entries.
std::vector<int> spliced(const std::vector<int>& t, int v, int r) {
  std::vector<int> s(t.begin(), t.begin() + (r - 1));
  s.push_back(v);
  s.insert(s.end(), t.begin() + (r - 1), t.end());
  return s;
}

// DFS over candidate tuples in lexicographic order.  Clique windows of
// both the tuple itself and the v-spliced sequence are checked the moment
// they complete, so dead prefixes are cut early.  visit returns false to
// stop the whole enumeration.
void absorber_dfs(const KGraph& H, int v, int r, const VertexSet& banned,
                  const std::function<bool(const std::vector<int>&)>& visit) {
  CliqueCache cache(H);
  const int m = 2 * r - 2;
  std::vector<int> t;
  t.reserve(m);
  VertexSet used;
  // seq2(i): the spliced sequence t[0..r-2], v, t[r-1..]
  auto seq2_at = [&](int i) {
    if (i < r - 1) return t[i];
    if (i == r - 1) return v;
    return t[i - 1];
  };
  auto window2_ok = [&](int end) {
    VertexSet w;
    for (int i = end - r + 1; i <= end; ++i) w.insert(seq2_at(i));
    return w.size() == r && cache.is_clique(w);
  };
  // filled prefix length of seq2 once t[0..j] is assigned
  auto filled2 = [&](int j) {
    if (j < r - 2) return j + 1;
    if (j == r - 2) return r;
    return j + 2;
  };
  std::function<bool()> go = [&]() -> bool {
    int j = static_cast<int>(t.size());
    if (j == m) return visit(t);
    for (int u = 0; u < H.n; ++u) {
      if (u == v || used.contains(u) || banned.contains(u)) continue;
      t.push_back(u);
      used.insert(u);
      bool ok = true;
      if (j >= r - 1) {
        VertexSet w;
        for (int i = j - r + 1; i <= j; ++i) w.insert(t[i]);
        ok = cache.is_clique(w);
      }
      if (ok) {
        int lo = j == 0 ? 0 : filled2(j - 1);
        int hi = filled2(j);
        for (int end = std::max(lo, r - 1); end < hi && ok; ++end)
          ok = window2_ok(end);
      }
      bool keep_going = true;
      if (ok) keep_going = go();
      t.pop_back();
      used.erase(u);
      if (!keep_going) return false;
    }
    return true;
  };
  go();
}

}  // namespace

bool is_path_absorbing(const KGraph& H, const std::vector<int>& t, int v, int r) {
  check_absorber_args(H, r, "is_path_absorbing");
  if (static_cast<int>(t.size()) != 2 * r - 2)
    throw std::invalid_argument("is_path_absorbing: tuple must have 2r-2 entries");
  if (v < 0 || v >= H.n)
    throw std::invalid_argument("is_path_absorbing: vertex out of range");
  std::set<int> seen;
  for (int u : t) {
    if (u < 0 || u >= H.n)
      throw std::invalid_argument("is_path_absorbing: tuple entry out of range");
    if (!seen.insert(u).second || u == v)
      throw std::invalid_argument(
          "is_path_absorbing: tuple entries must be distinct and avoid v");
  }
  return is_power_path(H, r, t) && is_power_path(H, r, spliced(t, v, r));
}

AbsorberList enumerate_path_absorbers(const KGraph& H, int v, int r, long long limit) {
  check_absorber_args(H, r, "enumerate_path_absorbers");
  if (v < 0 || v >= H.n)
    throw std::invalid_argument("enumerate_path_absorbers: vertex out of range");
  AbsorberList out;
  absorber_dfs(H, v, r, VertexSet{}, [&](const std::vector<int>& t) {
    if (limit > 0 && static_cast<long long>(out.members.size()) == limit) {
      out.truncated = true;
      return false;
    }
    out.members.push_back(PathAbsorber{t, v});
    return true;
  });
  return out;
}

FamilyResult select_family(const KGraph& H, int r, int per_vertex, int cap) {
  check_absorber_args(H, r, "select_family");
  if (per_vertex < 0) throw std::invalid_argument("select_family: per_vertex must be >= 0");
  if (cap < 0) throw std::invalid_argument("select_family: cap must be >= 0");
  FamilyResult res;
  AbsorberFamily& fam = res.family;
  for (int v = 0; v < H.n; ++v) fam.coverage[v] = 0;
  // disjointness caps the family at n/(2r-2) members, and every vertex
  // needs per_vertex members of its own
  if (static_cast<long long>(per_vertex) * (2 * r - 2) > H.n) {
    res.bottleneck = 0;
    return res;
  }
  VertexSet taken;
  while (true) {
    int vstar = -1;
    for (int v = 0; v < H.n; ++v)
      if (fam.coverage[v] < per_vertex &&
          (vstar == -1 || fam.coverage[v] < fam.coverage[vstar]))
        vstar = v;
    if (vstar == -1) {
      res.ok = true;
      return res;
    }
    if (static_cast<int>(fam.members.size()) == cap) {
      res.bottleneck = vstar;
      return res;
    }
    std::optional<std::vector<int>> pick;
    absorber_dfs(H, vstar, r, taken, [&](const std::vector<int>& t) {
      pick = t;
      return false;
    });
    if (!pick) {
      res.bottleneck = vstar;
      return res;
    }
    fam.members.push_back(PathAbsorber{*pick, vstar});
    for (int u : *pick) taken.insert(u);
    for (int v = 0; v < H.n; ++v) {
      if (std::find(pick->begin(), pick->end(), v) != pick->end()) continue;
      if (is_path_absorbing(H, *pick, v, r)) ++fam.coverage[v];
    }
  }
}

namespace {

// index where tuple occurs as a consecutive cyclic segment, or -1
int segment_start(const std::vector<int>& cycle, const std::vector<int>& tuple) {
  const int L = static_cast<int>(cycle.size());
  const int m = static_cast<int>(tuple.size());
  if (m > L) return -1;
  for (int s = 0; s < L; ++s) {
    bool match = true;
    for (int i = 0; i < m && match; ++i) match = cycle[(s + i) % L] == tuple[i];
    if (match) return s;
  }
  return -1;
}

}  // namespace

AbsorbOutcome absorb_step(const KGraph& H, const std::vector<int>& cycle,
                          AbsorberFamily& A, int x) {
  if (x < 0 || x >= H.n) throw std::invalid_argument("absorb_step: vertex out of range");
  if (std::find(cycle.begin(), cycle.end(), x) != cycle.end())
    throw std::invalid_argument("absorb_step: vertex already on the cycle");
  AbsorbOutcome out;
  out.cycle = cycle;
  out.stuck = x;
  out.remaining = A.coverage;
  if (A.members.empty()) return out;
  const int r = static_cast<int>(A.members.front().tuple.size()) / 2 + 1;
  if (!is_power_cycle(H, r, cycle))
    throw std::invalid_argument("absorb_step: input is not a valid power cycle");
  const int L = static_cast<int>(cycle.size());
  int best_member = -1, best_start = L;
  for (int mi = 0; mi < static_cast<int>(A.members.size()); ++mi) {
    const auto& t = A.members[mi].tuple;
    if (std::find(t.begin(), t.end(), x) != t.end()) continue;
    if (!is_path_absorbing(H, t, x, r)) continue;
    int s = segment_start(cycle, t);
    if (s >= 0 && s < best_start) {
      best_start = s;
      best_member = mi;
    }
  }
  if (best_member == -1) return out;
  std::vector<int> rotated(L);
  for (int i = 0; i < L; ++i) rotated[i] = cycle[(best_start + i) % L];
  std::vector<int> next(rotated.begin(), rotated.begin() + (r - 1));
  next.push_back(x);
  next.insert(next.end(), rotated.begin() + (r - 1), rotated.end());
  if (!is_power_cycle(H, r, next))
    throw std::logic_error("absorb_step: rewritten cycle failed validation");
  PathAbsorber consumed = A.members[best_member];
  A.members.erase(A.members.begin() + best_member);
  for (auto& [v, c] : A.coverage) {
    if (std::find(consumed.tuple.begin(), consumed.tuple.end(), v) !=
        consumed.tuple.end())
      continue;
    if (v >= 0 && v < H.n && is_path_absorbing(H, consumed.tuple, v, r)) --c;
  }
  out.ok = true;
  out.cycle = std::move(next);
  out.stuck = -1;
  out.remaining.clear();
  out.used.push_back(std::move(consumed));
  return out;
}

AbsorbOutcome absorb_all(const KGraph& H, const std::vector<int>& cycle,
                         AbsorberFamily A, const std::vector<int>& leftover) {
  std::set<int> lv;
  for (int x : leftover) {
    if (x < 0 || x >= H.n)
      throw std::invalid_argument("absorb_all: leftover vertex out of range");
    if (!lv.insert(x).second)
      throw std::invalid_argument("absorb_all: leftover entries must be distinct");
    if (std::find(cycle.begin(), cycle.end(), x) != cycle.end())
      throw std::invalid_argument("absorb_all: leftover vertex already on the cycle");
  }
  AbsorbOutcome out;
  out.cycle = cycle;
  if (leftover.empty()) {
    out.ok = true;
    return out;
  }
  if (A.members.empty())
    throw std::invalid_argument("absorb_all: no members for a nonempty leftover");
  const int r = static_cast<int>(A.members.front().tuple.size()) / 2 + 1;
  if (!is_power_cycle(H, r, cycle))
    throw std::invalid_argument("absorb_all: input is not a valid power cycle");
  VertexSet member_verts;
  for (const auto& m : A.members) {
    if (segment_start(cycle, m.tuple) < 0)
      throw std::invalid_argument("absorb_all: member is not a segment of the cycle");
    for (int u : m.tuple) {
      if (member_verts.contains(u))
        throw std::invalid_argument("absorb_all: members are not pairwise disjoint");
      member_verts.insert(u);
    }
  }
  const int need = static_cast<int>(leftover.size());
  for (int x : leftover) {
    int avail = 0;
    for (const auto& m : A.members) {
      if (std::find(m.tuple.begin(), m.tuple.end(), x) != m.tuple.end()) continue;
      if (is_path_absorbing(H, m.tuple, x, r)) ++avail;
    }
    if (avail < need)
      throw std::invalid_argument("absorb_all: availability " + std::to_string(avail) +
                                  " below leftover count for vertex " +
                                  std::to_string(x));
  }
  std::vector<int> cur = cycle;
  for (int x : leftover) {
    AbsorbOutcome step = absorb_step(H, cur, A, x);
    if (!step.ok) {
      step.remaining = A.coverage;
      step.used = std::move(out.used);
      return step;
    }
    if (step.cycle.size() != cur.size() + 1)
      throw std::logic_error("absorb_all: cycle length did not grow by one");
    std::set<int> before(cur.begin(), cur.end()), after(step.cycle.begin(),
                                                        step.cycle.end());
    before.insert(x);
    if (before != after)
      throw std::logic_error("absorb_all: cycle vertex set changed unexpectedly");
    cur = std::move(step.cycle);
    for (const auto& m : A.members)
      if (segment_start(cur, m.tuple) < 0)
        throw std::logic_error("absorb_all: a remaining member lost its segment");
    out.used.push_back(std::move(step.used.front()));
  }
  out.ok = true;
  out.cycle = std::move(cur);
  return out;
}

namespace {

// X's edges as position lists into its vertex order, grouped by the step
// at which they complete when vertices are assigned in that order.
struct XPattern {
  int h = 0;
  std::vector<std::vector<std::vector<int>>> edges_done_at;  // per position
};

XPattern prepare_pattern(const RTree& X, const char* who) {
  if (auto bad = validate_rtree(X))
    throw std::invalid_argument(std::string(who) + ": invalid pattern tree (" +
                                bad->rule + ")");
  XPattern P;
  std::vector<int> order = X.vertex_order();
  P.h = static_cast<int>(order.size());
  std::map<int, int> pos;
  for (int i = 0; i < P.h; ++i) pos[order[i]] = i;
  P.edges_done_at.assign(P.h, {});
  for (const auto& e : X.edges) {
    std::vector<int> ps;
    for (int u : e) ps.push_back(pos.at(u));
    int last = *std::max_element(ps.begin(), ps.end());
    P.edges_done_at[last].push_back(ps);
  }
  return P;
}

// Is there a copy of the pattern on exactly `verts` whose every edge image,
// together with a and with b, forms an edge of K?
bool has_pattern_copy(const KGraph& K, const XPattern& P,
                      const std::vector<int>& verts, int a, int b) {
  const int h = P.h;
  std::vector<int> image(h, -1);
  std::vector<char> taken(h, 0);
  std::function<bool(int)> place = [&](int j) -> bool {
    if (j == h) return true;
    for (int c = 0; c < h; ++c) {
      if (taken[c]) continue;
      image[j] = verts[c];
      taken[c] = 1;
      bool ok = true;
      for (const auto& ps : P.edges_done_at[j]) {
        VertexSet img;
        for (int p : ps) img.insert(image[p]);
        VertexSet wa = img, wb = img;
        wa.insert(a);
        wb.insert(b);
        if (wa.size() != K.k || wb.size() != K.k || !K.has_edge_set(wa) ||
            !K.has_edge_set(wb)) {
          ok = false;
          break;
        }
      }
      if (ok && place(j + 1)) return true;
      taken[c] = 0;
    }
    image[j] = -1;
    return false;
  };
  return place(0);
}

void check_xtuple_target(const KGraph& K, const std::vector<int>& target,
                         const char* who) {
  if (static_cast<int>(target.size()) != K.k)
    throw std::invalid_argument(std::string(who) + ": target must have k entries");
  std::set<int> seen;
  for (int v : target) {
    if (v < 0 || v >= K.n)
      throw std::invalid_argument(std::string(who) + ": target vertex out of range");
    if (!seen.insert(v).second)
      throw std::invalid_argument(std::string(who) + ": target entries must be distinct");
  }
}

}  // namespace

bool is_absorbing_xtuple(const KGraph& K, const std::vector<int>& t, const RTree& X,
                         const std::vector<int>& target) {
  if (X.r != K.k - 1)
    throw std::invalid_argument("is_absorbing_xtuple: pattern uniformity must be k-1");
  XPattern P = prepare_pattern(X, "is_absorbing_xtuple");
  check_xtuple_target(K, target, "is_absorbing_xtuple");
  if (static_cast<int>(t.size()) != P.h + 1)
    throw std::invalid_argument("is_absorbing_xtuple: tuple must have h+1 entries");
  std::set<int> ts;
  for (int u : t) {
    if (u < 0 || u >= K.n)
      throw std::invalid_argument("is_absorbing_xtuple: tuple vertex out of range");
    if (!ts.insert(u).second) return false;
  }
  for (int v : target)
    if (ts.count(v)) return false;
  const int ustar = t.back();
  VertexSet a;
  for (int i = 0; i + 1 < K.k; ++i) a.insert(target[i]);
  a.insert(ustar);
  if (a.size() != K.k || !K.has_edge_set(a)) return false;
  std::vector<int> verts(t.begin(), t.end() - 1);
  return has_pattern_copy(K, P, verts, target[K.k - 1], ustar);
}

LambdaResult enumerate_lambda_X(const KGraph& K, const RTree& X,
                                const std::vector<int>& target, long long limit) {
  if (X.r != K.k - 1)
    throw std::invalid_argument("enumerate_lambda_X: pattern uniformity must be k-1");
  XPattern P = prepare_pattern(X, "enumerate_lambda_X");
  check_xtuple_target(K, target, "enumerate_lambda_X");
  VertexSet prefix;
  for (int i = 0; i + 1 < K.k; ++i) prefix.insert(target[i]);
  if (K.extenders(prefix).size() == 0)
    throw std::invalid_argument(
        "enumerate_lambda_X: target prefix is not in the (k-1)-shadow");
  const int vr = target[K.k - 1];
  VertexSet tset;
  for (int v : target) tset.insert(v);
  LambdaResult out;
  for (int ustar = 0; ustar < K.n; ++ustar) {
    if (tset.contains(ustar)) continue;
    VertexSet a = prefix;
    a.insert(ustar);
    if (a.size() != K.k || !K.has_edge_set(a)) continue;
    std::vector<int> allowed;
    for (int v = 0; v < K.n; ++v)
      if (v != ustar && !tset.contains(v)) allowed.push_back(v);
    // sets carrying a copy, then every ordering of each such set
    std::set<std::vector<int>> good;
    for_each_subset(allowed, P.h, [&](const std::vector<int>& s) {
      if (has_pattern_copy(K, P, s, vr, ustar)) good.insert(s);
      return true;
    });
    std::vector<std::vector<int>> tuples;
    for (const auto& s : good)
      for_each_permutation(s, [&](const std::vector<int>& p) {
        tuples.push_back(p);
        return true;
      });
    std::sort(tuples.begin(), tuples.end());
    for (auto& tp : tuples) {
      if (limit > 0 && static_cast<long long>(out.tuples.size()) == limit) {
        out.truncated = true;
        return out;
      }
      tp.push_back(ustar);
      out.tuples.push_back(std::move(tp));
    }
  }
  return out;
}

bool is_x_covered(const std::map<int, int>& phi, const RTree& T,
                  const std::vector<int>& t, const RTree& X) {
  std::set<int> vals;
  for (const auto& [a, b] : phi)
    if (!vals.insert(b).second)
      throw std::invalid_argument("is_x_covered: phi must be injective");
  if (auto bad = validate_rtree(T))
    throw std::invalid_argument("is_x_covered: invalid tree (" + bad->rule + ")");
  if (auto bad = validate_rtree(X))
    throw std::invalid_argument("is_x_covered: invalid pattern tree (" + bad->rule + ")");
  if (X.r != T.r - 1)
    throw std::invalid_argument("is_x_covered: pattern uniformity must be r-1");
  const int h = X.vertex_count();
  if (static_cast<int>(t.size()) != h + 1)
    throw std::invalid_argument("is_x_covered: tuple must have h+1 entries");
  std::map<int, int> inv;
  for (const auto& [a, b] : phi) inv[b] = a;
  std::vector<int> pre(h + 1);
  for (int i = 0; i <= h; ++i) {
    auto it = inv.find(t[i]);
    if (it == inv.end()) return false;
    pre[i] = it->second;
  }
  const int vstar = pre[h];
  std::set<int> want(pre.begin(), pre.begin() + h);
  if (static_cast<int>(want.size()) != h) return false;
  if (want.count(vstar)) return false;
  // link of vstar in T
  std::set<std::vector<int>> link;
  std::set<int> link_verts;
  for (const auto& e : T.edges) {
    if (std::find(e.begin(), e.end(), vstar) == e.end()) continue;
    std::vector<int> f;
    for (int u : e)
      if (u != vstar) f.push_back(u);
    std::sort(f.begin(), f.end());
    link.insert(f);
    link_verts.insert(f.begin(), f.end());
  }
  if (link_verts != want) return false;
  std::vector<int> order = X.vertex_order();
  std::map<int, int> m;
  for (int i = 0; i < h; ++i) m[order[i]] = pre[i];
  std::set<std::vector<int>> image;
  for (const auto& e : X.edges) {
    std::vector<int> f;
    for (int u : e) f.push_back(m.at(u));
    std::sort(f.begin(), f.end());
    image.insert(f);
  }
  return image == link;
}

bool verify_reservoir(const KGraph& H, const VertexSet& W, const Rat& gamma,
                      const Rat& mu, int* size_fail, int* codegree_fail,
                      int* pair_fail) {
  const int n = H.n;
  const int k = H.k;
  const Rat wsz(static_cast<long long>(W.size()));
  if (!((gamma - mu) * Rat(n) <= wsz && wsz <= (gamma + mu) * Rat(n))) {
    if (size_fail) ++*size_fail;
    return false;
  }
  if (k >= 2) {
    for (const auto& f : shadow(H, k - 1).edges) {
      VertexSet fs;
      for (int u : f) fs.insert(u);
      const long long d = H.extenders(fs).size();
      const long long dw = degree_into(H, f, W);
      if (Rat(dw) < (Rat(d) / Rat(n) - mu) * wsz) {
        if (codegree_fail) ++*codegree_fail;
        return false;
      }
    }
  }
  const long long total_partner_sets = binom(n - k, k);
  if (total_partner_sets > 0) {
    const long long ws = static_cast<long long>(W.size()) - k;
    const long long in_w = ws >= k ? binom(ws, k) : 0;
    for (const auto& e : H.edges) {
      const long long d = k22_count(H, e);
      const long long dw = k22_count(H, e, &W);
      if (Rat(dw) < (Rat(d) / Rat(total_partner_sets) - mu) * Rat(in_w)) {
        if (pair_fail) ++*pair_fail;
        return false;
      }
    }
  }
  return true;
}

ReservoirResult reservoir_sample(const KGraph& H, const Rat& gamma, const Rat& mu,
                                 unsigned long long seed) {
  if (!(Rat(0) <= mu && mu < gamma && gamma <= Rat(1)))
    throw std::invalid_argument("reservoir_sample: need 0 <= mu < gamma <= 1");
  ReservoirResult res;
  res.reservoir.gamma = gamma;
  res.reservoir.mu = mu;
  const int n = H.n;
  for (int a = 0; a < 64; ++a) {
    const unsigned long long s = seed + static_cast<unsigned long long>(a);
    std::mt19937_64 rng(s);
    VertexSet W;
    for (int v = 0; v < n; ++v)
      if (static_cast<long long>(rng() % static_cast<unsigned long long>(gamma.den)) <
          gamma.num)
        W.insert(v);
    ++res.attempts;
    if (verify_reservoir(H, W, gamma, mu, &res.size_failures,
                         &res.codegree_failures, &res.pair_degree_failures)) {
      res.ok = true;
      res.reservoir.W = W;
      res.seed_used = s;
      return res;
    }
  }
  return res;
}

namespace {

std::vector<int> head_tuple(const std::vector<int>& seq, int r) {
  return std::vector<int>(seq.begin(), seq.begin() + (r - 1));
}

std::vector<int> tail_tuple(const std::vector<int>& seq, int r) {
  return std::vector<int>(seq.end() - (r - 1), seq.end());
}

// Interior of a connector sequence (the part strictly between the two
// (r-1)-tuples it was asked to join).
std::vector<int> connector_interior(const std::vector<int>& seq, int r) {
  return std::vector<int>(seq.begin() + (r - 1), seq.end() - (r - 1));
}

}  // namespace

PipelineResult hamilton_power_pipeline(const KGraph& H, int r, int k,
                                       const PipelineParams& params) {
  if (k != H.k)
    throw std::invalid_argument("hamilton_power_pipeline: k must match the graph");
  if (r < k) throw std::invalid_argument("hamilton_power_pipeline: r must be at least k");
  PipelineResult res;
  auto stage = [&](const std::string& name, bool ok, const std::string& note) {
    res.stages.push_back(StageReport{name, ok, false, note});
    return ok;
  };
  const int ell = params.ell > 0 ? params.ell : r - 1;
  bool staged_ok = true;

  // Step 1a: reservoir
  VertexSet U;
  {
    ReservoirResult rr = reservoir_sample(H, params.gamma, params.mu, params.seed);
    if (!stage("reservoir", rr.ok,
               rr.ok ? "|W|=" + std::to_string(rr.reservoir.W.size()) +
                           " seed=" + std::to_string(rr.seed_used)
                     : "no verified sample in " + std::to_string(rr.attempts) +
                           " attempts"))
      staged_ok = false;
    if (rr.ok) {
      U = rr.reservoir.W;
      res.reservoir = U;
    }
  }

  // Step 1b: absorber family outside the reservoir, covering the reservoir
  // vertices (the only vertices that can be left over after Step 2).
  AbsorberFamily fam;
  if (staged_ok && r >= 2) {
    std::vector<int> targets = U.to_vector();
    VertexSet taken = U;
    bool ok = true;
    std::string note;
    std::map<int, int> cover;
    for (int x : targets) cover[x] = 0;
    while (ok) {
      int xstar = -1;
      for (int x : targets)
        if (cover[x] < params.per_vertex && (xstar == -1 || cover[x] < cover[xstar]))
          xstar = x;
      if (xstar == -1) break;
      int cap = params.family_cap > 0 ? params.family_cap : H.n;
      if (static_cast<int>(fam.members.size()) >= cap) {
        ok = false;
        note = "family cap reached at vertex " + std::to_string(xstar);
        break;
      }
      std::optional<std::vector<int>> pick;
      absorber_dfs(H, xstar, r, taken, [&](const std::vector<int>& t) {
        pick = t;
        return false;
      });
      if (!pick) {
        ok = false;
        note = "no absorber for vertex " + std::to_string(xstar);
        break;
      }
      fam.members.push_back(PathAbsorber{*pick, xstar});
      for (int u : *pick) taken.insert(u);
      for (int x : targets) {
        if (std::find(pick->begin(), pick->end(), x) != pick->end()) continue;
        if (is_path_absorbing(H, *pick, x, r)) ++cover[x];
      }
    }
    fam.coverage = cover;
    if (!stage("family", ok,
               ok ? std::to_string(fam.members.size()) + " members" : note))
      staged_ok = false;
  } else if (staged_ok) {
    staged_ok = stage("family", false, "r below 2");
  }

  // Step 1c: chain the members into one absorbing path
  std::vector<int> P;
  if (staged_ok) {
    bool ok = true;
    std::string note;
    VertexSet blocked = U;  // connectors stay outside the reservoir
    for (const auto& m : fam.members)
      for (int u : m.tuple) blocked.insert(u);
    for (size_t i = 0; i < fam.members.size() && ok; ++i) {
      const auto& t = fam.members[i].tuple;
      if (i == 0) {
        P = t;
        continue;
      }
      std::vector<int> v1 = tail_tuple(P, r);
      std::vector<int> v2 = head_tuple(t, r);
      VertexSet forbid = blocked;
      for (int u : P) forbid.insert(u);
      for (int u : v1) forbid.erase(u);
      for (int u : v2) forbid.erase(u);
      PathSearchResult c = connect_pair(H, r, v1, v2, forbid, ell, params.budget);
      if (c.status != SearchStatus::Found) {
        ok = false;
        note = "connector " + std::to_string(i) + " failed";
        break;
      }
      for (int u : connector_interior(c.seq, r)) {
        P.push_back(u);
        blocked.insert(u);
      }
      P.insert(P.end(), t.begin(), t.end());
    }
    if (ok && !P.empty() && !is_power_path(H, r, P))
      throw std::logic_error("hamilton_power_pipeline: absorbing path failed validation");
    if (!stage("absorbing-path", ok,
               ok ? "length " + std::to_string(P.size()) : note))
      staged_ok = false;
  }

  // Step 2a: spanning power path on everything outside U and P
  std::vector<int> Q;
  if (staged_ok) {
    VertexSet inside;
    for (int v = 0; v < H.n; ++v) inside.insert(v);
    for (int v : U.to_vector()) inside.erase(v);
    for (int v : P) inside.erase(v);
    PathSearchResult q = find_spanning_power_path(H, r, inside, params.budget);
    bool ok = q.status == SearchStatus::Found &&
              (q.seq.empty() || static_cast<int>(q.seq.size()) >= r - 1);
    if (ok) Q = q.seq;
    if (!stage("outside-path", ok,
               ok ? "length " + std::to_string(Q.size())
                  : (q.status == SearchStatus::Inconclusive ? "budget exhausted"
                                                            : "no spanning path")))
      staged_ok = false;
  }

  // Step 2b: close through the reservoir; prefer connectors that sweep up
  // every unused reservoir vertex so nothing is left to absorb.
  std::vector<int> cycle;
  if (staged_ok) {
    bool ok = false;
    std::string note;
    VertexSet u_avail = U;
    std::vector<int> A = P;
    std::vector<int> B(Q.rbegin(), Q.rend());
    if (A.empty() && B.empty()) {
      note = "nothing outside the reservoir";
    } else if (A.empty() || B.empty()) {
      const std::vector<int>& S = A.empty() ? B : A;
      if (static_cast<int>(S.size()) >= 2 * (r - 1)) {
        std::vector<int> v1 = tail_tuple(S, r), v2 = head_tuple(S, r);
        VertexSet forbid;
        for (int v = 0; v < H.n; ++v) forbid.insert(v);
        for (int v : u_avail.to_vector()) forbid.erase(v);
        for (int u : v1) forbid.erase(u);
        for (int u : v2) forbid.erase(u);
        for (int len :
             {r - 1 + static_cast<int>(u_avail.size()), ell}) {
          PathSearchResult c = connect_pair(H, r, v1, v2, forbid, len, params.budget);
          if (c.status == SearchStatus::Found) {
            cycle = S;
            for (int u : connector_interior(c.seq, r)) {
              cycle.push_back(u);
              u_avail.erase(u);
            }
            ok = true;
            break;
          }
        }
        if (!ok) note = "closing connector failed";
      } else {
        note = "segment too short to close";
      }
    } else {
      std::vector<int> v1 = tail_tuple(A, r), v2 = head_tuple(B, r);
      VertexSet forbid;
      for (int v = 0; v < H.n; ++v) forbid.insert(v);
      for (int v : u_avail.to_vector()) forbid.erase(v);
      for (int u : v1) forbid.erase(u);
      for (int u : v2) forbid.erase(u);
      PathSearchResult c1 = connect_pair(H, r, v1, v2, forbid, ell, params.budget);
      if (c1.status == SearchStatus::Found) {
        cycle = A;
        for (int u : connector_interior(c1.seq, r)) {
          cycle.push_back(u);
          u_avail.erase(u);
        }
        cycle.insert(cycle.end(), B.begin(), B.end());
        std::vector<int> w1 = tail_tuple(B, r), w2 = head_tuple(A, r);
        VertexSet forbid2;
        for (int v = 0; v < H.n; ++v) forbid2.insert(v);
        for (int v : u_avail.to_vector()) forbid2.erase(v);
        for (int u : w1) forbid2.erase(u);
        for (int u : w2) forbid2.erase(u);
        for (int len :
             {r - 1 + static_cast<int>(u_avail.size()), ell}) {
          PathSearchResult c2 =
              connect_pair(H, r, w1, w2, forbid2, len, params.budget);
          if (c2.status == SearchStatus::Found) {
            for (int u : connector_interior(c2.seq, r)) {
              cycle.push_back(u);
              u_avail.erase(u);
            }
            ok = true;
            break;
          }
        }
        if (!ok) note = "second closing connector failed";
      } else {
        note = "first closing connector failed";
      }
    }
    if (ok && !is_power_cycle(H, r, cycle))
      throw std::logic_error("hamilton_power_pipeline: closed cycle failed validation");
    if (!stage("closing", ok, ok ? "cycle length " + std::to_string(cycle.size()) : note))
      staged_ok = false;
  }

  // Step 3: absorb whatever reservoir vertices the connectors skipped
  if (staged_ok) {
    std::vector<int> leftover;
    VertexSet on_cycle;
    for (int u : cycle) on_cycle.insert(u);
    for (int v = 0; v < H.n; ++v)
      if (!on_cycle.contains(v)) leftover.push_back(v);
    bool ok = true;
    std::string note;
    const int need = static_cast<int>(leftover.size());
    for (int x : leftover) {
      int avail = 0;
      for (const auto& m : fam.members)
        if (std::find(m.tuple.begin(), m.tuple.end(), x) == m.tuple.end() &&
            is_path_absorbing(H, m.tuple, x, r))
          ++avail;
      if (avail < need) {
        ok = false;
        note = "availability short for vertex " + std::to_string(x);
        break;
      }
    }
    if (ok) {
      AbsorbOutcome out = absorb_all(H, cycle, fam, leftover);
      ok = out.ok;
      if (ok) {
        cycle = out.cycle;
        for (const auto& m : out.used) res.absorbers_used.push_back(m.tuple);
      } else {
        note = "no usable absorber for vertex " + std::to_string(out.stuck);
      }
    }
    if (ok && static_cast<int>(cycle.size()) != H.n)
      throw std::logic_error("hamilton_power_pipeline: absorbed cycle is not spanning");
    if (!stage("absorb", ok,
               ok ? std::to_string(res.absorbers_used.size()) + " absorbed" : note))
      staged_ok = false;
  }

  if (staged_ok) {
    res.status = SearchStatus::Found;
    res.cycle = cycle;
    return res;
  }

  // Staged route failed somewhere: decide by exhaustive search.
  PathSearchResult oracle = find_hamilton_power_cycle(H, r, params.budget);
  StageReport fb;
  fb.name = "fallback-exhaustive";
  fb.fell_back = true;
  fb.ok = oracle.status == SearchStatus::Found;
  fb.note = oracle.status == SearchStatus::Found
                ? "cycle found"
                : (oracle.status == SearchStatus::NotFound ? "no cycle exists"
                                                           : "budget exhausted");
  res.stages.push_back(fb);
  res.status = oracle.status;
  res.cycle = oracle.seq;
  res.absorbers_used.clear();
  return res;
}

}  // namespace hypow

#include "hypow/walks.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "hypow/comb.hpp"

namespace hypow {

namespace {

// Counts saturate at int64 max so they stay convertible to Rat exactly.
constexpr unsigned long long kCountCap =
    static_cast<unsigned long long>(std::numeric_limits<long long>::max());

struct SatCount {
  unsigned long long v = 0;
  bool sat = false;
};

void sat_accum(SatCount& a, const SatCount& b) {
  if (a.sat || b.sat || b.v > kCountCap - a.v) {
    a.v = kCountCap;
    a.sat = true;
    return;
  }
  a.v += b.v;
}

VertexSet checked_tuple_set(const std::vector<int>& t, int n, const char* what) {
  VertexSet s;
  for (int v : t) {
    if (v < 0 || v >= n) throw std::invalid_argument(std::string(what) + ": vertex out of range");
    if (s.contains(v)) throw std::invalid_argument(std::string(what) + ": repeated vertex");
    s.insert(v);
  }
  return s;
}

KGraph window_power(int n, int k, int j, bool wrap) {
  if (k < 1) throw std::invalid_argument("cycle_power: k must be positive");
  if (n < k) throw std::invalid_argument("cycle_power: need n >= k");
  if (j < 1) throw std::invalid_argument("cycle_power: power must be positive");
  int w = k + j - 1;
  if (w >= n) return KGraph::complete(n, k);
  std::set<std::vector<int>> edges;
  int starts = wrap ? n : n - w + 1;
  for (int s = 0; s < starts; ++s) {
    std::vector<int> window(w);
    for (int t = 0; t < w; ++t) window[t] = (s + t) % n;
    std::sort(window.begin(), window.end());
    for_each_subset(window, k, [&](const std::vector<int>& e) {
      edges.insert(e);
      return true;
    });
  }
  return KGraph(n, k, std::vector<std::vector<int>>(edges.begin(), edges.end()));
}

// State key for the memoized walk count: next free slot, the k-1 values
// behind it (they decide future window checks), and which interior
// vertices are already in play (they decide what counts as new).
struct EnumKey {
  std::vector<int> frontier;
  int f = 0;
  VertexSet used;
  bool operator==(const EnumKey& o) const {
    return f == o.f && used == o.used && frontier == o.frontier;
  }
};

struct EnumKeyHash {
  std::size_t operator()(const EnumKey& key) const {
    std::size_t h = key.used.hash() ^ (static_cast<std::size_t>(key.f) * 0x9e3779b97f4a7c15ULL);
    for (int v : key.frontier) h = (h ^ static_cast<std::size_t>(v + 1)) * 1099511628211ULL;
    return h;
  }
};

struct WalkProblem {
  bool consistent = true;
  int S = 0;
  int m = 0;  // number of free interior slots
  std::vector<int> seq;
  std::vector<int> free_pos;
  std::vector<int> cand;
};

WalkProblem build_walk_problem(const KGraph& K, const std::vector<int>& v1,
                               const std::vector<int>& v2, int length,
                               const VertexSet& forbidden) {
  int k = K.k;
  if (static_cast<int>(v1.size()) != k - 1 || static_cast<int>(v2.size()) != k - 1)
    throw std::invalid_argument("connecting walks: end tuples must have k-1 vertices");
  if (!in_ordered_shadow(K, v1) || !in_ordered_shadow(K, v2))
    throw std::invalid_argument("connecting walks: end tuple not in the ordered shadow");
  if (length < 1) throw std::invalid_argument("connecting walks: length must be positive");

  WalkProblem prob;
  prob.S = length + k - 1;
  prob.seq.assign(prob.S, -1);
  for (int i = 0; i < k - 1; ++i) prob.seq[i] = v1[i];
  for (int i = 0; i < k - 1; ++i) {
    int p = prob.S - (k - 1) + i;
    if (prob.seq[p] != -1 && prob.seq[p] != v2[i]) prob.consistent = false;
    prob.seq[p] = v2[i];
  }
  VertexSet avoid = forbidden;
  for (int v : v1) avoid.insert(v);
  for (int v : v2) avoid.insert(v);
  for (int v = 0; v < K.n; ++v)
    if (!avoid.contains(v)) prob.cand.push_back(v);
  for (int p = 0; p < prob.S; ++p)
    if (prob.seq[p] == -1) prob.free_pos.push_back(p);
  prob.m = static_cast<int>(prob.free_pos.size());
  return prob;
}

class WalkEnumerator {
 public:
  WalkEnumerator(const KGraph& K, WalkProblem& prob) : K_(K), prob_(prob) {}

  void enable_collect(int q, int limit, std::vector<std::vector<int>>* sink) {
    collect_q_ = q;
    collect_limit_ = limit;
    sink_ = sink;
  }

  std::vector<SatCount> run() {
    VertexSet used;
    return dfs(0, used);
  }

  bool window_ok(int end) const {
    VertexSet w;
    for (int p = end - K_.k + 1; p <= end; ++p) w.insert(prob_.seq[p]);
    return static_cast<int>(w.size()) == K_.k && K_.has_edge_set(w);
  }

 private:
  bool tail_ok() const {
    for (int end = prob_.S - K_.k + 1; end < prob_.S; ++end)
      if (end >= K_.k - 1 && !window_ok(end)) return false;
    return true;
  }

  std::vector<SatCount> dfs(int f, VertexSet& used) {
    if (f == prob_.m) {
      bool ok = tail_ok();
      if (ok && sink_ && static_cast<int>(used.size()) == collect_q_ &&
          static_cast<int>(sink_->size()) < collect_limit_)
        sink_->push_back(prob_.seq);
      return {SatCount{ok ? 1ULL : 0ULL, false}};
    }
    int p = prob_.free_pos[f];
    EnumKey key;
    bool memoize = sink_ == nullptr;
    if (memoize) {
      key.frontier.assign(prob_.seq.begin() + (p - K_.k + 1), prob_.seq.begin() + p);
      key.f = f;
      key.used = used;
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    std::vector<SatCount> out(prob_.m - f + 1);
    for (int x : prob_.cand) {
      prob_.seq[p] = x;
      if (!window_ok(p)) continue;
      bool fresh = !used.contains(x);
      if (fresh) used.insert(x);
      std::vector<SatCount> sub = dfs(f + 1, used);
      if (fresh) used.erase(x);
      int shift = fresh ? 1 : 0;
      for (std::size_t d = 0; d < sub.size(); ++d) sat_accum(out[d + shift], sub[d]);
    }
    prob_.seq[p] = -1;
    if (memoize) memo_.emplace(std::move(key), out);
    return out;
  }

  const KGraph& K_;
  WalkProblem& prob_;
  std::unordered_map<EnumKey, std::vector<SatCount>, EnumKeyHash> memo_;
  int collect_q_ = -1;
  int collect_limit_ = 0;
  std::vector<std::vector<int>>* sink_ = nullptr;
};

bool all_windows_ok(const KGraph& K, const std::vector<int>& seq) {
  int S = static_cast<int>(seq.size());
  for (int end = K.k - 1; end < S; ++end) {
    VertexSet w;
    for (int p = end - K.k + 1; p <= end; ++p) w.insert(seq[p]);
    if (static_cast<int>(w.size()) != K.k || !K.has_edge_set(w)) return false;
  }
  return true;
}

}  // namespace

KGraph cycle_power(const CyclePowerSpec& spec) {
  return window_power(spec.n, spec.k, spec.j, true);
}

KGraph path_power(int n, int k, int j) { return window_power(n, k, j, false); }

std::optional<int> walk_violation(const KGraph& K, const std::vector<int>& seq) {
  if (static_cast<int>(seq.size()) < K.k)
    throw std::invalid_argument("walk_violation: sequence shorter than uniformity");
  for (int idx = 0; idx + K.k <= static_cast<int>(seq.size()); ++idx) {
    VertexSet w;
    bool in_range = true;
    for (int p = idx; p < idx + K.k; ++p) {
      if (seq[p] < 0 || seq[p] >= K.n) {
        in_range = false;
        break;
      }
      w.insert(seq[p]);
    }
    if (!in_range || static_cast<int>(w.size()) != K.k || !K.has_edge_set(w)) return idx;
  }
  return std::nullopt;
}

bool is_walk(const KGraph& K, const std::vector<int>& seq) {
  return !walk_violation(K, seq).has_value();
}

WalkParts walk_parts(const std::vector<int>& seq, int k) {
  if (k < 1) throw std::invalid_argument("walk_parts: k must be positive");
  if (static_cast<int>(seq.size()) < 2 * (k - 1))
    throw std::invalid_argument("walk_parts: sequence shorter than both end tuples");
  WalkParts parts;
  parts.start.assign(seq.begin(), seq.begin() + (k - 1));
  parts.end.assign(seq.end() - (k - 1), seq.end());
  for (int v : seq) parts.interior.insert(v);
  for (int v : parts.start) parts.interior.erase(v);
  for (int v : parts.end) parts.interior.erase(v);
  return parts;
}

std::vector<WalkCount> count_connecting_walks_by_q(const KGraph& K,
                                                   const std::vector<int>& v1,
                                                   const std::vector<int>& v2,
                                                   int length,
                                                   const VertexSet& forbidden) {
  WalkProblem prob = build_walk_problem(K, v1, v2, length, forbidden);
  std::vector<WalkCount> counts(static_cast<std::size_t>(std::max(0, prob.m)) + 1);
  if (!prob.consistent) return counts;
  if (prob.m == 0) {
    if (all_windows_ok(K, prob.seq)) counts[0].count = 1;
    return counts;
  }
  WalkEnumerator e(K, prob);
  std::vector<SatCount> raw = e.run();
  for (std::size_t q = 0; q < raw.size(); ++q) {
    counts[q].count = raw[q].v;
    counts[q].saturated = raw[q].sat;
  }
  return counts;
}

WalkCount enumerate_connecting_walks(const KGraph& K, const std::vector<int>& v1,
                                     const std::vector<int>& v2, int length,
                                     int q, const VertexSet& forbidden,
                                     int witness_limit) {
  if (q < 0) throw std::invalid_argument("connecting walks: q must be nonnegative");
  if (witness_limit <= 0) {
    std::vector<WalkCount> counts = count_connecting_walks_by_q(K, v1, v2, length, forbidden);
    if (q < static_cast<int>(counts.size())) return counts[q];
    return WalkCount{};
  }
  WalkProblem prob = build_walk_problem(K, v1, v2, length, forbidden);
  WalkCount result;
  if (!prob.consistent) return result;
  if (prob.m == 0) {
    if (all_windows_ok(K, prob.seq) && q == 0) {
      result.count = 1;
      result.witnesses.push_back(prob.seq);
    }
    return result;
  }
  if (q > prob.m) return result;
  WalkEnumerator e(K, prob);
  e.enable_collect(q, witness_limit, &result.witnesses);
  std::vector<SatCount> raw = e.run();
  result.count = raw[q].v;
  result.saturated = raw[q].sat;
  return result;
}

ConnectingReport is_connecting(const KGraph& K, const Rat& alpha, int ell) {
  if (ell < 1) throw std::invalid_argument("is_connecting: length must be positive");
  if (alpha < Rat(0)) throw std::invalid_argument("is_connecting: alpha must be nonnegative");
  std::vector<std::vector<int>> tuples;
  std::vector<int> verts(K.n);
  std::iota(verts.begin(), verts.end(), 0);
  for_each_subset(verts, K.k - 1, [&](const std::vector<int>& s) {
    if (!K.extenders(VertexSet(s)).empty())
      for_each_permutation(s, [&](const std::vector<int>& t) {
        tuples.push_back(t);
        return true;
      });
    return true;
  });
  if (tuples.empty()) throw std::invalid_argument("is_connecting: graph has an empty shadow");

  struct PairInfo {
    const std::vector<int>* a = nullptr;
    const std::vector<int>* b = nullptr;
    std::vector<WalkCount> counts;
  };
  std::vector<PairInfo> pairs;
  pairs.reserve(tuples.size() * tuples.size());
  for (const auto& a : tuples)
    for (const auto& b : tuples)
      pairs.push_back(PairInfo{&a, &b, count_connecting_walks_by_q(K, a, b, ell, VertexSet())});

  namespace mp = boost::multiprecision;
  // count >= (alpha*n)^q  <=>  count * den(alpha)^q >= (num(alpha)*n)^q.
  auto meets = [&](const WalkCount& c, int q) {
    if (c.saturated) return true;
    mp::cpp_int lhs = mp::cpp_int(c.count) * mp::pow(mp::cpp_int(alpha.den), static_cast<unsigned>(q));
    mp::cpp_int rhs = mp::pow(mp::cpp_int(alpha.num) * K.n, static_cast<unsigned>(q));
    return lhs >= rhs;
  };
  auto count_at = [](const PairInfo& p, int q) {
    if (q < static_cast<int>(p.counts.size())) return p.counts[q];
    return WalkCount{};
  };

  ConnectingReport rep;
  double alpha_n = (alpha.den == 0 ? 0.0 : static_cast<double>(alpha.num) / static_cast<double>(alpha.den)) * K.n;
  double best_ratio = -1.0;
  int best_q = 0;
  const PairInfo* best_worst = nullptr;
  for (int q = 0; q <= ell; ++q) {
    bool all_ok = true;
    const PairInfo* worst = nullptr;
    unsigned long long worst_count = 0;
    for (const auto& p : pairs) {
      WalkCount c = count_at(p, q);
      if (!meets(c, q)) all_ok = false;
      unsigned long long value = c.saturated ? kCountCap : c.count;
      if (worst == nullptr || value < worst_count) {
        worst = &p;
        worst_count = value;
      }
    }
    if (all_ok) {
      rep.connecting = true;
      rep.q = q;
      rep.worst_v1 = *worst->a;
      rep.worst_v2 = *worst->b;
      rep.worst_count = worst_count;
      return rep;
    }
    double thr = std::pow(alpha_n, q);
    double ratio = thr > 0 ? static_cast<double>(worst_count) / thr
                           : std::numeric_limits<double>::infinity();
    if (ratio > best_ratio) {
      best_ratio = ratio;
      best_q = q;
      best_worst = worst;
    }
  }
  rep.connecting = false;
  rep.q = -1;
  if (best_worst) {
    rep.worst_v1 = *best_worst->a;
    rep.worst_v2 = *best_worst->b;
    rep.worst_count = count_at(*best_worst, best_q).count;
  }
  return rep;
}

LiftResult lift_walk(const KGraph& H, const std::vector<int>& W, int i,
                     const VertexSet& forbidden) {
  if (i < H.k + 1)
    throw std::invalid_argument("lift_walk: target uniformity must exceed the walk uniformity");
  int len = static_cast<int>(W.size());
  if (len < i - 1) throw std::invalid_argument("lift_walk: sequence shorter than a window");
  CliqueCache cache(H);
  VertexSet VW;
  for (int v : W) {
    if (v < 0 || v >= H.n) throw std::invalid_argument("lift_walk: vertex out of range");
    VW.insert(v);
  }
  for (int s = 0; s + i - 1 <= len; ++s) {
    VertexSet w;
    for (int p = s; p < s + i - 1; ++p) w.insert(W[p]);
    if (static_cast<int>(w.size()) != i - 1 || !cache.is_clique(w))
      throw std::invalid_argument("lift_walk: input is not a walk in the lower clique graph");
  }
  int ell = len - i + 2;
  if (ell < i) throw std::invalid_argument("lift_walk: walk too short to lift");
  int steps = ell - i + 1;

  // Rotating buffer: emit the first window, then after each new vertex x_j
  // swap the oldest buffer entry for the next walk vertex and emit the
  // buffer again, so every output window of size i is x_j together with
  // either the jth or the (j+1)st window of W.
  std::vector<int> buffer(W.begin(), W.begin() + (i - 1));
  std::vector<int> out = buffer;
  VertexSet used_x;
  LiftResult res;
  for (int j = 1; j <= steps; ++j) {
    std::vector<int> w1(W.begin() + (j - 1), W.begin() + (j - 1) + (i - 1));
    std::vector<int> w2(W.begin() + j, W.begin() + j + (i - 1));
    CommonExtenders ce = common_extenders(H, w1, w2);
    VertexSet pool = (ce.vertices - forbidden) - VW;
    pool = pool - used_x;
    if (pool.empty()) {
      res.fail_position = j;
      return res;
    }
    int x = pool.min();
    used_x.insert(x);
    out.push_back(x);
    buffer[(j - 1) % (i - 1)] = W[i - 2 + j];
    out.insert(out.end(), buffer.begin(), buffer.end());
  }
  for (int s = 0; s + i <= static_cast<int>(out.size()); ++s) {
    VertexSet w;
    for (int p = s; p < s + i; ++p) w.insert(out[p]);
    if (static_cast<int>(w.size()) != i || !cache.is_clique(w))
      throw std::logic_error("lift_walk: constructed sequence fails a window check");
  }
  res.ok = true;
  res.walk = std::move(out);
  return res;
}

namespace {

// Exhaustive tight-path search over fixed end tuples with a node budget.
struct PathSearcher {
  const CliqueCache& cache;
  int r = 0;
  int n = 0;
  std::vector<int>& seq;
  std::vector<int> free_pos;
  VertexSet used;
  VertexSet banned;
  unsigned long long budget = 0;
  unsigned long long explored = 0;
  bool out_of_budget = false;

  bool window_ok(int end) const {
    if (end < r - 1) return true;
    VertexSet w;
    for (int p = end - r + 1; p <= end; ++p) w.insert(seq[p]);
    return static_cast<int>(w.size()) == r && cache.is_clique(w);
  }

  bool tail_ok() const {
    int S = static_cast<int>(seq.size());
    int from = free_pos.empty() ? r - 1 : free_pos.back() + 1;
    for (int end = from; end < S; ++end)
      if (end >= r - 1 && !window_ok(end)) return false;
    return true;
  }

  bool dfs(std::size_t idx) {
    if (idx == free_pos.size()) return tail_ok();
    int p = free_pos[idx];
    for (int x = 0; x < n; ++x) {
      if (banned.contains(x) || used.contains(x)) continue;
      if (++explored > budget) {
        out_of_budget = true;
        seq[p] = -1;
        return false;
      }
      seq[p] = x;
      if (!window_ok(p)) continue;
      used.insert(x);
      if (dfs(idx + 1)) return true;
      used.erase(x);
      if (out_of_budget) break;
    }
    seq[p] = -1;
    return false;
  }
};

}  // namespace

PathSearchResult connect_pair(const KGraph& H, int r, const std::vector<int>& v1,
                              const std::vector<int>& v2, const VertexSet& U,
                              int ell, unsigned long long budget) {
  if (r < H.k) throw std::invalid_argument("connect_pair: r must be at least the uniformity");
  if (ell < 1) throw std::invalid_argument("connect_pair: length must be positive");
  if (static_cast<int>(v1.size()) != r - 1 || static_cast<int>(v2.size()) != r - 1)
    throw std::invalid_argument("connect_pair: end tuples must have r-1 vertices");
  VertexSet s1 = checked_tuple_set(v1, H.n, "connect_pair");
  VertexSet s2 = checked_tuple_set(v2, H.n, "connect_pair");
  if (s1.intersects(s2)) throw std::invalid_argument("connect_pair: end tuples share a vertex");

  PathSearchResult res;
  if ((s1 | s2).intersects(U)) return res;  // ends are unavailable, definitively
  int S = ell + r - 1;
  if (S < 2 * (r - 1)) return res;  // disjoint ends cannot overlap

  KGraph Hp = remove_vertices(H, U);
  CliqueCache cache(Hp);
  std::vector<int> seq(S, -1);
  for (int i = 0; i < r - 1; ++i) seq[i] = v1[i];
  for (int i = 0; i < r - 1; ++i) seq[S - (r - 1) + i] = v2[i];
  std::vector<int> middle;
  for (int p = r - 1; p < S - (r - 1); ++p) middle.push_back(p);

  PathSearcher full{cache, r, H.n, seq, middle, s1 | s2, U, budget};

  // Greedy end extension first: commit r-1 smallest admissible vertices on
  // each side, then search only the shrunk middle.
  int m = static_cast<int>(middle.size());
  if (m >= 2 * (r - 1)) {
    std::vector<int> assigned;
    VertexSet used = s1 | s2;
    auto pick = [&](int p, bool forward) {
      for (int x = 0; x < H.n; ++x) {
        if (U.contains(x) || used.contains(x)) continue;
        if (++full.explored > budget) {
          full.out_of_budget = true;
          return false;
        }
        seq[p] = x;
        VertexSet w;
        bool complete = true;
        int start = forward ? p - r + 1 : p;
        for (int t = start; t < start + r; ++t) {
          if (seq[t] == -1) {
            complete = false;
            break;
          }
          w.insert(seq[t]);
        }
        if (complete && (static_cast<int>(w.size()) != r || !cache.is_clique(w))) continue;
        used.insert(x);
        assigned.push_back(p);
        return true;
      }
      seq[p] = -1;
      return false;
    };
    bool greedy_ok = true;
    for (int t = 0; t < r - 1 && greedy_ok; ++t) greedy_ok = pick(middle[t], true);
    for (int t = 0; t < r - 1 && greedy_ok; ++t) greedy_ok = pick(middle[m - 1 - t], false);
    if (greedy_ok) {
      std::vector<int> inner(middle.begin() + (r - 1), middle.end() - (r - 1));
      PathSearcher stage{cache, r, H.n, seq, inner, used, U, budget};
      stage.explored = full.explored;
      if (stage.dfs(0)) {
        res.status = SearchStatus::Found;
        res.seq = seq;
        res.explored = stage.explored;
        return res;
      }
      full.explored = stage.explored;
      full.out_of_budget = stage.out_of_budget;
    }
    for (int p : assigned) seq[p] = -1;
  }

  if (!full.out_of_budget) {
    full.used = s1 | s2;
    if (full.dfs(0)) {
      res.status = SearchStatus::Found;
      res.seq = seq;
      res.explored = full.explored;
      return res;
    }
  }
  res.explored = full.explored;
  res.status = full.out_of_budget ? SearchStatus::Inconclusive : SearchStatus::NotFound;
  return res;
}

PathSearchResult find_hamilton_power_cycle(const KGraph& H, int r,
                                           unsigned long long budget) {
  if (r < H.k) throw std::invalid_argument("find_hamilton_power_cycle: r below uniformity");
  PathSearchResult res;
  int n = H.n;
  if (n < H.k) return res;
  CliqueCache cache(H);
  if (r >= n) {
    if (cache.is_clique(full_set(n))) {
      res.status = SearchStatus::Found;
      res.seq.resize(n);
      std::iota(res.seq.begin(), res.seq.end(), 0);
    }
    return res;
  }

  std::vector<int> seq(n, -1);
  seq[0] = 0;
  VertexSet used;
  used.insert(0);
  unsigned long long explored = 0;
  bool out_of_budget = false;

  auto window_ok = [&](int end) {
    VertexSet w;
    for (int p = end - r + 1; p <= end; ++p) w.insert(seq[p]);
    return static_cast<int>(w.size()) == r && cache.is_clique(w);
  };
  auto wrap_ok = [&]() {
    for (int s = n - r + 1; s < n; ++s) {
      VertexSet w;
      for (int t = 0; t < r; ++t) w.insert(seq[(s + t) % n]);
      if (static_cast<int>(w.size()) != r || !cache.is_clique(w)) return false;
    }
    return true;
  };

  std::function<bool(int)> dfs = [&](int pos) -> bool {
    if (pos == n) return seq[1] < seq[n - 1] && wrap_ok();
    for (int x = 1; x < n; ++x) {
      if (used.contains(x)) continue;
      if (++explored > budget) {
        out_of_budget = true;
        seq[pos] = -1;
        return false;
      }
      seq[pos] = x;
      if (pos >= r - 1 && !window_ok(pos)) continue;
      used.insert(x);
      if (dfs(pos + 1)) return true;
      used.erase(x);
      if (out_of_budget) break;
    }
    seq[pos] = -1;
    return false;
  };

  if (dfs(1)) {
    res.status = SearchStatus::Found;
    res.seq = seq;
  } else {
    res.status = out_of_budget ? SearchStatus::Inconclusive : SearchStatus::NotFound;
  }
  res.explored = explored;
  return res;
}

PathSearchResult find_spanning_power_path(const KGraph& H, int r,
                                          const VertexSet& inside,
                                          unsigned long long budget) {
  if (r < H.k) throw std::invalid_argument("find_spanning_power_path: r below uniformity");
  PathSearchResult res;
  std::vector<int> verts = inside.to_vector();
  int m = static_cast<int>(verts.size());
  for (int v : verts)
    if (v >= H.n) throw std::invalid_argument("find_spanning_power_path: vertex out of range");
  if (m < H.k) {
    res.status = SearchStatus::Found;
    res.seq = verts;
    return res;
  }
  CliqueCache cache(H);
  if (m < r) {
    if (cache.is_clique(inside)) {
      res.status = SearchStatus::Found;
      res.seq = verts;
    }
    return res;
  }

  std::vector<int> seq(m, -1);
  VertexSet used;
  unsigned long long explored = 0;
  bool out_of_budget = false;

  auto window_ok = [&](int end) {
    VertexSet w;
    for (int p = end - r + 1; p <= end; ++p) w.insert(seq[p]);
    return static_cast<int>(w.size()) == r && cache.is_clique(w);
  };

  std::function<bool(int)> dfs = [&](int pos) -> bool {
    if (pos == m) return seq[0] < seq[m - 1];
    for (int x : verts) {
      if (used.contains(x)) continue;
      if (++explored > budget) {
        out_of_budget = true;
        seq[pos] = -1;
        return false;
      }
      seq[pos] = x;
      if (pos >= r - 1 && !window_ok(pos)) continue;
      used.insert(x);
      if (dfs(pos + 1)) return true;
      used.erase(x);
      if (out_of_budget) break;
    }
    seq[pos] = -1;
    return false;
  };

  if (dfs(0)) {
    res.status = SearchStatus::Found;
    res.seq = seq;
  } else {
    res.status = out_of_budget ? SearchStatus::Inconclusive : SearchStatus::NotFound;
  }
  res.explored = explored;
  return res;
}

bool is_power_cycle(const KGraph& H, int r, const std::vector<int>& cyc) {
  int s = static_cast<int>(cyc.size());
  if (s < H.k) return false;
  VertexSet all;
  for (int v : cyc) {
    if (v < 0 || v >= H.n || all.contains(v)) return false;
    all.insert(v);
  }
  CliqueCache cache(H);
  if (s < r) return cache.is_clique(all);
  for (int start = 0; start < s; ++start) {
    VertexSet w;
    for (int t = 0; t < r; ++t) w.insert(cyc[(start + t) % s]);
    if (static_cast<int>(w.size()) != r || !cache.is_clique(w)) return false;
  }
  return true;
}

bool is_power_path(const KGraph& H, int r, const std::vector<int>& seq) {
  int s = static_cast<int>(seq.size());
  VertexSet all;
  for (int v : seq) {
    if (v < 0 || v >= H.n || all.contains(v)) return false;
    all.insert(v);
  }
  if (s < H.k) return true;
  CliqueCache cache(H);
  if (s < r) return cache.is_clique(all);
  for (int start = 0; start + r <= s; ++start) {
    VertexSet w;
    for (int t = 0; t < r; ++t) w.insert(seq[start + t]);
    if (static_cast<int>(w.size()) != r || !cache.is_clique(w)) return false;
  }
  return true;
}

}  // namespace hypow

#include "hypow/clique_graph.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "hypow/comb.hpp"
#include "hypow/rational.hpp"

namespace hypow {

bool CliqueCache::is_clique(const VertexSet& S) const {
  const int k = H_->k;
  if (S.size() < k) return true;  // vacuous
  std::vector<int> vs = S.to_vector();
  return for_each_subset(vs, k, [&](const std::vector<int>& e) {
    return H_->has_edge_set(VertexSet(e));
  });
}

const VertexSet& CliqueCache::extenders(const VertexSet& S) const {
  auto it = memo_.find(S);
  if (it != memo_.end()) return it->second;
  const int k = H_->k;
  VertexSet out = full_set(H_->n) - S;
  if (S.size() >= k - 1) {
    // v qualifies iff every (k-1)-subset f of S has f ∪ {v} an edge.
    std::vector<int> vs = S.to_vector();
    for_each_subset(vs, k - 1, [&](const std::vector<int>& f) {
      out = out & H_->extenders(VertexSet(f));
      return !out.empty();
    });
    out = out - S;
  }
  return memo_.emplace(S, out).first->second;
}

namespace {

// Mask invariant: mask(C) = {u outside C : C ∪ {u} is a clique}.  Adding v
// shrinks it by the extension sets of the new (k-1)-subsets through v.
VertexSet shrink_mask(const KGraph& H, const std::vector<int>& C,
                      const VertexSet& mask, int v) {
  VertexSet next = mask;
  next.erase(v);
  if (static_cast<int>(C.size()) >= H.k - 2) {
    for_each_subset(C, H.k - 2, [&](const std::vector<int>& g) {
      std::vector<int> f = g;
      f.push_back(v);
      next = next & H.extenders(VertexSet(f));
      return !next.empty();
    });
  }
  return next;
}

// Depth-first ascending enumeration: extend the clique C only by vertices
// above C's maximum that survive the mask.
void enum_cliques(const KGraph& H, int r, std::vector<int>& C,
                  const VertexSet& mask, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(C.size()) == r) {
    out.push_back(C);
    return;
  }
  for (int v : mask.to_vector()) {
    if (!C.empty() && v <= C.back()) continue;
    VertexSet next = shrink_mask(H, C, mask, v);
    C.push_back(v);
    enum_cliques(H, r, C, next, out);
    C.pop_back();
  }
}

}  // namespace

KGraph clique_graph(const KGraph& H, int r, int threads) {
  if (r < H.k) throw std::invalid_argument("clique_graph: r must be >= k");
  if (r == H.k) return H;
  auto run_range = [&](int lo, int hi) {
    std::vector<std::vector<int>> out;
    std::vector<int> empty;
    VertexSet all = full_set(H.n);
    for (int v = lo; v < hi; ++v) {
      std::vector<int> C{v};
      enum_cliques(H, r, C, shrink_mask(H, empty, all, v), out);
    }
    return out;
  };
  std::vector<std::vector<int>> all;
  if (threads <= 1 || H.n < 2 * threads) {
    all = run_range(0, H.n);
  } else {
    std::vector<std::future<std::vector<std::vector<int>>>> jobs;
    int step = (H.n + threads - 1) / threads;
    for (int lo = 0; lo < H.n; lo += step)
      jobs.push_back(std::async(std::launch::async, run_range, lo,
                                std::min(lo + step, H.n)));
    for (auto& j : jobs) {
      auto part = j.get();
      all.insert(all.end(), part.begin(), part.end());
    }
  }
  return KGraph(H.n, r, std::move(all));
}

RDegBound rdeg_bound_check(const KGraph& H, const std::vector<int>& F) {
  CliqueCache cache(H);
  VertexSet Fs(F);
  if (Fs.size() != static_cast<int>(F.size()) || !cache.is_clique(Fs))
    throw std::invalid_argument("rdeg_bound_check: F must be a clique");
  RDegBound res;
  res.actual = cache.extenders(Fs).size();
  const int r = static_cast<int>(F.size()) + 1;
  long long bound = H.n - (r - 1);
  std::vector<int> Fv = Fs.to_vector();
  for_each_subset(Fv, H.k - 1, [&](const std::vector<int>& f) {
    long long deg = H.extenders(VertexSet(f)).size();
    bound -= (H.n - (H.k - 1)) - deg;
    return true;
  });
  res.bound = bound;
  res.holds = res.actual >= res.bound;
  return res;
}

CommonExtenders common_extenders(const KGraph& H, const std::vector<int>& C1,
                                 const std::vector<int>& C2) {
  if (C1.size() != C2.size())
    throw std::invalid_argument("common_extenders: cliques of unequal size");
  const int j = static_cast<int>(C1.size());
  CliqueCache cache(H);
  VertexSet S1(C1), S2(C2);
  if (S1.size() != j || S2.size() != j)
    throw std::invalid_argument("common_extenders: repeated vertices");
  if (!cache.is_clique(S1) || !cache.is_clique(S2))
    throw std::invalid_argument("common_extenders: inputs must be cliques");
  if ((S1 & S2).size() != j - 1)
    throw std::invalid_argument("common_extenders: cliques must overlap in j-1 vertices");
  CommonExtenders res;
  res.vertices = (cache.extenders(S1) & cache.extenders(S2)) - (S1 | S2);
  long long delta = min_codegree(H);
  res.bound = H.n - j - 1 -
              (binom(j, H.k - 1) + binom(j - 1, H.k - 2)) * (H.n - delta);
  return res;
}

long long common_clique_count(const KGraph& H, int u, int v, int r) {
  if (u == v) throw std::invalid_argument("common_clique_count: u and v must differ");
  if (r < H.k) throw std::invalid_argument("common_clique_count: r must be >= k");
  CliqueCache cache(H);
  std::vector<int> pool;
  for (int w = 0; w < H.n; ++w)
    if (w != u && w != v) pool.push_back(w);
  long long count = 0;
  for_each_subset(pool, r - 1, [&](const std::vector<int>& C) {
    VertexSet S(C);
    if (!cache.is_clique(S)) return true;
    const VertexSet& ext = cache.extenders(S);
    if (ext.contains(u) && ext.contains(v)) ++count;
    return true;
  });
  return count;
}

}  // namespace hypow

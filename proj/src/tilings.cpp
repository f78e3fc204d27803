#include "hypow/tilings.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "hypow/comb.hpp"
#include "hypow/vertex_set.hpp"

namespace hypow {

void validate_partition(const VertexPartition& P) {
  std::vector<char> seen(P.n, 0);
  for (const auto& part : P.parts) {
    if (part.empty()) throw std::invalid_argument("partition: empty part");
    for (int v : part) {
      if (v < 0 || v >= P.n)
        throw std::invalid_argument("partition: vertex out of range");
      if (seen[v]) throw std::invalid_argument("partition: parts overlap");
      seen[v] = 1;
    }
  }
  for (int v = 0; v < P.n; ++v)
    if (!seen[v])
      throw std::invalid_argument("partition: vertex " + std::to_string(v) +
                                  " uncovered");
}

Rat f_threshold(int k, int j) {
  if (k < 2 || j < k) throw std::invalid_argument("f_threshold: need j >= k >= 2");
  return Rat(1, binom(j - 1, k - 1) + binom(j - 2, k - 2));
}

bool binomial_inequality_check(int r, int k) {
  if (k < 3 || r < k)
    throw std::invalid_argument("binomial_inequality_check: need r >= k >= 3");
  const long long lhs_factor = binom(r - 1, k - 1) + binom(r - 2, k - 2);
  for (long long i = 0; i < r; ++i)
    if (i * lhs_factor < r * binom(i, k - 1)) return false;
  return true;
}

std::vector<std::optional<long long>> complex_degrees(const KGraph& Jr) {
  const int r = Jr.k;
  std::vector<std::unordered_set<VertexSet, VertexSetHash>> level(r + 1);
  for (const auto& e : Jr.edges) {
    // all subsets of e, bucketed by size
    const int m = static_cast<int>(e.size());
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      VertexSet s;
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) s.insert(e[i]);
      level[s.size()].insert(s);
    }
  }
  std::vector<std::optional<long long>> degrees(r);
  for (int i = 0; i < r; ++i) {
    if (level[i].empty()) continue;
    std::unordered_map<VertexSet, long long, VertexSetHash> deg;
    for (const auto& f : level[i]) deg[f] = 0;
    for (const auto& g : level[i + 1]) {
      std::vector<int> vs = g.to_vector();
      for (int skip : vs) {
        VertexSet f = g;
        f.erase(skip);
        ++deg[f];
      }
    }
    long long best = -1;
    for (const auto& [f, d] : deg)
      if (best < 0 || d < best) best = d;
    degrees[i] = best;
  }
  return degrees;
}

std::vector<long long> index_vector(const VertexPartition& P, const std::vector<int>& S) {
  validate_partition(P);
  std::set<int> ss;
  for (int v : S) {
    if (v < 0 || v >= P.n)
      throw std::invalid_argument("index_vector: vertex out of range");
    if (!ss.insert(v).second)
      throw std::invalid_argument("index_vector: repeated vertex");
  }
  std::vector<long long> out(P.parts.size(), 0);
  for (size_t i = 0; i < P.parts.size(); ++i)
    for (int v : P.parts[i])
      if (ss.count(v)) ++out[i];
  return out;
}

std::set<std::vector<long long>> robust_edge_vectors(const KGraph& G,
                                                     const VertexPartition& P,
                                                     const Rat& mu) {
  validate_partition(P);
  if (P.n != G.n)
    throw std::invalid_argument("robust_edge_vectors: partition ground set mismatch");
  std::map<std::vector<long long>, long long> buckets;
  for (const auto& e : G.edges) ++buckets[index_vector(P, e)];
  const Rat threshold = mu * Rat(G.n).pow(G.k);
  std::set<std::vector<long long>> out;
  for (const auto& [v, c] : buckets)
    if (Rat(c) >= threshold) out.insert(v);
  return out;
}

namespace {

long long ext_gcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return a >= 0 ? a : -a;
  }
  long long x1, y1;
  long long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace

IndexLattice IndexLattice::from_generators(
    int t, const std::vector<std::vector<long long>>& gens) {
  if (t < 1) throw std::invalid_argument("IndexLattice: dimension must be positive");
  IndexLattice L;
  L.t = t;
  for (const auto& g : gens) L.add(g);
  return L;
}

void IndexLattice::add(std::vector<long long> v) {
  if (static_cast<int>(v.size()) != t)
    throw std::invalid_argument("IndexLattice: generator has wrong dimension");
  // sweep columns, folding v into the echelon rows; both the existing row
  // and v have zeros left of the current column throughout
  for (int col = 0; col < t && !std::all_of(v.begin(), v.end(),
                                            [](long long x) { return x == 0; });
       ++col) {
    if (v[col] == 0) continue;
    auto it = std::find_if(rows.begin(), rows.end(), [&](const auto& r) {
      return std::find_if(r.begin(), r.end(), [](long long x) { return x != 0; }) -
                 r.begin() ==
             col;
    });
    if (it == rows.end()) {
      if (v[col] < 0)
        for (auto& x : v) x = -x;
      rows.push_back(v);
      std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        auto pa = std::find_if(a.begin(), a.end(), [](long long x) { return x != 0; });
        auto pb = std::find_if(b.begin(), b.end(), [](long long x) { return x != 0; });
        return pa - a.begin() < pb - b.begin();
      });
      return;
    }
    std::vector<long long>& row = *it;
    long long x, y;
    const long long g = ext_gcd(row[col], v[col], x, y);
    const long long rq = row[col] / g, vq = v[col] / g;
    std::vector<long long> new_row(t), new_v(t);
    for (int i = 0; i < t; ++i) {
      new_row[i] = x * row[i] + y * v[i];
      new_v[i] = rq * v[i] - vq * row[i];
    }
    row = std::move(new_row);
    v = std::move(new_v);
  }
}

bool IndexLattice::contains(std::vector<long long> v) const {
  if (static_cast<int>(v.size()) != t)
    throw std::invalid_argument("IndexLattice: vector has wrong dimension");
  for (const auto& row : rows) {
    int col = static_cast<int>(
        std::find_if(row.begin(), row.end(), [](long long x) { return x != 0; }) -
        row.begin());
    if (v[col] == 0) continue;
    if (v[col] % row[col] != 0) return false;
    const long long q = v[col] / row[col];
    for (int i = 0; i < t; ++i) v[i] -= q * row[i];
  }
  return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

bool IndexLattice::is_complete(int k) const {
  std::vector<long long> v(t, 0);
  std::function<bool(int, int)> go = [&](int pos, int left) -> bool {
    if (pos == t - 1) {
      v[pos] = left;
      bool ok = contains(v);
      v[pos] = 0;
      return ok;
    }
    for (int take = 0; take <= left; ++take) {
      v[pos] = take;
      if (!go(pos + 1, left - take)) {
        v[pos] = 0;
        return false;
      }
    }
    v[pos] = 0;
    return true;
  };
  return go(0, k);
}

std::optional<std::pair<int, int>> IndexLattice::find_transferral() const {
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      std::vector<long long> v(t, 0);
      v[i] = 1;
      v[j] = -1;
      if (contains(v)) return std::make_pair(i, j);
    }
  return std::nullopt;
}

std::vector<std::vector<std::vector<int>>> divisibility_barrier_scan(
    const KGraph& Jr, const Rat& mu, int min_part) {
  if (min_part < 1)
    throw std::invalid_argument("divisibility_barrier_scan: min_part must be positive");
  const int n = Jr.n;
  const int r = Jr.k;
  std::vector<std::vector<std::vector<int>>> barriers;
  std::vector<int> label(n, 0);
  // restricted-growth enumeration: parts indexed by first occurrence
  std::function<void(int, int)> go = [&](int v, int used) {
    if (v == n) {
      if (used < 2 || used > r) return;
      std::vector<std::vector<int>> parts(used);
      for (int u = 0; u < n; ++u) parts[label[u]].push_back(u);
      for (const auto& p : parts)
        if (static_cast<int>(p.size()) < min_part) return;
      VertexPartition P{n, parts};
      auto vectors = robust_edge_vectors(Jr, P, mu);
      IndexLattice L = IndexLattice::from_generators(
          used, std::vector<std::vector<long long>>(vectors.begin(), vectors.end()));
      if (!L.is_complete(r) && !L.find_transferral()) barriers.push_back(parts);
      return;
    }
    for (int c = 0; c <= used && c < r; ++c) {
      label[v] = c;
      go(v + 1, std::max(used, c + 1));
    }
  };
  if (n > 0) go(0, 0);
  return barriers;
}

namespace {

// lexicographically first embedding of the pattern onto exactly `verts`,
// avoiding forbidden edge images; empty when none exists
std::optional<std::vector<int>> embed_pattern(
    const KGraph& G, const KGraph& Hpat, const std::vector<int>& verts,
    const std::unordered_set<VertexSet, VertexSetHash>& forbidden) {
  const int rp = Hpat.n;
  std::vector<std::vector<std::vector<int>>> done_at(rp);
  for (const auto& e : Hpat.edges)
    done_at[*std::max_element(e.begin(), e.end())].push_back(e);
  std::vector<int> image(rp, -1);
  std::vector<char> taken(rp, 0);
  std::function<bool(int)> place = [&](int u) -> bool {
    if (u == rp) return true;
    for (int c = 0; c < rp; ++c) {
      if (taken[c]) continue;
      image[u] = verts[c];
      taken[c] = 1;
      bool ok = true;
      for (const auto& e : done_at[u]) {
        VertexSet img;
        for (int w : e) img.insert(image[w]);
        if (!G.has_edge_set(img) || forbidden.count(img)) {
          ok = false;
          break;
        }
      }
      if (ok && place(u + 1)) return true;
      taken[c] = 0;
    }
    image[u] = -1;
    return false;
  };
  if (place(0)) return image;
  return std::nullopt;
}

}  // namespace

MatchingResult find_H_matching(const KGraph& G, const KGraph& Hpat, int min_covered,
                               const std::vector<std::vector<int>>& forbidden) {
  if (Hpat.k != G.k)
    throw std::invalid_argument("find_H_matching: pattern uniformity mismatch");
  if (Hpat.n < 1)
    throw std::invalid_argument("find_H_matching: pattern needs a vertex");
  if (min_covered < 0 || min_covered > G.n)
    throw std::invalid_argument("find_H_matching: min_covered out of range");
  std::unordered_set<VertexSet, VertexSetHash> forbid;
  for (const auto& e : forbidden) {
    VertexSet s;
    for (int v : e) {
      if (v < 0 || v >= G.n)
        throw std::invalid_argument("find_H_matching: forbidden vertex out of range");
      s.insert(v);
    }
    if (s.size() != G.k)
      throw std::invalid_argument("find_H_matching: forbidden edge of wrong size");
    forbid.insert(s);
  }
  const int rp = Hpat.n;
  // all placeable copies, keyed by their smallest vertex
  std::vector<std::vector<std::vector<int>>> by_min(std::max(G.n, 1));
  std::vector<int> all(G.n);
  std::iota(all.begin(), all.end(), 0);
  for_each_subset(all, rp, [&](const std::vector<int>& s) {
    if (auto img = embed_pattern(G, Hpat, s, forbid)) by_min[s.front()].push_back(*img);
    return true;
  });
  MatchingResult res;
  std::vector<char> used(G.n, 0);
  std::vector<std::vector<int>> chosen;
  const int max_skips = G.n - min_covered;
  std::function<bool(int, int)> go = [&](int v, int skips) -> bool {
    if (G.n - skips < min_covered) return false;
    if (static_cast<int>(chosen.size()) * rp >= min_covered) {
      res.found = true;
      res.copies = chosen;
      return true;
    }
    if (v == G.n) return false;
    if (used[v]) return go(v + 1, skips);
    for (const auto& img : by_min[v]) {
      bool free = true;
      for (int u : img)
        if (used[u]) {
          free = false;
          break;
        }
      if (!free) continue;
      for (int u : img) used[u] = 1;
      chosen.push_back(img);
      if (go(v + 1, skips)) return true;
      chosen.pop_back();
      for (int u : img) used[u] = 0;
    }
    if (skips < max_skips && go(v + 1, skips + 1)) return true;
    return false;
  };
  go(0, 0);
  return res;
}

ColouringResult mu_bounded_colouring(const KGraph& G,
                                     const std::vector<std::vector<int>>& I,
                                     const Rat& mu, unsigned long long seed) {
  std::set<std::vector<int>> iset;
  for (auto e : I) {
    std::sort(e.begin(), e.end());
    if (!G.has_edge(e))
      throw std::invalid_argument("mu_bounded_colouring: I is not a subgraph");
    iset.insert(e);
  }
  ColouringResult res;
  const int n = G.n;
  const int k = G.k;
  const long long icount = static_cast<long long>(iset.size());
  if (icount > 0 && mu <= Rat(0)) return res;  // no palette can work
  if (icount > 0)
    res.palette =
        static_cast<int>((Rat(14 * icount) / (mu * Rat(n).pow(k - 1))).ceil());
  const Rat edge_cap = mu * Rat(n).pow(k - 1);
  const Rat set_cap = mu * Rat(n);
  for (int a = 0; a < 64; ++a) {
    const unsigned long long s = seed + static_cast<unsigned long long>(a);
    std::mt19937_64 rng(s);
    ++res.attempts;
    std::vector<int> colour(G.edges.size());
    int fresh = res.palette;
    std::map<int, std::vector<int>> members;  // colour -> edge indices
    for (size_t i = 0; i < G.edges.size(); ++i) {
      if (iset.count(G.edges[i]))
        colour[i] = static_cast<int>(rng() % static_cast<unsigned long long>(
                                                  std::max(res.palette, 1)));
      else
        colour[i] = fresh++;
      members[colour[i]].push_back(static_cast<int>(i));
    }
    bool ok = true;
    bool deterministic_failure = false;
    long long worst_edges = 0, worst_sets = 0;
    for (const auto& [c, idxs] : members) {
      const long long cnt = static_cast<long long>(idxs.size());
      worst_edges = std::max(worst_edges, cnt);
      if (Rat(cnt) > edge_cap) {
        ok = false;
        if (c >= res.palette) deterministic_failure = true;
        break;
      }
      std::unordered_map<VertexSet, long long, VertexSetHash> per_set;
      for (int idx : idxs) {
        const auto& e = G.edges[idx];
        for (int skip = 0; skip < k; ++skip) {
          VertexSet f;
          for (int i = 0; i < k; ++i)
            if (i != skip) f.insert(e[i]);
          ++per_set[f];
        }
      }
      for (const auto& [f, cf] : per_set) {
        worst_sets = std::max(worst_sets, cf);
        if (Rat(cf) > set_cap) {
          ok = false;
          if (c >= res.palette) deterministic_failure = true;
          break;
        }
      }
      if (!ok) break;
    }
    res.max_colour_edges = std::max(res.max_colour_edges, worst_edges);
    res.max_set_edges = std::max(res.max_set_edges, worst_sets);
    if (ok) {
      res.ok = true;
      res.colour = std::move(colour);
      res.seed_used = s;
      return res;
    }
    if (deterministic_failure) return res;  // fresh colours fail every seed
  }
  return res;
}

UDenseResult uniformly_dense_check(const KGraph& G,
                                   const std::vector<std::vector<int>>& parts,
                                   const Rat& eps, const Rat& d) {
  if (static_cast<int>(parts.size()) != G.k)
    throw std::invalid_argument("uniformly_dense_check: need exactly k parts");
  const int m = parts.empty() ? 0 : static_cast<int>(parts.front().size());
  VertexSet seen;
  for (const auto& p : parts) {
    if (static_cast<int>(p.size()) != m)
      throw std::invalid_argument("uniformly_dense_check: parts must have equal size");
    for (int v : p) {
      if (v < 0 || v >= G.n)
        throw std::invalid_argument("uniformly_dense_check: vertex out of range");
      if (seen.contains(v))
        throw std::invalid_argument("uniformly_dense_check: parts overlap");
      seen.insert(v);
    }
  }
  const int k = G.k;
  UDenseResult res;
  std::vector<std::vector<int>> W(k);
  std::vector<VertexSet> Wset(k);
  auto crossing = [&]() {
    long long cnt = 0;
    for (const auto& e : G.edges) {
      bool good = true;
      for (int i = 0; i < k && good; ++i) {
        int hits = 0;
        for (int v : e)
          if (Wset[i].contains(v)) ++hits;
        good = hits == 1;
      }
      if (good) ++cnt;
    }
    return cnt;
  };
  for (int h = 1; h <= m; ++h) {
    if (Rat(h) < eps * Rat(m)) continue;
    const Rat need = d * Rat(h).pow(k);
    bool bad = false;
    std::function<bool(int)> pick = [&](int i) -> bool {
      if (i == k) {
        long long cnt = crossing();
        if (Rat(cnt) < need) {
          res.h = h;
          res.witness = W;
          res.edges = cnt;
          return false;
        }
        return true;
      }
      return for_each_subset(parts[i], h, [&](const std::vector<int>& s) {
        W[i] = s;
        Wset[i] = VertexSet{};
        for (int v : s) Wset[i].insert(v);
        return pick(i + 1);
      });
    };
    if (!pick(0)) {
      bad = true;
    }
    if (bad) return res;
  }
  res.ok = true;
  return res;
}

UDenseMatchingResult uniformly_dense_matching_check(
    const KGraph& G, const std::vector<std::vector<std::vector<int>>>& M,
    const Rat& eps, const Rat& d) {
  UDenseMatchingResult res;
  std::vector<char> seen(G.n, 0);
  int size = -1;
  for (size_t i = 0; i < M.size(); ++i) {
    if (static_cast<int>(M[i].size()) != G.k) {
      res.reason = "matching edge " + std::to_string(i) + " does not have k parts";
      res.bad_edge = static_cast<int>(i);
      return res;
    }
    for (const auto& p : M[i]) {
      if (size == -1) size = static_cast<int>(p.size());
      if (static_cast<int>(p.size()) != size) {
        res.reason = "parts differ in size";
        res.bad_edge = static_cast<int>(i);
        return res;
      }
      for (int v : p) {
        if (v < 0 || v >= G.n || seen[v]) {
          res.reason = "parts do not partition the vertex set";
          res.bad_edge = static_cast<int>(i);
          return res;
        }
        seen[v] = 1;
      }
    }
  }
  for (int v = 0; v < G.n; ++v)
    if (!seen[v]) {
      res.reason = "parts do not partition the vertex set";
      return res;
    }
  for (size_t i = 0; i < M.size(); ++i) {
    UDenseResult u = uniformly_dense_check(G, M[i], eps, d);
    if (!u.ok) {
      res.reason = "matching edge " + std::to_string(i) + " is not uniformly dense";
      res.bad_edge = static_cast<int>(i);
      res.detail = u;
      return res;
    }
  }
  res.ok = true;
  return res;
}

}  // namespace hypow

#include "hypow/kgraph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hypow/comb.hpp"
#include "hypow/rational.hpp"

namespace hypow {

namespace {
const VertexSet kEmptySet{};
}

KGraph::KGraph(int n_, int k_, std::vector<std::vector<int>> edge_list)
    : n(n_), k(k_), edges(std::move(edge_list)) {
  if (n < 0) throw std::invalid_argument("KGraph: negative vertex count");
  if (k < 1) throw std::invalid_argument("KGraph: uniformity must be >= 1");
  if (n > VertexSet::kCapacity)
    throw std::invalid_argument("KGraph: vertex count exceeds supported capacity");
  for (auto& e : edges) {
    if (static_cast<int>(e.size()) != k)
      throw std::invalid_argument("KGraph: edge of wrong size");
    std::sort(e.begin(), e.end());
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] >= n)
        throw std::invalid_argument("KGraph: vertex out of range");
      if (i > 0 && e[i] == e[i - 1])
        throw std::invalid_argument("KGraph: repeated vertex in edge");
    }
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("KGraph: duplicate edge");
  for (const auto& e : edges) {
    VertexSet es(e);
    for_each_subset(e, k - 1, [&](const std::vector<int>& f) {
      VertexSet fs(f);
      ext_[fs].insert((es - fs).min());
      return true;
    });
  }
}

KGraph KGraph::complete(int n, int k) {
  std::vector<std::vector<int>> es;
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  for_each_subset(all, k, [&](const std::vector<int>& e) {
    es.push_back(e);
    return true;
  });
  return KGraph(n, k, std::move(es));
}

bool KGraph::has_edge(std::vector<int> e) const {
  if (static_cast<int>(e.size()) != k) return false;
  std::sort(e.begin(), e.end());
  return std::binary_search(edges.begin(), edges.end(), e);
}

bool KGraph::has_edge_set(const VertexSet& s) const {
  if (s.size() != k) return false;
  if (k == 0) return false;
  std::vector<int> e = s.to_vector();
  // Route through the extension map: O(1) expected instead of a binary
  // search over the edge list.
  std::vector<int> f(e.begin(), e.end() - 1);
  return extenders(VertexSet(f)).contains(e.back());
}

const VertexSet& KGraph::extenders(const VertexSet& f) const {
  auto it = ext_.find(f);
  if (it == ext_.end()) return kEmptySet;
  return it->second;
}

VertexSet KGraph::support() const {
  VertexSet s;
  for (const auto& e : edges)
    for (int v : e) s.insert(v);
  return s;
}

KGraph shadow(const KGraph& H, int j) {
  if (j < 1 || j > H.k) throw std::invalid_argument("shadow: j out of range");
  std::set<std::vector<int>> out;
  for (const auto& e : H.edges)
    for_each_subset(e, j, [&](const std::vector<int>& f) {
      out.insert(f);
      return true;
    });
  return KGraph(H.n, j, std::vector<std::vector<int>>(out.begin(), out.end()));
}

bool in_ordered_shadow(const KGraph& H, const std::vector<int>& t) {
  if (static_cast<int>(t.size()) != H.k - 1)
    throw std::invalid_argument("in_ordered_shadow: tuple length must be k-1");
  VertexSet s(t);
  if (s.size() != H.k - 1) return false;  // repeated entries
  return !H.extenders(s).empty();
}

int min_codegree(const KGraph& H) {
  if (H.n < H.k) throw std::invalid_argument("min_codegree: needs n >= k");
  std::vector<int> all(H.n);
  for (int i = 0; i < H.n; ++i) all[i] = i;
  int best = -1;
  for_each_subset(all, H.k - 1, [&](const std::vector<int>& f) {
    int d = H.extenders(VertexSet(f)).size();
    if (best < 0 || d < best) best = d;
    return best != 0;  // cannot go lower
  });
  return best < 0 ? 0 : best;
}

int degree_into(const KGraph& H, const std::vector<int>& f, const VertexSet& W) {
  if (static_cast<int>(f.size()) != H.k - 1)
    throw std::invalid_argument("degree_into: |f| must be k-1");
  VertexSet fs(f);
  return ((H.extenders(fs) & W) - fs).size();
}

namespace {

// Checks whether the pairing e[i] <-> b[i] spans a complete k-partite
// k-graph with parts {e[i], b[i]} inside H.
bool pairing_works(const KGraph& H, const std::vector<int>& e,
                   const std::vector<int>& b) {
  const int k = H.k;
  std::vector<int> sel(k);
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    for (int i = 0; i < k; ++i) sel[i] = (mask >> i & 1) ? b[i] : e[i];
    if (!H.has_edge(sel)) return false;
  }
  return true;
}

}  // namespace

long long k22_count(const KGraph& H, const std::vector<int>& e,
                    const VertexSet* W) {
  if (!H.has_edge(e)) throw std::invalid_argument("k22_count: e not an edge");
  std::vector<int> es = e;
  std::sort(es.begin(), es.end());
  VertexSet eset(es);
  VertexSet pool = (W ? *W : full_set(H.n)) - eset;
  std::vector<int> cand = pool.to_vector();
  long long count = 0;
  for_each_subset(cand, H.k, [&](const std::vector<int>& b) {
    bool ok = !for_each_permutation(b, [&](const std::vector<int>& pb) {
      return !pairing_works(H, es, pb);  // abort (false) once a pairing works
    });
    if (ok) ++count;
    return true;
  });
  return count;
}

KGraph link_graph(const KGraph& H, int v) {
  if (v < 0 || v >= H.n) throw std::invalid_argument("link_graph: vertex out of range");
  std::vector<std::vector<int>> out;
  for (const auto& e : H.edges) {
    if (!std::binary_search(e.begin(), e.end(), v)) continue;
    std::vector<int> f;
    f.reserve(H.k - 1);
    for (int u : e)
      if (u != v) f.push_back(u);
    out.push_back(std::move(f));
  }
  return KGraph(H.n, H.k - 1, std::move(out));
}

KGraph remove_vertices(const KGraph& H, const VertexSet& U) {
  std::vector<std::vector<int>> out;
  for (const auto& e : H.edges)
    if (!VertexSet(e).intersects(U)) out.push_back(e);
  return KGraph(H.n, H.k, std::move(out));
}

KGraph relabel(const KGraph& H, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != H.n)
    throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<std::vector<int>> out;
  out.reserve(H.edges.size());
  for (const auto& e : H.edges) {
    std::vector<int> f;
    f.reserve(e.size());
    for (int v : e) f.push_back(perm[v]);
    out.push_back(std::move(f));
  }
  return KGraph(H.n, H.k, std::move(out));
}

}  // namespace hypow

#include "hypow/rtree.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "hypow/comb.hpp"

namespace hypow {

namespace {

std::vector<int> sorted_copy(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::optional<RTreeViolation> structural_check(const RTree& T) {
  if (T.r < 1) return RTreeViolation{-1, "structure: r must be positive"};
  if (T.n < 0 || T.n > VertexSet::kCapacity)
    return RTreeViolation{-1, "structure: vertex range out of bounds"};
  if (T.edges.empty()) return RTreeViolation{-1, "structure: no edges"};
  for (int i = 0; i < static_cast<int>(T.edges.size()); ++i) {
    const auto& e = T.edges[i];
    if (static_cast<int>(e.size()) != T.r)
      return RTreeViolation{i, "structure: edge size differs from r"};
    VertexSet s;
    for (int v : e) {
      if (v < 0 || v >= T.n) return RTreeViolation{i, "structure: vertex out of range"};
      if (s.contains(v)) return RTreeViolation{i, "structure: repeated vertex in edge"};
      s.insert(v);
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<int> RTree::vertex_order() const {
  std::vector<int> order(edges.empty() ? std::vector<int>() : edges[0]);
  for (std::size_t i = 1; i < edges.size(); ++i) order.push_back(edges[i].back());
  return order;
}

VertexSet RTree::vertex_set() const {
  VertexSet s;
  for (const auto& e : edges)
    for (int v : e) s.insert(v);
  return s;
}

std::optional<RTreeViolation> validate_rtree(const RTree& T) {
  if (auto bad = structural_check(T)) return bad;
  VertexSet seen(T.edges[0]);
  std::vector<VertexSet> sets;
  sets.emplace_back(T.edges[0]);
  for (int i = 1; i < static_cast<int>(T.edges.size()); ++i) {
    const auto& e = T.edges[i];
    VertexSet witness;
    for (std::size_t t = 0; t + 1 < e.size(); ++t) witness.insert(e[t]);
    bool supported = false;
    for (const auto& earlier : sets)
      if (witness.is_subset_of(earlier)) {
        supported = true;
        break;
      }
    if (!supported) return RTreeViolation{i, "T2"};
    if (seen.contains(e.back())) return RTreeViolation{i, "T1"};
    seen.insert(e.back());
    VertexSet es = witness;
    es.insert(e.back());
    sets.push_back(es);
  }
  return std::nullopt;
}

std::vector<int> rtree_parents(const RTree& T) {
  if (auto bad = validate_rtree(T))
    throw std::invalid_argument("rtree_parents: invalid tree (" + bad->rule + ")");
  std::vector<VertexSet> sets;
  for (const auto& e : T.edges) sets.emplace_back(e);
  std::vector<int> parent(T.edges.size(), -1);
  for (int i = 1; i < static_cast<int>(T.edges.size()); ++i) {
    VertexSet witness = sets[i];
    witness.erase(T.edges[i].back());
    for (int j = 0; j < i; ++j)
      if (witness.is_subset_of(sets[j])) {
        parent[i] = j;
        break;
      }
  }
  return parent;
}

int max_vertex_degree(const RTree& T) {
  std::map<int, int> deg;
  for (const auto& e : T.edges)
    for (int v : e) ++deg[v];
  int best = 0;
  for (const auto& [v, d] : deg) best = std::max(best, d);
  return best;
}

KGraph rtree_as_kgraph(const RTree& T) {
  std::set<std::vector<int>> dedup;
  for (const auto& e : T.edges) dedup.insert(sorted_copy(e));
  return KGraph(T.n, T.r, std::vector<std::vector<int>>(dedup.begin(), dedup.end()));
}

bool admits(const KGraph& G, const RTree& T, int k) {
  if (k != G.k) throw std::invalid_argument("admits: uniformity mismatch");
  if (!G.support().is_subset_of(T.vertex_set()))
    throw std::invalid_argument("admits: graph vertex outside the tree");
  std::vector<VertexSet> sets;
  for (const auto& e : T.edges) sets.emplace_back(e);
  for (const auto& e : G.edges) {
    VertexSet es(e);
    bool inside = false;
    for (const auto& t : sets)
      if (es.is_subset_of(t)) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

RTree reroot(const RTree& T, int edge_index) {
  std::vector<int> parent = rtree_parents(T);
  int E = static_cast<int>(T.edges.size());
  if (edge_index < 0 || edge_index >= E)
    throw std::invalid_argument("reroot: edge index out of range");
  std::vector<std::vector<int>> adj(E);
  for (int i = 1; i < E; ++i) {
    adj[i].push_back(parent[i]);
    adj[parent[i]].push_back(i);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  RTree out;
  out.n = T.n;
  out.r = T.r;
  std::vector<bool> visited(E, false);
  std::deque<int> queue{edge_index};
  visited[edge_index] = true;
  out.edges.push_back(sorted_copy(T.edges[edge_index]));
  std::vector<VertexSet> sets{VertexSet(T.edges[edge_index])};
  std::vector<int> origin{edge_index};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    VertexSet cur_set(T.edges[cur]);
    for (int nb : adj[cur]) {
      if (visited[nb]) continue;
      visited[nb] = true;
      queue.push_back(nb);
      VertexSet nb_set(T.edges[nb]);
      VertexSet shared = nb_set & cur_set;
      VertexSet fresh = nb_set - cur_set;
      std::vector<int> line = shared.to_vector();
      line.push_back(fresh.min());
      out.edges.push_back(line);
    }
  }
  if (static_cast<int>(out.edges.size()) != E)
    throw std::invalid_argument("reroot: tree is not connected");
  if (auto bad = validate_rtree(out))
    throw std::logic_error("reroot: produced an invalid ordering (" + bad->rule + ")");
  return out;
}

std::optional<std::string> layering_violation(const RTree& T, const Layering& L) {
  if (auto bad = validate_rtree(T)) return "underlying tree invalid (" + bad->rule + ")";
  std::map<int, int> layer_of;  // vertex -> 1-based layer
  for (int li = 0; li < static_cast<int>(L.layers.size()); ++li)
    for (int v : L.layers[li]) {
      if (v < 0 || v >= T.n) return "layer lists a vertex out of range";
      if (layer_of.count(v)) return "vertex appears in two layers";
      layer_of[v] = li + 1;
    }
  VertexSet verts = T.vertex_set();
  for (int v : verts.to_vector())
    if (!layer_of.count(v)) return "tree vertex missing from all layers";
  if (static_cast<int>(layer_of.size()) != verts.size())
    return "layer lists a vertex outside the tree";
  if (static_cast<int>(L.root.size()) != T.r - 1) return "root tuple has wrong length";
  if (L.layers.empty() || L.layers[0].size() != 1) return "L1 is not a single vertex";
  for (int i = 0; i < T.r - 1; ++i) {
    auto it = layer_of.find(L.root[i]);
    if (it == layer_of.end() || it->second != i + 1)
      return "root tuple entry outside its layer";
  }
  // (L2): every vertex below the first layer has an edge into the layer above.
  for (int li = 1; li < static_cast<int>(L.layers.size()); ++li) {
    for (int v : L.layers[li]) {
      bool linked = false;
      for (const auto& e : T.edges) {
        if (std::find(e.begin(), e.end(), v) == e.end()) continue;
        for (int w : e)
          if (layer_of[w] == li) {
            linked = true;
            break;
          }
        if (linked) break;
      }
      if (!linked) return "vertex has no edge into the previous layer";
    }
  }
  // (L3): each edge meets r consecutive layers once each.
  for (const auto& e : T.edges) {
    std::vector<int> idx;
    for (int v : e) idx.push_back(layer_of[v]);
    std::sort(idx.begin(), idx.end());
    for (int t = 0; t + 1 < static_cast<int>(idx.size()); ++t)
      if (idx[t + 1] != idx[t] + 1) return "edge does not meet consecutive layers once each";
  }
  return std::nullopt;
}

namespace {

Layering collect_layers(const std::map<int, int>& layer_of,
                        const std::vector<int>& x) {
  int top = 0;
  for (const auto& [v, l] : layer_of) top = std::max(top, l);
  Layering L;
  L.layers.assign(top, {});
  for (const auto& [v, l] : layer_of) L.layers[l - 1].push_back(v);
  for (auto& layer : L.layers) std::sort(layer.begin(), layer.end());
  L.root = x;
  return L;
}

}  // namespace

Layering compute_layering(const RTree& T, const std::vector<int>& x) {
  if (T.r < 2) throw std::invalid_argument("compute_layering: r must be at least 2");
  if (auto bad = validate_rtree(T))
    throw std::invalid_argument("compute_layering: invalid tree (" + bad->rule + ")");
  if (static_cast<int>(x.size()) != T.r - 1)
    throw std::invalid_argument("compute_layering: root tuple must have r-1 vertices");
  VertexSet xs;
  for (int v : x) {
    if (v < 0 || v >= T.n || xs.contains(v))
      throw std::invalid_argument("compute_layering: bad root tuple");
    xs.insert(v);
  }
  int root_idx = -1;
  std::vector<int> root_key;
  for (int i = 0; i < static_cast<int>(T.edges.size()); ++i) {
    if (!xs.is_subset_of(VertexSet(T.edges[i]))) continue;
    std::vector<int> key = sorted_copy(T.edges[i]);
    if (root_idx == -1 || key < root_key) {
      root_idx = i;
      root_key = key;
    }
  }
  if (root_idx == -1)
    throw std::invalid_argument("compute_layering: root tuple is not inside any edge");

  RTree R = reroot(T, root_idx);
  VertexSet leftover_set = VertexSet(R.edges[0]) - xs;
  std::vector<int> root_edge = x;
  root_edge.push_back(leftover_set.min());
  R.edges[0] = root_edge;

  std::map<int, int> layer_of;
  for (int i = 0; i < T.r; ++i) layer_of[root_edge[i]] = i + 1;

  // Primary pass: place each new vertex in the hole of its witness layers,
  // or one past the deepest witness layer when the witness layers are
  // already consecutive.
  bool ok = true;
  for (std::size_t i = 1; i < R.edges.size() && ok; ++i) {
    const auto& e = R.edges[i];
    std::vector<int> a;
    for (std::size_t t = 0; t + 1 < e.size(); ++t) a.push_back(layer_of[e[t]]);
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) {
      ok = false;
      break;
    }
    int spread = a.empty() ? 0 : a.back() - a.front();
    if (spread == T.r - 1) {
      int hole = -1;
      for (int t = 0; t + 1 < static_cast<int>(a.size()); ++t)
        if (a[t + 1] == a[t] + 2) hole = a[t] + 1;
      if (hole == -1) {
        ok = false;
        break;
      }
      layer_of[e.back()] = hole;
    } else if (spread == T.r - 2 || a.empty()) {
      layer_of[e.back()] = (a.empty() ? 0 : a.back()) + 1;
    } else {
      ok = false;
      break;
    }
  }
  if (ok) {
    Layering L = collect_layers(layer_of, x);
    if (!layering_violation(T, L)) return L;
  }

  // Exhaustive fallback over the open slots of every edge.
  std::map<int, int> assign;
  for (int i = 0; i < T.r; ++i) assign[root_edge[i]] = i + 1;
  std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
    if (i == R.edges.size()) return !layering_violation(T, collect_layers(assign, x));
    const auto& e = R.edges[i];
    std::vector<int> a;
    for (std::size_t t = 0; t + 1 < e.size(); ++t) a.push_back(assign[e[t]]);
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) return false;
    std::vector<int> options;
    int spread = a.empty() ? 0 : a.back() - a.front();
    if (spread == T.r - 1) {
      for (int t = 0; t + 1 < static_cast<int>(a.size()); ++t)
        if (a[t + 1] == a[t] + 2) options.push_back(a[t] + 1);
    } else if (spread == T.r - 2 || a.empty()) {
      options.push_back((a.empty() ? 0 : a.back()) + 1);
      if (!a.empty() && a.front() - 1 >= 2) options.push_back(a.front() - 1);
    }
    for (int slot : options) {
      assign[e.back()] = slot;
      if (dfs(i + 1)) return true;
      assign.erase(e.back());
    }
    return false;
  };
  if (dfs(1)) return collect_layers(assign, x);
  throw std::logic_error("compute_layering: no consistent layering exists");
}

std::optional<int> layered_rank(const RTree& T, const Layering& L,
                                const std::vector<int>& s) {
  if (static_cast<int>(s.size()) != T.r - 1)
    throw std::invalid_argument("layered_rank: tuple must have r-1 vertices");
  VertexSet ss;
  for (int v : s) {
    if (v < 0 || v >= T.n || ss.contains(v))
      throw std::invalid_argument("layered_rank: bad tuple");
    ss.insert(v);
  }
  bool in_shadow = false;
  for (const auto& e : T.edges)
    if (ss.is_subset_of(VertexSet(e))) {
      in_shadow = true;
      break;
    }
  if (!in_shadow) throw std::invalid_argument("layered_rank: tuple is not inside any edge");
  std::map<int, int> layer_of;
  for (int li = 0; li < static_cast<int>(L.layers.size()); ++li)
    for (int v : L.layers[li]) layer_of[v] = li + 1;
  auto first = layer_of.find(s[0]);
  if (first == layer_of.end()) return std::nullopt;
  int j = first->second;
  for (int i = 1; i < static_cast<int>(s.size()); ++i) {
    auto it = layer_of.find(s[i]);
    if (it == layer_of.end() || it->second != j + i) return std::nullopt;
  }
  return j;
}

InducedSubtree induced_subtree(const RTree& T, const Layering& L,
                               const std::vector<int>& s) {
  if (auto bad = layering_violation(T, L))
    throw std::invalid_argument("induced_subtree: invalid layering (" + *bad + ")");
  auto rank = layered_rank(T, L, s);
  if (!rank) throw std::invalid_argument("induced_subtree: tuple is not layered");

  // Work in the ordering rooted where the layering is rooted.
  VertexSet root_set;
  for (int v : L.root) root_set.insert(v);
  int root_idx = -1;
  std::vector<int> root_key;
  for (int i = 0; i < static_cast<int>(T.edges.size()); ++i) {
    if (!root_set.is_subset_of(VertexSet(T.edges[i]))) continue;
    std::vector<int> key = sorted_copy(T.edges[i]);
    if (root_idx == -1 || key < root_key) {
      root_idx = i;
      root_key = key;
    }
  }
  if (root_idx == -1)
    throw std::invalid_argument("induced_subtree: layering root is not inside any edge");
  RTree R = reroot(T, root_idx);
  std::vector<int> parent = rtree_parents(R);
  int E = static_cast<int>(R.edges.size());

  std::map<int, int> layer_of;
  for (int li = 0; li < static_cast<int>(L.layers.size()); ++li)
    for (int v : L.layers[li]) layer_of[v] = li + 1;

  VertexSet ss;
  for (int v : s) ss.insert(v);
  int deep_layer = *rank + T.r - 1;
  std::vector<int> child_edges;
  for (int i = 0; i < E; ++i) {
    VertexSet es(R.edges[i]);
    if (!ss.is_subset_of(es)) continue;
    VertexSet extra = es - ss;
    if (layer_of[extra.min()] == deep_layer) child_edges.push_back(i);
  }

  InducedSubtree out;
  out.sub.n = T.n;
  out.sub.r = T.r;
  out.rest.n = T.n;
  out.rest.r = T.r;
  out.sub_layering.root = s;
  if (child_edges.empty()) {
    out.sub_empty = true;
    out.rest.edges = R.edges;
    return out;
  }

  // Closure: the child edges together with all their descendants in R.
  std::vector<std::vector<int>> children(E);
  for (int i = 1; i < E; ++i) children[parent[i]].push_back(i);
  std::vector<bool> in_closure(E, false);
  std::function<void(int)> mark = [&](int i) {
    if (in_closure[i]) return;
    in_closure[i] = true;
    for (int c : children[i]) mark(c);
  };
  for (int i : child_edges) mark(i);

  int first_child = child_edges[0];
  std::vector<int> first_key = sorted_copy(R.edges[first_child]);
  for (int i : child_edges) {
    std::vector<int> key = sorted_copy(R.edges[i]);
    if (key < first_key) {
      first_child = i;
      first_key = key;
    }
  }
  std::vector<int> first_line = s;
  first_line.push_back((VertexSet(R.edges[first_child]) - ss).min());
  out.sub.edges.push_back(first_line);
  for (int i : child_edges) {
    if (i == first_child) continue;
    std::vector<int> line = sorted_copy(s);
    line.push_back((VertexSet(R.edges[i]) - ss).min());
    out.sub.edges.push_back(line);
  }
  std::set<int> child_ids(child_edges.begin(), child_edges.end());
  for (int i = 0; i < E; ++i)
    if (in_closure[i] && !child_ids.count(i)) out.sub.edges.push_back(R.edges[i]);
  if (auto bad = validate_rtree(out.sub))
    throw std::logic_error("induced_subtree: subtree ordering invalid (" + bad->rule + ")");

  VertexSet sub_verts = out.sub.vertex_set();
  for (int li = *rank; li <= static_cast<int>(L.layers.size()); ++li) {
    std::vector<int> layer;
    for (int v : L.layers[li - 1])
      if (sub_verts.contains(v)) layer.push_back(v);
    out.sub_layering.layers.push_back(layer);
  }
  while (!out.sub_layering.layers.empty() && out.sub_layering.layers.back().empty())
    out.sub_layering.layers.pop_back();
  if (auto bad = layering_violation(out.sub, out.sub_layering))
    throw std::logic_error("induced_subtree: inherited layering invalid (" + *bad + ")");

  for (int i = 0; i < E; ++i)
    if (!in_closure[i]) out.rest.edges.push_back(R.edges[i]);
  if (out.rest.edges.empty()) {
    out.rest_empty = true;
  } else if (auto bad = validate_rtree(out.rest)) {
    throw std::logic_error("induced_subtree: rest ordering invalid (" + bad->rule + ")");
  }
  return out;
}

FirstLayerCut cut_at_first_layer(const RTree& T, const Layering& L) {
  if (auto bad = layering_violation(T, L))
    throw std::invalid_argument("cut_at_first_layer: invalid layering (" + *bad + ")");
  std::map<int, int> layer_of;
  for (int li = 0; li < static_cast<int>(L.layers.size()); ++li)
    for (int v : L.layers[li]) layer_of[v] = li + 1;
  int x1 = L.layers[0][0];

  FirstLayerCut cut;
  for (int i = 0; i < static_cast<int>(T.edges.size()); ++i) {
    const auto& e = T.edges[i];
    if (std::find(e.begin(), e.end(), x1) == e.end()) continue;
    cut.edge_indices.push_back(i);
    std::vector<int> tuple;
    for (int v : e)
      if (v != x1) tuple.push_back(v);
    std::sort(tuple.begin(), tuple.end(),
              [&](int a, int b) { return layer_of[a] < layer_of[b]; });
    cut.tuples.push_back(tuple);
  }

  if (cut.edge_indices.size() != cut.tuples.size() ||
      static_cast<int>(cut.edge_indices.size()) > max_vertex_degree(T))
    throw std::invalid_argument("cut_at_first_layer: size conclusions failed");
  std::set<std::vector<int>> covered;
  for (int i : cut.edge_indices) covered.insert(sorted_copy(T.edges[i]));
  for (const auto& tuple : cut.tuples) {
    auto rank = layered_rank(T, L, tuple);
    if (!rank || *rank != 2)
      throw std::invalid_argument("cut_at_first_layer: tuple is not layered at rank 2");
    InducedSubtree part = induced_subtree(T, L, tuple);
    for (const auto& e : part.sub.edges) {
      std::vector<int> key = sorted_copy(e);
      if (!covered.insert(key).second)
        throw std::invalid_argument("cut_at_first_layer: edge covered twice");
    }
  }
  if (covered.size() != T.edges.size())
    throw std::invalid_argument("cut_at_first_layer: edges left uncovered");
  return cut;
}

SmallSubtreeResult find_small_subtree(const RTree& T, const Layering& L,
                                      const Rat& gamma, int Delta) {
  if (Delta < 1) throw std::invalid_argument("find_small_subtree: Delta must be positive");
  if (max_vertex_degree(T) > Delta)
    throw std::invalid_argument("find_small_subtree: tree degree exceeds Delta");
  if (auto bad = layering_violation(T, L))
    throw std::invalid_argument("find_small_subtree: invalid layering (" + *bad + ")");
  int n = T.vertex_count();
  long long lower = (gamma * Rat(n) / Rat(2 * Delta)).ceil();
  long long upper = (gamma * Rat(n)).floor();
  SmallSubtreeResult res;
  if (lower > upper) {
    res.reason = "size window is empty";
    return res;
  }

  std::map<int, int> layer_of;
  for (int li = 0; li < static_cast<int>(L.layers.size()); ++li)
    for (int v : L.layers[li]) layer_of[v] = li + 1;

  std::set<std::vector<int>> seen;
  int best_rank = -1;
  std::vector<int> best_tuple;
  long long best_size = 0;
  for (const auto& e : T.edges) {
    std::vector<int> sorted_edge = sorted_copy(e);
    for_each_subset(sorted_edge, T.r - 1, [&](const std::vector<int>& sub) {
      if (!seen.insert(sub).second) return true;
      std::vector<int> tuple = sub;
      std::sort(tuple.begin(), tuple.end(),
                [&](int a, int b) { return layer_of[a] < layer_of[b]; });
      auto rank = layered_rank(T, L, tuple);
      if (!rank) return true;
      InducedSubtree part = induced_subtree(T, L, tuple);
      long long size = static_cast<long long>(part.sub.edges.size());
      if (size < lower) return true;
      if (*rank > best_rank || (*rank == best_rank && tuple < best_tuple)) {
        best_rank = *rank;
        best_tuple = tuple;
        best_size = size;
      }
      return true;
    });
  }
  if (best_rank == -1) {
    res.reason = "no layered tuple reaches the lower size bound";
    return res;
  }
  if (best_size > upper) {
    res.reason = "selected subtree exceeds the upper size bound";
    return res;
  }
  InducedSubtree part = induced_subtree(T, L, best_tuple);
  VertexSet boundary = part.sub.vertex_set() &
                       (part.rest_empty ? VertexSet() : part.rest.vertex_set());
  VertexSet ts;
  for (int v : best_tuple) ts.insert(v);
  if (!(boundary == ts)) {
    res.reason = "subtree meets the rest outside the tuple";
    return res;
  }
  res.found = true;
  res.tuple = best_tuple;
  res.subtree_edges = static_cast<int>(best_size);
  return res;
}

StrongProduct strong_product_decomposition(const KGraph& T2, int m) {
  if (T2.k != 2) throw std::invalid_argument("strong_product_decomposition: base must be 2-uniform");
  if (m < 1) throw std::invalid_argument("strong_product_decomposition: m must be positive");
  int n2 = T2.n;
  if (n2 < 1) throw std::invalid_argument("strong_product_decomposition: empty base");
  if (static_cast<long long>(T2.edge_count()) != n2 - 1)
    throw std::invalid_argument("strong_product_decomposition: base is not a tree");
  std::vector<std::vector<int>> adj(n2);
  for (const auto& e : T2.edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::vector<int> parent2(n2, -1);
  std::vector<int> order;
  std::deque<int> queue{0};
  std::vector<bool> seen(n2, false);
  seen[0] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        parent2[w] = v;
        queue.push_back(w);
      }
  }
  if (static_cast<int>(order.size()) != n2)
    throw std::invalid_argument("strong_product_decomposition: base is not connected");

  auto blob = [&](int v) {
    std::vector<int> b(m);
    std::iota(b.begin(), b.end(), v * m);
    return b;
  };

  std::set<std::vector<int>> gedges;
  for (int v = 0; v < n2; ++v) {
    std::vector<int> b = blob(v);
    for_each_subset(b, 2, [&](const std::vector<int>& p) {
      gedges.insert(p);
      return true;
    });
  }
  for (const auto& e : T2.edges)
    for (int a : blob(e[0]))
      for (int b : blob(e[1])) gedges.insert({std::min(a, b), std::max(a, b)});
  StrongProduct out{KGraph(n2 * m, 2, std::vector<std::vector<int>>(gedges.begin(), gedges.end())),
                    RTree{}};

  out.tree.n = n2 * m;
  if (n2 == 1) {
    out.tree.r = m;
    out.tree.edges.push_back(blob(0));
    return out;
  }

  out.tree.r = 2 * m;
  int c1 = order[1];
  std::vector<int> root = blob(0);
  {
    std::vector<int> other = blob(c1);
    root.insert(root.end(), other.begin(), other.end());
    std::sort(root.begin(), root.end());
  }
  out.tree.edges.push_back(root);

  // served[v]: an existing edge containing all of blob(v).
  std::vector<std::vector<int>> served(n2);
  served[0] = root;
  served[c1] = root;
  for (std::size_t t = 2; t < order.size(); ++t) {
    int c = order[t];
    int p = parent2[c];
    std::vector<int> prev = served[p];
    VertexSet keep(blob(p));
    for (int i = 0; i < m; ++i) {
      int junk = -1;
      for (int v : prev)
        if (!keep.contains(v) && (junk == -1 || v < junk)) junk = v;
      std::vector<int> witness;
      for (int v : prev)
        if (v != junk) witness.push_back(v);
      std::sort(witness.begin(), witness.end());
      int fresh = c * m + i;
      keep.insert(fresh);
      witness.push_back(fresh);
      out.tree.edges.push_back(witness);
      prev = witness;
    }
    served[c] = prev;
  }
  if (auto bad = validate_rtree(out.tree))
    throw std::logic_error("strong_product_decomposition: invalid tree (" + bad->rule + ")");
  return out;
}

RTree random_rtree(std::mt19937_64& rng, int n, int r) {
  if (r < 1 || n < r) throw std::invalid_argument("random_rtree: need n >= r >= 1");
  if (n > VertexSet::kCapacity) throw std::invalid_argument("random_rtree: n too large");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);
  RTree T;
  T.n = n;
  T.r = r;
  std::vector<int> root(perm.begin(), perm.begin() + r);
  std::sort(root.begin(), root.end());
  T.edges.push_back(root);
  for (int i = r; i < n; ++i) {
    const auto& host = T.edges[rng() % T.edges.size()];
    std::vector<int> witness = host;
    witness.erase(witness.begin() + static_cast<long>(rng() % witness.size()));
    std::sort(witness.begin(), witness.end());
    witness.push_back(perm[i]);
    T.edges.push_back(witness);
  }
  return T;
}

}  // namespace hypow

#include "hypow/io.hpp"

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hypow {

namespace {

// Strips comments and surrounding whitespace; empty result means skip.
std::string clean_line(const std::string& raw) {
  std::string s = raw;
  const auto hash = s.find('#');
  if (hash != std::string::npos) s.erase(hash);
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<int> parse_ints(const std::string& s, int line_no) {
  std::istringstream iss(s);
  std::vector<int> out;
  int v;
  while (iss >> v) out.push_back(v);
  if (!iss.eof()) {
    throw std::invalid_argument("line " + std::to_string(line_no) +
                                ": expected whitespace-separated integers");
  }
  return out;
}

void check_edge_line(const std::vector<int>& e, int k, int n, int line_no) {
  if (static_cast<int>(e.size()) != k) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": edge has " +
                                std::to_string(e.size()) + " vertices, expected " +
                                std::to_string(k));
  }
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] >= n) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": vertex " +
                                  std::to_string(e[i]) + " out of range [0, " +
                                  std::to_string(n) + ")");
    }
    if (i > 0 && e[i] <= e[i - 1]) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": edge vertices must be strictly ascending");
    }
  }
}

}  // namespace

KGraph read_khg(std::istream& in) {
  std::string raw;
  int line_no = 0;
  int n = -1, k = -1;
  std::vector<std::vector<int>> edges;
  std::set<std::vector<int>> seen;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string s = clean_line(raw);
    if (s.empty()) continue;
    const std::vector<int> vals = parse_ints(s, line_no);
    if (n < 0) {
      if (vals.size() != 2) {
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": header must be `n k`");
      }
      n = vals[0];
      k = vals[1];
      if (n < 0 || k < 1) {
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": header values out of range");
      }
      continue;
    }
    check_edge_line(vals, k, n, line_no);
    if (!seen.insert(vals).second) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": duplicate edge");
    }
    edges.push_back(vals);
  }
  if (n < 0) throw std::invalid_argument("missing `n k` header line");
  return KGraph(n, k, edges);
}

KGraph read_khg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return read_khg(in);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_khg(std::ostream& out, const KGraph& H) {
  out << H.n << ' ' << H.k << '\n';
  for (const auto& e : H.edges) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out << ' ';
      out << e[i];
    }
    out << '\n';
  }
}

void write_khg_file(const std::string& path, const KGraph& H) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
  write_khg(out, H);
}

std::string khg_string(const KGraph& H) {
  std::ostringstream oss;
  write_khg(oss, H);
  return oss.str();
}

KGraph khg_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("edges")) {
    throw std::invalid_argument("graph json needs fields n, k, edges");
  }
  const int n = j.at("n").get<int>();
  const int k = j.at("k").get<int>();
  if (n < 0 || k < 1) throw std::invalid_argument("graph json header values out of range");
  std::vector<std::vector<int>> edges;
  std::set<std::vector<int>> seen;
  int idx = 0;
  for (const auto& je : j.at("edges")) {
    const std::vector<int> e = je.get<std::vector<int>>();
    try {
      check_edge_line(e, k, n, idx);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("edge " + std::to_string(idx) +
                                  ": not a canonical edge");
    }
    if (!seen.insert(e).second) {
      throw std::invalid_argument("edge " + std::to_string(idx) + ": duplicate edge");
    }
    edges.push_back(e);
    ++idx;
  }
  return KGraph(n, k, edges);
}

nlohmann::json khg_to_json(const KGraph& H) {
  nlohmann::json j;
  j["n"] = H.n;
  j["k"] = H.k;
  j["edges"] = H.edges;
  return j;
}

RTree read_rtree(std::istream& in) {
  std::string raw;
  int line_no = 0;
  RTree T;
  bool have_header = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string s = clean_line(raw);
    if (s.empty()) continue;
    const std::vector<int> vals = parse_ints(s, line_no);
    if (!have_header) {
      if (vals.size() != 2) {
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": header must be `n r`");
      }
      T.n = vals[0];
      T.r = vals[1];
      if (T.n < 0 || T.r < 1) {
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": header values out of range");
      }
      have_header = true;
      continue;
    }
    if (static_cast<int>(vals.size()) != T.r) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": edge has " +
                                  std::to_string(vals.size()) + " vertices, expected " +
                                  std::to_string(T.r));
    }
    for (int v : vals) {
      if (v < 0 || v >= T.n) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": vertex " +
                                    std::to_string(v) + " out of range [0, " +
                                    std::to_string(T.n) + ")");
      }
    }
    T.edges.push_back(vals);
  }
  if (!have_header) throw std::invalid_argument("missing `n r` header line");
  if (const auto bad = validate_rtree(T)) {
    throw std::invalid_argument("edge " + std::to_string(bad->edge_index) +
                                " breaks rule " + bad->rule);
  }
  return T;
}

RTree read_rtree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return read_rtree(in);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_rtree(std::ostream& out, const RTree& T) {
  out << T.n << ' ' << T.r << '\n';
  for (const auto& e : T.edges) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out << ' ';
      out << e[i];
    }
    out << '\n';
  }
}

void write_layering(std::ostream& out, const Layering& L) {
  for (std::size_t i = 0; i < L.layers.size(); ++i) {
    out << (i + 1) << ':';
    for (int v : L.layers[i]) out << ' ' << v;
    out << '\n';
  }
}

std::vector<std::vector<std::vector<int>>> read_parts(std::istream& in) {
  std::vector<std::vector<std::vector<int>>> tuples;
  std::vector<std::vector<int>> current;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string s = clean_line(raw);
    if (s.empty()) {
      if (!current.empty()) tuples.push_back(std::move(current));
      current.clear();
      continue;
    }
    current.push_back(parse_ints(s, line_no));
  }
  if (!current.empty()) tuples.push_back(std::move(current));
  return tuples;
}

std::vector<std::vector<std::vector<int>>> read_parts_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_parts(in);
}

std::vector<int> parse_vertex_list(const std::string& s) {
  std::string t = s;
  for (char& c : t) {
    if (c == ',') c = ' ';
  }
  std::istringstream iss(t);
  std::vector<int> out;
  int v;
  while (iss >> v) out.push_back(v);
  if (!iss.eof()) throw std::invalid_argument("bad vertex list: " + s);
  return out;
}

std::string fnv1a_digest(const std::string& content) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : content) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string graph_digest(const KGraph& H) { return fnv1a_digest(khg_string(H)); }

}  // namespace hypow

// Text and JSON interchange: khg graphs, trees, layerings, part files,
// vertex lists, and content digests.
#ifndef HYPOW_IO_HPP
#define HYPOW_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "hypow/kgraph.hpp"
#include "hypow/rtree.hpp"

#include "json.hpp"

namespace hypow {

// khg v1: line 1 `n k`, one edge per line with ascending vertex ids,
// `#` starts a comment.  Rejections name the offending line.
KGraph read_khg(std::istream& in);
KGraph read_khg_file(const std::string& path);
void write_khg(std::ostream& out, const KGraph& H);
void write_khg_file(const std::string& path, const KGraph& H);
std::string khg_string(const KGraph& H);

// JSON mirror {n, k, edges}; rejections name the offending edge index.
KGraph khg_from_json(const nlohmann::json& j);
nlohmann::json khg_to_json(const KGraph& H);

// Tree format: line 1 `n r`, then edges in valid order, new vertex last.
RTree read_rtree(std::istream& in);
RTree read_rtree_file(const std::string& path);
void write_rtree(std::ostream& out, const RTree& T);

// One line per layer: `index: v v v`, indices starting at 1.
void write_layering(std::ostream& out, const Layering& L);

// Groups of lines separated by blank lines; each line is one part as
// space-separated vertex ids; each group is one tuple of parts.
std::vector<std::vector<std::vector<int>>> read_parts(std::istream& in);
std::vector<std::vector<std::vector<int>>> read_parts_file(const std::string& path);

// Comma- or space-separated vertex ids.
std::vector<int> parse_vertex_list(const std::string& s);

// FNV-1a 64-bit hex digest of arbitrary text / of a graph's canonical form.
std::string fnv1a_digest(const std::string& content);
std::string graph_digest(const KGraph& H);

}  // namespace hypow

#endif

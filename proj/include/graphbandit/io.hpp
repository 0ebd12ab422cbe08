#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "graphbandit/errors.hpp"
#include "graphbandit/graph.hpp"

namespace graphbandit {

struct EdgeListResult {
  Graph graph;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;
  /// external_ids[v] is the id vertex v carried in the file. Empty unless
  /// the file was loaded with remapping.
  std::vector<std::uint64_t> external_ids;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline bool next_token(std::string_view& rest, std::string_view& token) {
  rest = trim(rest);
  if (rest.empty()) return false;
  const auto end = rest.find_first_of(" \t");
  token = rest.substr(0, end);
  rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end);
  return true;
}

inline bool parse_id(std::string_view token, std::uint64_t& out) {
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace detail

/// Reads a whitespace-separated "u v" edge list; '#' starts a comment line.
///
/// Without remapping the graph spans vertices 0..max_id. With remapping,
/// the distinct ids are compacted to 0..n-1 in ascending id order.
inline EdgeListResult load_edge_list(const std::filesystem::path& path, bool remap = false) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open edge list '" + path.string() + "'");

  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  std::uint64_t max_id = 0;
  bool any_vertex = false;
  std::size_t self_loops = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest = detail::trim(line);
    if (rest.empty() || rest.front() == '#') continue;
    std::string_view a, b, extra;
    std::uint64_t u = 0, v = 0;
    if (!detail::next_token(rest, a) || !detail::next_token(rest, b) || detail::next_token(rest, extra) ||
        !detail::parse_id(a, u) || !detail::parse_id(b, v)) {
      throw FormatError(path.string() + ":" + std::to_string(line_no) + ": expected two non-negative integer ids, got '" +
                        line + "'");
    }
    any_vertex = true;
    max_id = std::max({max_id, u, v});
    if (u == v) {
      ++self_loops;
      raw.emplace_back(u, v);  // keeps the vertex alive under remapping
      continue;
    }
    raw.emplace_back(std::min(u, v), std::max(u, v));
  }
  if (!any_vertex) throw EmptyGraphError("edge list '" + path.string() + "' contains no edges");

  EdgeListResult result;
  result.self_loops_dropped = self_loops;
  std::size_t n = 0;
  std::map<std::uint64_t, Vertex> index;
  if (remap) {
    for (const auto& [u, v] : raw) {
      index.emplace(u, 0);
      index.emplace(v, 0);
    }
    Vertex next = 0;
    for (auto& [id, slot] : index) {
      slot = next++;
      result.external_ids.push_back(id);
    }
    n = index.size();
  } else {
    if (max_id >= UINT32_MAX) throw FormatError(path.string() + ": vertex id too large; load with remapping");
    n = static_cast<std::size_t>(max_id) + 1;
  }

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& [u, v] : raw) {
    if (u == v) continue;
    if (remap) {
      edges.emplace_back(index.at(u), index.at(v));
    } else {
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  result.graph = Graph::from_edges(n, edges);
  result.duplicates_dropped = edges.size() - result.graph.edge_count();
  return result;
}

inline void save_edge_list(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write edge list '" + path.string() + "'");
  out << "# vertices " << g.vertex_count() << " edges " << g.edge_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace graphbandit

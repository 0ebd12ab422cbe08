#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "graphbandit/errors.hpp"

namespace graphbandit {

using Vertex = std::uint32_t;
using Arm = Vertex;
using Round = std::uint64_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph over vertices 0..n-1. Immutable once built.
///
/// Both the open neighbourhood N(v) and the closed neighbourhood
/// {v} u N(v) are stored sorted, so feedback sets are handed out as
/// spans without allocation.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on `n` vertices.
  explicit Graph(std::size_t n) : adj_(n), closed_(n) {
    for (std::size_t v = 0; v < n; ++v) closed_[v].push_back(static_cast<Vertex>(v));
  }

  /// Builds from an edge list. Duplicates and reversed pairs collapse into
  /// one edge; self-loops and out-of-range endpoints are rejected.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
      if (u >= n || v >= n) {
        throw ArgumentError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") out of range for " + std::to_string(n) + " vertices");
      }
      if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    g.finalize();
    return g;
  }

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::size_t degree(Vertex v) const {
    check(v);
    return adj_[v].size();
  }

  std::size_t max_degree() const noexcept { return max_degree_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    check(v);
    return adj_[v];
  }

  /// {v} u N(v), sorted ascending.
  std::span<const Vertex> closed_neighborhood(Vertex v) const {
    check(v);
    return closed_[v];
  }

  bool has_edge(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  /// Every edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adj_.size(); ++u) {
      for (const Vertex v : adj_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  void check(Vertex v) const {
    if (v >= adj_.size()) {
      throw ArgumentError("vertex " + std::to_string(v) + " out of range for " +
                          std::to_string(adj_.size()) + " vertices");
    }
  }

  void finalize() {
    edge_count_ = 0;
    max_degree_ = 0;
    for (std::size_t v = 0; v < adj_.size(); ++v) {
      auto& nb = adj_[v];
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
      edge_count_ += nb.size();
      max_degree_ = std::max(max_degree_, nb.size());
      auto& cl = closed_[v];
      cl.assign(nb.begin(), nb.end());
      cl.insert(std::lower_bound(cl.begin(), cl.end(), static_cast<Vertex>(v)),
                static_cast<Vertex>(v));
    }
    edge_count_ /= 2;
  }

  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::vector<Vertex>> closed_;
  std::size_t edge_count_ = 0;
  std::size_t max_degree_ = 0;
};

/// Feedback set of arm `a`: the arm itself plus all its neighbours.
inline std::span<const Vertex> closed_neighborhood(const Graph& g, Vertex a) {
  return g.closed_neighborhood(a);
}

/// Graph in force at each round t = 1, 2, ...
///
/// A static sequence holds one graph. A schedule holds several graphs that
/// are cycled through, each kept for `dwell` consecutive rounds.
class GraphSequence {
 public:
  explicit GraphSequence(Graph g) : graphs_{std::move(g)} {}

  GraphSequence(std::vector<Graph> schedule, std::size_t dwell) : graphs_(std::move(schedule)), dwell_(dwell) {
    if (graphs_.empty()) throw ArgumentError("graph schedule is empty");
    if (dwell_ == 0) throw ArgumentError("schedule dwell must be at least 1");
    for (const auto& g : graphs_) {
      if (g.vertex_count() != graphs_.front().vertex_count()) {
        throw ArgumentError("all graphs in a schedule must have the same vertex count");
      }
    }
  }

  const Graph& at(Round t) const {
    if (t == 0) throw ArgumentError("rounds are numbered from 1");
    return graphs_[((t - 1) / dwell_) % graphs_.size()];
  }

  std::size_t vertex_count() const noexcept { return graphs_.front().vertex_count(); }
  bool is_static() const noexcept { return graphs_.size() == 1; }
  std::size_t dwell() const noexcept { return dwell_; }
  std::span<const Graph> graphs() const noexcept { return graphs_; }

 private:
  std::vector<Graph> graphs_;
  std::size_t dwell_ = 1;
};

}  // namespace graphbandit

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "graphbandit/errors.hpp"
#include "graphbandit/graph.hpp"
#include "graphbandit/rng.hpp"

namespace graphbandit {

inline std::uint64_t max_edge_count(std::size_t n) noexcept {
  return static_cast<std::uint64_t>(n) * (n == 0 ? 0 : n - 1) / 2;
}

inline Graph empty_graph(std::size_t n) { return Graph(n); }

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(max_edge_count(n));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ArgumentError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::from_edges(n, edges);
}

/// Star K_{1,leaves} with centre 0.
inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

namespace detail {

/// Inverse of the row-major enumeration of pairs u < v.
inline std::vector<Edge> decode_pair_indices(std::size_t n, std::vector<std::uint64_t> indices) {
  std::sort(indices.begin(), indices.end());
  std::vector<Edge> edges;
  edges.reserve(indices.size());
  Vertex u = 0;
  std::uint64_t row_start = 0;
  std::uint64_t row_len = n - 1;
  for (const auto idx : indices) {
    while (idx >= row_start + row_len) {
      row_start += row_len;
      --row_len;
      ++u;
    }
    edges.emplace_back(u, static_cast<Vertex>(u + 1 + (idx - row_start)));
  }
  return edges;
}

}  // namespace detail

/// Uniform graph with exactly `m` edges, G(n, m).
///
/// Draws m distinct pair indices with Floyd's sampling algorithm, so the
/// cost is O(m) regardless of how close m is to n(n-1)/2.
inline Graph gen_erdos_renyi(std::size_t n, std::uint64_t m, Engine& rng) {
  const auto total = max_edge_count(n);
  if (m > total) {
    throw ArgumentError("G(n,m): m = " + std::to_string(m) + " exceeds " + std::to_string(total) +
                        " possible edges");
  }
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m * 2);
  std::vector<std::uint64_t> picked;
  picked.reserve(m);
  for (std::uint64_t j = total - m; j < total; ++j) {
    const std::uint64_t t = std::uniform_int_distribution<std::uint64_t>(0, j)(rng);
    const std::uint64_t take = chosen.insert(t).second ? t : j;
    if (take == j) chosen.insert(j);
    picked.push_back(take);
  }
  const auto edges = detail::decode_pair_indices(n, std::move(picked));
  return Graph::from_edges(n, edges);
}

/// G(n, p) as a mixture: the edge count is Binomial(n(n-1)/2, p) and the
/// graph is then uniform given that count.
inline Graph gen_erdos_renyi_p(std::size_t n, double p, Engine& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("G(n,p): p must lie in [0,1]");
  const auto total = max_edge_count(n);
  const auto m = std::binomial_distribution<std::uint64_t>(total, p)(rng);
  return gen_erdos_renyi(n, m, rng);
}

/// Static scale-free model: vertex i has weight (i+1)^(-1/(exponent-1)) and
/// endpoints of each of the `m` edges are drawn proportionally to weight,
/// rejecting loops and repeated pairs.
inline Graph gen_power_law(std::size_t n, std::uint64_t m, double exponent, Engine& rng) {
  if (n < 2) throw ArgumentError("power-law graph needs at least 2 vertices");
  if (!(exponent > 1.0)) throw ArgumentError("power-law exponent must exceed 1");
  const auto total = max_edge_count(n);
  if (m > total) {
    throw ArgumentError("power-law: m = " + std::to_string(m) + " exceeds " + std::to_string(total) +
                        " possible edges");
  }
  const double alpha = 1.0 / (exponent - 1.0);
  std::vector<double> weights(n);
  for (std::size_t i = 0; i < n; ++i) weights[i] = std::pow(static_cast<double>(i + 1), -alpha);
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(m * 2);
  std::vector<Edge> edges;
  edges.reserve(m);
  // Every pair has positive probability, so this only trips when m sits
  // so close to n(n-1)/2 that rejection sampling cannot finish.
  const std::uint64_t max_attempts = 1000 * m + 1'000'000;
  std::uint64_t attempts = 0;
  while (edges.size() < m) {
    if (++attempts > max_attempts) {
      throw ArgumentError("power-law: could not place " + std::to_string(m) + " distinct edges");
    }
    auto u = static_cast<Vertex>(pick(rng));
    auto v = static_cast<Vertex>(pick(rng));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (!seen.insert(static_cast<std::uint64_t>(u) * n + v).second) continue;
    edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

struct PlantedPartition {
  Graph graph;
  std::vector<std::uint32_t> labels;  // part index of each vertex
};

/// Balanced partition of 0..n-1 into k contiguous blocks whose sizes differ
/// by at most one.
inline std::vector<std::uint32_t> balanced_labels(std::size_t n, std::size_t k) {
  std::vector<std::uint32_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<std::uint32_t>(i * k / n);
  return labels;
}

/// Planted partition G(n, k, p, q). Consumes exactly one uniform per vertex
/// pair, so the stream position does not depend on p or q.
inline PlantedPartition gen_planted_partition(std::size_t n, std::size_t k, double p, double q, Engine& rng) {
  if (k < 1 || k > n) throw ArgumentError("planted partition: need 1 <= k <= n");
  if (!(q >= 0.0 && p <= 1.0)) throw ArgumentError("planted partition: probabilities must lie in [0,1]");
  if (!(p > q)) throw ArgumentError("planted partition: requires p > q");
  auto labels = balanced_labels(n, k);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const double prob = labels[u] == labels[v] ? p : q;
      if (unit(rng) < prob) edges.emplace_back(u, v);
    }
  }
  return {Graph::from_edges(n, edges), std::move(labels)};
}

}  // namespace graphbandit

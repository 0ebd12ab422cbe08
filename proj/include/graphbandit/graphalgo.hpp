#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "graphbandit/errors.hpp"
#include "graphbandit/graph.hpp"

namespace graphbandit {

struct CliqueCover {
  std::vector<std::vector<Vertex>> parts;
  std::size_t size() const noexcept { return parts.size(); }
};

struct DominatingSet {
  std::vector<Vertex> vertices;  // ascending
  std::size_t size() const noexcept { return vertices.size(); }
};

inline constexpr std::size_t kExactCliqueCoverLimit = 15;
inline constexpr std::size_t kExactDominationLimit = 20;

/// True when `cover` partitions the vertex set into cliques of `g`.
inline bool is_clique_cover(const Graph& g, const CliqueCover& cover) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::size_t covered = 0;
  for (const auto& part : cover.parts) {
    if (part.empty()) return false;
    for (std::size_t i = 0; i < part.size(); ++i) {
      const Vertex u = part[i];
      if (u >= g.vertex_count() || seen[u]) return false;
      seen[u] = 1;
      ++covered;
      for (std::size_t j = 0; j < i; ++j) {
        if (!g.has_edge(u, part[j])) return false;
      }
    }
  }
  return covered == g.vertex_count();
}

inline bool is_dominating_set(const Graph& g, const DominatingSet& set) {
  std::vector<char> dominated(g.vertex_count(), 0);
  for (const Vertex u : set.vertices) {
    if (u >= g.vertex_count()) return false;
    for (const Vertex v : g.closed_neighborhood(u)) dominated[v] = 1;
  }
  return std::all_of(dominated.begin(), dominated.end(), [](char c) { return c != 0; });
}

/// Clique cover by first-fit colouring of the complement.
///
/// Vertices are visited by descending degree (ties by id) and each joins
/// the first part all of whose members it is adjacent to.
inline CliqueCover greedy_clique_cover(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

  CliqueCover cover;
  std::vector<char> adjacent(n, 0);
  for (const Vertex v : order) {
    for (const Vertex u : g.neighbors(v)) adjacent[u] = 1;
    bool placed = false;
    for (auto& part : cover.parts) {
      // A part larger than deg(v) cannot be fully adjacent to v.
      if (part.size() > g.degree(v)) continue;
      if (std::all_of(part.begin(), part.end(), [&](Vertex u) { return adjacent[u] != 0; })) {
        part.push_back(v);
        placed = true;
        break;
      }
    }
    if (!placed) cover.parts.push_back({v});
    for (const Vertex u : g.neighbors(v)) adjacent[u] = 0;
  }
  for (auto& part : cover.parts) std::sort(part.begin(), part.end());
  return cover;
}

namespace detail {

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> masks(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (const Vertex u : g.neighbors(v)) masks[v] |= 1u << u;
  }
  return masks;
}

}  // namespace detail

/// Minimum number of cliques partitioning the vertices, by dynamic
/// programming over vertex subsets. Exponential; refuses n > max_n.
inline std::size_t exact_clique_cover_number(const Graph& g, std::size_t max_n = kExactCliqueCoverLimit) {
  const std::size_t n = g.vertex_count();
  if (n > max_n || n > 25) {
    throw SizeLimitError("exact clique cover limited to " + std::to_string(std::min<std::size_t>(max_n, 25)) +
                         " vertices, got " + std::to_string(n));
  }
  if (n == 0) return 0;
  const auto adj = detail::adjacency_masks(g);
  const std::uint32_t full = (1u << n) - 1;

  std::vector<char> is_clique(std::size_t{full} + 1, 0);
  is_clique[0] = 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const int low = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    is_clique[mask] = is_clique[rest] && (rest & ~adj[low]) == 0;
  }

  std::vector<std::uint8_t> best(std::size_t{full} + 1, 0);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t lowbit = mask & (~mask + 1);
    const std::uint32_t rest = mask ^ lowbit;
    std::uint8_t value = 0xFF;
    // The part containing the lowest vertex is lowbit plus any subset of rest.
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint32_t part = sub | lowbit;
      if (is_clique[part]) value = std::min<std::uint8_t>(value, best[mask ^ part] + 1);
      if (sub == 0) break;
    }
    best[mask] = value;
  }
  return best[full];
}

/// Greedy set cover over closed neighbourhoods: repeatedly take the vertex
/// that dominates the most not-yet-dominated vertices (ties by id).
inline DominatingSet greedy_dominating_set(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> gain(n);
  for (Vertex v = 0; v < n; ++v) gain[v] = g.closed_neighborhood(v).size();
  std::vector<char> dominated(n, 0);
  std::size_t remaining = n;
  DominatingSet result;
  while (remaining > 0) {
    Vertex pick = 0;
    for (Vertex v = 1; v < n; ++v) {
      if (gain[v] > gain[pick]) pick = v;
    }
    result.vertices.push_back(pick);
    for (const Vertex u : g.closed_neighborhood(pick)) {
      if (dominated[u]) continue;
      dominated[u] = 1;
      --remaining;
      // u no longer counts towards the gain of anything that covers it.
      for (const Vertex w : g.closed_neighborhood(u)) --gain[w];
    }
  }
  std::sort(result.vertices.begin(), result.vertices.end());
  return result;
}

/// Domination number by enumerating vertex subsets in increasing size.
/// Refuses n > max_n.
inline std::size_t exact_domination_number(const Graph& g, std::size_t max_n = kExactDominationLimit) {
  const std::size_t n = g.vertex_count();
  if (n > max_n || n > 30) {
    throw SizeLimitError("exact domination number limited to " + std::to_string(std::min<std::size_t>(max_n, 30)) +
                         " vertices, got " + std::to_string(n));
  }
  if (n == 0) return 0;
  std::vector<std::uint32_t> closed(n);
  for (Vertex v = 0; v < n; ++v) {
    for (const Vertex u : g.closed_neighborhood(v)) closed[v] |= 1u << u;
  }
  const std::uint32_t full = (1u << n) - 1;
  const std::size_t upper = greedy_dominating_set(g).size();
  // Each chosen vertex dominates at most max_degree + 1 vertices.
  const std::size_t lower = (n + g.max_degree()) / (g.max_degree() + 1);

  for (std::size_t k = lower; k < upper; ++k) {
    // Gosper's hack walks all k-subsets of n bits in increasing order.
    std::uint32_t subset = (1u << k) - 1;
    while (subset <= full) {
      std::uint32_t covered = 0;
      for (std::uint32_t bits = subset; bits != 0; bits &= bits - 1) {
        covered |= closed[std::countr_zero(bits)];
      }
      if (covered == full) return k;
      const std::uint32_t c = subset & (~subset + 1);
      const std::uint32_t r = subset + c;
      if (r == 0 || r > full) break;
      subset = (((r ^ subset) >> 2) / c) | r;
    }
  }
  return upper;
}

/// Harmonic number H(m) = 1 + 1/2 + ... + 1/m; the greedy dominating set is
/// at most H(max_degree + 1) times the optimum.
inline double harmonic_number(std::size_t m) {
  double h = 0.0;
  for (std::size_t i = 1; i <= m; ++i) h += 1.0 / static_cast<double>(i);
  return h;
}

}  // namespace graphbandit

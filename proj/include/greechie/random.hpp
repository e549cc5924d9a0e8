#pragma once

// Random Greechie diagrams for property tests: edges of size 3 or 4 drawn
// uniformly and kept when they meet every earlier edge in at most one
// vertex.

#include "greechie/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace greechie {

struct RandomDiagramOptions {
  std::size_t min_vertices = 10;
  std::size_t max_vertices = 18;
  double four_edge_probability = 0.3;
  /// Draws per diagram before giving up on a given (n, m).
  std::size_t attempts = 200;
};

/// A linear hypergraph with exactly n vertices (all covered) and m edges of
/// size 3 or 4, or nullopt if none turned up within the attempt limit.
inline std::optional<Hypergraph> random_diagram(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                                const RandomDiagramOptions& opt = {}) {
  std::bernoulli_distribution four(opt.four_edge_probability);
  std::vector<VertexId> points(n);
  std::iota(points.begin(), points.end(), VertexId{1});
  for (std::size_t attempt = 0; attempt < opt.attempts; ++attempt) {
    std::vector<Edge> edges;
    std::size_t misses = 0;
    while (edges.size() < m && misses < 50 * m) {
      const std::size_t k = four(rng) && n >= 4 ? 4 : 3;
      Edge e;
      std::sample(points.begin(), points.end(), std::back_inserter(e), static_cast<std::ptrdiff_t>(k), rng);
      const bool fits = std::none_of(edges.begin(), edges.end(),
                                     [&](const Edge& f) { return detail::intersection_size(e, f) > 1; });
      if (fits) {
        edges.push_back(std::move(e));
      } else {
        ++misses;
      }
    }
    if (edges.size() < m) continue;
    std::vector<bool> covered(n + 1, false);
    for (const Edge& e : edges)
      for (VertexId v : e) covered[v] = true;
    if (std::all_of(covered.begin() + 1, covered.end(), [](bool c) { return c; }))
      return Hypergraph(n, std::move(edges));
  }
  return std::nullopt;
}

/// A random diagram with no more edges than vertices.
inline Hypergraph random_sparse_diagram(std::mt19937_64& rng, const RandomDiagramOptions& opt = {}) {
  std::uniform_int_distribution<std::size_t> vertices(opt.min_vertices, opt.max_vertices);
  for (;;) {
    const std::size_t n = vertices(rng);
    // At least n/3 edges are needed to cover every vertex.
    std::uniform_int_distribution<std::size_t> edges((n + 2) / 3 + 1, n);
    if (auto h = random_diagram(rng, n, edges(rng), opt)) return std::move(*h);
  }
}

/// A random diagram with exactly one more edge than vertices, so that its
/// incidence system is square.
inline Hypergraph random_square_diagram(std::mt19937_64& rng, const RandomDiagramOptions& opt = {}) {
  std::uniform_int_distribution<std::size_t> vertices(std::max<std::size_t>(opt.min_vertices, 9),
                                                      opt.max_vertices);
  for (;;) {
    const std::size_t n = vertices(rng);
    if (auto h = random_diagram(rng, n, n + 1, opt)) return std::move(*h);
  }
}

}  // namespace greechie

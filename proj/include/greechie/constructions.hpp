#pragma once

// Concrete diagrams: the Fano plane, the affine plane of order 3, the grid
// merge of two diagrams with optional diagonal edges, and two small
// diagrams without group-valued measures (a 21-vertex OMP and a 67-vertex
// OML).

#include "greechie/enumerate.hpp"
#include "greechie/exact/nullspace.hpp"
#include "greechie/hypergraph.hpp"
#include "greechie/measures.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace greechie {

/// Projective plane of order 2 (7 points, 7 lines), in canonical form.
inline Hypergraph fano() {
  return Hypergraph(7, {{5, 6, 7}, {3, 4, 7}, {2, 4, 6}, {2, 3, 5}, {1, 4, 5}, {1, 3, 6}, {1, 2, 7}});
}

/// Affine plane of order 3 (9 points, 12 lines), in canonical form.
inline Hypergraph ag23() {
  return Hypergraph(9, {{6, 7, 9}, {5, 8, 9}, {3, 4, 9}, {4, 7, 8}, {3, 5, 6}, {2, 6, 8}, {2, 4, 5}, {2, 3, 7},
                        {1, 5, 7}, {1, 4, 6}, {1, 3, 8}, {1, 2, 9}});
}

/// 21-vertex orthomodular poset without group-valued measures.
inline Hypergraph omp21() {
  return Hypergraph(21, {{1, 4, 7},   {1, 5, 18},   {1, 10, 12},  {2, 3, 7},   {2, 6, 10},   {2, 17, 18},
                         {3, 5, 16},  {3, 8, 20},   {3, 14, 15},  {4, 6, 21},  {4, 8, 17},   {4, 11, 15},
                         {5, 6, 13},  {7, 13, 19},  {8, 9, 10},   {9, 11, 13}, {9, 16, 21},  {10, 15, 19},
                         {11, 12, 20}, {12, 16, 17}, {13, 14, 17}, {18, 19, 20, 21}});
}

/// 67-vertex orthomodular lattice without group-valued measures.
inline Hypergraph oml67() {
  return Hypergraph(
      67, {{1, 5, 65},   {1, 9, 21},   {1, 45, 56},  {2, 3, 18},   {2, 23, 64},  {2, 28, 40},  {3, 7, 17},
           {3, 38, 63},  {4, 5, 6},    {4, 8, 24},   {4, 46, 62},  {5, 13, 37},  {5, 51, 52},  {6, 7, 60},
           {6, 15, 31},  {6, 20, 35},  {7, 11, 32},  {7, 44, 67},  {8, 11, 12},  {8, 27, 29},  {9, 12, 18},
           {9, 14, 20},  {10, 20, 28}, {10, 26, 32}, {10, 46, 63}, {11, 19, 25}, {12, 42, 49}, {13, 17, 22},
           {13, 42, 58}, {14, 19, 58}, {14, 23, 36}, {15, 26, 29}, {15, 39, 43}, {16, 19, 65}, {16, 27, 35},
           {16, 38, 39}, {17, 21, 29}, {19, 31, 59}, {21, 46, 53}, {22, 24, 28}, {22, 45, 48}, {23, 49, 52},
           {24, 36, 38}, {25, 28, 50}, {25, 30, 47}, {27, 40, 57}, {30, 43, 61}, {31, 34, 48}, {32, 41, 52},
           {33, 50, 54}, {33, 57, 63}, {33, 58, 60}, {34, 37, 44}, {34, 49, 50}, {35, 42, 47}, {39, 41, 54},
           {40, 41, 59}, {40, 44, 56}, {42, 56, 62}, {43, 49, 55}, {45, 55, 60}, {46, 55, 59}, {47, 63, 66},
           {48, 51, 53}, {51, 57, 61}, {53, 54, 67}, {61, 62, 64}, {64, 65, 66, 67}});
}

// ---------------------------------------------------------------------------
// Grid merge
// ---------------------------------------------------------------------------

enum class GridAxis { column, row };

struct GridEdgeOrigin {
  GridAxis axis;
  /// Column edges fix a vertex b of the second factor, row edges a vertex a
  /// of the first.
  VertexId fixed;
  std::size_t factor_edge;  // 0-based index into the factor's edge list
};

/// Grid on V_A x V_B: every column {(a, b) : a in V_A} carries a copy of A,
/// every row {(a, b) : b in V_B} a copy of B. Vertex (a, b) has id
/// (a - 1) * |V_B| + b.
struct GridMerge {
  Hypergraph a;
  Hypergraph b;
  Hypergraph grid;
  std::vector<GridEdgeOrigin> origin;

  std::size_t rows() const { return a.vertex_count(); }
  std::size_t columns() const { return b.vertex_count(); }

  VertexId id(VertexId row, VertexId column) const {
    return static_cast<VertexId>((row - 1) * columns() + column);
  }
  /// (row, column) of a grid vertex.
  std::pair<VertexId, VertexId> coordinates(VertexId v) const {
    return {static_cast<VertexId>((v - 1) / columns() + 1), static_cast<VertexId>((v - 1) % columns() + 1)};
  }
};

inline GridMerge merge(const Hypergraph& a, const Hypergraph& b) {
  if (!is_greechie(a) || !is_greechie(b)) throw DiagramError("grid merge needs two Greechie diagrams");
  const std::size_t rows = a.vertex_count();
  const std::size_t cols = b.vertex_count();
  auto id = [cols](std::size_t row, std::size_t col) { return static_cast<VertexId>((row - 1) * cols + col); };
  std::vector<Edge> edges;
  std::vector<GridEdgeOrigin> origin;
  for (std::size_t col = 1; col <= cols; ++col) {
    for (std::size_t i = 0; i < a.edge_count(); ++i) {
      Edge e;
      for (VertexId row : a.edge(i)) e.push_back(id(row, col));
      edges.push_back(std::move(e));
      origin.push_back({GridAxis::column, static_cast<VertexId>(col), i});
    }
  }
  for (std::size_t row = 1; row <= rows; ++row) {
    for (std::size_t i = 0; i < b.edge_count(); ++i) {
      Edge e;
      for (VertexId col : b.edge(i)) e.push_back(id(row, col));
      edges.push_back(std::move(e));
      origin.push_back({GridAxis::row, static_cast<VertexId>(row), i});
    }
  }
  return {a, b, Hypergraph(rows * cols, std::move(edges)), std::move(origin)};
}

namespace detail {

// Throws unless `e` is a valid diagonal with respect to the grid and to the
// edges already in `edges`.
inline void check_diagonal(const GridMerge& m, const Edge& e, const std::vector<Edge>& edges) {
  if (e.size() < 2) throw DiagramError("diagonal edge needs at least two vertices");
  std::set<VertexId> rows, cols;
  for (VertexId v : e) {
    if (v == 0 || v > m.grid.vertex_count())
      throw DiagramError("diagonal vertex " + std::to_string(v) + " is not a grid vertex");
    auto [r, c] = m.coordinates(v);
    if (!rows.insert(r).second) throw DiagramError("diagonal edge uses row " + std::to_string(r) + " twice");
    if (!cols.insert(c).second) throw DiagramError("diagonal edge uses column " + std::to_string(c) + " twice");
  }
  for (const Edge& f : edges) {
    const std::size_t common = intersection_size(e, f);
    if (common > 1 || e.size() - common < 2 || f.size() - common < 2)
      throw DiagramError("diagonal edge overlaps an existing edge in more than one vertex");
  }
}

}  // namespace detail

/// The merge with extra edges appended after the grid edges. Each diagonal
/// must meet every row and column at most once and every other edge in at
/// most one vertex.
inline Hypergraph add_diagonal_edges(const GridMerge& m, const std::vector<Edge>& diagonals) {
  std::vector<Edge> edges = m.grid.edges();
  for (Edge e : diagonals) {
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw DiagramError("diagonal edge repeats a vertex");
    detail::check_diagonal(m, e, edges);
    edges.push_back(std::move(e));
  }
  return Hypergraph(m.grid.vertex_count(), std::move(edges));
}

struct DiagonalSearch {
  std::optional<std::vector<Edge>> diagonals;
  std::size_t candidates_tried = 0;
  bool budget_exhausted = false;
};

namespace detail {

// Large prime used to estimate rank over the rationals from below.
constexpr std::uint64_t rank_probe_prime = 2147483647;

inline std::size_t measure_defect(const Hypergraph& h, const std::vector<std::uint64_t>& primes) {
  const IntMatrix a = build_incidence_system(h).matrix;
  std::size_t defect = nullity_mod_p(a, Integer(rank_probe_prime));
  for (std::uint64_t p : primes) defect += nullity_mod_p(a, Integer(p));
  return defect;
}

// Diagonals through consecutive rows (cyclically), stepping through the
// columns with a fixed stride.
inline std::vector<Edge> window_candidates(const GridMerge& m, std::size_t size) {
  std::vector<Edge> out;
  const std::size_t rows = m.rows(), cols = m.columns();
  if (size > rows || size > cols) return out;
  for (std::size_t stride = 1; stride < cols; ++stride) {
    for (std::size_t r0 = 0; r0 < rows; ++r0) {
      for (std::size_t c0 = 0; c0 < cols; ++c0) {
        Edge e;
        std::set<std::size_t> used_cols;
        for (std::size_t i = 0; i < size; ++i) {
          const std::size_t c = (c0 + stride * i) % cols;
          if (!used_cols.insert(c).second) break;
          e.push_back(m.id(static_cast<VertexId>((r0 + i) % rows + 1), static_cast<VertexId>(c + 1)));
        }
        if (e.size() != size) continue;
        std::sort(e.begin(), e.end());
        out.push_back(std::move(e));
      }
    }
  }
  return out;
}

}  // namespace detail

/// Greedily adds diagonal edges of the given size until the combined
/// diagram admits no nontrivial group-valued measure. Candidates run
/// through consecutive-row windows in a fixed order; one is kept when it
/// shrinks the solution spaces modulo the guide primes (2 and 3 to start,
/// plus any prime the Smith normal form later reports) and modulo a large
/// prime standing in for the rationals. Success is confirmed by the Smith
/// normal form of the final system, never by the heuristic alone.
inline DiagonalSearch search_diagonal_edges(const GridMerge& m, std::size_t edge_size = 4, Budget budget = {}) {
  DiagonalSearch out;
  const auto start = std::chrono::steady_clock::now();
  auto over_budget = [&] {
    if (budget.nodes && out.candidates_tried >= *budget.nodes) return true;
    return budget.seconds &&
           std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > *budget.seconds;
  };

  const auto candidates = detail::window_candidates(m, edge_size);
  std::vector<std::uint64_t> primes{2, 3};
  std::vector<Edge> chosen;
  Hypergraph current = m.grid;
  std::size_t defect = detail::measure_defect(current, primes);

  for (;;) {
    if (defect == 0) {
      const auto analysis = analyze_group_measures(current);
      if (!analysis.witness) {
        out.diagonals = chosen;
        return out;
      }
      if (analysis.witness->p > Integer(detail::rank_probe_prime)) return out;
      const auto p = analysis.witness->p.convert_to<std::uint64_t>();
      if (std::find(primes.begin(), primes.end(), p) != primes.end()) return out;
      primes.push_back(p);
      defect = detail::measure_defect(current, primes);
      continue;
    }

    bool improved = false;
    for (const Edge& e : candidates) {
      if (over_budget()) {
        out.budget_exhausted = true;
        return out;
      }
      if (std::find(chosen.begin(), chosen.end(), e) != chosen.end()) continue;
      try {
        detail::check_diagonal(m, e, current.edges());
      } catch (const DiagramError&) {
        continue;
      }
      ++out.candidates_tried;
      std::vector<Edge> edges = current.edges();
      edges.push_back(e);
      Hypergraph next(current.vertex_count(), std::move(edges));
      const std::size_t d = detail::measure_defect(next, primes);
      if (d < defect) {
        chosen.push_back(e);
        current = std::move(next);
        defect = d;
        improved = true;
        break;
      }
    }
    if (!improved) return out;
  }
}

}  // namespace greechie

#pragma once

// Independent brute-force oracles and random inputs shared by the tests.

#include "greechie/exact/integer.hpp"
#include "greechie/hypergraph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using namespace greechie;

/// Shortest cycle order by exhaustive search over alternating vertex/edge
/// sequences. Exponential; fine for a handful of edges.
inline std::optional<std::size_t> cycle_order(const Hypergraph& h) {
  const std::size_t n = h.vertex_count(), m = h.edge_count();
  std::optional<std::size_t> best;
  std::vector<bool> used_v(n + 1), used_e(m);
  std::vector<VertexId> path;

  auto contains = [&](std::size_t e, VertexId v) {
    return std::binary_search(h.edge(e).begin(), h.edge(e).end(), v);
  };
  // Extend from vertex `v` (already on the path) through an unused edge.
  auto dfs = [&](auto&& self, VertexId start, VertexId v, std::size_t k) -> void {
    for (std::size_t e = 0; e < m; ++e) {
      if (used_e[e] || !contains(e, v)) continue;
      if (k >= 1 && contains(e, start) && (!best || k + 1 < *best)) best = k + 1;
      used_e[e] = true;
      for (VertexId w : h.edge(e)) {
        if (used_v[w] || w < start) continue;
        if (best && k + 2 >= *best) continue;
        used_v[w] = true;
        self(self, start, w, k + 1);
        used_v[w] = false;
      }
      used_e[e] = false;
    }
  };
  for (VertexId s = 1; s <= n; ++s) {
    used_v[s] = true;
    dfs(dfs, s, s, 0);
    used_v[s] = false;
  }
  return best;
}

/// Determinant by cofactor expansion along the first row.
inline Integer cofactor_determinant(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = a(r, c);
    const Integer term = a(0, j) * cofactor_determinant(minor);
    det += j % 2 == 0 ? term : -term;
  }
  return det;
}

/// Number of solutions of A x = 0 over Z_p, by enumerating all p^cols vectors.
inline std::uint64_t count_kernel_mod_p(const IntMatrix& a, std::uint64_t p) {
  const std::size_t cols = a.cols();
  std::vector<std::int64_t> x(cols, 0);
  std::uint64_t count = 0;
  for (;;) {
    bool ok = true;
    for (std::size_t r = 0; r < a.rows() && ok; ++r) {
      std::int64_t s = 0;
      for (std::size_t c = 0; c < cols; ++c) s += a(r, c).convert_to<std::int64_t>() * x[c];
      ok = ((s % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) % static_cast<std::int64_t>(p) == 0;
    }
    count += ok;
    std::size_t i = 0;
    while (i < cols && ++x[i] == static_cast<std::int64_t>(p)) x[i++] = 0;
    if (i == cols) break;
  }
  return count;
}

/// Solves A_S y = b over the rationals for the columns in S. Returns y only
/// when the system is consistent and the chosen columns are independent.
inline std::optional<std::vector<Rational>> solve_columns(const std::vector<std::vector<Rational>>& a,
                                                          const std::vector<std::size_t>& cols, Rational rhs) {
  const std::size_t m = a.size(), k = cols.size();
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(k + 1));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < k; ++j) t[r][j] = a[r][cols[j]];
    t[r][k] = rhs;
  }
  std::size_t row = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = row;
    while (piv < m && t[piv][c] == 0) ++piv;
    if (piv == m) return std::nullopt;  // dependent columns
    std::swap(t[piv], t[row]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || t[r][c] == 0) continue;
      const Rational f = t[r][c] / t[row][c];
      for (std::size_t j = c; j <= k; ++j) t[r][j] -= f * t[row][j];
    }
    ++row;
  }
  for (std::size_t r = row; r < m; ++r)
    if (t[r][k] != 0) return std::nullopt;  // inconsistent
  std::vector<Rational> y(k);
  for (std::size_t c = 0; c < k; ++c) y[c] = t[c][k] / t[c][c];
  return y;
}

/// Whether a state exists. If {x >= 0 : A x = 1} is nonempty it has a
/// vertex, and a vertex is the unique solution supported on some set of
/// independent columns; try every column subset.
inline bool state_exists(const Hypergraph& h) {
  const std::size_t n = h.vertex_count(), m = h.edge_count();
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n, Rational(0)));
  for (std::size_t r = 0; r < m; ++r)
    for (VertexId v : h.edge(r)) a[r][v - 1] = 1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j)
      if (mask >> j & 1) cols.push_back(j);
    if (cols.size() > m) continue;
    const auto y = solve_columns(a, cols, Rational(1));
    if (y && std::all_of(y->begin(), y->end(), [](const Rational& v) { return v >= 0; })) return true;
  }
  return false;
}

/// Random distinct edges of size 2..max_size over n points, every point
/// covered (a final edge patches any gap). Not necessarily Greechie. m is
/// capped at the number of distinct edges available.
inline Hypergraph random_hypergraph(std::mt19937_64& rng, std::size_t n, std::size_t m, std::size_t max_size = 4) {
  std::size_t available = 0;
  for (std::size_t k = 2, binom = n * (n - 1) / 2; k <= std::min(max_size, n); binom = binom * (n - k) / (k + 1), ++k)
    available += binom;
  m = std::min(m, available);
  std::vector<VertexId> points(n);
  std::iota(points.begin(), points.end(), VertexId{1});
  std::uniform_int_distribution<std::size_t> size(2, std::min(max_size, n));
  std::set<Edge> edges;
  while (edges.size() < m) {
    Edge e;
    std::sample(points.begin(), points.end(), std::back_inserter(e), static_cast<std::ptrdiff_t>(size(rng)), rng);
    edges.insert(e);
  }
  std::vector<bool> covered(n + 1, false);
  for (const Edge& e : edges)
    for (VertexId v : e) covered[v] = true;
  Edge patch;
  for (VertexId v = 1; v <= n; ++v)
    if (!covered[v]) patch.push_back(v);
  if (!patch.empty()) {
    if (patch.size() == 1) patch.insert(patch.begin(), patch.front() == 1 ? 2 : 1);
    std::sort(patch.begin(), patch.end());
    edges.insert(patch);
  }
  return Hypergraph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

/// The same hypergraph under a random vertex relabeling and edge order.
inline Hypergraph relabel(const Hypergraph& h, std::mt19937_64& rng) {
  std::vector<VertexId> perm(h.vertex_count());
  std::iota(perm.begin(), perm.end(), VertexId{1});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (const Edge& e : h.edges()) {
    Edge f;
    for (VertexId v : e) f.push_back(perm[v - 1]);
    std::sort(f.begin(), f.end());
    edges.push_back(std::move(f));
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return Hypergraph(h.vertex_count(), std::move(edges));
}

}  // namespace oracle

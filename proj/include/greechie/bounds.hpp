#pragma once

// Upper bounds on the edge count m of a Greechie diagram with n vertices:
//   OA   m <= n(n-1)/6
//   OMP  m <= n(n+3)/18                     (3-uniform diagrams)
//   OML  m <= (2n sqrt(n - 3/4) + n) / 12    (3-uniform diagrams)
// The OML bound is decided by an equivalent integer predicate.

#include "greechie/hypergraph.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace greechie {

inline std::int64_t max_edges_oa(std::int64_t n) {
  if (n < 3) throw std::invalid_argument("edge bounds need n >= 3");
  return n * (n - 1) / 6;
}

inline std::int64_t max_edges_omp(std::int64_t n) {
  if (n < 3) throw std::invalid_argument("edge bounds need n >= 3");
  return n * (n + 3) / 18;
}

/// m <= (2n sqrt(n - 3/4) + n)/12  <=>  12m <= n  or  (12m - n)^2 <= 4n^3 - 3n^2.
inline bool oml_bound_satisfied(std::int64_t n, std::int64_t m) {
  if (n < 3) throw std::invalid_argument("edge bounds need n >= 3");
  const __int128 lhs = static_cast<__int128>(12) * m - n;
  if (lhs <= 0) return true;
  const __int128 big_n = n;
  return lhs * lhs <= 4 * big_n * big_n * big_n - 3 * big_n * big_n;
}

/// Largest m accepted by the OML predicate for this n:
/// floor((n + isqrt(4n^3 - 3n^2)) / 12).
inline std::int64_t max_edges_oml(std::int64_t n) {
  if (n < 3) throw std::invalid_argument("edge bounds need n >= 3");
  const __int128 big_n = n;
  const __int128 d = 4 * big_n * big_n * big_n - 3 * big_n * big_n;
  auto root = static_cast<__int128>(std::sqrt(static_cast<long double>(d)));
  while (root * root > d) --root;
  while ((root + 1) * (root + 1) <= d) ++root;
  return static_cast<std::int64_t>((big_n + root) / 12);
}

enum class BoundKind { oa, omp, oml };

inline std::string_view to_string(BoundKind k) {
  switch (k) {
    case BoundKind::oa: return "OA";
    case BoundKind::omp: return "OMP";
    case BoundKind::oml: return "OML";
  }
  return "?";
}

struct BoundCheck {
  BoundKind kind;
  /// Integer limit for OA/OMP; absent for OML, which is a predicate on (n, m).
  std::optional<std::int64_t> limit;
  bool applicable = true;
  bool satisfied = true;  // meaningful only when applicable
};

struct BoundReport {
  StructureKind structure;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::vector<BoundCheck> checks;
  /// All applicable checks hold.
  bool satisfied = true;
  std::string applicability_note;
};

/// Applies every bound implied by the diagram's class. OMP and OML bounds
/// are only established for 3-uniform diagrams; otherwise they are reported
/// as not applicable and only the OA bound is checked.
inline BoundReport check_bounds(const Hypergraph& h) {
  const Classification c = classify(h);
  if (c.kind == StructureKind::not_greechie) throw std::invalid_argument("check_bounds needs a Greechie diagram");
  BoundReport r{c.kind, static_cast<std::int64_t>(h.vertex_count()), static_cast<std::int64_t>(h.edge_count()), {},
                true, {}};
  if (r.n < 3) throw std::invalid_argument("edge bounds need n >= 3");
  const bool uniform = h.is_uniform(3);

  r.checks.push_back({BoundKind::oa, max_edges_oa(r.n), true, r.m <= max_edges_oa(r.n)});
  if (c.kind >= StructureKind::omp)
    r.checks.push_back({BoundKind::omp, max_edges_omp(r.n), uniform, uniform && r.m <= max_edges_omp(r.n)});
  if (c.kind == StructureKind::oml)
    r.checks.push_back({BoundKind::oml, std::nullopt, uniform, uniform && oml_bound_satisfied(r.n, r.m)});

  for (const BoundCheck& b : r.checks)
    if (b.applicable && !b.satisfied) r.satisfied = false;
  if (c.kind >= StructureKind::omp && !uniform)
    r.applicability_note = "3-uniform only: diagram has an edge of size other than 3, OA bound checked instead";
  return r;
}

struct EdgeDegreeRecord {
  std::size_t edge;  // 0-based
  std::size_t degree_sum;
  bool passes;  // 2 * degree_sum <= n + 3
};

struct DegreeAudit {
  std::vector<EdgeDegreeRecord> edges;
  std::size_t sum_of_squared_degrees = 0;
  /// Twice the right-hand side m(n+3)/2, kept integral.
  std::size_t twice_bound = 0;

  bool all_pass() const {
    for (const auto& e : edges)
      if (!e.passes) return false;
    return 2 * sum_of_squared_degrees <= twice_bound;
  }
};

/// Per-edge degree sums against (n+3)/2 and the aggregated inequality
/// sum d(v)^2 <= m(n+3)/2. Needs a 3-uniform diagram without cycles of
/// order below 4.
inline DegreeAudit degree_inequality_audit(const Hypergraph& h) {
  if (!h.is_uniform(3)) throw std::invalid_argument("degree audit needs a 3-uniform diagram");
  if (auto order = min_cycle_order(h); order && *order < 4)
    throw std::invalid_argument("degree audit needs minimum cycle order >= 4");
  const auto d = degrees(h);
  const std::size_t n = h.vertex_count();
  DegreeAudit audit;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    std::size_t sum = 0;
    for (VertexId v : h.edge(i)) sum += d[v];
    audit.edges.push_back({i, sum, 2 * sum <= n + 3});
  }
  for (std::size_t v = 1; v <= n; ++v) audit.sum_of_squared_degrees += d[v] * d[v];
  audit.twice_bound = h.edge_count() * (n + 3);
  return audit;
}

}  // namespace greechie

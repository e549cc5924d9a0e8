#pragma once

// States (probability measures) and group-valued measures on hypergraphs.
//
// A group-valued measure m with common edge sum g solves the homogeneous
// system  sum_{v in e} m(v) - g = 0  for every edge e. Over Z_p that system
// has a nonzero solution iff p divides some invariant factor of the integer
// system matrix or the matrix lacks full column rank, so the Smith normal
// form settles existence for every cyclic group at once.

#include "greechie/exact/determinant.hpp"
#include "greechie/exact/integer.hpp"
#include "greechie/exact/nullspace.hpp"
#include "greechie/exact/simplex.hpp"
#include "greechie/exact/smith.hpp"
#include "greechie/hypergraph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace greechie {

/// Rows follow edge order; column v-1 holds 1 when v lies in the edge and
/// the last column (the common sum g) holds -1.
struct IncidenceSystem {
  IntMatrix matrix;

  std::size_t vertex_count() const { return matrix.cols() - 1; }
  bool square() const { return matrix.square(); }
};

struct ProbabilityMeasure {
  std::vector<Rational> values;  // values[v-1]
};

struct GroupMeasureWitness {
  Integer p;
  std::vector<Integer> values;  // residues mod p, values[v-1]
  Integer g;
};

inline IncidenceSystem build_incidence_system(const Hypergraph& h) {
  const std::size_t n = h.vertex_count();
  IncidenceSystem s{IntMatrix(h.edge_count(), n + 1)};
  for (std::size_t r = 0; r < h.edge_count(); ++r) {
    for (VertexId v : h.edge(r)) s.matrix(r, v - 1) = 1;
    s.matrix(r, n) = -1;
  }
  return s;
}

// ---------------------------------------------------------------------------
// States
// ---------------------------------------------------------------------------

/// Some exact state, or nullopt when the hypergraph is stateless. The state
/// returned is the first feasible simplex vertex, not a canonical choice.
inline std::optional<ProbabilityMeasure> find_probability_measure(const Hypergraph& h) {
  const std::size_t n = h.vertex_count();
  IntMatrix a(h.edge_count(), n);
  for (std::size_t r = 0; r < h.edge_count(); ++r)
    for (VertexId v : h.edge(r)) a(r, v - 1) = 1;
  auto x = lp_feasible(a, std::vector<Integer>(h.edge_count(), Integer(1)), std::vector<bool>(n, true));
  if (!x) return std::nullopt;
  return ProbabilityMeasure{std::move(*x)};
}

inline bool verify_probability_measure(const Hypergraph& h, const ProbabilityMeasure& m) {
  if (m.values.size() != h.vertex_count())
    throw std::invalid_argument("state assigns " + std::to_string(m.values.size()) + " values to " +
                                std::to_string(h.vertex_count()) + " vertices");
  for (const Rational& x : m.values)
    if (x < 0 || x > 1) return false;
  for (const Edge& e : h.edges()) {
    Rational sum = 0;
    for (VertexId v : e) sum += m.values[v - 1];
    if (sum != 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Group-valued measures
// ---------------------------------------------------------------------------

inline bool verify_group_measure(const Hypergraph& h, const GroupMeasureWitness& w) {
  if (w.values.size() != h.vertex_count())
    throw std::invalid_argument("witness assigns " + std::to_string(w.values.size()) + " values to " +
                                std::to_string(h.vertex_count()) + " vertices");
  if (w.p < 2) return false;
  const Integer g = mod_floor(w.g, w.p);
  bool nontrivial = g != 0;
  for (const Integer& x : w.values) nontrivial = nontrivial || mod_floor(x, w.p) != 0;
  if (!nontrivial) return false;
  for (const Edge& e : h.edges()) {
    Integer sum = 0;
    for (VertexId v : e) sum += w.values[v - 1];
    if (mod_floor(sum, w.p) != g) return false;
  }
  return true;
}

namespace detail {

inline GroupMeasureWitness witness_from_vector(const std::vector<Integer>& x, const Integer& p) {
  GroupMeasureWitness w{p, {}, mod_floor(x.back(), p)};
  w.values.reserve(x.size() - 1);
  for (std::size_t i = 0; i + 1 < x.size(); ++i) w.values.push_back(mod_floor(x[i], p));
  return w;
}

}  // namespace detail

/// Everything the Smith normal form says about nontrivial measures.
struct GroupMeasureAnalysis {
  SnfResult snf;
  std::size_t unknowns = 0;  // vertex count + 1
  std::optional<GroupMeasureWitness> witness;

  bool full_column_rank() const { return snf.rank == unknowns; }
};

/// Decides whether any nontrivial group-valued measure exists and, if so,
/// produces one over Z_p for the smallest admissible prime p.
inline GroupMeasureAnalysis analyze_group_measures(const Hypergraph& h) {
  const IncidenceSystem sys = build_incidence_system(h);
  GroupMeasureAnalysis out;
  out.unknowns = sys.matrix.cols();
  out.snf = smith_normal_form(sys.matrix);
  if (!out.full_column_rank()) {
    // Rank-deficient over Q: a primitive integer kernel vector is nonzero
    // modulo every prime, so Z_2 is always admissible.
    auto x = integer_nullspace_vector(sys.matrix);
    out.witness = detail::witness_from_vector(*x, Integer(2));
  } else if (!out.snf.all_units()) {
    const Integer p = smallest_prime_factor(out.snf.largest());
    auto basis = nullspace_mod_p(sys.matrix, p);
    out.witness = detail::witness_from_vector(basis.front(), p);
  }
  return out;
}

inline std::optional<GroupMeasureWitness> find_group_valued_measure(const Hypergraph& h) {
  return analyze_group_measures(h).witness;
}

/// Determinant of the incidence system; requires exactly one more edge
/// than vertices.
inline Integer square_system_determinant(const Hypergraph& h) {
  if (h.edge_count() != h.vertex_count() + 1)
    throw std::invalid_argument("incidence system is " + std::to_string(h.edge_count()) + "x" +
                                std::to_string(h.vertex_count() + 1) + ", not square");
  return determinant(build_incidence_system(h).matrix);
}

/// Dimension of the constant solutions (m(v) = c for all v, common sum g)
/// inside the mod-p solution space: 1 if all edge sizes agree mod p, else 0.
inline std::size_t constant_measure_dimension(const Hypergraph& h, const Integer& p) {
  const Integer first = Integer(h.edge(0).size()) % p;
  for (const Edge& e : h.edges())
    if (Integer(e.size()) % p != first) return 0;
  return 1;
}

/// For each prime, whether some Z_p-valued measure takes at least two
/// distinct values.
inline std::map<std::uint64_t, bool> nonconstant_range_profile(const Hypergraph& h,
                                                               const std::vector<std::uint64_t>& primes) {
  for (std::uint64_t p : primes)
    if (!is_prime(Integer(p))) throw std::invalid_argument(std::to_string(p) + " is not prime");
  const IncidenceSystem sys = build_incidence_system(h);
  std::map<std::uint64_t, bool> out;
  for (std::uint64_t p : primes)
    out[p] = nullity_mod_p(sys.matrix, Integer(p)) > constant_measure_dimension(h, Integer(p));
  return out;
}

}  // namespace greechie

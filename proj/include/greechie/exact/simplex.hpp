#pragma once

// Exact LP feasibility by phase-one simplex on an integer-preserving tableau.
//
// The tableau holds D * B^{-1} [A | b] for the current basis B, with
// D = det(B) kept positive. A pivot on (r, s) updates every other row by
//   T[i][j] <- (T[i][j] * T[r][s] - T[i][s] * T[r][j]) / D
// which divides exactly, then sets D <- T[r][s].

#include "greechie/exact/integer.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace greechie {

namespace detail {

class IntegerTableau {
 public:
  IntegerTableau(std::size_t rows, std::size_t cols) : cols_(cols), t_(rows, std::vector<Integer>(cols + 1)) {}

  Integer& at(std::size_t r, std::size_t c) { return t_[r][c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return t_[r][c]; }
  Integer& rhs(std::size_t r) { return t_[r][cols_]; }
  const Integer& rhs(std::size_t r) const { return t_[r][cols_]; }
  const Integer& denominator() const { return d_; }
  std::size_t rows() const { return t_.size(); }
  std::size_t cols() const { return cols_; }

  void negate_row(std::size_t r) {
    for (Integer& x : t_[r]) x = -x;
  }

  /// Pivot on a positive entry. Rows listed in `skip` are left stale.
  void pivot(std::size_t r, std::size_t s, std::size_t rows_to_update) {
    const Integer p = t_[r][s];
    for (std::size_t i = 0; i < rows_to_update; ++i) {
      if (i == r) continue;
      auto& row = t_[i];
      const Integer factor = row[s];
      if (factor == 0) {
        if (p != d_)
          for (Integer& x : row) x = x * p / d_;
        continue;
      }
      for (std::size_t j = 0; j <= cols_; ++j) row[j] = (row[j] * p - factor * t_[r][j]) / d_;
    }
    d_ = p;
  }

 private:
  std::size_t cols_;
  std::vector<std::vector<Integer>> t_;
  Integer d_ = 1;
};

}  // namespace detail

/// Finds an exact rational x with Ax = b and x_j >= 0 wherever nonneg[j],
/// or nullopt when none exists. Dantzig's rule for the first rows+cols
/// pivots, then Bland's rule, which guarantees termination.
inline std::optional<std::vector<Rational>> lp_feasible(const IntMatrix& a, const std::vector<Integer>& b,
                                                        const std::vector<bool>& nonneg) {
  const std::size_t m = a.rows();
  if (b.size() != m) throw std::invalid_argument("lp_feasible: right-hand side has wrong length");
  if (nonneg.size() != a.cols()) throw std::invalid_argument("lp_feasible: sign flags have wrong length");

  // Free variables are split into a nonnegative pair x = x+ - x-.
  std::vector<std::size_t> origin;
  std::vector<int> sign;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    origin.push_back(j);
    sign.push_back(1);
    if (!nonneg[j]) {
      origin.push_back(j);
      sign.push_back(-1);
    }
  }
  const std::size_t structural = origin.size();

  // Rows 0..m-1 are constraints, row m is the phase-one cost row.
  detail::IntegerTableau t(m + 1, structural);
  for (std::size_t i = 0; i < m; ++i) {
    const int flip = b[i] < 0 ? -1 : 1;
    for (std::size_t k = 0; k < structural; ++k) t.at(i, k) = a(i, origin[k]) * (sign[k] * flip);
    t.rhs(i) = b[i] * flip;
  }
  for (std::size_t k = 0; k <= structural; ++k) {
    Integer sum = 0;
    for (std::size_t i = 0; i < m; ++i) sum += k == structural ? t.rhs(i) : t.at(i, k);
    if (k == structural)
      t.rhs(m) = -sum;
    else
      t.at(m, k) = -sum;
  }

  // Artificial variables start basic and are dropped for good once they leave.
  constexpr std::size_t artificial = static_cast<std::size_t>(-1);
  std::vector<std::size_t> basis(m, artificial);
  std::vector<bool> is_basic(structural, false);

  const std::size_t dantzig_pivots = m + structural;
  for (std::size_t iteration = 0;; ++iteration) {
    const bool bland = iteration >= dantzig_pivots;
    std::size_t entering = structural;
    for (std::size_t k = 0; k < structural; ++k) {
      if (is_basic[k] || t.at(m, k) >= 0) continue;
      if (entering == structural || (!bland && t.at(m, k) < t.at(m, entering))) entering = k;
      if (bland) break;
    }
    if (entering == structural) break;

    std::size_t leaving = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (t.at(i, entering) <= 0) continue;
      if (leaving == m) {
        leaving = i;
        continue;
      }
      // rhs_i / a_ie versus rhs_l / a_le
      const Integer lhs = t.rhs(i) * t.at(leaving, entering);
      const Integer rhs = t.rhs(leaving) * t.at(i, entering);
      if (lhs < rhs || (lhs == rhs && basis[i] < basis[leaving])) leaving = i;
    }
    // Phase one is bounded below by zero, so some row always qualifies.
    if (leaving == m) throw std::logic_error("lp_feasible: unbounded phase-one direction");

    t.pivot(leaving, entering, m + 1);
    if (basis[leaving] != artificial) is_basic[basis[leaving]] = false;
    basis[leaving] = entering;
    is_basic[entering] = true;
  }

  if (t.rhs(m) != 0) return std::nullopt;

  // Drive zero-valued artificials out of the basis where a structural
  // column allows it; rows without one are redundant.
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] != artificial) continue;
    std::size_t s = 0;
    while (s < structural && (is_basic[s] || t.at(r, s) == 0)) ++s;
    if (s == structural) continue;
    if (t.at(r, s) < 0) t.negate_row(r);
    t.pivot(r, s, m);
    basis[r] = s;
    is_basic[s] = true;
  }

  std::vector<Rational> x(a.cols(), Rational(0));
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] == artificial) continue;
    const std::size_t k = basis[r];
    x[origin[k]] += Rational(t.rhs(r), t.denominator()) * sign[k];
  }
  return x;
}

}  // namespace greechie

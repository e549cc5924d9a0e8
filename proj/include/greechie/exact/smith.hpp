#pragma once

#include "greechie/exact/integer.hpp"

#include <algorithm>
#include <vector>

namespace greechie {

struct SnfResult {
  std::size_t rank = 0;
  /// d_1 | d_2 | ... | d_rank, all positive.
  std::vector<Integer> invariant_factors;

  bool all_units() const {
    return std::all_of(invariant_factors.begin(), invariant_factors.end(), [](const Integer& d) { return d == 1; });
  }
  const Integer& largest() const { return invariant_factors.back(); }
};

namespace detail {

// Position of the smallest nonzero magnitude in the trailing submatrix, or
// {rows, cols} when it is zero.
inline std::pair<std::size_t, std::size_t> smallest_entry(const IntMatrix& a, std::size_t t) {
  std::pair<std::size_t, std::size_t> best{a.rows(), a.cols()};
  Integer best_abs;
  for (std::size_t i = t; i < a.rows(); ++i) {
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Integer v = boost::multiprecision::abs(a(i, j));
      if (best.first == a.rows() || v < best_abs) {
        best = {i, j};
        best_abs = std::move(v);
        if (best_abs == 1) return best;
      }
    }
  }
  return best;
}

}  // namespace detail

/// Invariant factors of an integer matrix under unimodular row and column
/// operations. Pivots on the smallest nonzero magnitude each round.
inline SnfResult smith_normal_form(IntMatrix a) {
  SnfResult out;
  const std::size_t limit = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    for (;;) {
      auto [pr, pc] = detail::smallest_entry(a, t);
      if (pr == a.rows()) return out;
      a.swap_rows(t, pr);
      a.swap_cols(t, pc);
      const Integer pivot = a(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / pivot;
        for (std::size_t j = t; j < a.cols(); ++j) a(i, j) -= q * a(t, j);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / pivot;
        for (std::size_t i = t; i < a.rows(); ++i) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Row and column are clear; the pivot must divide the rest.
      bool divides = true;
      for (std::size_t i = t + 1; i < a.rows() && divides; ++i) {
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
          if (a(i, j) % pivot != 0) {
            for (std::size_t k = t; k < a.cols(); ++k) a(t, k) += a(i, k);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    out.invariant_factors.push_back(boost::multiprecision::abs(a(t, t)));
    ++out.rank;
  }
  return out;
}

}  // namespace greechie

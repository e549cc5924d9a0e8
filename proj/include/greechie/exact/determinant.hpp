#pragma once

#include "greechie/exact/integer.hpp"

#include <stdexcept>

namespace greechie {

/// Exact determinant by fraction-free (Bareiss) elimination. Every division
/// in the update is exact, so intermediates stay integral and bounded by
/// minors of the input.
inline Integer determinant(IntMatrix m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer previous = 1;
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      m.swap_rows(pivot, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
    }
    previous = m(k, k);
  }
  return negate ? Integer(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

}  // namespace greechie

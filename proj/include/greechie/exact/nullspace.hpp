#pragma once

#include "greechie/exact/integer.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace greechie {

namespace detail {

// Arithmetic in Z_p for word-sized p (p < 2^32 so products fit in 64 bits).
struct WordField {
  std::uint64_t p;
  using value_type = std::uint64_t;

  value_type reduce(const Integer& x) const { return mod_floor(x, Integer(p)).convert_to<std::uint64_t>(); }
  value_type add(value_type a, value_type b) const { return (a + b) % p; }
  value_type sub(value_type a, value_type b) const { return (a + p - b) % p; }
  value_type mul(value_type a, value_type b) const { return (a * b) % p; }
  value_type inverse(value_type a) const {
    // Fermat: a^(p-2)
    value_type result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
  Integer lift(value_type a) const { return Integer(a); }
};

struct BigField {
  Integer p;
  using value_type = Integer;

  value_type reduce(const Integer& x) const { return mod_floor(x, p); }
  value_type add(const value_type& a, const value_type& b) const { return (a + b) % p; }
  value_type sub(const value_type& a, const value_type& b) const { return mod_floor(a - b, p); }
  value_type mul(const value_type& a, const value_type& b) const { return (a * b) % p; }
  value_type inverse(const value_type& a) const { return boost::multiprecision::powm(a, p - 2, p); }
  Integer lift(const value_type& a) const { return a; }
};

// Reduced row echelon form in place; returns the pivot column of each
// nonzero row.
template <class Field>
std::vector<std::size_t> rref(std::vector<std::vector<typename Field::value_type>>& a, std::size_t cols,
                              const Field& f) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][col] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[sel], a[row]);
    const auto inv = f.inverse(a[row][col]);
    for (std::size_t j = col; j < cols; ++j) a[row][j] = f.mul(a[row][j], inv);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      const auto factor = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(factor, a[row][j]));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class Field>
std::vector<std::vector<Integer>> nullspace_over(const IntMatrix& m, const Field& f) {
  std::vector<std::vector<typename Field::value_type>> a(m.rows(),
                                                         std::vector<typename Field::value_type>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = f.reduce(m(i, j));
  const auto pivots = rref(a, m.cols(), f);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Integer>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Integer> v(m.cols(), Integer(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.lift(f.sub(0, a[r][free]));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace detail

/// Basis of {x : Mx ≡ 0 (mod p)} with entries in [0, p). An empty result
/// means only the zero vector solves the system.
inline std::vector<std::vector<Integer>> nullspace_mod_p(const IntMatrix& m, const Integer& p) {
  if (!is_prime(p)) throw std::invalid_argument(p.str() + " is not prime");
  if (p < (Integer(1) << 32)) return detail::nullspace_over(m, detail::WordField{p.convert_to<std::uint64_t>()});
  return detail::nullspace_over(m, detail::BigField{p});
}

inline std::size_t nullity_mod_p(const IntMatrix& m, const Integer& p) { return nullspace_mod_p(m, p).size(); }

/// A primitive integer vector x != 0 with Mx = 0 over the rationals, or
/// nullopt when M has full column rank.
inline std::optional<std::vector<Integer>> integer_nullspace_vector(const IntMatrix& m) {
  const std::size_t cols = m.cols();
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(cols));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j);
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][col] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[sel], a[row]);
    const Rational inv = 1 / a[row][col];
    for (std::size_t j = col; j < cols; ++j) a[row][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rational factor = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= factor * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::size_t free = 0;
  while (free < cols && is_pivot[free]) ++free;
  if (free == cols) return std::nullopt;

  std::vector<Rational> v(cols, Rational(0));
  v[free] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
  Integer scale = 1;
  for (const Rational& x : v) scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(x));
  std::vector<Integer> out(cols);
  Integer g = 0;
  for (std::size_t j = 0; j < cols; ++j) {
    out[j] = boost::multiprecision::numerator(v[j]) * (scale / boost::multiprecision::denominator(v[j]));
    g = boost::multiprecision::gcd(g, out[j]);
  }
  for (Integer& x : out) x /= g;
  return out;
}

}  // namespace greechie

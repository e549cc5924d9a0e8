#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace greechie {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Integer& x) { return x.str(); }

inline std::string to_string(const Rational& q) {
  const Integer& den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

/// Dense row-major integer matrix with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      for (long long x : row) data_.emplace_back(x);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

inline std::ostream& operator<<(std::ostream& out, const IntMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
    out << '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Primes
// ---------------------------------------------------------------------------

/// Deterministic trial division. Intended for the small primes used as
/// measure ranges; anything past 2^40 falls back to Miller-Rabin.
inline bool is_prime(const Integer& p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if ((p & 1) == 0) return false;
  if (p > (Integer(1) << 40)) return boost::multiprecision::miller_rabin_test(p, 32);
  const auto value = p.convert_to<std::uint64_t>();
  for (std::uint64_t d = 3; d <= value / d; d += 2)
    if (value % d == 0) return false;
  return true;
}

namespace detail {

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
inline Integer pollard_rho(const Integer& n) {
  if ((n & 1) == 0) return 2;
  std::mt19937_64 rng(0x5eed);
  for (;;) {
    Integer c = Integer(rng()) % (n - 1) + 1;
    Integer y = Integer(rng()) % n;
    Integer g = 1, q = 1, x, ys;
    const std::size_t m = 64;
    std::size_t r = 1;
    auto step = [&](const Integer& v) { return (v * v + c) % n; };
    do {
      x = y;
      for (std::size_t i = 0; i < r; ++i) y = step(y);
      std::size_t k = 0;
      do {
        ys = y;
        for (std::size_t i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          q = (q * (x > y ? x - y : y - x)) % n;
        }
        g = boost::multiprecision::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = boost::multiprecision::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void collect_prime_factors(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Integer d = pollard_rho(n);
  collect_prime_factors(d, out);
  collect_prime_factors(n / d, out);
}

}  // namespace detail

/// Smallest prime dividing |n|; n must satisfy |n| >= 2.
inline Integer smallest_prime_factor(const Integer& n) {
  Integer m = boost::multiprecision::abs(n);
  if (m < 2) throw std::invalid_argument("smallest_prime_factor needs |n| >= 2");
  for (std::uint32_t d = 2; d < 100000; d += (d == 2 ? 1 : 2)) {
    if (Integer(d) * d > m) return m;
    if (m % d == 0) return Integer(d);
  }
  // Every remaining prime factor exceeds the trial bound.
  std::vector<Integer> factors;
  detail::collect_prime_factors(m, factors);
  return *std::min_element(factors.begin(), factors.end());
}

inline Integer mod_floor(const Integer& a, const Integer& p) {
  Integer r = a % p;
  if (r < 0) r += p;
  return r;
}

}  // namespace greechie

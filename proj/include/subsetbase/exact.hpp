#pragma once

// Exact integer and rational arithmetic shared by every module. All
// comparisons that feed a decision are carried out over arbitrary-precision
// numbers; no floating point appears anywhere in this library.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace subsetbase {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when a computed result violates an invariant that should hold by
/// construction. Always a bug, never a valid runtime state.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// Raised when the uniform-lift search space is exhausted without a result.
struct lift_exhausted_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when the random hypergraph generator runs out of retries.
struct generator_exhausted_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// C(a, b); returns 0 when b > a.
inline BigInt binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) throw std::domain_error("binomial: negative argument");
  if (b > a) return 0;
  b = std::min(b, a - b);
  BigInt result = 1;
  for (std::int64_t i = 0; i < b; ++i) {
    result *= a - i;
    result /= i + 1;  // exact: C(a,i)*(a-i) = C(a,i+1)*(i+1)
  }
  return result;
}

/// Floor of an exact rational (rounds toward minus infinity).
inline BigInt floor_rational(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  BigInt t = num / den;
  if (num % den != 0 && num < 0) --t;
  return t;
}

/// Ceiling of an exact rational.
inline BigInt ceil_rational(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  BigInt t = num / den;
  if (num % den != 0 && num > 0) ++t;
  return t;
}

/// ceil(a / b) for b > 0.
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  if (b <= 0) throw std::domain_error("ceil_div: divisor must be positive");
  std::int64_t t = a / b;
  if (a % b != 0 && a > 0) ++t;
  return t;
}

/// ceil(log2 n) for n >= 1, computed by bit length.
inline std::int64_t ceil_log2(std::int64_t n) {
  if (n < 1) throw std::domain_error("ceil_log2: argument must be positive");
  if (n == 1) return 0;
  return std::bit_width(static_cast<std::uint64_t>(n - 1));
}

/// floor(sqrt(x)) for x >= 0.
inline BigInt isqrt(const BigInt& x) {
  if (x < 0) throw std::domain_error("isqrt: negative argument");
  return boost::multiprecision::sqrt(x);
}

/// Smallest integer z with d*z + c >= sqrt(radicand), i.e. the exact value of
/// ceil((sqrt(radicand) - c) / d). Works entirely in integers so the ceiling
/// decision is never at the mercy of floating-point rounding, including when
/// the radicand is a perfect square.
inline BigInt ceil_shifted_sqrt(const BigInt& radicand, const BigInt& c,
                                const BigInt& d) {
  if (radicand < 0) throw std::domain_error("ceil_shifted_sqrt: negative radicand");
  if (d <= 0) throw std::domain_error("ceil_shifted_sqrt: divisor must be positive");
  const BigInt root = isqrt(radicand);
  auto reaches = [&](const BigInt& z) {
    const BigInt v = d * z + c;
    return v >= 0 && v * v >= radicand;
  };
  // Start near (root - c) / d and walk to the exact boundary.
  BigInt z = (root - c) / d;
  while (reaches(z - 1)) --z;
  while (!reaches(z)) ++z;
  return z;
}

}  // namespace subsetbase

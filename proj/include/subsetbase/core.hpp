#pragma once

// Base sizes of the symmetric and alternating groups acting on r-subsets:
// the witness search over (l, k) pairs, the two lower bounds, and the two
// closed-form fast paths. Everything here is a pure function of its inputs.
//
// For l, k, r >= 1 define
//
//   m_r(l, k) = (1/k) * (l*r - sum_{i=1}^{k-1} i*C(l,i)).
//
// A pair (l, k) with k <= l+1 is a witness for (n, r) when
// 0 <= m_r(l,k) <= C(l,k) and sum_{i=0}^{k-1} C(l,i) + m_r(l,k) >= n; the
// base size of the action on r-subsets of an n-set is the least l admitting
// a witness.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "subsetbase/exact.hpp"

namespace subsetbase {

enum class Group { symmetric, alternating };

/// Identifies which subset action a family is measured against.
struct ActionSpec {
  Group group = Group::symmetric;
  std::int64_t n = 0;  // ground-set size
  std::int64_t r = 0;  // subset size
  bool uniform = true;  // true: all sets exactly size r; false: sizes <= r
};

inline void validate(const ActionSpec& spec) {
  if (spec.n < 1 || spec.r < 1)
    throw std::domain_error("action spec: n and r must be positive");
  if (spec.group == Group::symmetric && spec.n < 2 * spec.r)
    throw std::domain_error("action spec: symmetric action requires n >= 2r");
  if (spec.group == Group::alternating && spec.n < 2 * spec.r + 1)
    throw std::domain_error("action spec: alternating action requires n >= 2r+1");
}

/// A certified (l, k) pair together with the quantities the downstream
/// construction consumes.
struct Witness {
  std::int64_t l = 0;
  std::int64_t k = 0;
  Rational m;           // m_r(l, k)
  BigInt edge_budget;   // sum_{i<k} C(l,i) + floor(m): edges available to build
};

inline Rational m_value(std::int64_t l, std::int64_t k, std::int64_t r) {
  if (l < 1 || k < 1 || r < 1)
    throw std::domain_error("m_value: arguments must be positive");
  BigInt numerator = BigInt(l) * r;
  for (std::int64_t i = 1; i < k; ++i) numerator -= BigInt(i) * binomial(l, i);
  return Rational(numerator, BigInt(k));
}

/// Number of subsets of an l-set of size strictly below k.
inline BigInt small_edge_count(std::int64_t l, std::int64_t k) {
  BigInt total = 0;
  for (std::int64_t i = 0; i < k; ++i) total += binomial(l, i);
  return total;
}

inline bool witness_valid(std::int64_t l, std::int64_t k, std::int64_t n,
                          std::int64_t r) {
  if (l < 1 || k < 1 || n < 1 || r < 1)
    throw std::domain_error("witness_valid: arguments must be positive");
  if (k > l + 1) return false;
  const Rational m = m_value(l, k, r);
  if (m < 0 || m > Rational(binomial(l, k))) return false;
  return Rational(small_edge_count(l, k)) + m >= Rational(n);
}

/// max(ceil((2n-2)/(r+1)), ceil(log2 n)), in integer arithmetic only.
inline std::int64_t lower_bound(std::int64_t n, std::int64_t r) {
  if (r < 1) throw std::domain_error("lower_bound: r must be positive");
  if (n < 2 * r) throw std::domain_error("lower_bound: requires n >= 2r");
  return std::max(ceil_div(2 * n - 2, r + 1), ceil_log2(n));
}

/// Smallest l admitting a witness for (n, r), with the smallest valid k for
/// that l. (l, k) = (n, 2) is always valid, so the search terminates.
inline Witness find_min_l(std::int64_t n, std::int64_t r) {
  if (r < 1) throw std::domain_error("find_min_l: r must be positive");
  if (n < 2 * r) throw std::domain_error("find_min_l: requires n >= 2r");
  for (std::int64_t l = lower_bound(n, r); l <= n; ++l) {
    BigInt weighted = 0;  // sum_{i<k} i*C(l,i), maintained incrementally
    for (std::int64_t k = 1; k <= l + 1; ++k) {
      const BigInt numerator = BigInt(l) * r - weighted;
      if (numerator < 0) break;  // m only decreases as k grows
      const Rational m(numerator, BigInt(k));
      if (m <= Rational(binomial(l, k)) &&
          Rational(small_edge_count(l, k)) + m >= Rational(n)) {
        Witness w;
        w.l = l;
        w.k = k;
        w.m = m;
        w.edge_budget = small_edge_count(l, k) + floor_rational(m);
        return w;
      }
      weighted += BigInt(k) * binomial(l, k);
    }
  }
  throw internal_error("find_min_l: search passed l = n without a witness");
}

inline std::int64_t base_size(const ActionSpec& spec) {
  validate(spec);
  const std::int64_t n =
      spec.group == Group::symmetric ? spec.n : spec.n - 1;
  return find_min_l(n, spec.r).l;
}

/// ceil((2n-2)/(r+1)); valid whenever n >= (r^2+r)/2.
inline std::int64_t closed_form_large(std::int64_t n, std::int64_t r) {
  if (n < 1 || r < 1)
    throw std::domain_error("closed_form_large: arguments must be positive");
  if (2 * n < r * r + r)
    throw std::domain_error("closed_form_large: requires n >= (r^2+r)/2");
  return ceil_div(2 * n - 2, r + 1);
}

/// True when n lies in the mid-range formula's window. The standard window
/// is r^{3/2} + r/2 + 1 <= n < (r^2+r)/2; the extended window lowers the
/// left end to sqrt(8r^3+25r^2+4r-28)/6 + r/2 + 1. Both endpoints are
/// decided by exact integer comparisons of squared quantities.
inline bool closed_form_mid_applicable(std::int64_t n, std::int64_t r,
                                       bool extended = false) {
  if (n < 1 || r < 1) return false;
  if (2 * n >= r * r + r) return false;
  if (extended) {
    const BigInt lhs = BigInt(6) * n - 3 * r - 6;
    const BigInt rhs =
        BigInt(8) * r * r * r + BigInt(25) * r * r + BigInt(4) * r - 28;
    return lhs >= 0 && lhs * lhs >= rhs;
  }
  const BigInt lhs = BigInt(2) * n - r - 2;
  return lhs >= 0 && lhs * lhs >= BigInt(4) * r * r * r;
}

/// ceil(sqrt(3*(2n + r - 5/4) + r^2) - r - 3/2) via an integer square root on
/// the cleared-denominator radicand 16r^2 + 96n + 48r - 60.
inline std::int64_t closed_form_mid(std::int64_t n, std::int64_t r,
                                    bool extended = false) {
  if (n < 1 || r < 1)
    throw std::domain_error("closed_form_mid: arguments must be positive");
  if (!closed_form_mid_applicable(n, r, extended))
    throw std::domain_error("closed_form_mid: n outside the formula's range");
  const BigInt radicand =
      BigInt(16) * r * r + BigInt(96) * n + BigInt(48) * r - 60;
  const BigInt value = ceil_shifted_sqrt(radicand, BigInt(4) * r + 6, 4);
  return static_cast<std::int64_t>(value);
}

inline std::string to_string(Group g) {
  return g == Group::symmetric ? "S" : "A";
}

}  // namespace subsetbase

#pragma once

// Terminating hypergeometric series and the classical closed forms they are
// checked against: Chu-Vandermonde-Gauss, Pfaff-Saalschutz, Dougall-Dixon and
// the Whipple 7F6 -> 4F3 transformation.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hnid/combinatorics.hpp"
#include "hnid/errors.hpp"
#include "hnid/exactnum.hpp"

namespace hnid {

template <Scalar S>
struct HypergeometricSpec {
  std::vector<S> upper;
  std::vector<S> lower;
  S argument = S(1);
  // upper[termination_index] has value part -n for some integer n >= 0; the
  // sum runs over k = 0..n.
  std::size_t termination_index = 0;
  // When set to `a`, each term is additionally multiplied by (a + 2k)/a. This
  // is the very-well-poised pair (1 + a/2)_k / (a/2)_k in cancelled form; the
  // k = 0 factor is 1 by convention.
  std::optional<S> well_poised;
  // Explicit last index; overrides termination_index when set.
  std::optional<std::int64_t> truncate_at;
};

// Number of terms minus one, read off the termination parameter.
template <Scalar S>
std::int64_t termination_length(const HypergeometricSpec<S>& spec) {
  if (spec.truncate_at) {
    if (*spec.truncate_at < 0) throw DomainError("hypergeometric series: negative truncation");
    return *spec.truncate_at;
  }
  if (spec.termination_index >= spec.upper.size()) {
    throw DomainError("hypergeometric series: termination index out of range");
  }
  const Rational& t = value_part(spec.upper[spec.termination_index]);
  if (!t.is_integer() || t.sign() > 0) {
    throw DomainError("hypergeometric series: termination parameter " +
                      t.to_string() + " is not a nonpositive integer");
  }
  return -t.numerator().get_si();
}

// Checks that no denominator factor vanishes inside the summation range.
template <Scalar S>
void validate(const HypergeometricSpec<S>& spec) {
  const std::int64_t n = termination_length(spec);
  for (std::size_t j = 0; j < spec.lower.size(); ++j) {
    const Rational& b = value_part(spec.lower[j]);
    if (b.is_integer() && b.sign() <= 0 && -b.numerator().get_si() < n) {
      const std::int64_t k = -b.numerator().get_si() + 1;
      throw DomainError("hypergeometric series: lower parameter #" +
                        std::to_string(j) + " = " + b.to_string() +
                        " makes the denominator vanish at k = " + std::to_string(k));
    }
  }
  if (spec.well_poised && n > 0 && value_part(*spec.well_poised).is_zero()) {
    throw DomainError("hypergeometric series: well-poised parameter has zero value part");
  }
}

// sum_{k=0..n} prod (a_i)_k / (k! prod (b_j)_k) z^k, built from the term ratio.
template <Scalar S>
S eval_pfq(const HypergeometricSpec<S>& spec) {
  validate(spec);
  const std::int64_t n = termination_length(spec);
  S term(1);
  S sum(1);
  for (std::int64_t k = 0; k < n; ++k) {
    const Rational shift(k);
    S num = spec.argument;
    for (const S& a : spec.upper) num *= a + shift;
    S den = S(k + 1);
    for (const S& b : spec.lower) den *= b + shift;
    term *= num / den;
    if (spec.well_poised) {
      const S& a = *spec.well_poised;
      sum += term * ((a + Rational(2 * (k + 1))) / a);
    } else {
      sum += term;
    }
  }
  return sum;
}

// 2F1(-n, a; c; 1)
template <Scalar S>
HypergeometricSpec<S> chu_vandermonde_series(const S& a, const S& c, std::int64_t n) {
  return {{S(-n), a}, {c}, S(1), 0, std::nullopt, std::nullopt};
}

// (c - a)_n / (c)_n
template <Scalar S>
S chu_vandermonde_rhs(const S& a, const S& c, std::int64_t n) {
  return checked_div(pochhammer(c - a, n), pochhammer(c, n), "Chu-Vandermonde (c)_n");
}

// 3F2(-n, a, b; c, 1 + a + b - c - n; 1), balanced by construction.
template <Scalar S>
HypergeometricSpec<S> saalschutz_series(const S& a, const S& b, const S& c, std::int64_t n) {
  return {{S(-n), a, b}, {c, S(1) + a + b - c - Rational(n)}, S(1), 0, std::nullopt, std::nullopt};
}

// (c - a)_n (c - b)_n / ((c)_n (c - a - b)_n)
template <Scalar S>
S saalschutz_rhs(const S& a, const S& b, const S& c, std::int64_t n) {
  return checked_div(pochhammer(c - a, n) * pochhammer(c - b, n),
                     pochhammer(c, n) * pochhammer(c - a - b, n),
                     "Saalschutz (c)_n (c-a-b)_n");
}

// 5F4(a, 1 + a/2, b, d, -n; a/2, 1 + a - b, 1 + a - d, 1 + a + n; 1), with the
// well-poised pair entered as two ordinary parameters.
template <Scalar S>
HypergeometricSpec<S> dougall_dixon_series(const S& a, const S& b, const S& d, std::int64_t n) {
  const S half_a = a * rat(1, 2);
  return {{a, S(1) + half_a, b, d, S(-n)},
          {half_a, S(1) + a - b, S(1) + a - d, S(1) + a + Rational(n)},
          S(1),
          4,
          std::nullopt, std::nullopt};
}

// (1 + a)_n (1 + a - b - d)_n / ((1 + a - b)_n (1 + a - d)_n)
template <Scalar S>
S dougall_dixon_rhs(const S& a, const S& b, const S& d, std::int64_t n) {
  return checked_div(pochhammer(S(1) + a, n) * pochhammer(S(1) + a - b - d, n),
                     pochhammer(S(1) + a - b, n) * pochhammer(S(1) + a - d, n),
                     "Dougall-Dixon (1+a-b)_n (1+a-d)_n");
}

// Very-well-poised 7F6(a, 1 + a/2, b, c, d, e, -n; a/2, 1+a-b, 1+a-c, 1+a-d,
// 1+a-e, 1+a+n; 1).
template <Scalar S>
HypergeometricSpec<S> whipple_series(const S& a, const S& b, const S& c, const S& d,
                                     const S& e, std::int64_t n) {
  const S half_a = a * rat(1, 2);
  return {{a, S(1) + half_a, b, c, d, e, S(-n)},
          {half_a, S(1) + a - b, S(1) + a - c, S(1) + a - d, S(1) + a - e,
           S(1) + a + Rational(n)},
          S(1),
          6,
          std::nullopt, std::nullopt};
}

// The balanced 4F3 on the right of the Whipple transformation:
// 4F3(-n, b, d, 1 + a - c - e; 1 + a - c, 1 + a - e, b + d - a - n; 1).
template <Scalar S>
HypergeometricSpec<S> whipple_balanced_series(const S& a, const S& b, const S& c,
                                              const S& d, const S& e, std::int64_t n) {
  return {{S(-n), b, d, S(1) + a - c - e},
          {S(1) + a - c, S(1) + a - e, b + d - a - Rational(n)},
          S(1),
          0,
          std::nullopt, std::nullopt};
}

// Dougall-Dixon prefactor times the balanced 4F3.
template <Scalar S>
S whipple_rhs(const S& a, const S& b, const S& c, const S& d, const S& e, std::int64_t n) {
  return dougall_dixon_rhs(a, b, d, n) * eval_pfq(whipple_balanced_series(a, b, c, d, e, n));
}

}  // namespace hnid

#pragma once

// Factorials, binomial coefficients, shifted factorials and harmonic numbers
// over the exact scalars.

#include <cstdint>
#include <map>
#include <shared_mutex>
#include <string>
#include <vector>

#include "hnid/errors.hpp"
#include "hnid/exactnum.hpp"

namespace hnid {

// Memo table for the classical harmonic numbers H_n.
//
// Indices up to `dense_limit` are stored densely and filled by the recurrence
// H_n = H_{n-1} + 1/n. Larger indices are computed on demand by binary
// splitting and kept in a sparse map. Safe for concurrent use; racing fills
// store identical values.
class HarmonicCache {
 public:
  explicit HarmonicCache(std::int64_t dense_limit = 4096);

  HarmonicCache(const HarmonicCache&) = delete;
  HarmonicCache& operator=(const HarmonicCache&) = delete;

  Rational get(std::int64_t n);

  // H_first, H_{first+1}, ..., H_{first+count-1}. Only H_first is looked up;
  // the rest are produced by the recurrence.
  std::vector<Rational> run(std::int64_t first, std::int64_t count);

  std::int64_t dense_size() const;
  std::size_t sparse_size() const;

 private:
  const std::int64_t dense_limit_;
  mutable std::shared_mutex mu_;
  std::vector<Rational> dense_;
  std::map<std::int64_t, Rational> sparse_;
};

HarmonicCache& default_harmonic_cache();

// H_n from the process-wide cache. Throws DomainError for n < 0.
Rational harmonic(std::int64_t n);

// H_n computed from scratch by binary splitting; never touches a cache.
Rational harmonic_uncached(std::int64_t n);

Rational factorial(std::int64_t n);

// Integer binomial. Zero when k < 0, or when n >= 0 and k > n. For n < 0 and
// k >= 0 agrees with binomial_gen(n, k).
Rational binomial_int(std::int64_t n, std::int64_t k);

// H_n(x) = sum_{k=1..n} 1/(x + k).
template <Scalar S>
S harmonic_gen(std::int64_t n, const S& x) {
  if (n < 0) throw DomainError("harmonic_gen: negative index " + std::to_string(n));
  S sum{};
  for (std::int64_t k = 1; k <= n; ++k) {
    const S denom = x + Rational(k);
    if (value_part(denom).is_zero()) {
      throw DomainError("harmonic_gen: pole at x = -" + std::to_string(k));
    }
    sum += S(1) / denom;
  }
  return sum;
}

// (c)_n = c (c+1) ... (c+n-1), (c)_0 = 1.
template <Scalar S>
S pochhammer(const S& c, std::int64_t n) {
  if (n < 0) throw DomainError("pochhammer: negative length " + std::to_string(n));
  S prod(1);
  for (std::int64_t i = 0; i < n; ++i) prod *= c + Rational(i);
  return prod;
}

// binom(z, m) = prod_{l=1..m} (z - m + l) / l. Total in z.
template <Scalar S>
S binomial_gen(const S& z, std::int64_t m) {
  if (m < 0) throw DomainError("binomial_gen: negative lower index " + std::to_string(m));
  S prod(1);
  for (std::int64_t l = 1; l <= m; ++l) prod *= z + Rational(l - m);
  return prod * (Rational(1) / factorial(m));
}

// 1 / binom(z, m). A vanishing binomial in a denominator position is a domain
// error, never 0/0.
template <Scalar S>
S inverse_binomial(const S& z, std::int64_t m) {
  const S b = binomial_gen(z, m);
  if (value_part(b).is_zero()) {
    throw DivisionByZero("inverse binomial: binom(" + z.to_string() + ", " +
                         std::to_string(m) + ") vanishes");
  }
  return S(1) / b;
}

// binom(z, n) / binom(z - n + l, l) for 0 <= l <= n, in the cancelled form
// l!/n! * (z - n + l + 1)_{n - l}. Defined even where both binomials vanish.
template <Scalar S>
S shifted_binomial_ratio(const S& z, std::int64_t n, std::int64_t l) {
  if (l < 0 || l > n) {
    throw DomainError("shifted_binomial_ratio: need 0 <= l <= n");
  }
  S prod(1);
  for (std::int64_t j = l + 1; j <= n; ++j) prod *= z + Rational(j - n);
  return prod * (factorial(l) / factorial(n));
}

}  // namespace hnid

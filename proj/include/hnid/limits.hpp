#pragma once

// Reflection families and exact decay probes for harmonic-weighted sums
//   S(y) = sum_k f_n(k) P_k(y)/Q_k(y) H_{ny+k}
// at increasing integer y.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hnid/exactnum.hpp"

namespace hnid {

// Dense polynomial in y with Rational coefficients, constant term first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  // prod_i (y + shifts[i]); the empty product is 1.
  static Polynomial monic_from_shifts(const std::vector<Rational>& shifts);

  // -1 for the zero polynomial.
  std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
  Rational leading() const { return c_.empty() ? Rational() : c_.back(); }
  const std::vector<Rational>& coefficients() const { return c_; }

  Rational operator()(const Rational& y) const;

 private:
  std::vector<Rational> c_;
};

struct MonicRationalWeight {
  Polynomial P;
  Polynomial Q;
  std::int64_t lambda = 0;
  std::int64_t nu = 0;

  // Throws DomainError unless P and Q are monic of degree lambda*k + nu.
  void validate(std::int64_t k) const;
  // P(y)/Q(y); DivisionByZero when Q(y) = 0.
  Rational at(const Rational& y) const;
};

// P = Q = 1, lambda = nu = 0, for k = 0..n.
std::vector<MonicRationalWeight> unit_weights(std::int64_t n);

// P_k = prod_{j=1..k} (y + j/n), Q_k = prod_{j=1..k} (y + (n-k+j)/n), so that
// P_k/Q_k = binom(ny+k, k)/binom(ny+n, k). lambda = 1, nu = 0.
std::vector<MonicRationalWeight> binomial_ratio_weights(std::int64_t n);

struct ReflectionFamily {
  std::string name;
  std::int64_t mu = 0;
  std::int64_t nu = 0;
  std::function<Rational(std::int64_t n, std::int64_t k)> f;
};

// f_n(k) = binom(n,k)^mu (binom(n+k,k)/binom(2n,k))^nu (n - 2k).
ReflectionFamily reflex_family(std::int64_t mu, std::int64_t nu);

// f(n,k) + f(n,n-k) == 0 for every k in 0..n.
bool reflection_check(const ReflectionFamily& fam, std::int64_t n);

// Exact S(y). Requires weights.size() == n+1, y >= 1 and the reflection
// property at n; violations throw DomainError.
Rational limit_sum(const ReflectionFamily& fam, const std::vector<MonicRationalWeight>& weights,
                   std::int64_t n, std::int64_t y);

// (1/2) sum_k f_n(k) (w_k H_{ny+k} - w_{n-k} H_{ny+n-k}).
Rational paired_sum(const ReflectionFamily& fam, const std::vector<MonicRationalWeight>& weights,
                    std::int64_t n, std::int64_t y);

// w_k H_{ny+k} - w_{n-k} H_{ny+n-k}.
Rational pair_difference(const std::vector<MonicRationalWeight>& weights, std::int64_t n,
                         std::int64_t k, std::int64_t y);

struct DecayReport {
  std::vector<std::int64_t> ys;
  std::vector<Rational> values;
  // |S| strictly decreasing along ys. Not set for an all-zero probe.
  bool monotone_decreasing_magnitude = false;
  // Every value is exactly zero.
  bool converged = false;
  Rational final_magnitude;
  // Both flags above in one verdict: strictly decaying or identically zero.
  bool ok() const { return monotone_decreasing_magnitude || converged; }
};

// ys must be strictly increasing and >= 1. The parallel variant evaluates
// the ys concurrently and returns the same report.
DecayReport decay_probe(const ReflectionFamily& fam,
                        const std::vector<MonicRationalWeight>& weights, std::int64_t n,
                        const std::vector<std::int64_t>& ys);
DecayReport decay_probe_parallel(const ReflectionFamily& fam,
                                 const std::vector<MonicRationalWeight>& weights, std::int64_t n,
                                 const std::vector<std::int64_t>& ys);

}  // namespace hnid

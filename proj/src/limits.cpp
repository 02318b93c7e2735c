#include "hnid/limits.hpp"

#include <exception>

#include "hnid/combinatorics.hpp"
#include "hnid/errors.hpp"

namespace hnid {

namespace {

using i64 = std::int64_t;

void require_weights(const std::vector<MonicRationalWeight>& weights, i64 n) {
  if (n < 0) throw DomainError("limit sum: n must be nonnegative");
  if (static_cast<i64>(weights.size()) != n + 1) {
    throw DomainError("limit sum: expected " + std::to_string(n + 1) + " weights, got " +
                      std::to_string(weights.size()));
  }
  for (i64 k = 0; k <= n; ++k) weights[k].validate(k);
}

// w_k(y) H_{ny+k} for k = 0..n.
std::vector<Rational> weighted_harmonics(const std::vector<MonicRationalWeight>& weights, i64 n,
                                         i64 y) {
  if (y < 1) throw DomainError("limit sum: y must be positive, got " + std::to_string(y));
  const std::vector<Rational> h = default_harmonic_cache().run(n * y, n + 1);
  std::vector<Rational> out(n + 1);
  for (i64 k = 0; k <= n; ++k) out[k] = weights[k].at(Rational(y)) * h[k];
  return out;
}

void require_reflection(const ReflectionFamily& fam, i64 n) {
  if (!reflection_check(fam, n)) {
    throw DomainError("family '" + fam.name + "' violates the reflection property at n = " +
                      std::to_string(n));
  }
}

void require_increasing(const std::vector<i64>& ys) {
  if (ys.empty()) throw DomainError("decay probe: no y values");
  for (std::size_t i = 0; i < ys.size(); ++i) {
    if (ys[i] < 1) throw DomainError("decay probe: y values must be positive");
    if (i > 0 && ys[i] <= ys[i - 1]) throw DomainError("decay probe: y values must be strictly increasing");
  }
}

DecayReport summarize(std::vector<i64> ys, std::vector<Rational> values) {
  DecayReport r;
  r.ys = std::move(ys);
  r.values = std::move(values);
  r.converged = true;
  for (const auto& v : r.values) r.converged = r.converged && v.is_zero();
  r.monotone_decreasing_magnitude = !r.converged;
  for (std::size_t i = 1; i < r.values.size(); ++i) {
    if (!(r.values[i].abs() < r.values[i - 1].abs())) r.monotone_decreasing_magnitude = false;
  }
  r.final_magnitude = r.values.back().abs();
  return r;
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::monic_from_shifts(const std::vector<Rational>& shifts) {
  std::vector<Rational> c{Rational(1)};
  for (const auto& s : shifts) {
    std::vector<Rational> next(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i] * s;
      next[i + 1] += c[i];
    }
    c = std::move(next);
  }
  return Polynomial(std::move(c));
}

Rational Polynomial::operator()(const Rational& y) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * y + *it;
  return acc;
}

void MonicRationalWeight::validate(i64 k) const {
  const i64 deg = lambda * k + nu;
  if (lambda < 0 || nu < 0) throw DomainError("weight: lambda and nu must be nonnegative");
  if (P.degree() != deg || Q.degree() != deg) {
    throw DomainError("weight at k = " + std::to_string(k) + ": P and Q must have degree " +
                      std::to_string(deg));
  }
  if (P.leading() != Rational(1) || Q.leading() != Rational(1)) {
    throw DomainError("weight at k = " + std::to_string(k) + ": P and Q must be monic");
  }
}

Rational MonicRationalWeight::at(const Rational& y) const {
  const Rational q = Q(y);
  if (q.is_zero()) throw DivisionByZero("weight: Q vanishes at y = " + y.to_string());
  return P(y) / q;
}

std::vector<MonicRationalWeight> unit_weights(i64 n) {
  return std::vector<MonicRationalWeight>(n + 1, {Polynomial({1}), Polynomial({1}), 0, 0});
}

std::vector<MonicRationalWeight> binomial_ratio_weights(i64 n) {
  std::vector<MonicRationalWeight> out;
  for (i64 k = 0; k <= n; ++k) {
    std::vector<Rational> p, q;
    for (i64 j = 1; j <= k; ++j) {
      p.push_back(rat(j, n));
      q.push_back(rat(n - k + j, n));
    }
    out.push_back({Polynomial::monic_from_shifts(p), Polynomial::monic_from_shifts(q), 1, 0});
  }
  return out;
}

ReflectionFamily reflex_family(i64 mu, i64 nu) {
  if (mu < 0 || nu < 0) throw DomainError("reflex family: mu and nu must be nonnegative");
  return {"reflex mu=" + std::to_string(mu) + " nu=" + std::to_string(nu), mu, nu,
          [mu, nu](i64 n, i64 k) {
            const Rational b = binomial_int(n, k);
            const Rational r = binomial_int(n + k, k) / binomial_int(2 * n, k);
            Rational v(n - 2 * k);
            for (i64 i = 0; i < mu; ++i) v *= b;
            for (i64 i = 0; i < nu; ++i) v *= r;
            return v;
          }};
}

bool reflection_check(const ReflectionFamily& fam, i64 n) {
  for (i64 k = 0; k <= n; ++k) {
    if (!(fam.f(n, k) + fam.f(n, n - k)).is_zero()) return false;
  }
  return true;
}

Rational limit_sum(const ReflectionFamily& fam, const std::vector<MonicRationalWeight>& weights,
                   i64 n, i64 y) {
  require_weights(weights, n);
  require_reflection(fam, n);
  const auto wh = weighted_harmonics(weights, n, y);
  Rational s;
  for (i64 k = 0; k <= n; ++k) s += fam.f(n, k) * wh[k];
  return s;
}

Rational paired_sum(const ReflectionFamily& fam, const std::vector<MonicRationalWeight>& weights,
                    i64 n, i64 y) {
  require_weights(weights, n);
  require_reflection(fam, n);
  const auto wh = weighted_harmonics(weights, n, y);
  Rational s;
  for (i64 k = 0; k <= n; ++k) s += fam.f(n, k) * (wh[k] - wh[n - k]);
  return s * rat(1, 2);
}

Rational pair_difference(const std::vector<MonicRationalWeight>& weights, i64 n, i64 k, i64 y) {
  require_weights(weights, n);
  if (k < 0 || k > n) throw DomainError("pair difference: need 0 <= k <= n");
  const auto wh = weighted_harmonics(weights, n, y);
  return wh[k] - wh[n - k];
}

DecayReport decay_probe(const ReflectionFamily& fam,
                        const std::vector<MonicRationalWeight>& weights, i64 n,
                        const std::vector<i64>& ys) {
  require_increasing(ys);
  require_weights(weights, n);
  require_reflection(fam, n);
  std::vector<Rational> values;
  for (i64 y : ys) values.push_back(limit_sum(fam, weights, n, y));
  return summarize(ys, std::move(values));
}

DecayReport decay_probe_parallel(const ReflectionFamily& fam,
                                 const std::vector<MonicRationalWeight>& weights, i64 n,
                                 const std::vector<i64>& ys) {
  require_increasing(ys);
  require_weights(weights, n);
  require_reflection(fam, n);
  std::vector<Rational> values(ys.size());
  std::exception_ptr first_error;
  const i64 count = static_cast<i64>(ys.size());
#pragma omp parallel for schedule(dynamic)
  for (i64 i = 0; i < count; ++i) {
    try {
      values[i] = limit_sum(fam, weights, n, ys[i]);
    } catch (...) {
#pragma omp critical(hnid_limits_error)
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  return summarize(ys, std::move(values));
}

}  // namespace hnid

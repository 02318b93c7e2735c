#include "hnid/combinatorics.hpp"

#include <mutex>
#include <utility>

namespace hnid {

namespace {

// sum_{k=lo+1..hi} 1/k as an unreduced fraction p/q.
void harmonic_split(std::int64_t lo, std::int64_t hi, mpz_class& p, mpz_class& q) {
  if (hi - lo <= 16) {
    p = 0;
    q = 1;
    for (std::int64_t k = lo + 1; k <= hi; ++k) {
      // p/q + 1/k = (p k + q) / (q k)
      p = p * k + q;
      q *= k;
    }
    return;
  }
  const std::int64_t mid = lo + (hi - lo) / 2;
  mpz_class p1, q1, p2, q2;
  harmonic_split(lo, mid, p1, q1);
  harmonic_split(mid, hi, p2, q2);
  p = p1 * q2 + p2 * q1;
  q = q1 * q2;
}

void require_nonnegative(std::int64_t n) {
  if (n < 0) {
    throw DomainError("harmonic number with negative index " + std::to_string(n));
  }
}

}  // namespace

HarmonicCache::HarmonicCache(std::int64_t dense_limit)
    : dense_limit_(dense_limit), dense_{Rational()} {}

Rational HarmonicCache::get(std::int64_t n) {
  require_nonnegative(n);
  {
    std::shared_lock lock(mu_);
    if (n < static_cast<std::int64_t>(dense_.size())) return dense_[n];
    if (auto it = sparse_.find(n); it != sparse_.end()) return it->second;
  }
  if (n <= dense_limit_) {
    std::unique_lock lock(mu_);
    while (static_cast<std::int64_t>(dense_.size()) <= n) {
      const auto k = static_cast<std::int64_t>(dense_.size());
      dense_.push_back(dense_.back() + rat(1, k));
    }
    return dense_[n];
  }
  Rational h = harmonic_uncached(n);
  std::unique_lock lock(mu_);
  return sparse_.try_emplace(n, std::move(h)).first->second;
}

std::vector<Rational> HarmonicCache::run(std::int64_t first, std::int64_t count) {
  std::vector<Rational> out;
  if (count <= 0) return out;
  out.reserve(static_cast<std::size_t>(count));
  out.push_back(get(first));
  for (std::int64_t i = 1; i < count; ++i) {
    out.push_back(out.back() + rat(1, first + i));
  }
  return out;
}

std::int64_t HarmonicCache::dense_size() const {
  std::shared_lock lock(mu_);
  return static_cast<std::int64_t>(dense_.size());
}

std::size_t HarmonicCache::sparse_size() const {
  std::shared_lock lock(mu_);
  return sparse_.size();
}

HarmonicCache& default_harmonic_cache() {
  static HarmonicCache cache;
  return cache;
}

Rational harmonic(std::int64_t n) { return default_harmonic_cache().get(n); }

Rational harmonic_uncached(std::int64_t n) {
  require_nonnegative(n);
  if (n == 0) return Rational();
  mpz_class p, q;
  harmonic_split(0, n, p, q);
  return Rational(p, q);
}

Rational factorial(std::int64_t n) {
  if (n < 0) throw DomainError("factorial of negative integer " + std::to_string(n));
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f, 1);
}

Rational binomial_int(std::int64_t n, std::int64_t k) {
  if (k < 0) return Rational();
  if (n >= 0 && k > n) return Rational();
  // GMP's binomial extends to negative n via binom(-n, k) = (-1)^k binom(n+k-1, k).
  mpz_class r;
  const mpz_class top(static_cast<long>(n));
  mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(r, 1);
}

}  // namespace hnid

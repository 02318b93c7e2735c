#include "hnid/combinatorics.hpp"
#include "hnid/errors.hpp"
#include "hnid/identities.hpp"

namespace hnid {

Rational xi(std::int64_t lambda, std::int64_t n) {
  if (lambda < 1) throw DomainError("xi: lambda must be positive");
  if (n < 0) throw DomainError("xi: n must be nonnegative");
  Rational sum;
  for (std::int64_t k = 0; k <= n; ++k) {
    Rational power(1);
    const Rational b = binomial_int(n, k);
    for (std::int64_t i = 0; i < lambda; ++i) power *= b;
    sum += power * (1 + Rational(lambda * (n - 2 * k)) * harmonic(k));
  }
  return sum;
}

Rational xi_via_omega(std::int64_t lambda, std::int64_t n) {
  return d0_eval([&](const Dual& x) { return (x + Dual(n)) * omega(lambda, n, x); }).second;
}

Rational entry4_closed(std::int64_t n) {
  if (n < 0) throw DomainError("entry4_closed: n must be nonnegative");
  if (n % 2 != 0) return Rational(0);
  const std::int64_t m = n / 2;
  const Rational fm = factorial(m);
  const Rational multinomial = factorial(3 * m) / (fm * fm * fm);
  const Rational central = binomial_int(4 * m, 2 * m);
  const Rational sign = (m % 2 == 0) ? Rational(1) : Rational(-1);
  return sign * multinomial / (central * central);
}

}  // namespace hnid

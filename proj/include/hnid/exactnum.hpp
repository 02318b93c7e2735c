#pragma once

// Exact scalars: arbitrary-precision rationals and first-order dual numbers
// over them. Every value is kept in canonical form after each operation.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace hnid {

class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I v)  // NOLINT(google-explicit-constructor): integers embed exactly
      : q_(static_cast<long>(v)) {}

  // p/q in lowest terms with q > 0. Throws DivisionByZero when q == 0.
  Rational(const mpz_class& p, const mpz_class& q);

  const mpz_class& numerator() const { return q_.get_num(); }
  const mpz_class& denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  Rational abs() const;

  // "p/q" with q > 0, or "p" when q == 1.
  std::string to_string() const;
  // Inverse of to_string. Accepts non-reduced input and canonicalizes it;
  // rejects anything that is not [-]digits[/digits] and zero denominators.
  static Rational parse(std::string_view text);

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// rat(p, q): canonical p/q. Throws DivisionByZero when q == 0.
Rational rat(std::int64_t p, std::int64_t q);

// value + deriv * eps with eps^2 = 0.
class Dual {
 public:
  Dual() = default;
  Dual(Rational value, Rational deriv = Rational())  // NOLINT: ring embedding
      : value_(std::move(value)), deriv_(std::move(deriv)) {}
  template <std::integral I>
  Dual(I v) : value_(v) {}  // NOLINT

  // The point x0 + eps, i.e. the differentiation variable evaluated at x0.
  static Dual variable(Rational at = Rational()) {
    return Dual(std::move(at), Rational(1));
  }

  const Rational& value() const { return value_; }
  const Rational& deriv() const { return deriv_; }

  Dual& operator+=(const Dual& o);
  Dual& operator-=(const Dual& o);
  Dual& operator*=(const Dual& o);
  // Throws DivisionByZero when o.value() == 0.
  Dual& operator/=(const Dual& o);

  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
  friend Dual operator/(Dual a, const Dual& b) { return a /= b; }
  friend Dual operator-(const Dual& a) { return Dual(-a.value_, -a.deriv_); }

  friend bool operator==(const Dual& a, const Dual& b) = default;

  std::string to_string() const;

 private:
  Rational value_;
  Rational deriv_;
};

std::ostream& operator<<(std::ostream& os, const Dual& d);

Dual dual_div(const Dual& a, const Dual& b);

template <class T>
concept Scalar = std::same_as<T, Rational> || std::same_as<T, Dual>;

inline const Rational& value_part(const Rational& r) { return r; }
inline const Rational& value_part(const Dual& d) { return d.value(); }

// Division that names the expression being evaluated when the divisor's value
// part vanishes.
template <Scalar S>
S checked_div(const S& num, const S& den, std::string_view context);

// Returns (f(0), D0 f) by evaluating f at the dual point 0 + eps.
template <class F>
  requires std::invocable<F, const Dual&>
std::pair<Rational, Rational> d0_eval(F&& f) {
  const Dual r = std::forward<F>(f)(Dual::variable());
  return {r.value(), r.deriv()};
}

}  // namespace hnid

#include "hnid/exactnum.hpp"

#include <ostream>

#include "hnid/errors.hpp"

namespace hnid {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const mpz_class& p, const mpz_class& q) {
  if (q == 0) throw DivisionByZero("rational with zero denominator");
  q_ = mpq_class(p, q);
  q_.canonicalize();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

std::string Rational::to_string() const { return q_.get_str(10); }

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  const bool negative = !body.empty() && body.front() == '-';
  if (negative) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw DomainError("malformed rational literal '" + std::string(text) + "'");
  }
  mpz_class p(std::string(num), 10);
  const mpz_class q(std::string(den), 10);
  if (negative) p = -p;
  return Rational(p, q);
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

Rational rat(std::int64_t p, std::int64_t q) {
  return Rational(mpz_class(static_cast<long>(p)),
                  mpz_class(static_cast<long>(q)));
}

Dual& Dual::operator+=(const Dual& o) {
  value_ += o.value_;
  deriv_ += o.deriv_;
  return *this;
}
Dual& Dual::operator-=(const Dual& o) {
  value_ -= o.value_;
  deriv_ -= o.deriv_;
  return *this;
}
Dual& Dual::operator*=(const Dual& o) {
  // (a + b eps)(c + d eps) = ac + (ad + bc) eps
  deriv_ = value_ * o.deriv_ + deriv_ * o.value_;
  value_ *= o.value_;
  return *this;
}
Dual& Dual::operator/=(const Dual& o) {
  if (o.value_.is_zero()) {
    throw DivisionByZero("dual division (" + to_string() + ") / (" +
                         o.to_string() + "): divisor has zero value part");
  }
  // (a + b eps)/(c + d eps) = a/c + (bc - ad)/c^2 eps
  const Rational c = o.value_;
  deriv_ = (deriv_ * c - value_ * o.deriv_) / (c * c);
  value_ /= c;
  return *this;
}

std::string Dual::to_string() const {
  if (deriv_.sign() < 0) return value_.to_string() + " - " + (-deriv_).to_string() + "e";
  return value_.to_string() + " + " + deriv_.to_string() + "e";
}

std::ostream& operator<<(std::ostream& os, const Dual& d) {
  return os << d.to_string();
}

Dual dual_div(const Dual& a, const Dual& b) { return a / b; }

template <Scalar S>
S checked_div(const S& num, const S& den, std::string_view context) {
  if (value_part(den).is_zero()) {
    throw DivisionByZero(std::string(context) + ": divisor " +
                         den.to_string() + " has zero value part");
  }
  return num / den;
}

template Rational checked_div(const Rational&, const Rational&, std::string_view);
template Dual checked_div(const Dual&, const Dual&, std::string_view);

}  // namespace hnid

#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hnid/combinatorics.hpp"
#include "hnid/errors.hpp"
#include "hnid/exactnum.hpp"

namespace hnid {
namespace {

Rational R(std::int64_t p, std::int64_t q) { return rat(p, q); }

TEST(Rat, ReducesAndNormalizesSign) {
  EXPECT_EQ(rat(2, 4).to_string(), "1/2");
  EXPECT_EQ(rat(3, -6).to_string(), "-1/2");
  EXPECT_EQ(rat(0, 5).to_string(), "0");
  EXPECT_EQ(rat(0, 5).denominator(), 1);
  EXPECT_EQ(rat(-4, -8), rat(1, 2));
}

TEST(Rat, ZeroDenominatorThrows) {
  EXPECT_THROW(rat(1, 0), DivisionByZero);
  EXPECT_THROW(Rational(mpz_class(1), mpz_class(0)), DivisionByZero);
  EXPECT_THROW(Rational(1) / Rational(0), DivisionByZero);
}

TEST(Rat, SerializationRoundTrips) {
  for (const char* text : {"0", "1", "-1", "1/2", "-7/3", "123456789012345678901234567890/11"}) {
    EXPECT_EQ(Rational::parse(text).to_string(), text);
  }
  EXPECT_EQ(Rational::parse("6/4").to_string(), "3/2");
  EXPECT_EQ(Rational::parse("-0").to_string(), "0");
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "1.5", "1/-2", " 1", "a", "1/2/3", "+1"}) {
    EXPECT_THROW(Rational::parse(bad), DomainError) << bad;
  }
  const Rational big = factorial(60) / factorial(41);
  EXPECT_EQ(Rational::parse(big.to_string()), big);
}

TEST(Rat, Ordering) {
  EXPECT_LT(R(1, 3), R(1, 2));
  EXPECT_GT(R(-1, 3), R(-1, 2));
  EXPECT_EQ(R(2, 6) <=> R(1, 3), std::strong_ordering::equal);
}

// Fixed-seed corpus of rationals with small numerators and denominators.
std::vector<Rational> random_rationals(std::size_t count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> num(-50, 50), den(1, 30);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(rat(num(rng), den(rng)));
  return out;
}

TEST(RationalProperties, FieldAxioms) {
  const auto xs = random_rationals(40, 7);
  for (std::size_t i = 0; i + 2 < xs.size(); ++i) {
    const Rational &a = xs[i], &b = xs[i + 1], &c = xs[i + 2];
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, Rational(0));
    if (!a.is_zero()) {
      EXPECT_EQ(a * (Rational(1) / a), Rational(1));
    }
    const Rational q = a * b + c;
    EXPECT_GT(q.denominator(), 0);
    EXPECT_EQ(gcd(q.numerator(), q.denominator()), 1);
  }
}

TEST(DualDiv, Examples) {
  EXPECT_EQ(dual_div(Dual(1, 1), Dual(1, 0)), Dual(1, 1));
  EXPECT_EQ(dual_div(Dual(1, 0), Dual(2, 1)), Dual(R(1, 2), R(-1, 4)));
  EXPECT_EQ(dual_div(Dual(0, 1), Dual(1, 1)), Dual(0, 1));
}

TEST(DualDiv, ZeroValuePartThrowsWithContext) {
  try {
    dual_div(Dual(1, 0), Dual(0, 3));
    FAIL() << "expected DivisionByZero";
  } catch (const DivisionByZero& e) {
    EXPECT_NE(std::string(e.what()).find("0 + 3e"), std::string::npos) << e.what();
  }
}

TEST(DualProperties, QuotientInvertsProduct) {
  const auto xs = random_rationals(60, 11);
  for (std::size_t i = 0; i + 3 < xs.size(); i += 2) {
    const Dual a(xs[i], xs[i + 1]);
    const Dual b(xs[i + 2], xs[i + 3]);
    if (b.value().is_zero()) continue;
    EXPECT_EQ((a * b) / b, a);
    EXPECT_EQ((a / b) * b, a);
  }
}

TEST(DualProperties, EmbeddingIsHomomorphism) {
  const auto xs = random_rationals(40, 13);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const Rational &r = xs[i], &s = xs[i + 1];
    EXPECT_EQ(Dual(r + s), Dual(r) + Dual(s));
    EXPECT_EQ(Dual(r - s), Dual(r) - Dual(s));
    EXPECT_EQ(Dual(r * s), Dual(r) * Dual(s));
    if (!s.is_zero()) {
      EXPECT_EQ(Dual(r / s), Dual(r) / Dual(s));
    }
  }
}

TEST(Dual, ToStringShowsSign) {
  EXPECT_EQ(Dual(1, R(-1, 2)).to_string(), "1 - 1/2e");
  EXPECT_EQ(Dual(0, 3).to_string(), "0 + 3e");
}

TEST(D0Eval, Examples) {
  EXPECT_EQ(d0_eval([](const Dual& x) { return x * (3 + x); }),
            std::make_pair(Rational(0), Rational(3)));
  EXPECT_EQ(d0_eval([](const Dual& x) { return binomial_gen(x + Rational(2), 1); }),
            std::make_pair(Rational(2), Rational(1)));
  EXPECT_EQ(d0_eval([](const Dual& x) { return Dual(1) / binomial_gen(x + Rational(2), 1); }),
            std::make_pair(R(1, 2), R(-1, 4)));
  EXPECT_THROW(d0_eval([](const Dual& x) { return Dual(1) / x; }), DivisionByZero);
}

struct CorpusEntry {
  std::function<Dual(const Dual&)> f;
  const char* text;
  const char* value;
  const char* deriv;
};

// Expected (f(0), f'(0)) expanded independently with sympy.
const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
    {[](const Dual& x) { return x*(3+x); }, "x*(3+x)", "0", "3"},
    {[](const Dual& x) { return (1+x)/(2+x); }, "(1+x)/(2+x)", "1/2", "1/4"},
    {[](const Dual& x) { return 1/((1+x)*(1+x)); }, "1/((1+x)*(1+x))", "1", "-2"},
    {[](const Dual& x) { return (2*x+R(1,3))/(R(5,7)-x); }, "(2*x+R(1,3))/(R(5,7)-x)", "7/15", "259/75"},
    {[](const Dual& x) { return (x+1)*(x+2)*(x+3)*(x+4); }, "(x+1)*(x+2)*(x+3)*(x+4)", "24", "50"},
    {[](const Dual& x) { return 1/(1+x) + 1/(2+x) + 1/(3+x); }, "1/(1+x) + 1/(2+x) + 1/(3+x)", "11/6", "-49/36"},
    {[](const Dual& x) { return (x*x + 2*x + 5)/(x*x*x - 7); }, "(x*x + 2*x + 5)/(x*x*x - 7)", "-5/7", "-2/7"},
    {[](const Dual& x) { return (R(1,2)+x)*(R(1,2)+x)/(R(3,4)+x); }, "(R(1,2)+x)*(R(1,2)+x)/(R(3,4)+x)", "1/3", "8/9"},
    {[](const Dual& x) { return ((1+x)/(1-x))*((2+x)/(2-x)); }, "((1+x)/(1-x))*((2+x)/(2-x))", "1", "3"},
    {[](const Dual& x) { return 1/(1/(1+x) + 1/(1-2*x)); }, "1/(1/(1+x) + 1/(1-2*x))", "1/2", "-1/4"},
    {[](const Dual& x) { return x/(1+x); }, "x/(1+x)", "0", "1"},
    {[](const Dual& x) { return (3-x)*(3-x)*(3-x); }, "(3-x)*(3-x)*(3-x)", "27", "-27"},
    {[](const Dual& x) { return (R(2,3)*x - R(5,2))/(R(7,3)+R(4,5)*x); }, "(R(2,3)*x - R(5,2))/(R(7,3)+R(4,5)*x)", "-15/14", "32/49"},
    {[](const Dual& x) { return (1+x)*(1+x)/((2+x)*(3+x)) - R(1,6); }, "(1+x)*(1+x)/((2+x)*(3+x)) - R(1,6)", "0", "7/36"},
    {[](const Dual& x) { return 1/(R(1,10)+x) - 1/(R(1,10)-x); }, "1/(R(1,10)+x) - 1/(R(1,10)-x)", "0", "-200"},
    {[](const Dual& x) { return (x+5)/(x+5); }, "(x+5)/(x+5)", "1", "0"},
    {[](const Dual& x) { return ((x+2)*(x+2)*(x+2)*(x+2))/(16+x); }, "((x+2)*(x+2)*(x+2)*(x+2))/(16+x)", "1", "31/16"},
    {[](const Dual& x) { return (1 - x/(2+x))/(3 + x/(4+x)); }, "(1 - x/(2+x))/(3 + x/(4+x))", "1/3", "-7/36"},
    {[](const Dual& x) { return R(-7,3)*x*x + R(11,13)*x - 9; }, "R(-7,3)*x*x + R(11,13)*x - 9", "-9", "11/13"},
    {[](const Dual& x) { return ((x+R(1,3))*(x-R(1,3)))/((x+R(1,5))*(x-R(1,7))); }, "((x+R(1,3))*(x-R(1,3)))/((x+R(1,5))*(x-R(1,7)))", "35/9", "70/9"},
  };
  return entries;
}

TEST(D0Eval, RationalFunctionCorpus) {
  ASSERT_EQ(corpus().size(), 20u);
  for (const auto& e : corpus()) {
    const auto [v, d] = d0_eval(e.f);
    EXPECT_EQ(v, Rational::parse(e.value)) << e.text;
    EXPECT_EQ(d, Rational::parse(e.deriv)) << e.text;
  }
}

TEST(CheckedDiv, NamesContext) {
  try {
    checked_div(Rational(1), Rational(0), "my context");
    FAIL();
  } catch (const DivisionByZero& e) {
    EXPECT_NE(std::string(e.what()).find("my context"), std::string::npos);
  }
}

}  // namespace
}  // namespace hnid

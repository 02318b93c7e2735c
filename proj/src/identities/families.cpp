#include <algorithm>
#include <utility>

#include "hnid/combinatorics.hpp"
#include "hnid/errors.hpp"
#include "hnid/identities.hpp"
#include "identities/domain.hpp"

namespace hnid {

namespace {

using i64 = std::int64_t;

i64 par(const Params& p, const char* name) { return p.at(name); }

Rational sg(i64 e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

// binom(c + xc * x, m)
template <Scalar S>
S B(i64 c, i64 xc, const S& x, i64 m) {
  return binomial_gen(S(Rational(c)) + x * S(Rational(xc)), m);
}

// binom(c, m) for an integer top, lifted to S.
template <Scalar S>
S Bi(i64 c, i64 m) {
  return S(binomial_int(c, m));
}

template <class Lhs, class Rhs>
BinomialFamily make_family(std::string id, Citation citation, std::vector<std::string> names,
                           GridBounds grid, std::string derived, Lhs lhs, Rhs rhs) {
  BinomialFamily f;
  f.id = std::move(id);
  f.citation = std::move(citation);
  f.param_names = std::move(names);
  f.grid = grid;
  f.derived_theorem = std::move(derived);
  f.lhs_summand_q = [lhs](const Rational& x, i64 n, i64 k, const Params& p) { return lhs(x, n, k, p); };
  f.lhs_summand_d = [lhs](const Dual& x, i64 n, i64 k, const Params& p) { return lhs(x, n, k, p); };
  f.rhs_q = [rhs](const Rational& x, i64 n, const Params& p) { return rhs(x, n, p); };
  f.rhs_d = [rhs](const Dual& x, i64 n, const Params& p) { return rhs(x, n, p); };
  return f;
}

template <class Fn>
auto sum_to(i64 n, Fn&& term) {
  auto s = term(0);
  for (i64 l = 1; l <= n; ++l) s += term(l);
  return s;
}

// Pfaff-Saalschutz in binomial form. The selector (lp, mp, vp) puts x on
// exactly one of lambda, mu, nu.
BinomialFamily saalschutz_family(std::string id, i64 lp, i64 mp, i64 vp, std::string theorem) {
  auto lhs = [=](const auto& x, i64 n, i64 k, const Params& p) {
    using S = std::decay_t<decltype(x)>;
    const i64 l = par(p, "lambda"), m = par(p, "mu"), v = par(p, "nu");
    const S num = Bi<S>(n, k) * B(k + l * n, lp, x, k) * B(n + m * n, mp, x, k);
    const S den = B(k + v * n, vp, x, k) * B(k + (l - m - v - 2) * n, lp - mp - vp, x, k);
    return checked_div(num, den, "Saalschutz family summand");
  };
  auto rhs = [=](const auto& x, i64 n, const Params& p) {
    using S = std::decay_t<decltype(x)>;
    const i64 l = par(p, "lambda"), m = par(p, "mu"), v = par(p, "nu");
    const S num = B((l - v) * n, lp - vp, x, n) * B((m + v + 2) * n, mp + vp, x, n);
    const S den = B(n + v * n, vp, x, n) * B((l - m - v - 1) * n, lp - mp - vp, x, n);
    return checked_div(num, den, "Saalschutz family right side");
  };
  BinomialFamily f = make_family(std::move(id), {}, {"lambda", "mu", "nu"}, {3, 8},
                                 std::move(theorem), lhs, rhs);
  f.constraints.push_back({"lambda > 1 + mu + nu", [](const Params& p, i64) {
                             return par(p, "lambda") > 1 + par(p, "mu") + par(p, "nu");
                           }});
  return f;
}

// (x + n - 2k) binom(n,k) binom(x+n,k) / binom(k-x,k), the very-well-poised
// core shared by the Dougall-Dixon and Whipple families.
template <Scalar S>
S well_poised_core(const S& x, i64 n, i64 k) {
  return (S(Rational(n - 2 * k)) + x) * Bi<S>(n, k) * B(n, 1, x, k) *
         inverse_binomial(S(Rational(k)) - x, k);
}

// Per-parameter factor: binom(k+qn,k)/binom(n+qn+x,k) for a parameter
// replaced by 1+qn, binom(n+qn,k)/binom(k+qn-x,k) for one replaced by -n-qn.
template <Scalar S>
S parameter_factor(const S& x, i64 n, i64 k, i64 q, bool negative) {
  if (negative) {
    return checked_div(Bi<S>(n + q * n, k), B(k + q * n, -1, x, k), "family summand");
  }
  return checked_div(Bi<S>(k + q * n, k), B(n + q * n, 1, x, k), "family summand");
}

template <Scalar S>
S well_poised_lhs(const S& x, i64 n, i64 k, const Params& p,
                  const std::vector<std::pair<const char*, bool>>& slots) {
  S t = well_poised_core(x, n, k);
  for (const auto& [name, negative] : slots) t *= parameter_factor(x, n, k, par(p, name), negative);
  return t;
}

// x binom(x+n,n) binom(1+x+bn+dn+n,n) / (binom(x+bn+n,n) binom(x+dn+n,n))
template <Scalar S>
S rising_prefactor(const S& x, i64 n, i64 b, i64 d) {
  return checked_div(x * B(n, 1, x, n) * B(1 + b * n + d * n + n, 1, x, n),
                     B(b * n + n, 1, x, n) * B(d * n + n, 1, x, n), "family prefactor");
}

std::vector<BinomialFamily> build_families() {
  std::vector<BinomialFamily> out;

  out.push_back(make_family(
      "chu", {}, {"lambda", "mu"}, {3, 8}, "thm1",
      [](const auto& x, i64 n, i64 k, const Params& p) {
        using S = std::decay_t<decltype(x)>;
        const i64 l = par(p, "lambda"), m = par(p, "mu");
        return Bi<S>(n + m * n, k) * B(l * n + n, 1, x, n - k);
      },
      [](const auto& x, i64 n, const Params& p) {
        const i64 l = par(p, "lambda"), m = par(p, "mu");
        return B(l * n + m * n + 2 * n, 1, x, n);
      }));
  out.back().citation = {"Theorem 1 parent", "Chu-Vandermonde-Gauss as a binomial convolution"};

  out.push_back(saalschutz_family("ps_lam", 1, 0, 0, "thm2"));
  out.back().citation = {"Theorem 2 parent", "Pfaff-Saalschutz, binomial form, x on lambda"};
  out.push_back(saalschutz_family("ps_mu", 0, 1, 0, "thm3"));
  out.back().citation = {"Theorem 3 parent", "Pfaff-Saalschutz, binomial form, x on mu"};
  out.push_back(saalschutz_family("ps_nu", 0, 0, 1, "thm4"));
  out.back().citation = {"Theorem 4 parent", "Pfaff-Saalschutz, binomial form, x on nu"};

  const std::vector<std::string> bd{"b", "d"};
  out.push_back(make_family(
      "dd_1", {"Theorem 5 parent", "Dougall-Dixon with b, d -> 1+bn, 1+dn"}, bd, {2, 8}, "thm5",
      [](const auto& x, i64 n, i64 k, const Params& p) {
        return well_poised_lhs(x, n, k, p, {{"b", false}, {"d", false}});
      },
      [](const auto& x, i64 n, const Params& p) {
        return rising_prefactor(x, n, par(p, "b"), par(p, "d"));
      }));
  out.push_back(make_family(
      "dd_2", {"Theorem 6 parent", "Dougall-Dixon with b -> 1+bn, d -> -n-dn"}, bd, {2, 8}, "thm6",
      [](const auto& x, i64 n, i64 k, const Params& p) {
        return well_poised_lhs(x, n, k, p, {{"b", false}, {"d", true}});
      },
      [](const auto& x, i64 n, const Params& p) {
        const i64 b = par(p, "b"), d = par(p, "d");
        return checked_div(x * sg(n) * B(n, 1, x, n) * B(b * n - d * n, 1, x, n),
                           B(n + b * n, 1, x, n) * B(n + d * n, -1, x, n), "dd_2 right side");
      }));
  out.push_back(make_family(
      "dd_3", {"Theorem 7 parent", "Dougall-Dixon with b, d -> -n-bn, -n-dn"}, bd, {2, 8}, "thm7",
      [](const auto& x, i64 n, i64 k, const Params& p) {
        return well_poised_lhs(x, n, k, p, {{"b", true}, {"d", true}});
      },
      [](const auto& x, i64 n, const Params& p) {
        const i64 b = par(p, "b"), d = par(p, "d");
        return checked_div(x * sg(n) * B(n, 1, x, n) * B(2 * n + b * n + d * n, -1, x, n),
                           B(n + b * n, -1, x, n) * B(n + d * n, -1, x, n), "dd_3 right side");
      }));

  const std::vector<std::string> bcde{"b", "c", "d", "e"};
  out.push_back(make_family(
      "wh_1", {"Theorem 8 parent", "Whipple with b, c, d, e -> 1+bn, 1+cn, 1+dn, 1+en"}, bcde,
      {2, 6}, "thm8",
      [](const auto& x, i64 n, i64 k, const Params& p) {
        return well_poised_lhs(x, n, k, p, {{"b", false}, {"c", false}, {"d", false}, {"e", false}});
      },
      [](const auto& x, i64 n, const Params& p) {
        using S = std::decay_t<decltype(x)>;
        const i64 b = par(p, "b"), c = par(p, "c"), d = par(p, "d"), e = par(p, "e");
        return rising_prefactor(x, n, b, d) * sum_to(n, [&](i64 l) {
                 return checked_div(Bi<S>(n, l) * Bi<S>(l + b * n, l) * Bi<S>(l + d * n, l) *
                                        B(1 + c * n + e * n + n, 1, x, l),
                                    B(c * n + n, 1, x, l) * B(e * n + n, 1, x, l) *
                                        B(1 + b * n + d * n + l, 1, x, l),
                                    "wh_1 right summand");
               });
      }));
  out.push_back(make_family(
      "wh_2", {"Theorem 9 parent", "Whipple with b, c, d -> 1+bn, 1+cn, 1+dn, e -> -n-en"}, bcde,
      {2, 6}, "thm9",
      [](const auto& x, i64 n, i64 k, const Params& p) {
        return well_poised_lhs(x, n, k, p, {{"b", false}, {"c", false}, {"d", false}, {"e", true}});
      },
      [](const auto& x, i64 n, const Params& p) {
        using S = std::decay_t<decltype(x)>;
        const i64 b = par(p, "b"), c = par(p, "c"), d = par(p, "d"), e = par(p, "e");
        return rising_prefactor(x, n, b, d) * sum_to(n, [&](i64 l) {
                 return checked_div(S(sg(l)) * Bi<S>(n, l) * Bi<S>(l + b * n, l) *
                                        Bi<S>(l + d * n, l) * B(c * n - e * n, 1, x, l),
                                    B(n + c * n, 1, x, l) * B(l + e * n, -1, x, l) *
                                        B(1 + b * n + d * n + l, 1, x, l),
                                    "wh_2 right summand");
               });
      }));
  out.push_back(make_family(
      "wh_3", {"Theorem 10 parent", "Whipple with b, d -> 1+bn, 1+dn, c, e -> -n-cn, -n-en"},
      bcde, {2, 6}, "thm10",
      [](const auto& x, i64 n, i64 k, const Params& p) {
        return well_poised_lhs(x, n, k, p, {{"b", false}, {"c", true}, {"d", false}, {"e", true}});
      },
      [](const auto& x, i64 n, const Params& p) {
        using S = std::decay_t<decltype(x)>;
        const i64 b = par(p, "b"), c = par(p, "c"), d = par(p, "d"), e = par(p, "e");
        return rising_prefactor(x, n, b, d) * sum_to(n, [&](i64 l) {
                 return checked_div(S(sg(l)) * Bi<S>(n, l) * Bi<S>(l + b * n, l) *
                                        Bi<S>(l + d * n, l) * B(l + n + c * n + e * n, -1, x, l),
                                    B(l + c * n, -1, x, l) * B(l + e * n, -1, x, l) *
                                        B(1 + b * n + d * n + l, 1, x, l),
                                    "wh_3 right summand");
               });
      }));
  out.push_back(make_family(
      "wh_4", {"Theorem 11 parent", "Whipple with b -> 1+bn, c, d, e -> -n-cn, -n-dn, -n-en"},
      bcde, {2, 6}, "thm11",
      [](const auto& x, i64 n, i64 k, const Params& p) {
        return well_poised_lhs(x, n, k, p, {{"b", false}, {"c", true}, {"d", true}, {"e", true}});
      },
      [](const auto& x, i64 n, const Params& p) {
        using S = std::decay_t<decltype(x)>;
        const i64 b = par(p, "b"), c = par(p, "c"), d = par(p, "d"), e = par(p, "e");
        const S pre = checked_div(x * sg(n) * B(n, 1, x, n),
                                  B(n + b * n, 1, x, n) * B(n + d * n, -1, x, n),
                                  "wh_4 prefactor");
        // binom(x+bn-dn, n) / binom(x+bn-dn-n+l, l) in cancelled form.
        const S z = S(Rational(b * n - d * n)) + x;
        return pre * sum_to(n, [&](i64 l) {
                 return checked_div(shifted_binomial_ratio(z, n, l) * Bi<S>(n, l) *
                                        Bi<S>(l + b * n, l) * Bi<S>(n + d * n, l) *
                                        B(l + n + c * n + e * n, -1, x, l),
                                    B(l + c * n, -1, x, l) * B(l + e * n, -1, x, l),
                                    "wh_4 right summand");
               });
      }));
  out.push_back(make_family(
      "wh_5", {"Theorem 12 parent", "Whipple with b, c, d, e -> -n-bn, -n-cn, -n-dn, -n-en"},
      bcde, {2, 6}, "thm12",
      [](const auto& x, i64 n, i64 k, const Params& p) {
        return well_poised_lhs(x, n, k, p, {{"b", true}, {"c", true}, {"d", true}, {"e", true}});
      },
      [](const auto& x, i64 n, const Params& p) {
        using S = std::decay_t<decltype(x)>;
        const i64 b = par(p, "b"), c = par(p, "c"), d = par(p, "d"), e = par(p, "e");
        const S pre = checked_div(x * sg(n) * B(n, 1, x, n) * B(2 * n + b * n + d * n, -1, x, n),
                                  B(n + b * n, -1, x, n) * B(n + d * n, -1, x, n),
                                  "wh_5 prefactor");
        return pre * sum_to(n, [&](i64 l) {
                 return checked_div(Bi<S>(n, l) * Bi<S>(n + b * n, l) * Bi<S>(n + d * n, l) *
                                        B(l + n + c * n + e * n, -1, x, l),
                                    B(l + c * n, -1, x, l) * B(l + e * n, -1, x, l) *
                                        B(2 * n + b * n + d * n, -1, x, l),
                                    "wh_5 right summand");
               });
      }));
  return out;
}

}  // namespace

std::optional<std::string> BinomialFamily::violated(const Params& params, i64 n) const {
  return detail::first_violation(param_names, constraints, params, n);
}

template <Scalar S>
FamilySides<S> BinomialFamily::evaluate(const S& x, i64 n, const Params& params) const {
  if constexpr (std::same_as<S, Rational>) {
    return {sum_to(n, [&](i64 k) { return lhs_summand_q(x, n, k, params); }), rhs_q(x, n, params)};
  } else {
    return {sum_to(n, [&](i64 k) { return lhs_summand_d(x, n, k, params); }), rhs_d(x, n, params)};
  }
}

template FamilySides<Rational> BinomialFamily::evaluate(const Rational&, i64, const Params&) const;
template FamilySides<Dual> BinomialFamily::evaluate(const Dual&, i64, const Params&) const;

const std::vector<BinomialFamily>& families() {
  static const std::vector<BinomialFamily> all = build_families();
  return all;
}

const BinomialFamily& lookup_family(std::string_view id) {
  const auto& all = families();
  auto it = std::find_if(all.begin(), all.end(), [&](const auto& f) { return f.id == id; });
  if (it == all.end()) throw NotFound("no binomial family with id '" + std::string(id) + "'");
  return *it;
}

namespace {

const BinomialFamily& checked_family(std::string_view id, const Params& params, i64 n) {
  const BinomialFamily& f = lookup_family(id);
  if (auto v = f.violated(params, n)) {
    throw ConstraintViolation(*v, f.id + " at n=" + std::to_string(n) + " (" +
                                      format_params(params) + ") violates " + *v);
  }
  return f;
}

template <Scalar S>
FamilyCheck<S> check_family(std::string_view id, const Params& params, i64 n, const S& x) {
  const auto sides = checked_family(id, params, n).evaluate(x, n, params);
  return {sides.lhs, sides.rhs, sides.lhs == sides.rhs};
}

}  // namespace

FamilyCheck<Rational> check_binomial_family(std::string_view id, const Params& params, i64 n,
                                            const Rational& x) {
  return check_family(id, params, n, x);
}

FamilyCheck<Dual> check_binomial_family(std::string_view id, const Params& params, i64 n,
                                        const Dual& x) {
  return check_family(id, params, n, x);
}

DerivationResult derive_via_d0(std::string_view family_id, const Params& params, i64 n) {
  const auto c = check_family(family_id, params, n, Dual::variable());
  return {c.lhs, c.rhs, c.lhs.value() == c.rhs.value(), c.lhs.deriv() == c.rhs.deriv()};
}

}  // namespace hnid

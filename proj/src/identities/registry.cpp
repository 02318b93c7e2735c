#include <algorithm>
#include <sstream>
#include <utility>

#include "hnid/combinatorics.hpp"
#include "hnid/errors.hpp"
#include "hnid/identities.hpp"
#include "identities/domain.hpp"

namespace hnid {

namespace {

using i64 = std::int64_t;
using Summand = IdentityRecord::Summand;
using Closed = IdentityRecord::Closed;

Rational bn(i64 top, i64 k) { return binomial_int(top, k); }
Rational H(i64 m) { return harmonic(m); }
Rational sg(i64 e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

Rational pw(const Rational& r, int e) {
  Rational out(1);
  for (int i = 0; i < e; ++i) out *= r;
  return out;
}

i64 par(const Params& p, const char* name) { return p.at(name); }

Constraint n_greater(i64 bound) {
  return {"n > " + std::to_string(bound),
          [bound](const Params&, i64 n) { return n > bound; }};
}

Constraint saalschutz_domain() {
  return {"lambda > 1 + mu + nu", [](const Params& p, i64) {
            return par(p, "lambda") > 1 + par(p, "mu") + par(p, "nu");
          }};
}

// ---------------------------------------------------------------------------
// Theorems

IdentityRecord theorem(int number, std::string source, std::vector<std::string> names,
                       GridBounds grid, Summand lhs, Closed rhs) {
  IdentityRecord r;
  r.id = "thm" + std::to_string(number);
  r.kind = RecordKind::kTheorem;
  r.citation = {"Theorem " + std::to_string(number), std::move(source)};
  r.param_names = std::move(names);
  r.grid = grid;
  r.lhs_summand = std::move(lhs);
  r.rhs_closed = std::move(rhs);
  return r;
}

// Shared factors of the three Pfaff-Saalschutz theorems.
struct SaalschutzParts {
  i64 l, m, v, t;
  Rational summand(i64 n, i64 k) const {
    return bn(n, k) * bn(l * n + k, k) * bn(m * n + n, k) /
           (bn(v * n + k, k) * bn(t * n + k, k));
  }
  Rational prefactor(i64 n) const {
    // binom((lambda - mu - nu - 1) n, n) in the denominator
    return bn((l - v) * n, n) * bn((m + v + 2) * n, n) /
           (bn(v * n + n, n) * bn((l - m - v - 1) * n, n));
  }
};

SaalschutzParts saalschutz_parts(const Params& p) {
  const i64 l = par(p, "lambda"), m = par(p, "mu"), v = par(p, "nu");
  return {l, m, v, l - m - v - 2};
}

// Dougall-Dixon / Whipple left-hand summands share one shape:
//   binom(n,k)^2 prod_p R_p(k) { 1 + (n - 2k)(2 H_k + sum_p s_p H_{pn+k}) }
// where R_p is binom(k+pn,k)/binom(n+pn,k) for a parameter replaced by 1+pn
// and binom(n+pn,k)/binom(k+pn,k) for one replaced by -n-pn.
enum class Shape { kRising, kFalling };

struct WellPoisedTerm {
  std::vector<const char*> names;
  std::vector<Shape> shapes;

  Rational operator()(i64 n, i64 k, const Params& p) const {
    Rational ratio = pw(bn(n, k), 2);
    Rational bracket = 2 * H(k);
    for (std::size_t i = 0; i < names.size(); ++i) {
      const i64 q = par(p, names[i]);
      if (shapes[i] == Shape::kRising) {
        ratio *= bn(k + q * n, k) / bn(n + q * n, k);
        bracket -= H(q * n + k);
      } else {
        ratio *= bn(n + q * n, k) / bn(k + q * n, k);
        bracket += H(q * n + k);
      }
    }
    return ratio * (1 + Rational(n - 2 * k) * bracket);
  }
};

// binom(1+bn+dn+n, n) / (binom(n+bn, n) binom(n+dn, n))
Rational rising_rising_prefactor(i64 n, i64 b, i64 d) {
  return bn(1 + b * n + d * n + n, n) / (bn(n + b * n, n) * bn(n + d * n, n));
}

std::vector<IdentityRecord> theorems() {
  std::vector<IdentityRecord> out;
  const GridBounds lmn{3, 8};
  const GridBounds bd{2, 8};
  const GridBounds bcde_grid{2, 6};

  out.push_back(theorem(
      1, "Chu-Vandermonde-Gauss with a -> -n-mu n, c -> 1+lambda n+x", {"lambda", "mu"}, lmn,
      [](i64 n, i64 k, const Params& p) {
        const i64 l = par(p, "lambda"), m = par(p, "mu");
        return bn(n + m * n, k) * bn(n + l * n, n - k) * H(l * n + k);
      },
      [](i64 n, const Params& p) {
        const i64 l = par(p, "lambda"), m = par(p, "mu");
        return bn(2 * n + l * n + m * n, n) *
               (H(l * n + n) + H(l * n + m * n + n) - H(l * n + m * n + 2 * n));
      }));

  const std::vector<std::string> lmn_names{"lambda", "mu", "nu"};
  out.push_back(theorem(
      2, "Pfaff-Saalschutz, D0 on the lambda' branch", lmn_names, lmn,
      [](i64 n, i64 k, const Params& p) {
        const auto s = saalschutz_parts(p);
        return s.summand(n, k) * (H(s.l * n + k) - H(s.t * n + k));
      },
      [](i64 n, const Params& p) {
        const auto s = saalschutz_parts(p);
        return s.prefactor(n) * (H((s.l - s.v) * n) - H((s.l - s.v - 1) * n) + H(s.l * n) -
                                 H((s.l - s.m - s.v - 1) * n));
      }));
  out.push_back(theorem(
      3, "Pfaff-Saalschutz, D0 on the mu' branch", lmn_names, lmn,
      [](i64 n, i64 k, const Params& p) {
        const auto s = saalschutz_parts(p);
        return s.summand(n, k) * (H(s.m * n + n - k) - H(s.t * n + k));
      },
      [](i64 n, const Params& p) {
        const auto s = saalschutz_parts(p);
        return s.prefactor(n) * (H((s.m + s.v + 1) * n) - H((s.m + s.v + 2) * n) +
                                 H(s.m * n + n) - H((s.l - s.m - s.v - 1) * n));
      }));
  out.push_back(theorem(
      4, "Pfaff-Saalschutz, D0 on the nu' branch", lmn_names, lmn,
      [](i64 n, i64 k, const Params& p) {
        const auto s = saalschutz_parts(p);
        return s.summand(n, k) * (H(s.v * n + k) - H(s.t * n + k));
      },
      [](i64 n, const Params& p) {
        const auto s = saalschutz_parts(p);
        return s.prefactor(n) *
               (H((s.m + s.v + 1) * n) - H((s.m + s.v + 2) * n) + H((s.l - s.v) * n) -
                H((s.l - s.v - 1) * n) + H(s.v * n + n) - H((s.l - s.m - s.v - 1) * n));
      }));
  for (int i = 1; i <= 3; ++i) out[i].constraints.push_back(saalschutz_domain());

  const std::vector<std::string> bd_names{"b", "d"};
  out.push_back(theorem(
      5, "Dougall-Dixon with a -> -n-x, b -> 1+bn, d -> 1+dn", bd_names, bd,
      WellPoisedTerm{{"b", "d"}, {Shape::kRising, Shape::kRising}},
      [](i64 n, const Params& p) { return rising_rising_prefactor(n, par(p, "b"), par(p, "d")); }));
  out.push_back(theorem(
      6, "Dougall-Dixon with a -> -n-x, b -> 1+bn, d -> -n-dn", bd_names, bd,
      WellPoisedTerm{{"b", "d"}, {Shape::kRising, Shape::kFalling}},
      [](i64 n, const Params& p) {
        const i64 b = par(p, "b"), d = par(p, "d");
        return sg(n) * bn(b * n - d * n, n) / (bn(n + b * n, n) * bn(n + d * n, n));
      }));
  out.push_back(theorem(
      7, "Dougall-Dixon with a -> -n-x, b -> -n-bn, d -> -n-dn", bd_names, bd,
      WellPoisedTerm{{"b", "d"}, {Shape::kFalling, Shape::kFalling}},
      [](i64 n, const Params& p) {
        const i64 b = par(p, "b"), d = par(p, "d");
        return sg(n) * bn(2 * n + b * n + d * n, n) / (bn(n + b * n, n) * bn(n + d * n, n));
      }));

  const std::vector<std::string> bcde_names{"b", "c", "d", "e"};
  const std::vector<const char*> bcde{"b", "c", "d", "e"};
  using enum Shape;
  auto sum_l = [](i64 n, auto&& term) {
    Rational s;
    for (i64 l = 0; l <= n; ++l) s += term(l);
    return s;
  };

  out.push_back(theorem(
      8, "Whipple with b, c, d, e -> 1+bn, 1+cn, 1+dn, 1+en", bcde_names, bcde_grid,
      WellPoisedTerm{bcde, {kRising, kRising, kRising, kRising}},
      [sum_l](i64 n, const Params& p) {
        const i64 b = par(p, "b"), c = par(p, "c"), d = par(p, "d"), e = par(p, "e");
        return rising_rising_prefactor(n, b, d) * sum_l(n, [&](i64 l) {
                 return bn(n, l) * bn(l + b * n, l) * bn(l + d * n, l) *
                        bn(1 + c * n + e * n + n, l) /
                        (bn(n + c * n, l) * bn(n + e * n, l) * bn(1 + b * n + d * n + l, l));
               });
      }));
  out.push_back(theorem(
      9, "Whipple with b, c, d -> 1+bn, 1+cn, 1+dn and e -> -n-en", bcde_names, bcde_grid,
      WellPoisedTerm{bcde, {kRising, kRising, kRising, kFalling}},
      [sum_l](i64 n, const Params& p) {
        const i64 b = par(p, "b"), c = par(p, "c"), d = par(p, "d"), e = par(p, "e");
        return rising_rising_prefactor(n, b, d) * sum_l(n, [&](i64 l) {
                 return sg(l) * bn(n, l) * bn(l + b * n, l) * bn(l + d * n, l) *
                        bn(c * n - e * n, l) /
                        (bn(n + c * n, l) * bn(l + e * n, l) * bn(1 + b * n + d * n + l, l));
               });
      }));
  out.push_back(theorem(
      10, "Whipple with b, d -> 1+bn, 1+dn and c, e -> -n-cn, -n-en", bcde_names, bcde_grid,
      WellPoisedTerm{bcde, {kRising, kFalling, kRising, kFalling}},
      [sum_l](i64 n, const Params& p) {
        const i64 b = par(p, "b"), c = par(p, "c"), d = par(p, "d"), e = par(p, "e");
        return rising_rising_prefactor(n, b, d) * sum_l(n, [&](i64 l) {
                 return sg(l) * bn(n, l) * bn(l + b * n, l) * bn(l + d * n, l) *
                        bn(n + c * n + e * n + l, l) /
                        (bn(l + c * n, l) * bn(l + e * n, l) * bn(1 + b * n + d * n + l, l));
               });
      }));
  out.push_back(theorem(
      11, "Whipple with b -> 1+bn and c, d, e -> -n-cn, -n-dn, -n-en", bcde_names, bcde_grid,
      WellPoisedTerm{bcde, {kRising, kFalling, kFalling, kFalling}},
      [sum_l](i64 n, const Params& p) {
        const i64 b = par(p, "b"), c = par(p, "c"), d = par(p, "d"), e = par(p, "e");
        // binom(bn-dn, n) / binom(l+bn-dn-n, l) taken in cancelled form: when
        // b == d both binomials vanish at l = n.
        return sg(n) / (bn(n + b * n, n) * bn(n + d * n, n)) * sum_l(n, [&](i64 l) {
                 return shifted_binomial_ratio(Rational(b * n - d * n), n, l) * bn(n, l) *
                        bn(l + b * n, l) * bn(n + d * n, l) * bn(l + c * n + e * n + n, l) /
                        (bn(l + c * n, l) * bn(l + e * n, l));
               });
      }));
  out.push_back(theorem(
      12, "Whipple with b, c, d, e -> -n-bn, -n-cn, -n-dn, -n-en", bcde_names, bcde_grid,
      WellPoisedTerm{bcde, {kFalling, kFalling, kFalling, kFalling}},
      [sum_l](i64 n, const Params& p) {
        const i64 b = par(p, "b"), c = par(p, "c"), d = par(p, "d"), e = par(p, "e");
        return sg(n) * bn(2 * n + b * n + d * n, n) / (bn(n + b * n, n) * bn(n + d * n, n)) *
               sum_l(n, [&](i64 l) {
                 return bn(n, l) * bn(n + b * n, l) * bn(n + d * n, l) *
                        bn(n + c * n + e * n + l, l) /
                        (bn(l + c * n, l) * bn(l + e * n, l) * bn(2 * n + b * n + d * n, l));
               });
      }));
  return out;
}

// ---------------------------------------------------------------------------
// Table I: sum_k A(n,k) = C(n)

IdentityRecord table1(int entry, std::string source, Summand a,
                      std::function<Rational(i64)> c,
                      std::optional<Constraint> n_constraint = std::nullopt) {
  IdentityRecord r;
  r.id = "t1e" + std::to_string(entry);
  r.kind = RecordKind::kTableI;
  r.citation = {"Table I, Entry " + std::to_string(entry), std::move(source)};
  r.grid = {0, 8};
  r.lhs_summand = std::move(a);
  r.rhs_closed = [c = std::move(c)](i64 n, const Params&) { return c(n); };
  if (n_constraint) r.constraints.push_back(std::move(*n_constraint));
  return r;
}

std::vector<IdentityRecord> table_one() {
  std::vector<IdentityRecord> t;
  t.push_back(table1(
      1, "Thm 2: lambda=2, mu=nu=0",
      [](i64 n, i64 k, const Params&) { return pw(bn(n, k), 2) * bn(2 * n + k, k) * (H(2 * n + k) - H(k)); },
      [](i64 n) { return 2 * pw(bn(2 * n, n), 2) * (H(2 * n) - H(n)); }));
  t.push_back(table1(
      2, "Thm 3: lambda=2, mu=nu=0",
      [](i64 n, i64 k, const Params&) { return pw(bn(n, k), 2) * bn(2 * n + k, k) * (H(k) - H(n - k)); },
      [](i64 n) { return pw(bn(2 * n, n), 2) * (H(2 * n) - H(n)); }));
  t.push_back(table1(
      3, "Thm 2: lambda=3, mu=1 and nu=0",
      [](i64 n, i64 k, const Params&) {
        return bn(n, k) * bn(2 * n, k) * bn(3 * n + k, k) * (H(3 * n + k) - H(k));
      },
      [](i64 n) { return pw(bn(3 * n, n), 2) * (2 * H(3 * n) - H(n) - H(2 * n)); }));
  t.push_back(table1(
      4, "Thm 3: lambda=3, mu=1 and nu=0",
      [](i64 n, i64 k, const Params&) {
        return bn(n, k) * bn(2 * n, k) * bn(3 * n + k, k) * (H(2 * n - k) - H(k));
      },
      [](i64 n) { return pw(bn(3 * n, n), 2) * (2 * H(2 * n) - H(n) - H(3 * n)); }));

  // Entries 5-7 as printed: the summand is binom(3n,n) times the Theorem 2-4
  // specialization, so sum != C(n) for n >= 1. Kept verbatim and flagged.
  const std::string disputed_567 =
      "A(n,k) as printed is binom(3n,n) times the lambda=3, mu=0, nu=1 theorem summand; "
      "the sum equals binom(3n,n) * C(n)";
  t.push_back(table1(
      5, "Thm 2: lambda=3, mu=0 and nu=1",
      [](i64 n, i64 k, const Params&) { return pw(bn(n, k), 2) * bn(3 * n + k, 2 * n) * (H(3 * n + k) - H(k)); },
      [](i64 n) { return bn(3 * n, n) * (H(2 * n) + H(3 * n) - 2 * H(n)); }));
  t.back().disputed = disputed_567;
  t.back().amended_rhs = [](i64 n, const Params&) {
    return pw(bn(3 * n, n), 2) * (H(2 * n) + H(3 * n) - 2 * H(n));
  };
  t.push_back(table1(
      6, "Thm 3: lambda=3, mu=0 and nu=1",
      [](i64 n, i64 k, const Params&) { return pw(bn(n, k), 2) * bn(3 * n + k, 2 * n) * (H(k) - H(n - k)); },
      [](i64 n) { return bn(3 * n, n) * (H(3 * n) - H(2 * n)); }));
  t.back().disputed = disputed_567;
  t.back().amended_rhs = [](i64 n, const Params&) {
    return pw(bn(3 * n, n), 2) * (H(3 * n) - H(2 * n));
  };
  t.push_back(table1(
      7, "Thm 4: lambda=3, mu=0 and nu=1",
      [](i64 n, i64 k, const Params&) { return pw(bn(n, k), 2) * bn(3 * n + k, 2 * n) * (H(n + k) - H(k)); },
      [](i64 n) { return bn(3 * n, n) * (3 * H(2 * n) - 2 * H(n) - H(3 * n)); }));
  t.back().disputed = disputed_567;
  t.back().amended_rhs = [](i64 n, const Params&) {
    return pw(bn(3 * n, n), 2) * (3 * H(2 * n) - 2 * H(n) - H(3 * n));
  };

  t.push_back(table1(
      8, "Thm 5: b=0, d -> inf; cf. Paule-Schneider Eq 1",
      [](i64 n, i64 k, const Params&) { return bn(n, k) * (1 + Rational(n - 2 * k) * H(k)); },
      [](i64) { return Rational(1); }));
  t.push_back(table1(
      9, "Thm 5: b, d -> inf; cf. Paule-Schneider Eq 2",
      [](i64 n, i64 k, const Params&) { return pw(bn(n, k), 2) * (1 + 2 * Rational(n - 2 * k) * H(k)); },
      [](i64) { return Rational(0); }));
  // The n = 0 sum is binom(0,0)^2 = 1.
  t.back().disputed = "holds for n >= 1 only; at n = 0 the sum is 1";
  t.back().amended_rhs = [](i64 n, const Params&) { return Rational(n == 0 ? 1 : 0); };
  t.push_back(table1(
      10, "Thm 5: b=0 & d=1",
      [](i64 n, i64 k, const Params&) {
        return bn(n + k, k) * bn(2 * n - k, n) * (1 + Rational(n - 2 * k) * (H(k) - H(n + k)));
      },
      [](i64 n) { return bn(1 + 2 * n, n); }));
  t.push_back(table1(
      11, "Thm 5: b=d=1",
      [](i64 n, i64 k, const Params&) {
        return pw(bn(n + k, k), 2) * pw(bn(2 * n - k, n), 2) *
               (1 + 2 * Rational(n - 2 * k) * (H(k) - H(n + k)));
      },
      [](i64 n) { return bn(1 + 3 * n, n); }));
  t.push_back(table1(
      12, "Thm 6: b=0 & d=1",
      [](i64 n, i64 k, const Params&) {
        return bn(2 * n, k) * bn(2 * n, n + k) * (1 + Rational(n - 2 * k) * (H(k) + H(n + k)));
      },
      [](i64 n) { return bn(2 * n - 1, n); }));
  t.push_back(table1(
      13, "Thm 6: b -> inf & d=1",
      [](i64 n, i64 k, const Params&) {
        return bn(n, k) * bn(2 * n, k) * bn(2 * n, n + k) *
               (1 + Rational(n - 2 * k) * (2 * H(k) + H(n + k)));
      },
      [](i64 n) { return sg(n); }));
  t.push_back(table1(
      14, "Thm 6: b=1 & d -> inf",
      [](i64 n, i64 k, const Params&) {
        return bn(n, k) * bn(n + k, n) * bn(2 * n - k, n) *
               (1 + Rational(n - 2 * k) * (2 * H(k) - H(n + k)));
      },
      [](i64) { return Rational(1); }));
  t.push_back(table1(
      15, "Thm 6: b=1 & d=0",
      [](i64 n, i64 k, const Params&) {
        return pw(bn(n, k), 2) * bn(n + k, n) * bn(2 * n - k, n) *
               (1 + Rational(n - 2 * k) * (3 * H(k) - H(n + k)));
      },
      [](i64 n) { return sg(n); }));
  t.push_back(table1(
      16, "Thm 7: b=0, d -> inf; cf. Paule-Schneider Eq 3",
      [](i64 n, i64 k, const Params&) { return pw(bn(n, k), 3) * (1 + 3 * Rational(n - 2 * k) * H(k)); },
      [](i64 n) { return sg(n); }));
  t.push_back(table1(
      17, "Thm 7: b=d=0; cf. Paule-Schneider Eq 4",
      [](i64 n, i64 k, const Params&) { return pw(bn(n, k), 4) * (1 + 4 * Rational(n - 2 * k) * H(k)); },
      [](i64 n) { return sg(n) * bn(2 * n, n); }));
  t.push_back(table1(
      18, "Thm 7: b=0 & d=1",
      [](i64 n, i64 k, const Params&) {
        return pw(bn(n, k), 2) * bn(2 * n, k) * bn(2 * n, n + k) *
               (1 + Rational(n - 2 * k) * (3 * H(k) + H(n + k)));
      },
      [](i64 n) { return sg(n) * bn(3 * n, n); }));
  t.push_back(table1(
      19, "Thm 7: b=d=1",
      [](i64 n, i64 k, const Params&) {
        return pw(bn(2 * n, k), 2) * pw(bn(2 * n, n + k), 2) *
               (1 + 2 * Rational(n - 2 * k) * (H(k) + H(n + k)));
      },
      [](i64 n) { return sg(n) * bn(4 * n, n); }));
  t.push_back(table1(
      20, "Thm 8: e -> inf, b=c=d=0",
      [](i64 n, i64 k, const Params&) { return (1 - Rational(n - 2 * k) * H(k)) / bn(n, k); },
      [](i64 n) { return (1 + n) * H(n + 1); }));
  t.push_back(table1(
      21, "Thm 8: b=c=d=e=0",
      [](i64 n, i64 k, const Params&) { return (1 - 2 * Rational(n - 2 * k) * H(k)) / pw(bn(n, k), 2); },
      [](i64 n) { return 2 * rat((1 + n) * (1 + n), 2 + n) * H(n + 1); }));
  t.push_back(table1(
      22, "Thm 8: e=1, b=c=d=0",
      [](i64 n, i64 k, const Params&) {
        return (1 - Rational(n - 2 * k) * (H(k) + H(n + k))) / (bn(2 * n, k) * bn(2 * n, n + k));
      },
      [](i64 n) { return rat(1 + 2 * n, 2 + 2 * n) + (n + rat(1, 2)) * H(1 + 2 * n); }));
  // The Theorem 8 specialization has summand binom(2n,n) A(n,k): the printed
  // A(n,k) sums to C(n) / binom(2n,n).
  t.back().disputed = "A(n,k) as printed is the e=1, b=c=d=0 theorem summand divided by binom(2n,n)";
  t.back().amended_rhs = [](i64 n, const Params&) {
    return (rat(1 + 2 * n, 2 + 2 * n) + (n + rat(1, 2)) * H(1 + 2 * n)) / bn(2 * n, n);
  };
  t.push_back(table1(
      23, "Thm 8: b=d=0, c=1 & e -> inf",
      [](i64 n, i64 k, const Params&) {
        return bn(n + k, k) / bn(2 * n, k) * (1 - Rational(n - 2 * k) * H(n + k));
      },
      [](i64 n) { return (1 + 2 * n) * (H(1 + 2 * n) - H(n)); }));
  t.push_back(table1(
      24, "Thm 8: b=d=0, c=e=1",
      [](i64 n, i64 k, const Params&) {
        return pw(bn(n + k, k), 2) / pw(bn(2 * n, k), 2) * (1 - 2 * Rational(n - 2 * k) * H(n + k));
      },
      [](i64 n) { return 2 * rat((1 + 2 * n) * (1 + 2 * n), 2 + 3 * n) * (H(1 + 2 * n) - H(n)); }));
  t.push_back(table1(
      25, "Thm 9: n>1, b=c=d=0 & e=1",
      [](i64 n, i64 k, const Params&) {
        return bn(2 * n, k) / (bn(n, k) * bn(n + k, k)) *
               (1 - Rational(n - 2 * k) * (H(k) - H(n + k)));
      },
      [](i64 n) { return rat(n * (n + 1), n - 1) * (H(n + 1) + H(n - 1) - H(2 * n)); },
      n_greater(1)));
  t.push_back(table1(
      26, "Thm 10: n>0, b=d=0 & c=e=1",
      [](i64 n, i64 k, const Params&) {
        return pw(bn(2 * n, k), 2) / pw(bn(n + k, k), 2) * (1 + 2 * Rational(n - 2 * k) * H(n + k));
      },
      [](i64 n) { return rat(2 * n, 3) * (H(2 * n) - H(n - 1)); },
      n_greater(0)));
  return t;
}

// ---------------------------------------------------------------------------
// Table II: sum_k A(n,k) = sum_l B(n,l)

IdentityRecord table2(int entry, std::string source, Summand a, Summand b,
                      std::optional<Constraint> n_constraint = std::nullopt) {
  IdentityRecord r;
  r.id = "t2e" + std::to_string(entry);
  r.kind = RecordKind::kTableII;
  r.citation = {"Table II, Entry " + std::to_string(entry), std::move(source)};
  r.grid = {0, 6};
  r.lhs_summand = std::move(a);
  r.rhs_term = std::move(b);
  if (n_constraint) r.constraints.push_back(std::move(*n_constraint));
  return r;
}

// binom(1+3n, n) / binom(2n, n)^2
Rational dixon_prefactor(i64 n) { return bn(1 + 3 * n, n) / pw(bn(2 * n, n), 2); }

Rational entry4_summand(i64 n, i64 k) {
  return pw(bn(n, k), 3) * pw(bn(n + k, k), 2) / pw(bn(2 * n, k), 2) *
         (1 + Rational(n - 2 * k) * (3 * H(k) - 2 * H(n + k)));
}

Rational entry4_rhs_term(i64 n, i64 l) {
  return dixon_prefactor(n) * sg(l) * bn(n, l) * pw(bn(n + l, l), 2) / bn(1 + 2 * n + l, l);
}

std::vector<IdentityRecord> table_two() {
  std::vector<IdentityRecord> t;
  t.push_back(table2(
      1, "Thm 8: e=0, b=c=d=1",
      [](i64 n, i64 k, const Params&) {
        return bn(n, k) * pw(bn(n + k, k), 3) / pw(bn(2 * n, k), 3) *
               (1 + Rational(n - 2 * k) * (H(k) - 3 * H(n + k)));
      },
      [](i64 n, i64 l, const Params&) {
        return dixon_prefactor(n) * rat(1 + 2 * n, 1 + 2 * n - l) * pw(bn(n + l, l), 2) /
               bn(1 + 2 * n + l, l);
      }));
  t.push_back(table2(
      2, "Thm 8: b=c=d=e=1",
      [](i64 n, i64 k, const Params&) {
        return pw(bn(n, k), 2) * pw(bn(n + k, k), 4) / pw(bn(2 * n, k), 4) *
               (1 + 2 * Rational(n - 2 * k) * (H(k) - 2 * H(n + k)));
      },
      [](i64 n, i64 l, const Params&) {
        return dixon_prefactor(n) * bn(n, l) * pw(bn(n + l, l), 2) * bn(1 + 3 * n, l) /
               (pw(bn(2 * n, l), 2) * bn(1 + 2 * n + l, l));
      }));
  t.push_back(table2(
      3, "Thm 9: b=d=1, c=0 & e -> inf",
      [](i64 n, i64 k, const Params&) {
        return bn(n, k) * pw(bn(n + k, k), 2) / pw(bn(2 * n, k), 2) *
               (1 + Rational(n - 2 * k) * (H(k) - 2 * H(n + k)));
      },
      [](i64 n, i64 l, const Params&) {
        return dixon_prefactor(n) * pw(bn(n + l, l), 2) / bn(1 + 2 * n + l, l);
      }));
  t.push_back(table2(
      4, "Thm 9: b=d=1, c -> inf & e=0",
      [](i64 n, i64 k, const Params&) { return entry4_summand(n, k); },
      [](i64 n, i64 l, const Params&) { return entry4_rhs_term(n, l); }));
  t.push_back(table2(
      5, "Thm 9: e -> inf, b=c=d=1",
      [](i64 n, i64 k, const Params&) {
        return pw(bn(n, k), 2) * pw(bn(n + k, k), 3) / pw(bn(2 * n, k), 3) *
               (1 + Rational(n - 2 * k) * (2 * H(k) - 3 * H(n + k)));
      },
      [](i64 n, i64 l, const Params&) {
        return dixon_prefactor(n) * bn(n, l) * pw(bn(n + l, l), 2) /
               (bn(2 * n, l) * bn(1 + 2 * n + l, l));
      }));
  t.push_back(table2(
      6, "Thm 9: e=0, b=c=d=1",
      [](i64 n, i64 k, const Params&) {
        return pw(bn(n, k), 3) * pw(bn(n + k, k), 3) / pw(bn(2 * n, k), 3) *
               (1 + 3 * Rational(n - 2 * k) * (H(k) - H(n + k)));
      },
      [](i64 n, i64 l, const Params&) {
        return dixon_prefactor(n) * sg(l) * pw(bn(n, l), 2) * pw(bn(n + l, l), 2) /
               (bn(2 * n, l) * bn(1 + 2 * n + l, l));
      }));
  t.push_back(table2(
      7, "Thm 10: b=0, c=e=1 & d -> inf",
      [](i64 n, i64 k, const Params&) {
        return bn(n, k) * pw(bn(2 * n, k), 2) / pw(bn(n + k, k), 2) *
               (1 + Rational(n - 2 * k) * (H(k) + 2 * H(n + k)));
      },
      [](i64 n, i64 l, const Params&) {
        return sg(l) * bn(n, l) * bn(3 * n + l, l) / pw(bn(n + l, l), 2);
      }));
  t.push_back(table2(
      8, "Thm 10: b=1, c=e=0 & d -> inf",
      [](i64 n, i64 k, const Params&) {
        return pw(bn(n, k), 4) * bn(n + k, k) / bn(2 * n, k) *
               (1 + Rational(n - 2 * k) * (4 * H(k) - H(n + k)));
      },
      [](i64 n, i64 l, const Params&) {
        return sg(l) * bn(n, l) * pw(bn(n + l, l), 2) / bn(2 * n, n);
      }));
  // Printed identically to Entry 4, with a different derivation.
  t.push_back(table2(
      9, "Thm 10: b=d=1, c=0 & e -> inf",
      [](i64 n, i64 k, const Params&) { return entry4_summand(n, k); },
      [](i64 n, i64 l, const Params&) { return entry4_rhs_term(n, l); }));
  t.push_back(table2(
      10, "Thm 10: b=d=1, c=e=0",
      [](i64 n, i64 k, const Params&) {
        return pw(bn(n, k), 4) * pw(bn(n + k, k), 2) / pw(bn(2 * n, k), 2) *
               (1 + 2 * Rational(n - 2 * k) * (2 * H(k) - H(n + k)));
      },
      [](i64 n, i64 l, const Params&) {
        return dixon_prefactor(n) * sg(l) * bn(n, l) * pw(bn(n + l, l), 3) / bn(1 + 2 * n + l, l);
      }));
  t.push_back(table2(
      11, "Thm 11: b -> inf, d=1 & c=e=0",
      [](i64 n, i64 k, const Params&) {
        return pw(bn(n, k), 4) * bn(2 * n, k) / bn(n + k, k) *
               (1 + Rational(n - 2 * k) * (4 * H(k) + H(n + k)));
      },
      [](i64 n, i64 l, const Params&) {
        return sg(n) * pw(bn(n, l), 2) * bn(2 * n + l, l) / bn(n + l, l);
      }));
  t.push_back(table2(
      12, "Thm 11: b=1, c=d=e=0",
      [](i64 n, i64 k, const Params&) {
        return pw(bn(n, k), 5) * bn(n + k, k) / bn(2 * n, k) *
               (1 + Rational(n - 2 * k) * (5 * H(k) - H(n + k)));
      },
      [](i64 n, i64 l, const Params&) {
        return sg(n) / bn(2 * n, n) * pw(bn(n, l), 2) * pw(bn(n + l, l), 2);
      }));
  t.push_back(table2(
      13, "Thm 11: b -> inf, d=0 & c=e=1",
      [](i64 n, i64 k, const Params&) {
        return pw(bn(n, k), 3) * pw(bn(2 * n, k), 2) / pw(bn(n + k, k), 2) *
               (1 + Rational(n - 2 * k) * (3 * H(k) + 2 * H(n + k)));
      },
      [](i64 n, i64 l, const Params&) {
        return sg(n) * pw(bn(n, l), 2) * bn(3 * n + l, l) / pw(bn(n + l, l), 2);
      }));
  t.push_back(table2(
      14, "Thm 11: n>0, b=0 & c=d=e=1",
      [](i64 n, i64 k, const Params&) {
        return bn(n, k) * pw(bn(2 * n, k), 3) / pw(bn(n + k, k), 3) *
               (1 + Rational(n - 2 * k) * (H(k) + 3 * H(n + k)));
      },
      [](i64 n, i64 l, const Params&) {
        return Rational(n) * sg(l) * bn(n, l) * bn(3 * n + l, l) /
               (Rational(2 * n - l) * pw(bn(n + l, l), 2));
      },
      n_greater(0)));
  t.push_back(table2(
      15, "Thm 11: b -> inf, c=d=e=1",
      [](i64 n, i64 k, const Params&) {
        return pw(bn(n, k), 2) * pw(bn(2 * n, k), 3) / pw(bn(n + k, k), 3) *
               (1 + Rational(n - 2 * k) * (2 * H(k) + 3 * H(n + k)));
      },
      [](i64 n, i64 l, const Params&) {
        return sg(n) / bn(2 * n, n) * bn(n, l) * bn(2 * n, l) * bn(3 * n + l, l) /
               pw(bn(n + l, l), 2);
      }));
  t.push_back(table2(
      16, "Thm 12: b=c=d=0, e -> inf; cf. Paule-Schneider Eq 5",
      [](i64 n, i64 k, const Params&) { return pw(bn(n, k), 5) * (1 + 5 * Rational(n - 2 * k) * H(k)); },
      [](i64 n, i64 l, const Params&) { return sg(n) * pw(bn(n, l), 2) * bn(n + l, n); }));
  t.push_back(table2(
      17, "Thm 12: b=c=d=e=0",
      [](i64 n, i64 k, const Params&) { return pw(bn(n, k), 6) * (1 + 6 * Rational(n - 2 * k) * H(k)); },
      [](i64 n, i64 l, const Params&) {
        return sg(n) * pw(bn(n, l), 2) * bn(n + l, n) * bn(2 * n - l, n);
      }));
  t.push_back(table2(
      18, "Thm 12: e=1, b=c=d=0",
      [](i64 n, i64 k, const Params&) {
        return pw(bn(n, k), 5) * bn(2 * n, k) / bn(n + k, k) *
               (1 + Rational(n - 2 * k) * (5 * H(k) + H(n + k)));
      },
      [](i64 n, i64 l, const Params&) {
        return sg(n) * bn(2 * n, n) * pw(bn(n, l), 3) * bn(2 * n + l, l) /
               (bn(n + l, l) * bn(2 * n, l));
      }));
  t.push_back(table2(
      19, "Thm 12: b=d=0, c=e=1",
      [](i64 n, i64 k, const Params&) {
        return pw(bn(n, k), 4) * pw(bn(2 * n, k), 2) / pw(bn(n + k, k), 2) *
               (1 + 2 * Rational(n - 2 * k) * (2 * H(k) + H(n + k)));
      },
      [](i64 n, i64 l, const Params&) {
        return sg(n) * bn(2 * n, n) * pw(bn(n, l), 3) * bn(3 * n + l, l) /
               (pw(bn(n + l, l), 2) * bn(2 * n, l));
      }));
  t.push_back(table2(
      20, "Thm 12: b=0, c=d=e=1",
      [](i64 n, i64 k, const Params&) {
        return pw(bn(n, k), 3) * pw(bn(2 * n, k), 3) / pw(bn(n + k, k), 3) *
               (1 + 3 * Rational(n - 2 * k) * (H(k) + H(n + k)));
      },
      [](i64 n, i64 l, const Params&) {
        return sg(n) * bn(3 * n, n) / bn(2 * n, n) * pw(bn(n, l), 2) * bn(2 * n, l) *
               bn(3 * n + l, l) / (pw(bn(n + l, l), 2) * bn(3 * n, l));
      }));
  t.push_back(table2(
      21, "Thm 12: b=c=d=e=1",
      [](i64 n, i64 k, const Params&) {
        return pw(bn(n, k), 2) * pw(bn(2 * n, k), 4) / pw(bn(n + k, k), 4) *
               (1 + 2 * Rational(n - 2 * k) * (H(k) + 2 * H(n + k)));
      },
      [](i64 n, i64 l, const Params&) {
        return sg(n) * bn(4 * n, n) / pw(bn(2 * n, n), 2) * bn(n, l) * pw(bn(2 * n, l), 2) *
               bn(3 * n + l, l) / (bn(4 * n, l) * pw(bn(n + l, l), 2));
      }));
  return t;
}

// ---------------------------------------------------------------------------
// Auxiliary specializations

std::vector<IdentityRecord> auxiliary() {
  std::vector<IdentityRecord> out;

  IdentityRecord w;
  w.id = "wench";
  w.kind = RecordKind::kAuxiliary;
  w.citation = {"Theorem 1 at mu=0", "special case mu=0 of Theorem 1"};
  w.param_names = {"lambda"};
  w.grid = {3, 8};
  w.lhs_summand = [](i64 n, i64 k, const Params& p) {
    const i64 l = par(p, "lambda");
    return bn(n, k) * bn(n + l * n, n - k) * H(l * n + k);
  };
  w.rhs_closed = [](i64 n, const Params& p) {
    const i64 l = par(p, "lambda");
    return bn(2 * n + l * n, n) * (2 * H(l * n + n) - H(l * n + 2 * n));
  };
  out.push_back(std::move(w));

  IdentityRecord w0;
  w0.id = "wench_lambda0";
  w0.kind = RecordKind::kAuxiliary;
  w0.citation = {"Theorem 1 at lambda=mu=0", "special case lambda=0 of the mu=0 identity"};
  w0.grid = {0, 8};
  w0.lhs_summand = [](i64 n, i64 k, const Params&) { return pw(bn(n, k), 2) * H(k); };
  w0.rhs_closed = [](i64 n, const Params&) { return bn(2 * n, n) * (2 * H(n) - H(2 * n)); };
  out.push_back(std::move(w0));

  IdentityRecord e4;
  e4.id = "entry4_closed";
  e4.kind = RecordKind::kAuxiliary;
  e4.citation = {"Table II, Entry 4 (closed form)", "right side summed by Dixon's formula"};
  e4.grid = {0, 8};
  e4.lhs_summand = [](i64 n, i64 k, const Params&) { return entry4_summand(n, k); };
  e4.rhs_closed = [](i64 n, const Params&) { return entry4_closed(n); };
  out.push_back(std::move(e4));
  return out;
}

std::vector<IdentityRecord> build_registry() {
  std::vector<IdentityRecord> all = theorems();
  for (auto* part : {&table_one, &table_two, &auxiliary}) {
    auto more = (*part)();
    std::move(more.begin(), more.end(), std::back_inserter(all));
  }
  return all;
}

}  // namespace

std::string format_params(const Params& params) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, value] : params) {
    if (!first) os << ",";
    os << name << "=" << value;
    first = false;
  }
  return os.str();
}

std::string_view to_string(RecordKind kind) {
  switch (kind) {
    case RecordKind::kTheorem: return "theorem";
    case RecordKind::kTableI: return "table1";
    case RecordKind::kTableII: return "table2";
    case RecordKind::kAuxiliary: return "auxiliary";
  }
  return "unknown";
}

std::optional<std::string> IdentityRecord::violated(const Params& params, i64 n) const {
  return detail::first_violation(param_names, constraints, params, n);
}

Rational IdentityRecord::lhs(i64 n, const Params& params) const {
  Rational s;
  for (i64 k = 0; k <= n; ++k) s += lhs_summand(n, k, params);
  return s;
}

Rational IdentityRecord::rhs(i64 n, const Params& params) const {
  if (rhs_closed) return rhs_closed(n, params);
  Rational s;
  for (i64 l = 0; l <= n; ++l) s += rhs_term(n, l, params);
  return s;
}

const std::vector<IdentityRecord>& registry() {
  static const std::vector<IdentityRecord> records = build_registry();
  return records;
}

const IdentityRecord& lookup(std::string_view id) {
  const auto& all = registry();
  auto it = std::find_if(all.begin(), all.end(), [&](const auto& r) { return r.id == id; });
  if (it == all.end()) throw NotFound("no identity record with id '" + std::string(id) + "'");
  return *it;
}

namespace {

const IdentityRecord& checked_record(std::string_view id, const Params& params, i64 n) {
  const IdentityRecord& r = lookup(id);
  if (auto v = r.violated(params, n)) {
    throw ConstraintViolation(*v, r.id + " at n=" + std::to_string(n) + " (" +
                                      format_params(params) + ") violates " + *v);
  }
  return r;
}

}  // namespace

CheckResult check_identity(std::string_view id, const Params& params, i64 n) {
  const IdentityRecord& r = checked_record(id, params, n);
  CheckResult out{r.lhs(n, params), r.rhs(n, params), false};
  out.equal = out.lhs == out.rhs;
  return out;
}

CheckResult check_identity_amended(std::string_view id, const Params& params, i64 n) {
  const IdentityRecord& r = checked_record(id, params, n);
  if (!r.amended_rhs) throw DomainError(r.id + " is not disputed");
  CheckResult out{r.lhs(n, params), r.amended_rhs(n, params), false};
  out.equal = out.lhs == out.rhs;
  return out;
}

const std::vector<ManifestEntry>& manifest() {
  static const std::vector<ManifestEntry> entries = [] {
    std::vector<ManifestEntry> m;
    for (const auto& r : registry()) m.push_back({r.citation.location, r.id});
    return m;
  }();
  return entries;
}

}  // namespace hnid

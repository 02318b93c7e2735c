#pragma once

// Executable registry of the harmonic-number identities: the twelve theorems,
// the 26 closed forms of Table I, the 21 transformations of Table II, a few
// auxiliary specializations, and the ten binomial families the theorems are
// obtained from by differentiating at x = 0.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hnid/exactnum.hpp"
#include "hnid/hyperseries.hpp"

namespace hnid {

// Named nonnegative integer parameters, ordered by name.
using Params = std::map<std::string, std::int64_t>;

std::string format_params(const Params& params);

enum class RecordKind { kTheorem, kTableI, kTableII, kAuxiliary };

std::string_view to_string(RecordKind kind);

struct Citation {
  std::string location;  // e.g. "Table I, Entry 9"
  std::string source;    // provenance note, e.g. "Thm 5: b, d -> inf; cf. Paule-Schneider Eq 2"
};

struct Constraint {
  std::string name;
  std::function<bool(const Params&, std::int64_t n)> holds;
};

// Default verification grid of a record or family: every parameter ranges
// over 0..param_max and n over 0..n_max.
struct GridBounds {
  std::int64_t param_max = 0;
  std::int64_t n_max = 8;
};

struct IdentityRecord {
  using Summand = std::function<Rational(std::int64_t n, std::int64_t k, const Params&)>;
  using Closed = std::function<Rational(std::int64_t n, const Params&)>;

  std::string id;
  RecordKind kind = RecordKind::kTheorem;
  Citation citation;
  std::vector<std::string> param_names;
  std::vector<Constraint> constraints;
  GridBounds grid;
  Summand lhs_summand;
  // Exactly one of rhs_closed / rhs_term is set. rhs_term is the summand
  // B(n, l) of a transformation, summed over l = 0..n.
  Closed rhs_closed;
  Summand rhs_term;
  // Set when the printed identity does not hold; the record keeps the printed
  // form and carries the proposed amendment separately.
  std::optional<std::string> disputed;
  Closed amended_rhs;

  // Name of the first violated constraint (parameter presence and
  // nonnegativity included), or nullopt when (params, n) is in domain.
  std::optional<std::string> violated(const Params& params, std::int64_t n) const;

  Rational lhs(std::int64_t n, const Params& params) const;
  Rational rhs(std::int64_t n, const Params& params) const;
};

const std::vector<IdentityRecord>& registry();

// Throws NotFound for unknown ids.
const IdentityRecord& lookup(std::string_view id);

struct CheckResult {
  Rational lhs;
  Rational rhs;
  bool equal = false;
};

// Exact LHS and RHS of a record. Throws ConstraintViolation, naming the
// constraint, before evaluating anything out of domain.
CheckResult check_identity(std::string_view id, const Params& params, std::int64_t n);

// Same as check_identity but against the amended right-hand side of a
// disputed record. Throws DomainError when the record is not disputed.
CheckResult check_identity_amended(std::string_view id, const Params& params, std::int64_t n);

// One row of the source-location -> record-id manifest.
struct ManifestEntry {
  std::string location;
  std::string id;
};

// Every theorem and table entry, in source order.
const std::vector<ManifestEntry>& manifest();

// ---------------------------------------------------------------------------
// Binomial families

template <Scalar S>
struct FamilySides {
  S lhs;
  S rhs;
};

struct BinomialFamily {
  template <Scalar S>
  using Summand = std::function<S(const S& x, std::int64_t n, std::int64_t k, const Params&)>;
  template <Scalar S>
  using Closed = std::function<S(const S& x, std::int64_t n, const Params&)>;

  std::string id;
  Citation citation;
  std::vector<std::string> param_names;
  std::vector<Constraint> constraints;
  GridBounds grid;
  std::string derived_theorem;

  Summand<Rational> lhs_summand_q;
  Summand<Dual> lhs_summand_d;
  Closed<Rational> rhs_q;
  Closed<Dual> rhs_d;

  std::optional<std::string> violated(const Params& params, std::int64_t n) const;

  template <Scalar S>
  FamilySides<S> evaluate(const S& x, std::int64_t n, const Params& params) const;
};

const std::vector<BinomialFamily>& families();
const BinomialFamily& lookup_family(std::string_view id);

template <Scalar S>
struct FamilyCheck {
  S lhs;
  S rhs;
  bool equal = false;
};

// Both sides of a family at a rational or dual point x.
FamilyCheck<Rational> check_binomial_family(std::string_view id, const Params& params,
                                            std::int64_t n, const Rational& x);
FamilyCheck<Dual> check_binomial_family(std::string_view id, const Params& params,
                                        std::int64_t n, const Dual& x);

struct DerivationResult {
  Dual lhs;
  Dual rhs;
  bool value_match = false;  // the parent hypergeometric identity at x = 0
  bool deriv_match = false;  // the harmonic identity obtained by D0
};

DerivationResult derive_via_d0(std::string_view family_id, const Params& params, std::int64_t n);

// ---------------------------------------------------------------------------
// Xi / Omega

// sum_k binom(n,k)^lambda (1 + lambda (n - 2k) H_k), lambda >= 1.
Rational xi(std::int64_t lambda, std::int64_t n);

// (1+lambda)F(lambda) with upper -x-n, 1-(x+n)/2, (-n) x (lambda-1), lower
// -(x+n)/2, (1-x) x (lambda-1) and argument (-1)^lambda, summed to k = n.
// The well-poised pair is carried as the factor (a + 2k)/a, a = -x-n.
template <Scalar S>
HypergeometricSpec<S> omega_series(std::int64_t lambda, std::int64_t n, const S& x) {
  if (lambda < 1) throw DomainError("omega: lambda must be positive");
  if (n < 0) throw DomainError("omega: n must be nonnegative");
  HypergeometricSpec<S> spec;
  const S a = -x - Rational(n);
  spec.upper.push_back(a);
  for (std::int64_t i = 1; i < lambda; ++i) {
    spec.upper.push_back(S(-n));
    spec.lower.push_back(S(1) - x);
  }
  spec.argument = S(lambda % 2 == 0 ? 1 : -1);
  spec.truncate_at = n;
  spec.well_poised = a;
  return spec;
}

// Same series with the pair 1 + a/2 over a/2 entered as ordinary parameters.
// Only usable where (a/2)_k does not vanish, i.e. away from even n at x = 0.
template <Scalar S>
HypergeometricSpec<S> omega_series_literal(std::int64_t lambda, std::int64_t n, const S& x) {
  HypergeometricSpec<S> spec = omega_series(lambda, n, x);
  const S a = spec.upper.front();
  spec.well_poised.reset();
  spec.upper.insert(spec.upper.begin() + 1, S(1) + a * rat(1, 2));
  spec.lower.insert(spec.lower.begin(), a * rat(1, 2));
  return spec;
}

template <Scalar S>
S omega(std::int64_t lambda, std::int64_t n, const S& x) {
  return eval_pfq(omega_series(lambda, n, x));
}

// D0 { (x + n) Omega_lambda(n, x) }.
Rational xi_via_omega(std::int64_t lambda, std::int64_t n);

// Closed value of the Table II Entry 4 sum: 0 for odd n and
// (-1)^m (3m)!/(m!)^3 / binom(4m, 2m)^2 for n = 2m.
Rational entry4_closed(std::int64_t n);

}  // namespace hnid

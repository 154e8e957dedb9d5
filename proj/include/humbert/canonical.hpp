#pragma once

// Curves with a Z2 reduced automorphism group: normalization to (λ, 1/λ),
// the degree-two quotient Q, the value ρ_λ = Q(1) = ((λ-1)/(λ+1))², the
// subgroup Ū of the anharmonic group that permutes the conjugates of ρ, a
// rational point r compatible with Ū, and the certificate bundling them.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "humbert/humgroup.hpp"
#include "humbert/moebius.hpp"
#include "humbert/polyring.hpp"
#include "humbert/symmetry.hpp"

namespace humbert {

// ---------------------------------------------------------------------------
// The anharmonic group {x, 1/x, 1-x, x/(x-1), 1/(1-x), (x-1)/x}

struct AnharmonicMap {
  std::string_view name;
  MobiusMap<Rat> map;
};

/// Indices: 0 id, 1 T1 = 1/x, 2 T2 = 1-x, 3 T3 = x/(x-1), 4 L = 1/(1-x), 5 L².
const std::array<AnharmonicMap, 6>& anharmonic_group();
RatFunc1 as_ratfunc(const MobiusMap<Rat>& m);

enum class UTag { Trivial, Z2_T1, Z2_T2, Z2_T3, Z3, S3 };
std::string_view u_tag_name(UTag t);

struct SubgroupU {
  std::vector<std::size_t> members;     // sorted indices into anharmonic_group()
  std::vector<std::size_t> generators;
  UTag tag = UTag::Trivial;
};

/// NotASubgroup unless `members` is one of the six subgroups.
SubgroupU subgroup_from_members(std::vector<std::size_t> members);

// ---------------------------------------------------------------------------
// Normalization, Q and ρ

template <Field S>
struct NormalizedPair {
  S lambda;
  std::size_t witness;  // index into HumbertGroup; witness(p) = (λ, 1/λ)
};

/// The orbit element (λ, 1/λ) with the canonically smallest λ, reached by the
/// shortest word. NoZ2Symmetry when the orbit has no such element.
template <Field S>
NormalizedPair<S> normalize_z2(const ParamPair<S>& p) {
  require_torelli(p);
  const HumbertGroup& g = HumbertGroup::instance();
  std::optional<NormalizedPair<S>> best;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const ParamPair<S> q = g[k](p);
    if (!(q.z * q.w == S(1))) continue;
    if (!best || canonical_compare(q.z, best->lambda) < 0) best = NormalizedPair<S>{q.z, k};
  }
  if (!best) fail(ErrorKind::NoZ2Symmetry, "no orbit element has the form (lambda, 1/lambda)");
  return *best;
}

template <Field S>
void require_admissible_lambda(const S& lambda) {
  if (lambda == S(-1)) fail(ErrorKind::DegenerateValue, "lambda = -1 is a pole of Q");
  if (lambda == S(0) || lambda == S(1)) fail(ErrorKind::DegenerateValue, "lambda must avoid 0 and 1");
}

template <Field S>
S rho(const S& lambda) {
  require_admissible_lambda(lambda);
  const S t = (lambda - S(1)) / (lambda + S(1));
  return t * t;
}

/// Q(z) = -λ/(1+λ)² (z + 1/z + 2) + 1 = -(λz - 1)(z - λ) / ((1+λ)² z),
/// evaluated projectively so Q(0) = Q(∞) = ∞.
template <Field S>
struct QMap {
  S lambda;

  ProjPoint<S> operator()(const ProjPoint<S>& p) const {
    const S& x = p.x();
    const S& y = p.y();
    const S num = S(0) - (lambda * x - y) * (x - lambda * y);
    const S s = S(1) + lambda;
    return ProjPoint<S>(num, s * s * x * y);
  }
};

template <Field S>
QMap<S> q_map(const S& lambda) {
  require_admissible_lambda(lambda);
  return QMap<S>{lambda};
}

/// Q as a rational function of z for rational λ.
RatFunc1 q_ratfunc(const Rat& lambda);
/// Q(z, λ) with λ as the second variable w.
RatFunc2 q_symbolic();

/// True iff ρ avoids {0, 1, -1, 1/2, 2} and the roots of x² - x + 1.
bool exclusion_check(const Rat& rho);
bool exclusion_check(const GaussRat& rho);
bool exclusion_check(const ApproxC& rho);

// ---------------------------------------------------------------------------
// Ū

using IntPoly = std::vector<mpz_class>;  // coefficient k multiplies x^k

/// Primitive minimal polynomial of an element of Q(i) over Q.
IntPoly minimal_polynomial(const GaussRat& x);
/// Square-free part of Res_λ(m(λ), (λ+1)² x - (λ-1)²): the minimal
/// polynomial of ρ_λ when m is irreducible.
IntPoly rho_polynomial(const IntPoly& lambda_minpoly);
/// {g : g(ρ) is a root of μ}, tested by exact divisibility μ | numerator(μ∘g).
SubgroupU compute_U(const IntPoly& rho_minpoly);
SubgroupU compute_U(const GaussRat& rho);

/// The root of m closest to `near`; AmbiguousRoot unless the runner-up is
/// more than twice as far.
ApproxC select_root(const IntPoly& m, const ApproxC& near);
ApproxC evaluate(const IntPoly& m, const ApproxC& x);
std::string poly_string(const IntPoly& m, std::string_view var);

// ---------------------------------------------------------------------------
// Rational points and identities

template <Field S>
struct RationalPoint {
  S r;
  std::optional<std::pair<int, int>> coefficients;  // (a0, a1) for Z3
};

namespace detail {

template <Field S>
bool avoids(const S& r, const S& rho) {
  return !(r == S(0) || r == S(1) || r == rho);
}

inline const std::vector<std::pair<int, int>>& z3_ladder() {
  static const std::vector<std::pair<int, int>> ladder{{1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}};
  return ladder;
}

}  // namespace detail

template <Field S>
RationalPoint<S> rational_point(const SubgroupU& u, const S& rho) {
  if (!exclusion_check(rho)) fail(ErrorKind::DegenerateValue, "rho lies in the exclusion set");
  switch (u.tag) {
    case UTag::Trivial:
      for (long n = 2;; ++n) {
        if (!(S(n) == rho)) return {S(n), std::nullopt};
      }
    case UTag::Z2_T1: return {S(-1), std::nullopt};
    case UTag::Z2_T2: return {S(1) / S(2), std::nullopt};
    case UTag::Z2_T3: return {S(2), std::nullopt};
    case UTag::Z3:
      for (const auto& [a0, a1] : detail::z3_ladder()) {
        const S den = S(a0 + a1) - S(a0) * rho;
        if (is_zero(den)) continue;
        const S r = (S(a0) + S(a1) * rho) / den;
        if (detail::avoids(r, rho)) return {r, std::pair{a0, a1}};
      }
      fail(ErrorKind::DegenerateValue, "no admissible (a0, a1) on the fallback ladder");
    case UTag::S3: {
      const S den = S(1) - S(2) * rho;
      if (is_zero(den)) fail(ErrorKind::DegenerateValue, "1 - 2 rho vanishes");
      const S r = rho * (rho - S(2)) / den;
      if (!detail::avoids(r, rho)) fail(ErrorKind::DegenerateValue, "S3 point collides with {0, 1, rho}");
      return {r, std::nullopt};
    }
  }
  fail(ErrorKind::InternalError, "unknown subgroup tag");
}

struct IdentityVerdict {
  std::string name;
  bool pass = false;
  std::string lhs;
  std::string rhs;
};

/// r∘g = g∘r for each generator g of u, as exact identities in the variable
/// rho (constants: g(r) = r). For Z3 the formula is checked with symbolic
/// (a0, a1) and, when given, with the chosen coefficients.
std::vector<IdentityVerdict> verify_equivariance(const SubgroupU& u,
                                                 std::optional<std::pair<int, int>> coefficients = std::nullopt);

/// Symbolic properties of Q with λ as a variable: Q(z) = Q(1/z) and the
/// values at ∞, 0, λ, 1/λ, 1, -1.
std::vector<IdentityVerdict> q_identities_symbolic();

template <Field S>
std::vector<IdentityVerdict> q_identities(const S& lambda, const S& rho_value) {
  using P = ProjPoint<S>;
  const QMap<S> q = q_map(lambda);
  const std::vector<std::pair<std::string, std::pair<P, P>>> table{
      {"Q(inf) = inf", {P::infinity(), P::infinity()}},
      {"Q(0) = inf", {P(S(0)), P::infinity()}},
      {"Q(lambda) = 0", {P(lambda), P(S(0))}},
      {"Q(1/lambda) = 0", {P(S(1) / lambda), P(S(0))}},
      {"Q(1) = rho", {P(S(1)), P(rho_value)}},
      {"Q(-1) = 1", {P(S(-1)), P(S(1))}},
  };
  auto show = [](const P& p) { return p.is_infinity() ? std::string("inf") : to_string(p.value()); };
  std::vector<IdentityVerdict> out;
  for (const auto& [name, io] : table) {
    const P image = q(io.first);
    out.push_back({name, image == io.second, show(image), show(io.second)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Certificates

enum class Branch { Z2, Quasiplatonic, TrivialSymmetry };
std::string_view branch_name(Branch b);
std::string conclusion_text(Branch b);

template <Field S>
struct Certificate {
  Branch branch = Branch::TrivialSymmetry;
  IsoType symmetry = IsoType::Trivial;
  std::optional<NormalizedPair<S>> normalized;
  std::optional<S> rho;
  std::optional<IntPoly> rho_minpoly;
  std::optional<SubgroupU> u;
  std::optional<RationalPoint<S>> r;
  std::vector<IdentityVerdict> identities;
  std::string conclusion;

  bool all_pass() const {
    return std::all_of(identities.begin(), identities.end(), [](const auto& v) { return v.pass; });
  }
};

namespace detail {

template <Field S>
void finish_z2(Certificate<S>& c, const S& lambda, const S& rho_value, SubgroupU u) {
  if (!exclusion_check(rho_value)) fail(ErrorKind::InternalError, "Z2 configuration with rho in the exclusion set");
  c.rho = rho_value;
  c.r = rational_point(u, rho_value);
  c.identities = q_identities(lambda, rho_value);
  for (auto& v : q_identities_symbolic()) c.identities.push_back(std::move(v));
  for (auto& v : verify_equivariance(u, c.r->coefficients)) c.identities.push_back(std::move(v));
  c.u = std::move(u);
}

template <Field S>
Certificate<S> start_certificate(const ParamPair<S>& p) {
  Certificate<S> c;
  c.symmetry = symmetry_group(p).type;
  if (c.symmetry == IsoType::Anomaly) fail(ErrorKind::InternalError, "symmetry group outside the classification");
  c.branch = c.symmetry == IsoType::Trivial ? Branch::TrivialSymmetry
                                            : (c.symmetry == IsoType::Z2 ? Branch::Z2 : Branch::Quasiplatonic);
  c.conclusion = conclusion_text(c.branch);
  return c;
}

}  // namespace detail

/// Exact regime: ρ lies in Q(i), so its minimal polynomial is explicit.
Certificate<GaussRat> certificate(const ParamPair<GaussRat>& p);
/// Approximate regime without algebraic data: Ū cannot be decided, so the
/// Z2 branch needs `lambda_minpoly`.
Certificate<ApproxC> certificate(const ParamPair<ApproxC>& p);
/// λ given as the root of `lambda_minpoly` nearest `near`; the pair is (λ, 1/λ).
Certificate<ApproxC> certificate_algebraic(const IntPoly& lambda_minpoly, const ApproxC& near);

}  // namespace humbert

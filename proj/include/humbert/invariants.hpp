#pragma once

// The invariant map j = Σ_{T∈𝔾} (T₁⁴, T₂²), its comparison against the
// shipped fixture polynomials, and evaluation at parameter pairs.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "humbert/humgroup.hpp"
#include "humbert/polyring.hpp"

namespace humbert {

struct InvariantMap {
  RatFunc2 j1;
  RatFunc2 j2;
};

/// Sum by pairwise rounds, so partial sums stay balanced in degree.
RatFunc2 tree_sum(std::vector<RatFunc2> terms);

/// Computes the symbolic sum over the group (no caching).
InvariantMap build_invariants();
/// The cached result of build_invariants.
const InvariantMap& invariant_map();

// ---------------------------------------------------------------------------
// Fixtures

/// Parses a polynomial expression over z, w: integers, + - * ^, parentheses
/// and implicit multiplication by juxtaposition, e.g. `(z-1)^4 z^4 (z-w)^4`.
Poly2 parse_poly(std::string_view text);

/// A fixture file: a header line with the polynomial's name, then either
/// `i j coefficient` lines or one expression. FixtureError on any problem.
Poly2 read_fixture(const std::filesystem::path& file, std::string_view name);

struct Fixtures {
  Poly2 p1, r1, p2, r2;
};

/// Loads P1.txt, R1.txt, P2.txt and R2.txt from `dir`.
Fixtures load_fixtures(const std::filesystem::path& dir);
std::filesystem::path default_fixture_dir();

enum class Verdict { ExactMatch, Proportional, Mismatch };
std::string_view verdict_name(Verdict v);

struct PolyComparison {
  std::string name;
  Verdict verdict = Verdict::Mismatch;
  Rat scale;                              // computed = scale · fixture when not a mismatch
  std::optional<Monomial> first_difference;  // mismatches only
};

/// `computed` against `fixture`, after scaling by the ratio of leading
/// coefficients; the first differing monomial in graded-lex order is named.
PolyComparison compare_poly(std::string name, const Poly2& computed, const Poly2& fixture);

/// Numerators against P1/P2 and denominators against R1/R2.
std::vector<PolyComparison> compare_with_fixtures(const InvariantMap& m, const Fixtures& f);

// ---------------------------------------------------------------------------
// Values

template <Field S>
struct ModuliInvariants {
  S j1;
  S j2;

  std::string field_description() const { return "Q(" + to_string(j1) + ", " + to_string(j2) + ")"; }
};

template <Field S>
ModuliInvariants<S> moduli_field(const ParamPair<S>& p) {
  require_torelli(p);
  const InvariantMap& m = invariant_map();
  return {evaluate(m.j1, p.z, p.w), evaluate(m.j2, p.z, p.w)};
}

template <Field S>
bool equivalent_via_j(const ParamPair<S>& p, const ParamPair<S>& q) {
  const ModuliInvariants<S> a = moduli_field(p), b = moduli_field(q);
  return a.j1 == b.j1 && a.j2 == b.j2;
}

}  // namespace humbert

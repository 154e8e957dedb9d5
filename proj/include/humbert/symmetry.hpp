#pragma once

// The finite Möbius group preserving the cone-point set {∞, 0, 1, λ₁, λ₂},
// found by brute force over the 120 orderings of the five points, and its
// isomorphism type.

#include <algorithm>
#include <optional>
#include <string_view>
#include <vector>

#include "humbert/humgroup.hpp"
#include "humbert/moebius.hpp"

namespace humbert {

enum class IsoType { Trivial, Z2, Z3, Z4, Z5, D3, D5, Anomaly };

std::string_view iso_name(IsoType t);

/// Types other than trivial and Z2 have a triangular quotient.
inline bool is_quasiplatonic(IsoType t) { return t != IsoType::Trivial && t != IsoType::Z2; }

template <Field S>
struct SymmetryReport {
  std::vector<MobiusMap<S>> elements;  // sorted by the canonical order of (a, b, c, d)
  IsoType type = IsoType::Anomaly;

  int order() const { return static_cast<int>(elements.size()); }
  bool quasiplatonic() const { return is_quasiplatonic(type); }
};

namespace detail {

template <Field S>
int compare_maps(const MobiusMap<S>& x, const MobiusMap<S>& y) {
  for (int k = 0; k < 4; ++k) {
    const int c = canonical_compare(x.matrix()(k / 2, k % 2), y.matrix()(k / 2, k % 2));
    if (c != 0) return c;
  }
  return 0;
}

template <Field S>
bool contains(const std::vector<MobiusMap<S>>& set, const MobiusMap<S>& m) {
  return std::find(set.begin(), set.end(), m) != set.end();
}

inline double map_distance(const MobiusMap<ApproxC>& x, const MobiusMap<ApproxC>& y) {
  double d = 0.0;
  for (int k = 0; k < 4; ++k) d = std::max(d, relative_distance(x.matrix()(k / 2, k % 2), y.matrix()(k / 2, k % 2)));
  return d;
}

}  // namespace detail

/// Checks closure and inverses (NotAGroup otherwise), then classifies by
/// order. Orders 4, 6 and 10 are further split by whether the group is
/// cyclic: only Z4, D3 and D5 are admissible there.
template <Field S>
IsoType classify(const std::vector<MobiusMap<S>>& elements) {
  if (elements.empty() || !detail::contains(elements, MobiusMap<S>::identity()))
    fail(ErrorKind::NotAGroup, "set does not contain the identity");
  for (const auto& x : elements) {
    if (!detail::contains(elements, x.inverse())) fail(ErrorKind::NotAGroup, "set is not closed under inverses");
    for (const auto& y : elements) {
      if (!detail::contains(elements, x * y)) fail(ErrorKind::NotAGroup, "set is not closed under composition");
    }
  }
  const int n = static_cast<int>(elements.size());
  const bool cyclic = std::any_of(elements.begin(), elements.end(), [n](const MobiusMap<S>& m) {
    const auto k = mob_order(m);
    return k && *k == n;
  });
  switch (n) {
    case 1: return IsoType::Trivial;
    case 2: return IsoType::Z2;
    case 3: return IsoType::Z3;
    case 4: return cyclic ? IsoType::Z4 : IsoType::Anomaly;
    case 5: return IsoType::Z5;
    case 6: return cyclic ? IsoType::Anomaly : IsoType::D3;
    case 10: return cyclic ? IsoType::Anomaly : IsoType::D5;
    default: return IsoType::Anomaly;
  }
}

template <Field S>
SymmetryReport<S> symmetry_group(const ParamPair<S>& p) {
  require_torelli(p);
  using P = ProjPoint<S>;
  const std::array<P, 5> marked{P::infinity(), P(S(0)), P(S(1)), P(p.z), P(p.w)};
  const std::vector<Perm5> perms = all_permutations();
  std::vector<std::optional<MobiusMap<S>>> found(perms.size());
  detail::parallel_for(perms.size(), [&](std::size_t k) {
    auto q = [&](int i) { return marked[static_cast<std::size_t>(perms[k][static_cast<std::size_t>(i)])]; };
    const MobiusMap<S> m = mob_from_triples<S>({marked[0], marked[1], marked[2]}, {q(0), q(1), q(2)});
    if (m(marked[3]) == q(3) && m(marked[4]) == q(4)) found[k] = m;
  });

  SymmetryReport<S> report;
  for (auto& m : found) {
    if (!m) continue;
    bool duplicate = false;
    for (const auto& e : report.elements) {
      if constexpr (ScalarTraits<S>::exact) {
        duplicate = duplicate || e == *m;
      } else {
        const double d = detail::map_distance(e, *m);
        const double eps = default_tolerance();
        if (d > eps && d <= 10 * eps) fail(ErrorKind::PrecisionWarning, "two symmetry candidates within 10 eps");
        duplicate = duplicate || d <= eps;
      }
    }
    if (!duplicate) report.elements.push_back(std::move(*m));
  }
  std::sort(report.elements.begin(), report.elements.end(),
            [](const auto& x, const auto& y) { return detail::compare_maps(x, y) < 0; });
  report.type = classify(report.elements);
  return report;
}

/// The type is unchanged when p is moved along its 𝔾-orbit.
template <Field S>
bool symmetry_invariance_check(const ParamPair<S>& p, const GroupElem& t) {
  return symmetry_group(p).type == symmetry_group(t(p)).type;
}

}  // namespace humbert

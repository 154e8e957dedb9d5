#pragma once

// The quadric model C ⊂ P⁴ cut out by
//   x1² + x2² + x3² = 0,  λ1 x1² + x2² + x4² = 0,  λ2 x1² + x2² + x5² = 0,
// the sign group H ≅ Z2⁴, and the quotient π = -(x2/x1)² onto P¹ branched
// over {∞, 0, 1, λ1, λ2}.

#include <Eigen/Core>

#include <algorithm>
#include <array>
#include <vector>

#include "humbert/eigen_support.hpp"
#include "humbert/humgroup.hpp"
#include "humbert/moebius.hpp"

namespace humbert {

template <Field S>
class ProjPoint5 {
 public:
  using Vec = Eigen::Matrix<S, 5, 1>;

  explicit ProjPoint5(const Vec& v) : v_(v) { canonicalize(); }
  ProjPoint5(const S& x1, const S& x2, const S& x3, const S& x4, const S& x5) {
    v_ << x1, x2, x3, x4, x5;
    canonicalize();
  }

  const Vec& vec() const { return v_; }
  const S& operator[](int k) const { return v_[k]; }

  friend bool operator==(const ProjPoint5& a, const ProjPoint5& b) {
    for (int k = 0; k < 5; ++k) {
      if (!(a.v_[k] == b.v_[k])) return false;
    }
    return true;
  }

 private:
  void canonicalize() {
    for (int k = 0; k < 5; ++k) {
      if (!is_zero(v_[k])) {
        const S s = v_[k];
        for (int j = 0; j < 5; ++j) v_[j] = v_[j] / s;
        v_[k] = S(1);
        return;
      }
    }
    fail(ErrorKind::DegenerateValue, "the zero vector is not a point of P4");
  }

  Vec v_;
};

/// Lexicographic by the canonical scalar order.
template <Field S>
int canonical_compare(const ProjPoint5<S>& a, const ProjPoint5<S>& b) {
  for (int k = 0; k < 5; ++k) {
    if (int c = canonical_compare(a[k], b[k]); c != 0) return c;
  }
  return 0;
}

template <Field S>
struct QuadricModel {
  ParamPair<S> p;
  std::array<std::array<S, 5>, 3> coefficients;

  explicit QuadricModel(const ParamPair<S>& pair) : p(pair) {
    require_torelli(p);
    coefficients = {{{S(1), S(1), S(1), S(0), S(0)},
                     {p.z, S(1), S(0), S(1), S(0)},
                     {p.w, S(1), S(0), S(0), S(1)}}};
  }
};

template <Field S>
bool is_on_curve(const QuadricModel<S>& m, const ProjPoint5<S>& pt) {
  for (const auto& q : m.coefficients) {
    S value(0);
    double scale = 0.0;
    for (int k = 0; k < 5; ++k) {
      const S t = q[static_cast<std::size_t>(k)] * pt[k] * pt[k];
      value = value + t;
      if constexpr (!ScalarTraits<S>::exact) scale = std::max(scale, t.abs());
    }
    if constexpr (ScalarTraits<S>::exact) {
      if (!is_zero(value)) return false;
    } else {
      if (value.abs() > default_tolerance() * std::max(1.0, scale)) return false;
    }
  }
  return true;
}

/// π[x1:...:x5] = -(x2/x1)², ∞ when x1 = 0.
template <Field S>
ProjPoint<S> pi(const ProjPoint5<S>& pt) {
  if (is_zero(pt[0]) && is_zero(pt[1])) fail(ErrorKind::InternalError, "x1 = x2 = 0 does not occur on the curve");
  return ProjPoint<S>(S(0) - pt[1] * pt[1], pt[0] * pt[0]);
}

/// An element of H: signs modulo global negation, first sign +1.
struct SignElement {
  std::array<int, 5> signs{1, 1, 1, 1, 1};

  static SignElement from(std::array<int, 5> s);
  friend bool operator==(const SignElement&, const SignElement&) = default;
  friend SignElement operator*(const SignElement& a, const SignElement& b);
};

/// The 16 elements in binary order of the signs of x2..x5.
const std::vector<SignElement>& sign_group();

template <Field S>
ProjPoint5<S> h_action(const SignElement& s, const ProjPoint5<S>& pt) {
  typename ProjPoint5<S>::Vec v = pt.vec();
  for (int k = 0; k < 5; ++k) {
    if (s.signs[static_cast<std::size_t>(k)] < 0) v[k] = S(0) - v[k];
  }
  return ProjPoint5<S>(v);
}

namespace detail {

template <Field S>
S checked_sqrt(const S& x) {
  S root;
  if (!try_sqrt(x, root)) fail(ErrorKind::NotInExactField, "square root of " + to_string(x) + " is not in Q(i)");
  return root;
}

}  // namespace detail

/// π⁻¹(t), sorted canonically: 16 points off the branch set, 8 on it. In the
/// exact regime NotInExactField when a needed square root leaves Q(i).
template <Field S>
std::vector<ProjPoint5<S>> fiber(const QuadricModel<S>& m, const ProjPoint<S>& t) {
  require_torelli(m.p);
  std::array<S, 5> base;
  if (t.is_infinity()) {
    const S i = detail::checked_sqrt(S(-1));
    base = {S(0), S(1), i, i, i};
  } else {
    const S& v = t.value();
    base = {S(1), detail::checked_sqrt(S(0) - v), detail::checked_sqrt(v - S(1)), detail::checked_sqrt(v - m.p.z),
            detail::checked_sqrt(v - m.p.w)};
  }
  const ProjPoint5<S> start(base[0], base[1], base[2], base[3], base[4]);
  std::vector<ProjPoint5<S>> out;
  for (const SignElement& s : sign_group()) {
    ProjPoint5<S> q = h_action(s, start);
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return canonical_compare(a, b) < 0; });
  return out;
}

}  // namespace humbert

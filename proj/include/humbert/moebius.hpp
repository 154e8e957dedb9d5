#pragma once

// The projective line over a scalar regime and Möbius maps acting on it.
// Points and maps are fixed-size Eigen vectors/matrices kept in canonical
// scaling, so equality of points or maps is equality of coefficients.

#include <Eigen/Core>

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <type_traits>

#include "humbert/eigen_support.hpp"
#include "humbert/exactnum.hpp"

namespace humbert {

// x is negligible next to a coefficient vector whose largest entry has
// modulus `ref`. Exact regimes only accept a true zero.
template <class S>
bool negligible(const S& x, const S& /*ref*/) {
  return is_zero(x);
}

inline bool negligible(const ApproxC& x, const ApproxC& ref) {
  return x.abs() <= default_tolerance() * ref.abs();
}

namespace detail {

template <class S, int N>
S largest(const Eigen::Matrix<S, N, 1>& v) {
  return v[0];
}

template <int N>
ApproxC largest(const Eigen::Matrix<ApproxC, N, 1>& v) {
  ApproxC best = v[0];
  for (int k = 1; k < N; ++k) {
    if (v[k].abs() > best.abs()) best = v[k];
  }
  return best;
}

// Divides by the first entry that is not negligible; nullopt if all are.
template <class S, int N>
bool scale_first_nonzero(Eigen::Matrix<S, N, 1>& v) {
  const S ref = largest(v);
  for (int k = 0; k < N; ++k) {
    if (negligible(v[k], ref)) continue;
    const S pivot = v[k];
    for (int j = 0; j < N; ++j) v[j] = (j < k || negligible(v[j], ref)) ? S(0) : v[j] / pivot;
    return true;
  }
  return false;
}

}  // namespace detail

template <Field S>
class ProjPoint {
 public:
  using Vec = Eigen::Matrix<S, 2, 1>;

  ProjPoint() : ProjPoint(S(0)) {}
  ProjPoint(const S& x) : v_(x, S(1)) {}  // NOLINT(google-explicit-constructor)
  ProjPoint(const S& x, const S& y) : v_(x, y) { canonicalize(); }
  explicit ProjPoint(const Vec& v) : v_(v) { canonicalize(); }

  static ProjPoint infinity() { return ProjPoint(S(1), S(0)); }

  const Vec& vec() const { return v_; }
  const S& x() const { return v_[0]; }
  const S& y() const { return v_[1]; }
  bool is_infinity() const { return is_zero(v_[1]); }

  /// The affine value; DegenerateValue at infinity.
  const S& value() const {
    if (is_infinity()) fail(ErrorKind::DegenerateValue, "the point at infinity has no affine value");
    return v_[0];
  }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.v_[0] == b.v_[0] && a.v_[1] == b.v_[1];
  }

 private:
  // y = 1 when finite, otherwise [1:0].
  void canonicalize() {
    const S ref = detail::largest(v_);
    if (negligible(v_[0], ref) && negligible(v_[1], ref))
      fail(ErrorKind::DegenerateValue, "[0:0] is not a projective point");
    if (negligible(v_[1], ref)) {
      v_ = Vec(S(1), S(0));
    } else {
      v_[0] = v_[0] / v_[1];
      v_[1] = S(1);
    }
  }

  Vec v_;
};

/// z ↦ (a z + b) / (c z + d), stored with its first nonzero entry equal to 1.
template <Field S>
class MobiusMap {
 public:
  using Mat = Eigen::Matrix<S, 2, 2>;

  MobiusMap() : m_(Mat::Identity()) {}
  MobiusMap(const S& a, const S& b, const S& c, const S& d) {
    m_ << a, b, c, d;
    canonicalize();
  }
  explicit MobiusMap(const Mat& m) : m_(m) { canonicalize(); }

  static MobiusMap identity() { return MobiusMap(); }

  const Mat& matrix() const { return m_; }
  const S& a() const { return m_(0, 0); }
  const S& b() const { return m_(0, 1); }
  const S& c() const { return m_(1, 0); }
  const S& d() const { return m_(1, 1); }

  ProjPoint<S> operator()(const ProjPoint<S>& p) const { return ProjPoint<S>(Eigen::Matrix<S, 2, 1>(m_ * p.vec())); }

  MobiusMap inverse() const {
    Mat adj;
    adj << d(), -b(), -c(), a();
    return MobiusMap(adj);
  }

  /// (s * t)(p) = s(t(p)).
  friend MobiusMap operator*(const MobiusMap& s, const MobiusMap& t) { return MobiusMap(Mat(s.m_ * t.m_)); }

  friend bool operator==(const MobiusMap& s, const MobiusMap& t) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        if (!(s.m_(i, j) == t.m_(i, j))) return false;
      }
    }
    return true;
  }

 private:
  void canonicalize() {
    const S det = m_(0, 0) * m_(1, 1) - m_(0, 1) * m_(1, 0);
    Eigen::Matrix<S, 4, 1> flat(m_(0, 0), m_(0, 1), m_(1, 0), m_(1, 1));
    bool singular = false;
    if constexpr (std::is_same_v<S, ApproxC>) {
      const double ref = detail::largest(flat).abs();
      singular = det.abs() <= default_tolerance() * ref * ref;
    } else {
      singular = is_zero(det);
    }
    if (singular) fail(ErrorKind::DegenerateMap, "singular Möbius matrix");
    detail::scale_first_nonzero(flat);
    m_ << flat[0], flat[1], flat[2], flat[3];
  }

  Mat m_;
};

template <Field S>
ProjPoint<S> mob_apply(const MobiusMap<S>& m, const ProjPoint<S>& p) {
  return m(p);
}

namespace detail {

// x1 y2 - x2 y1: zero exactly when the two points coincide.
template <Field S>
S bracket(const ProjPoint<S>& p, const ProjPoint<S>& q) {
  return p.x() * q.y() - q.x() * p.y();
}

// Approximate points coincide in the same relative sense as approx_eq.
template <Field S>
bool coincide(const ProjPoint<S>& p, const ProjPoint<S>& q) {
  if constexpr (std::is_same_v<S, ApproxC>) {
    const double scale = std::max({1.0, p.x().abs(), q.x().abs()});
    return bracket(p, q).abs() <= default_tolerance() * scale;
  } else {
    return is_zero(bracket(p, q));
  }
}

template <Field S>
MobiusMap<S> to_standard_frame(const ProjPoint<S>& p1, const ProjPoint<S>& p2, const ProjPoint<S>& p3) {
  if (coincide(p1, p2) || coincide(p1, p3) || coincide(p2, p3))
    fail(ErrorKind::DegenerateTriple, "anchor points are not pairwise distinct");
  // Row 0 vanishes at p2, row 1 at p1; the scalings send p3 to [1:1].
  const S alpha = bracket(p3, p1);
  const S beta = bracket(p3, p2);
  return MobiusMap<S>(alpha * p2.y(), -(alpha * p2.x()), beta * p1.y(), -(beta * p1.x()));
}

}  // namespace detail

/// The unique map with src[k] ↦ dst[k].
template <Field S>
MobiusMap<S> mob_from_triples(const std::array<ProjPoint<S>, 3>& src, const std::array<ProjPoint<S>, 3>& dst) {
  const MobiusMap<S> from = detail::to_standard_frame(src[0], src[1], src[2]);
  const MobiusMap<S> to = detail::to_standard_frame(dst[0], dst[1], dst[2]);
  return to.inverse() * from;
}

/// Least n ≤ 10 with mⁿ = id, or nullopt (infinite or larger order).
template <Field S>
std::optional<int> mob_order(const MobiusMap<S>& m) {
  constexpr int kBound = 10;
  MobiusMap<S> power = m;
  for (int n = 1; n <= kBound; ++n) {
    if (power == MobiusMap<S>::identity()) return n;
    power = m * power;
  }
  return std::nullopt;
}

/// Image of p4 under the map sending (p1, p2, p3) to (∞, 0, 1).
template <Field S>
ProjPoint<S> cross_ratio(const ProjPoint<S>& p1, const ProjPoint<S>& p2, const ProjPoint<S>& p3,
                         const ProjPoint<S>& p4) {
  return detail::to_standard_frame(p1, p2, p3)(p4);
}

}  // namespace humbert

#pragma once

// Scalar regimes: exact rationals, exact Gaussian rationals and a
// tolerance-compared complex double. Everything above this header is
// generic over the regime through the `Field` concept and `ScalarTraits`.

#include <gmpxx.h>

#include <atomic>
#include <cmath>
#include <compare>
#include <complex>
#include <concepts>
#include <string>
#include <string_view>

#include "humbert/error.hpp"

namespace humbert {

class Rat {
 public:
  Rat() = default;
  template <std::integral I>
  Rat(I n) : value_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rat(const mpz_class& n) : value_(n) {}       // NOLINT(google-explicit-constructor)
  Rat(const mpz_class& n, const mpz_class& d) {
    if (d == 0) fail(ErrorKind::DegenerateValue, "rational with zero denominator");
    value_ = mpq_class(n, d);
    value_.canonicalize();
  }

  static Rat from_mpq(mpq_class q) {
    q.canonicalize();
    Rat r;
    r.value_ = std::move(q);
    return r;
  }

  const mpz_class& num() const { return value_.get_num(); }
  const mpz_class& den() const { return value_.get_den(); }
  const mpq_class& mpq() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }

  Rat operator-() const { return from_mpq(-value_); }
  Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
  Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
  Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) fail(ErrorKind::DegenerateValue, "division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

inline bool is_zero(const Rat& a) { return a.is_zero(); }

class GaussRat {
 public:
  GaussRat() = default;
  template <std::integral I>
  GaussRat(I n) : re_(n) {}                                 // NOLINT(google-explicit-constructor)
  GaussRat(Rat re) : re_(std::move(re)) {}                  // NOLINT(google-explicit-constructor)
  GaussRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRat i() { return {Rat(0), Rat(1)}; }

  const Rat& re() const { return re_; }
  const Rat& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussRat conj() const { return {re_, -im_}; }
  Rat norm() const { return re_ * re_ + im_ * im_; }

  GaussRat operator-() const { return {-re_, -im_}; }
  GaussRat& operator+=(const GaussRat& o) { re_ += o.re_; im_ += o.im_; return *this; }
  GaussRat& operator-=(const GaussRat& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  GaussRat& operator*=(const GaussRat& o) {
    Rat r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) {
    if (o.is_zero()) fail(ErrorKind::DegenerateValue, "division by zero");
    const Rat n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
  }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) = default;

 private:
  Rat re_;
  Rat im_;
};

inline bool is_zero(const GaussRat& a) { return a.is_zero(); }

/// Relative tolerance used by ApproxC equality. Overridable at startup.
double default_tolerance();
void set_default_tolerance(double eps);

/// Complex double compared up to the global relative tolerance. Equality is
/// therefore not transitive; callers deduplicating sets must guard against
/// near-collisions themselves.
class ApproxC {
 public:
  ApproxC() = default;
  template <std::integral I>
  ApproxC(I n) : v_(static_cast<double>(n), 0.0) {}  // NOLINT(google-explicit-constructor)
  ApproxC(double re) : v_(re, 0.0) {}                 // NOLINT(google-explicit-constructor)
  ApproxC(double re, double im) : v_(re, im) {}
  ApproxC(std::complex<double> v) : v_(v) {}          // NOLINT(google-explicit-constructor)

  static ApproxC infinity() {
    ApproxC a;
    a.inf_ = true;
    return a;
  }

  bool is_infinity() const { return inf_; }
  std::complex<double> value() const { return v_; }
  double re() const { return v_.real(); }
  double im() const { return v_.imag(); }
  double abs() const { return std::abs(v_); }
  bool is_zero() const;

  ApproxC operator-() const {
    guard(*this);
    return ApproxC(-v_);
  }
  ApproxC& operator+=(const ApproxC& o) { guard(o); v_ += o.v_; return *this; }
  ApproxC& operator-=(const ApproxC& o) { guard(o); v_ -= o.v_; return *this; }
  ApproxC& operator*=(const ApproxC& o) { guard(o); v_ *= o.v_; return *this; }
  ApproxC& operator/=(const ApproxC& o) {
    guard(o);
    if (o.v_ == std::complex<double>(0.0, 0.0))
      fail(ErrorKind::DegenerateValue, "division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend ApproxC operator+(ApproxC a, const ApproxC& b) { return a += b; }
  friend ApproxC operator-(ApproxC a, const ApproxC& b) { return a -= b; }
  friend ApproxC operator*(ApproxC a, const ApproxC& b) { return a *= b; }
  friend ApproxC operator/(ApproxC a, const ApproxC& b) { return a /= b; }

  friend bool approx_eq(const ApproxC& a, const ApproxC& b, double eps);
  friend bool operator==(const ApproxC& a, const ApproxC& b) {
    return approx_eq(a, b, default_tolerance());
  }

 private:
  void guard(const ApproxC& o) const {
    if (inf_ || o.inf_) fail(ErrorKind::DegenerateValue, "arithmetic on infinity");
  }

  std::complex<double> v_{0.0, 0.0};
  bool inf_ = false;
};

/// |a-b| <= eps * max(1, |a|, |b|); infinity equals only infinity.
bool approx_eq(const ApproxC& a, const ApproxC& b, double eps);
/// Distance in the same relative scale approx_eq uses.
double relative_distance(const ApproxC& a, const ApproxC& b);

inline bool is_zero(const ApproxC& a) { return a.is_zero(); }

template <class S>
concept Field = requires(const S& a, const S& b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a == b } -> std::convertible_to<bool>;
  { is_zero(a) } -> std::convertible_to<bool>;
  S(0);
  S(1);
};

/// Per-regime hooks. `exact` decides whether equality is decidable.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rat> {
  static constexpr bool exact = true;
  static Rat from_integer(const mpz_class& n) { return Rat(n); }
  static Rat from_rat(const Rat& q) { return q; }
};

template <>
struct ScalarTraits<GaussRat> {
  static constexpr bool exact = true;
  static GaussRat from_integer(const mpz_class& n) { return GaussRat(Rat(n)); }
  static GaussRat from_rat(const Rat& q) { return GaussRat(q); }
};

template <>
struct ScalarTraits<ApproxC> {
  static constexpr bool exact = false;
  static ApproxC from_integer(const mpz_class& n) { return ApproxC(n.get_d()); }
  static ApproxC from_rat(const Rat& q) { return ApproxC(q.to_double()); }
};

template <class S>
S from_integer(const mpz_class& n) { return ScalarTraits<S>::from_integer(n); }

template <class S>
S from_rat(const Rat& q) { return ScalarTraits<S>::from_rat(q); }

inline ApproxC to_approx(const Rat& q) { return ApproxC(q.to_double()); }
inline ApproxC to_approx(const GaussRat& g) { return ApproxC(g.re().to_double(), g.im().to_double()); }
inline ApproxC to_approx(const ApproxC& a) { return a; }

// Canonical total order used for set output and representative selection:
// smaller |numerator| first, then smaller denominator, then non-negative
// before negative; Gaussian values compare real part first.
int canonical_compare(const Rat& a, const Rat& b);
int canonical_compare(const GaussRat& a, const GaussRat& b);
int canonical_compare(const ApproxC& a, const ApproxC& b);

template <class S>
bool canonical_less(const S& a, const S& b) { return canonical_compare(a, b) < 0; }

// Text formats: `p/q` and `p/q+r/si`.
Rat parse_rat(std::string_view text);
GaussRat parse_gauss(std::string_view text);
/// Decimal literals: `1.5`, `-0.25+2e-3i`, `i`.
ApproxC parse_approx(std::string_view text);

std::string to_string(const Rat& q);
std::string to_string(const GaussRat& g);
std::string to_string(const ApproxC& a);

/// Exact square root in Q(i) when one exists.
bool try_sqrt(const GaussRat& x, GaussRat& root);
bool try_sqrt(const ApproxC& x, ApproxC& root);

}  // namespace humbert

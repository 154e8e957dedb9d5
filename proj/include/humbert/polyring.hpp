#pragma once

// Polynomials and rational functions over Q in the two variables z and w.
//
// Poly2 stores integer coefficients keyed by exponent pair together with one
// positive content denominator. Terms are kept in graded-lexicographic order
// with z > w, highest first, so the first stored term is the leading term.
// RatFunc2 keeps num/den integral, coprime, with joint content 1 and a
// positive leading coefficient of the denominator; equal functions therefore
// compare equal member-wise.

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "humbert/exactnum.hpp"

namespace humbert {

struct Monomial {
  int z = 0;
  int w = 0;

  int total() const { return z + w; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.total() != b.total()) return a.total() > b.total();
    return a.z > b.z;
  }
};

class Poly2 {
 public:
  using Terms = std::map<Monomial, mpz_class, GrlexGreater>;

  Poly2() = default;
  template <std::integral I>
  Poly2(I c) : Poly2(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  Poly2(const Rat& c);            // NOLINT(google-explicit-constructor)

  static Poly2 z() { return monomial({1, 0}, Rat(1)); }
  static Poly2 w() { return monomial({0, 1}, Rat(1)); }
  static Poly2 monomial(Monomial m, const Rat& c);
  /// Integer terms over a positive denominator; zero entries are dropped.
  static Poly2 from_terms(Terms terms, const mpz_class& denominator = 1);

  const Terms& terms() const { return terms_; }
  const mpz_class& denominator() const { return den_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_integral() const { return den_ == 1; }
  int degree_z() const;
  int degree_w() const;
  int total_degree() const;
  std::size_t size() const { return terms_.size(); }

  Rat coefficient(Monomial m) const;
  Monomial leading_monomial() const;
  Rat leading_coefficient() const;
  /// Integer gcd of the stored numerator coefficients.
  mpz_class integer_content() const;
  /// The integral polynomial with the same zero set and unit content, sign
  /// normalized so the leading coefficient is positive.
  Poly2 primitive_part() const;

  Poly2 operator-() const;
  friend Poly2 operator+(const Poly2& a, const Poly2& b);
  friend Poly2 operator-(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(const Poly2& a, const Rat& s);
  template <std::integral I>
  friend Poly2 operator*(const Poly2& a, I s) { return a * Rat(s); }
  Poly2& operator+=(const Poly2& o) { return *this = *this + o; }
  Poly2& operator-=(const Poly2& o) { return *this = *this - o; }
  Poly2& operator*=(const Poly2& o) { return *this = *this * o; }

  friend bool operator==(const Poly2& a, const Poly2& b) {
    return a.den_ == b.den_ && a.terms_ == b.terms_;
  }

  /// Substitute scalars for z and w.
  template <class S>
  S eval(const S& zv, const S& wv) const;

  std::string str() const { return str("z", "w"); }
  std::string str(std::string_view zname, std::string_view wname) const;

 private:
  void normalize();

  Terms terms_;
  mpz_class den_ = 1;
};

Poly2 pow(const Poly2& p, int e);
/// Exact quotient over Q; InternalError when b does not divide a.
Poly2 divide_exact(const Poly2& a, const Poly2& b);
/// A gcd over Q[z,w], returned primitive and integral with positive
/// leading coefficient. gcd(0, 0) signals DegenerateValue.
Poly2 gcd(const Poly2& a, const Poly2& b);

class RatFunc2 {
 public:
  RatFunc2() : den_(1) {}
  template <std::integral I>
  RatFunc2(I c) : RatFunc2(Poly2(c)) {}   // NOLINT(google-explicit-constructor)
  RatFunc2(const Rat& c) : RatFunc2(Poly2(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc2(const Poly2& p);                // NOLINT(google-explicit-constructor)
  RatFunc2(const Poly2& num, const Poly2& den);

  static RatFunc2 z() { return RatFunc2(Poly2::z()); }
  static RatFunc2 w() { return RatFunc2(Poly2::w()); }

  const Poly2& num() const { return num_; }
  const Poly2& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc2 operator-() const;
  RatFunc2 inverse() const;
  friend RatFunc2 operator+(const RatFunc2& a, const RatFunc2& b);
  friend RatFunc2 operator-(const RatFunc2& a, const RatFunc2& b);
  friend RatFunc2 operator*(const RatFunc2& a, const RatFunc2& b);
  friend RatFunc2 operator/(const RatFunc2& a, const RatFunc2& b);
  RatFunc2& operator+=(const RatFunc2& o) { return *this = *this + o; }
  RatFunc2& operator*=(const RatFunc2& o) { return *this = *this * o; }

  friend bool operator==(const RatFunc2& a, const RatFunc2& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str() const { return str("z", "w"); }
  std::string str(std::string_view zname, std::string_view wname) const;

 private:
  struct Coprime {};
  RatFunc2(Coprime, Poly2 num, Poly2 den);

  Poly2 num_;
  Poly2 den_;
};

inline bool is_zero(const RatFunc2& f) { return f.is_zero(); }

RatFunc2 pow(const RatFunc2& f, int e);

/// f(g1(z,w), g2(z,w)). DegenerateMap if the substituted denominator vanishes
/// identically.
RatFunc2 compose(const RatFunc2& f, const RatFunc2& g1, const RatFunc2& g2);

/// num/den evaluated at (z, w) without reduction: PoleAt when only the
/// denominator vanishes, Indeterminate when both do.
template <class S>
S evaluate_quotient(const Poly2& num, const Poly2& den, const S& zv, const S& wv);

template <class S>
S evaluate(const RatFunc2& f, const S& zv, const S& wv) {
  return evaluate_quotient(f.num(), f.den(), zv, wv);
}

template <>
struct ScalarTraits<RatFunc2> {
  static constexpr bool exact = true;
  static RatFunc2 from_integer(const mpz_class& n) { return RatFunc2(Rat(n)); }
  static RatFunc2 from_rat(const Rat& q) { return RatFunc2(q); }
};

/// One-variable rational function, stored as a RatFunc2 free of w.
class RatFunc1 {
 public:
  RatFunc1() = default;
  template <std::integral I>
  RatFunc1(I c) : f_(c) {}  // NOLINT(google-explicit-constructor)
  RatFunc1(const Rat& c) : f_(c) {}  // NOLINT(google-explicit-constructor)
  explicit RatFunc1(RatFunc2 f);

  static RatFunc1 x() { return RatFunc1(RatFunc2::z()); }
  /// (a x + b) / (c x + d)
  static RatFunc1 mobius(const Rat& a, const Rat& b, const Rat& c, const Rat& d);

  const RatFunc2& as_bivariate() const { return f_; }
  const Poly2& num() const { return f_.num(); }
  const Poly2& den() const { return f_.den(); }
  int num_degree() const { return f_.num().degree_z(); }
  int den_degree() const { return f_.den().degree_z(); }

  friend RatFunc1 operator+(const RatFunc1& a, const RatFunc1& b) { return RatFunc1(a.f_ + b.f_); }
  friend RatFunc1 operator-(const RatFunc1& a, const RatFunc1& b) { return RatFunc1(a.f_ - b.f_); }
  friend RatFunc1 operator*(const RatFunc1& a, const RatFunc1& b) { return RatFunc1(a.f_ * b.f_); }
  friend RatFunc1 operator/(const RatFunc1& a, const RatFunc1& b) { return RatFunc1(a.f_ / b.f_); }
  friend bool operator==(const RatFunc1& a, const RatFunc1& b) = default;

  /// Homogenized value (N(x,y) y^(d-deg N), D(x,y) y^(d-deg D)) with
  /// d = max(deg N, deg D); a projective evaluation at [x:y].
  template <class S>
  std::pair<S, S> eval_homogeneous(const S& xv, const S& yv) const;

  std::string str() const;

 private:
  RatFunc2 f_;
};

/// f(g(x)).
RatFunc1 compose(const RatFunc1& f, const RatFunc1& g);

/// Coefficients of a w-free polynomial as a dense integer vector (after
/// clearing the content denominator); index k multiplies z^k.
std::vector<mpz_class> univariate_coefficients(const Poly2& p);
Poly2 poly_from_univariate(const std::vector<mpz_class>& coeffs);

// ---------------------------------------------------------------------------

template <class S>
S Poly2::eval(const S& zv, const S& wv) const {
  if (terms_.empty()) return S(0);
  const int dz = degree_z(), dw = degree_w();
  std::vector<S> zp{S(1)}, wp{S(1)};
  for (int k = 1; k <= dz; ++k) zp.push_back(zp.back() * zv);
  for (int k = 1; k <= dw; ++k) wp.push_back(wp.back() * wv);
  S acc(0);
  for (const auto& [m, c] : terms_) {
    acc = acc + ScalarTraits<S>::from_integer(c) * zp[static_cast<std::size_t>(m.z)] * wp[static_cast<std::size_t>(m.w)];
  }
  if (den_ != 1) acc = acc / ScalarTraits<S>::from_integer(den_);
  return acc;
}

template <class S>
S evaluate_quotient(const Poly2& num, const Poly2& den, const S& zv, const S& wv) {
  const S n = num.eval(zv, wv);
  const S d = den.eval(zv, wv);
  if (is_zero(d)) {
    if (is_zero(n)) fail(ErrorKind::Indeterminate, "0/0 in rational function evaluation");
    fail(ErrorKind::PoleAt, "evaluation at a pole");
  }
  return n / d;
}

template <class S>
std::pair<S, S> RatFunc1::eval_homogeneous(const S& xv, const S& yv) const {
  const int dn = num_degree(), dd = den_degree();
  const int d = std::max(dn, dd);
  auto hom = [&](const Poly2& p) {
    S acc(0);
    for (const auto& [m, c] : p.terms()) {
      S t = ScalarTraits<S>::from_integer(c);
      for (int k = 0; k < m.z; ++k) t = t * xv;
      for (int k = m.z; k < d; ++k) t = t * yv;
      acc = acc + t;
    }
    return acc;
  };
  return {hom(num()), hom(den())};
}

}  // namespace humbert

#pragma once

// Dense univariate polynomials over Z. Internal workhorse for the bivariate
// gcd (coefficient ring of the recursive representation), for resultants and
// for the univariate minimal-polynomial checks.

#include <gmpxx.h>

#include <vector>

namespace humbert::detail {

struct UPoly {
  std::vector<mpz_class> c;  // c[k] multiplies x^k; no trailing zeros

  UPoly() = default;
  explicit UPoly(std::vector<mpz_class> coeffs) : c(std::move(coeffs)) { trim(); }
  static UPoly constant(const mpz_class& v) { return UPoly(std::vector<mpz_class>{v}); }
  static UPoly monomial(int k, const mpz_class& v);

  bool zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const mpz_class& lc() const { return c.back(); }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c == b.c; }
};

UPoly operator+(const UPoly& a, const UPoly& b);
UPoly operator-(const UPoly& a, const UPoly& b);
UPoly operator-(const UPoly& a);
UPoly operator*(const UPoly& a, const UPoly& b);
UPoly operator*(const UPoly& a, const mpz_class& s);

UPoly pow(const UPoly& a, unsigned e);
UPoly derivative(const UPoly& a);

mpz_class content(const UPoly& a);
/// Divides out the integer content and makes the leading coefficient positive.
UPoly primitive(const UPoly& a);
UPoly divexact(const UPoly& a, const mpz_class& s);

/// lc(b)^(deg a - deg b + 1) * a mod b.
UPoly prem(const UPoly& a, const UPoly& b);
/// Quotient of an exact division in Z[x]; false when b does not divide a.
bool try_divexact(const UPoly& a, const UPoly& b, UPoly& q);
UPoly divexact(const UPoly& a, const UPoly& b);
/// True when b divides a over Q[x].
bool divides_over_q(const UPoly& b, const UPoly& a);

/// Gcd in Z[x] with positive leading coefficient, including the integer
/// content gcd. gcd(0, 0) is zero.
UPoly gcd(const UPoly& a, const UPoly& b);
/// The same by primitive remainder sequence only.
UPoly prs_gcd(const UPoly& a, const UPoly& b);

mpz_class max_norm(const UPoly& a);
mpz_class evaluate(const UPoly& a, const mpz_class& x);
/// Balanced base-x digits of h as polynomial coefficients.
UPoly interpolate_digits(mpz_class h, const mpz_class& x);

/// Heuristic gcd: evaluation at a large integer, integer gcd, lift and check
/// by division. Returns false when every attempt fails.
bool heuristic_gcd(const UPoly& f, const UPoly& g, UPoly& h, UPoly& cff, UPoly& cfg);

/// Gcd with both cofactors, heuristic first with PRS fallback.
void gcd_cofactors(const UPoly& f, const UPoly& g, UPoly& h, UPoly& cff, UPoly& cfg);

/// Primitive square-free part a / gcd(a, a').
UPoly squarefree_part(const UPoly& a);

/// Determinant of a square matrix over Z[x] by fraction-free elimination.
UPoly bareiss_determinant(std::vector<std::vector<UPoly>> m);

}  // namespace humbert::detail

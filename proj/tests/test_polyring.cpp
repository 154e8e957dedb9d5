#include <random>

#include "doctest.h"
#include "humbert/polyring.hpp"

using namespace humbert;

namespace {

const Poly2 z = Poly2::z();
const Poly2 w = Poly2::w();

Poly2 random_poly(std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<int> coeff(-4, 4), e(0, deg);
  Poly2 p;
  for (int k = 0; k < 4; ++k) p += Poly2::monomial({e(rng), e(rng)}, Rat(coeff(rng)));
  return p;
}

RatFunc2 random_rf(std::mt19937_64& rng) {
  Poly2 d = random_poly(rng, 2);
  if (d.is_zero()) d = Poly2(1);
  return RatFunc2(random_poly(rng, 2), d);
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  CHECK((z + w) * (z - w) == z * z - w * w);
  const Poly2 p = z * z * Rat(3) - w + Poly2(1);
  CHECK(p + Poly2() == p);
  const Poly2 r1 = pow(z - 1, 4) * pow(z, 4) * pow(z - w, 4) * pow(w - 1, 4) * pow(w, 4);
  CHECK(r1.degree_z() == 12);
  CHECK(r1.degree_w() == 12);
  CHECK(r1.total_degree() == 20);
  CHECK(r1.leading_monomial() == Monomial{12, 8});
  CHECK((z * Rat(1, 2) + w * Rat(1, 3)).denominator() == 6);
  CHECK((z * Rat(1, 2)) * Rat(2) == z);
  CHECK(p.str() == "3*z^2 - w + 1");
}

TEST_CASE("polynomial gcd") {
  CHECK(gcd(z * z - w * w, z - w) == z - w);
  CHECK(gcd(z * z + w, Poly2(1)) == Poly2(1));
  CHECK(gcd((z - 1) * (z - 1) * w, (z - 1) * w * w) == (z - 1) * w);
  CHECK(gcd(z * Rat(2), z * Rat(4)) == z);
  CHECK(gcd(w + 1, z * (w + 1)) == w + 1);
  CHECK(gcd(-(z - w), Poly2()) == z - w);
  CHECK_THROWS_AS(gcd(Poly2(), Poly2()), Error);
}

TEST_CASE("gcd divides both inputs and recovers planted factors") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 40; ++k) {
    const Poly2 g = random_poly(rng, 2), a = random_poly(rng, 3), b = random_poly(rng, 3);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    const Poly2 h = gcd(g * a, g * b);
    CHECK(divide_exact(g * a, h) * h == g * a);
    CHECK(divide_exact(g * b, h) * h == g * b);
    // g divides the gcd
    CHECK(divide_exact(h, gcd(h, g)) * gcd(h, g) == h);
    CHECK(gcd(h, g) == g.primitive_part());
  }
}

TEST_CASE("rational function canonical form") {
  const RatFunc2 f(z * z - w * w, z - w);
  CHECK(f == RatFunc2(z + w));
  CHECK(RatFunc2(-z, -w * Rat(2)) == RatFunc2(z, w * Rat(2)));
  CHECK(RatFunc2(z * Rat(1, 2), w * Rat(1, 3)).num() == z * Rat(3));
  CHECK(RatFunc2(z, -w).den() == w);
  CHECK_THROWS_AS(RatFunc2(z, Poly2()), Error);
  CHECK(RatFunc2(z, w).str() == "z/w");
  CHECK(RatFunc2(Poly2(1), z * w).str() == "1/(z*w)");
}

TEST_CASE("canonical form is confluent across arithmetic paths") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 30; ++k) {
    const RatFunc2 a = random_rf(rng), b = random_rf(rng), c = random_rf(rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a + b) + c == c + (b + a));
    if (!b.is_zero()) CHECK((a * b) / b == a);
    CHECK(a - a == RatFunc2());
  }
}

TEST_CASE("composition") {
  const RatFunc2 Z = RatFunc2::z(), W = RatFunc2::w();
  CHECK(compose(Z, Z.inverse(), W.inverse()) == Z.inverse());
  CHECK(compose(Z * W, Z.inverse(), W.inverse()) == (Z * W).inverse());
  const RatFunc2 b1 = W / (W - 1);
  CHECK(compose(pow(Z, 4), b1, W / (W - Z)) == RatFunc2(pow(w, 4), pow(w - 1, 4)));
  CHECK_THROWS_AS(compose(RatFunc2(Poly2(1), z - w), W, W), Error);
}

TEST_CASE("composition is associative") {
  std::mt19937_64 rng(9);
  const RatFunc2 Z = RatFunc2::z(), W = RatFunc2::w();
  int checked = 0;
  for (int k = 0; k < 30 && checked < 10; ++k) {
    const RatFunc2 f = random_rf(rng);
    const RatFunc2 g1 = (Z + 1) / (W - 2), g2 = Z * W / (Z + 3);
    const RatFunc2 h1 = random_rf(rng), h2 = random_rf(rng);
    try {
      const RatFunc2 gh1 = compose(g1, h1, h2), gh2 = compose(g2, h1, h2);
      const RatFunc2 left = compose(f, gh1, gh2);
      const RatFunc2 right = compose(compose(f, g1, g2), h1, h2);
      CHECK(left == right);
      ++checked;
    } catch (const Error&) {
      // degenerate random substitution
    }
  }
  CHECK(checked >= 5);
}

TEST_CASE("evaluation") {
  CHECK(evaluate(RatFunc2(z, w), Rat(2), Rat(3)) == Rat(2, 3));
  try {
    (void)evaluate(RatFunc2(Poly2(1), z - w), Rat(2), Rat(2));
    FAIL("expected PoleAt");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PoleAt);
  }
  try {
    (void)evaluate_quotient(z * z - w * w, z - w, Rat(2), Rat(2));
    FAIL("expected Indeterminate");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Indeterminate);
  }
  CHECK(evaluate(RatFunc2(z * z - w * w, z - w), Rat(2), Rat(2)) == Rat(4));

  std::mt19937_64 rng(13);
  for (int k = 0; k < 30; ++k) {
    const RatFunc2 f = random_rf(rng), g = random_rf(rng);
    const Rat zv(k + 2, 3), wv(-k - 1, 7);
    try {
      const Rat fv = evaluate(f, zv, wv), gv = evaluate(g, zv, wv);
      CHECK(evaluate(f * g, zv, wv) == fv * gv);
      CHECK(evaluate(f + g, zv, wv) == fv + gv);
    } catch (const Error&) {
    }
  }
}

TEST_CASE("univariate rational functions") {
  const RatFunc1 x = RatFunc1::x();
  const RatFunc1 L = RatFunc1::mobius(Rat(0), Rat(1), Rat(-1), Rat(1));
  CHECK(compose(L, compose(L, L)) == x);
  CHECK(L.str() == "-1/(x - 1)");
  const auto [n, d] = (x * x + 1).eval_homogeneous(Rat(1), Rat(0));
  CHECK(n == Rat(1));
  CHECK(d == Rat(0));
}

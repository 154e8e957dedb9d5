#include <random>

#include "doctest.h"
#include "humbert/moebius.hpp"

using namespace humbert;

namespace {

using P = ProjPoint<Rat>;
using M = MobiusMap<Rat>;

const P inf = P::infinity();

Rat small_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
  return Rat(mpz_class(num(rng)), mpz_class(den(rng)));
}

M random_map(std::mt19937_64& rng) {
  for (;;) {
    try {
      return M(small_rat(rng), small_rat(rng), small_rat(rng), small_rat(rng));
    } catch (const Error&) {
    }
  }
}

}  // namespace

TEST_CASE("points are canonical") {
  CHECK(P(Rat(2), Rat(4)) == P(Rat(1, 2)));
  CHECK(P(Rat(-3), Rat(0)) == inf);
  CHECK(inf.is_infinity());
  CHECK_THROWS_AS(P(Rat(0), Rat(0)), Error);
  CHECK_THROWS_AS((void)inf.value(), Error);
}

TEST_CASE("maps are canonical and act projectively") {
  const M inv(Rat(0), Rat(1), Rat(1), Rat(0));
  CHECK(M(Rat(0), Rat(3), Rat(3), Rat(0)) == inv);
  CHECK(inv.b() == Rat(1));
  CHECK(inv(P(Rat(0))) == inf);
  CHECK(inv(inf) == P(Rat(0)));
  CHECK(inv(P(Rat(2, 7))) == P(Rat(7, 2)));
  CHECK(M::identity()(P(Rat(5))) == P(Rat(5)));
  try {
    M(Rat(1), Rat(2), Rat(2), Rat(4));
    FAIL("singular matrix accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateMap);
  }
}

TEST_CASE("maps through three points") {
  const std::array<P, 3> std_frame{inf, P(Rat(0)), P(Rat(1))};
  CHECK(mob_from_triples(std_frame, std_frame) == M::identity());
  const M m = mob_from_triples({P(Rat(0)), inf, P(Rat(1))}, std_frame);
  CHECK(m == M(Rat(0), Rat(1), Rat(1), Rat(0)));
  try {
    mob_from_triples({P(Rat(0)), P(Rat(0)), P(Rat(1))}, std_frame);
    FAIL("repeated anchor accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateTriple);
  }

  std::mt19937_64 rng(21);
  for (int k = 0; k < 50; ++k) {
    std::array<P, 3> src{P(small_rat(rng)), P(small_rat(rng)), inf};
    std::array<P, 3> dst{P(small_rat(rng)), inf, P(small_rat(rng))};
    if (src[0] == src[1] || dst[0] == dst[2]) continue;
    if (k % 2 == 0) std::swap(src[0], src[2]);
    const M t = mob_from_triples(src, dst);
    for (int i = 0; i < 3; ++i) CHECK(t(src[static_cast<std::size_t>(i)]) == dst[static_cast<std::size_t>(i)]);
  }
}

TEST_CASE("orders") {
  CHECK(mob_order(M(Rat(0), Rat(1), Rat(1), Rat(0))) == 2);
  CHECK(mob_order(M(Rat(0), Rat(1), Rat(-1), Rat(1))) == 3);  // 1/(1-z)
  CHECK(mob_order(M(Rat(1), Rat(1), Rat(0), Rat(1))) == std::nullopt);
  CHECK(mob_order(M::identity()) == 1);
  const MobiusMap<GaussRat> rot(GaussRat::i(), GaussRat(0), GaussRat(0), GaussRat(1));
  CHECK(mob_order(rot) == 4);
}

TEST_CASE("group laws") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 50; ++k) {
    const M a = random_map(rng), b = random_map(rng), c = random_map(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * a.inverse() == M::identity());
    CHECK(a.inverse() * a == M::identity());
    const P p(small_rat(rng));
    CHECK((a * b)(p) == a(b(p)));
  }
}

TEST_CASE("cross ratio") {
  CHECK(cross_ratio(inf, P(Rat(0)), P(Rat(1)), P(Rat(7, 3))) == P(Rat(7, 3)));
  CHECK(cross_ratio(P(Rat(0)), inf, P(Rat(1)), P(Rat(2))) == P(Rat(1, 2)));
  CHECK_THROWS_AS(cross_ratio(P(Rat(1)), P(Rat(1)), inf, P(Rat(2))), Error);

  std::mt19937_64 rng(19);
  int checked = 0;
  for (int k = 0; k < 100; ++k) {
    const std::array<P, 4> pts{P(small_rat(rng)), P(small_rat(rng)), P(small_rat(rng)), P(small_rat(rng))};
    if (pts[0] == pts[1] || pts[0] == pts[2] || pts[1] == pts[2]) continue;
    const M t = random_map(rng);
    CHECK(cross_ratio(pts[0], pts[1], pts[2], pts[3]) == cross_ratio(t(pts[0]), t(pts[1]), t(pts[2]), t(pts[3])));
    ++checked;
  }
  CHECK(checked > 30);
}

TEST_CASE("approximate regime") {
  using PA = ProjPoint<ApproxC>;
  const std::array<PA, 3> std_frame{PA::infinity(), PA(ApproxC(0.0)), PA(ApproxC(1.0))};
  const MobiusMap<ApproxC> m = mob_from_triples({PA(ApproxC(0.0, 1.0)), PA(ApproxC(2.0)), PA(ApproxC(-1.0, 0.5))}, std_frame);
  CHECK(m(PA(ApproxC(0.0, 1.0))).is_infinity());
  CHECK(m(PA(ApproxC(2.0))) == PA(ApproxC(0.0)));
  CHECK(m(PA(ApproxC(-1.0, 0.5))) == PA(ApproxC(1.0)));
  CHECK(mob_order(MobiusMap<ApproxC>(ApproxC(std::polar(1.0, 2 * M_PI / 5)), ApproxC(0.0), ApproxC(0.0), ApproxC(1.0))) == 5);
}

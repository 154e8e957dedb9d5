#include <doctest.h>

#include <random>

#include "humbert/curve.hpp"

using namespace humbert;

namespace {

const GaussRat I = GaussRat::i();

ProjPoint5<GaussRat> example_point() { return {GaussRat(1), I, GaussRat(0), I, GaussRat(2) * I}; }

}  // namespace

TEST_CASE("membership and pi on the (2,5) model") {
  const QuadricModel<GaussRat> m(ParamPair<GaussRat>{GaussRat(2), GaussRat(5)});
  const auto pt = example_point();
  CHECK(is_on_curve(m, pt));
  CHECK(pi(pt) == ProjPoint<GaussRat>(GaussRat(1)));
  const ProjPoint5<GaussRat> off(GaussRat(1), I, GaussRat(Rat(1, 100)), I, GaussRat(2) * I);
  CHECK_FALSE(is_on_curve(m, off));
  for (const auto& h : sign_group()) {
    CHECK(is_on_curve(m, h_action(h, pt)));
    CHECK(pi(h_action(h, pt)) == pi(pt));
  }
  const ProjPoint5<GaussRat> at_inf(GaussRat(0), GaussRat(1), I, I, I);
  CHECK(is_on_curve(m, at_inf));
  CHECK(pi(at_inf).is_infinity());
}

TEST_CASE("canonical scaling") {
  const ProjPoint5<GaussRat> a(GaussRat(2), GaussRat(4) * I, GaussRat(0), GaussRat(2), GaussRat(6));
  CHECK(a[0] == GaussRat(1));
  CHECK(a[1] == GaussRat(2) * I);
  const ProjPoint5<GaussRat> b(GaussRat(0), GaussRat(-3), GaussRat(3) * I, GaussRat(0), GaussRat(0));
  CHECK(b[1] == GaussRat(1));
  CHECK(b[2] == GaussRat(0) - I);
  CHECK_THROWS(ProjPoint5<GaussRat>(GaussRat(0), GaussRat(0), GaussRat(0), GaussRat(0), GaussRat(0)));
}

TEST_CASE("sign group") {
  const auto& h = sign_group();
  REQUIRE(h.size() == 16);
  for (std::size_t a = 0; a < h.size(); ++a) {
    CHECK(h[a].signs[0] == 1);
    CHECK(h[a] * h[a] == h[0]);
    for (std::size_t b = a + 1; b < h.size(); ++b) CHECK_FALSE(h[a] == h[b]);
  }
  CHECK(SignElement::from({-1, 1, 1, 1, 1}) == SignElement::from({1, -1, -1, -1, -1}));
  const auto pt = example_point();
  CHECK(h_action(h[0], pt) == pt);
}

TEST_CASE("fibers: 16 generic, 8 on branch values") {
  const ParamPair<ApproxC> p{ApproxC(2), ApproxC(5)};
  const QuadricModel<ApproxC> m(p);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> d(-4, 4);
  for (int k = 0; k < 20; ++k) {
    const ApproxC t(d(rng), d(rng));
    const auto f = fiber(m, ProjPoint<ApproxC>(t));
    CHECK(f.size() == 16);
    for (const auto& pt : f) {
      CHECK(is_on_curve(m, pt));
      CHECK(pi(pt) == ProjPoint<ApproxC>(t));
      for (const auto& h : sign_group()) CHECK(pi(h_action(h, pt)) == pi(pt));
    }
    // simply transitive: the H-orbit of one point is the whole fiber
    std::vector<ProjPoint5<ApproxC>> orbit;
    for (const auto& h : sign_group()) {
      const auto q = h_action(h, f.front());
      CHECK(std::find(f.begin(), f.end(), q) != f.end());
      if (std::find(orbit.begin(), orbit.end(), q) == orbit.end()) orbit.push_back(q);
    }
    CHECK(orbit.size() == 16);
  }
  for (const ProjPoint<ApproxC>& b : {ProjPoint<ApproxC>::infinity(), ProjPoint<ApproxC>(ApproxC(0)),
                                      ProjPoint<ApproxC>(ApproxC(1)), ProjPoint<ApproxC>(ApproxC(2)),
                                      ProjPoint<ApproxC>(ApproxC(5))}) {
    const auto f = fiber(m, b);
    CHECK(f.size() == 8);
    for (const auto& pt : f) {
      CHECK(is_on_curve(m, pt));
      CHECK(pi(pt) == b);
    }
  }
}

TEST_CASE("exact fibers") {
  const QuadricModel<GaussRat> m(ParamPair<GaussRat>{GaussRat(2), GaussRat(5)});
  const auto f = fiber(m, ProjPoint<GaussRat>(GaussRat(1)));
  CHECK(f.size() == 8);
  CHECK(std::find(f.begin(), f.end(), example_point()) != f.end());
  CHECK(fiber(m, ProjPoint<GaussRat>::infinity()).size() == 8);
  // t = -3: x2² = 3 has no root in Q(i)
  try {
    fiber(m, ProjPoint<GaussRat>(GaussRat(-3)));
    FAIL("irrational fiber accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInExactField);
  }
  CHECK_THROWS_AS(QuadricModel<GaussRat>(ParamPair<GaussRat>{GaussRat(2), GaussRat(2)}), Error);
}

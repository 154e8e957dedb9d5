#include <complex>
#include <random>

#include "doctest.h"
#include "humbert/symmetry.hpp"

using namespace humbert;

namespace {

using PP = ParamPair<Rat>;
using M = MobiusMap<Rat>;

PP pair(long a, long b, long c = 1, long d = 1) { return {Rat(mpz_class(a), mpz_class(c)), Rat(mpz_class(b), mpz_class(d))}; }

PP random_pair(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-15, 15), den(1, 8);
  for (;;) {
    PP p{Rat(mpz_class(num(rng)), mpz_class(den(rng))), Rat(mpz_class(num(rng)), mpz_class(den(rng)))};
    if (p.in_torelli()) return p;
  }
}

// Five points normalized so that the first three go to (∞, 0, 1).
ParamPair<ApproxC> normalized(const std::array<std::complex<double>, 5>& pts) {
  using P = ProjPoint<ApproxC>;
  const auto m = mob_from_triples<ApproxC>({P(ApproxC(pts[0])), P(ApproxC(pts[1])), P(ApproxC(pts[2]))},
                                           {P::infinity(), P(ApproxC(0.0)), P(ApproxC(1.0))});
  return {m(P(ApproxC(pts[3]))).value(), m(P(ApproxC(pts[4]))).value()};
}

ParamPair<ApproxC> fifth_roots() {
  std::array<std::complex<double>, 5> z;
  for (int k = 0; k < 5; ++k) z[static_cast<std::size_t>(k)] = std::polar(1.0, 2 * M_PI * k / 5);
  return normalized(z);
}

const ParamPair<GaussRat> z4_pair{GaussRat(Rat(1), Rat(-1)), GaussRat(Rat(0), Rat(-1))};

}  // namespace

TEST_CASE("classification of hand-built groups") {
  CHECK(classify(std::vector<M>{M::identity()}) == IsoType::Trivial);
  const M inv(Rat(0), Rat(1), Rat(1), Rat(0));
  CHECK(classify(std::vector<M>{M::identity(), inv}) == IsoType::Z2);
  const M neg(Rat(-1), Rat(0), Rat(0), Rat(1));
  CHECK(classify(std::vector<M>{M::identity(), inv, neg, inv * neg}) == IsoType::Anomaly);  // Klein four
  const MobiusMap<GaussRat> rot(GaussRat::i(), GaussRat(0), GaussRat(0), GaussRat(1));
  std::vector<MobiusMap<GaussRat>> c4{MobiusMap<GaussRat>::identity(), rot, rot * rot, rot * rot * rot};
  CHECK(classify(c4) == IsoType::Z4);
  const M l(Rat(0), Rat(1), Rat(-1), Rat(1));  // 1/(1-z)
  std::vector<M> s3{M::identity(), inv, l, l * l, inv * l, l * inv};
  CHECK(classify(s3) == IsoType::D3);
  try {
    classify(std::vector<M>{M::identity(), l});
    FAIL("non-group accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAGroup);
  }
  CHECK_THROWS_AS(classify(std::vector<M>{inv}), Error);
}

TEST_CASE("symmetry of sample configurations") {
  const auto generic = symmetry_group(pair(2, 5));
  CHECK(generic.type == IsoType::Trivial);
  CHECK(generic.order() == 1);
  CHECK_FALSE(generic.quasiplatonic());

  const auto z2 = symmetry_group(pair(2, 1, 1, 2));
  CHECK(z2.type == IsoType::Z2);
  CHECK(detail::contains(z2.elements, M(Rat(0), Rat(1), Rat(1), Rat(0))));

  // z -> 3 - z preserves {inf, 0, 1, 2, 3}.
  const auto arith = symmetry_group(pair(2, 3));
  CHECK(arith.type == IsoType::Z2);
  CHECK(detail::contains(arith.elements, M(Rat(-1), Rat(3), Rat(0), Rat(1))));

  const auto z4 = symmetry_group(z4_pair);
  CHECK(z4.type == IsoType::Z4);
  CHECK(z4.quasiplatonic());

  CHECK_THROWS_AS(symmetry_group(pair(1, 3)), Error);
}

TEST_CASE("approximate configurations") {
  const auto d5 = symmetry_group(fifth_roots());
  CHECK(d5.type == IsoType::D5);
  CHECK(d5.order() == 10);

  const std::complex<double> w(0.5, std::sqrt(3.0) / 2);
  const auto d3b = symmetry_group(ParamPair<ApproxC>{ApproxC(w), ApproxC(std::conj(w))});
  CHECK(d3b.type == IsoType::D3);

  const auto z2 = symmetry_group(ParamPair<ApproxC>{ApproxC(2.0), ApproxC(0.5)});
  CHECK(z2.type == IsoType::Z2);
}

TEST_CASE("type is constant along orbits") {
  const HumbertGroup& g = HumbertGroup::instance();
  std::mt19937_64 rng(43);
  for (int k = 0; k < 10; ++k) {
    const auto& t = g[static_cast<std::size_t>(rng() % g.size())];
    CHECK(symmetry_invariance_check(pair(2, 1, 1, 2), t));
    CHECK(symmetry_invariance_check(pair(2, 5), t));
    CHECK(symmetry_invariance_check(z4_pair, t));
    CHECK(symmetry_invariance_check(fifth_roots(), t));
    CHECK(symmetry_invariance_check(random_pair(rng), t));
  }
}

TEST_CASE("randomized scan finds no anomaly") {
  std::mt19937_64 rng(47);
  for (int k = 0; k < 200; ++k) {
    const PP p = random_pair(rng);
    const auto report = symmetry_group(p);
    CHECK(report.type != IsoType::Anomaly);
    CHECK(orbit(p).size() * static_cast<std::size_t>(report.order()) == 120);
  }
}

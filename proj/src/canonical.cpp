#include "humbert/canonical.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "humbert/detail/upoly.hpp"

namespace humbert {

using detail::UPoly;

const std::array<AnharmonicMap, 6>& anharmonic_group() {
  static const std::array<AnharmonicMap, 6> g{{
      {"x", MobiusMap<Rat>(1, 0, 0, 1)},
      {"1/x", MobiusMap<Rat>(0, 1, 1, 0)},
      {"1-x", MobiusMap<Rat>(-1, 1, 0, 1)},
      {"x/(x-1)", MobiusMap<Rat>(1, 0, 1, -1)},
      {"1/(1-x)", MobiusMap<Rat>(0, 1, -1, 1)},
      {"(x-1)/x", MobiusMap<Rat>(1, -1, 1, 0)},
  }};
  return g;
}

RatFunc1 as_ratfunc(const MobiusMap<Rat>& m) { return RatFunc1::mobius(m.a(), m.b(), m.c(), m.d()); }

std::string_view u_tag_name(UTag t) {
  switch (t) {
    case UTag::Trivial: return "trivial";
    case UTag::Z2_T1: return "Z2_T1";
    case UTag::Z2_T2: return "Z2_T2";
    case UTag::Z2_T3: return "Z2_T3";
    case UTag::Z3: return "Z3";
    case UTag::S3: return "S3";
  }
  return "?";
}

SubgroupU subgroup_from_members(std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  using V = std::vector<std::size_t>;
  SubgroupU u;
  u.members = members;
  if (members == V{0}) {
    u.tag = UTag::Trivial;
  } else if (members == V{0, 1}) {
    u.tag = UTag::Z2_T1, u.generators = {1};
  } else if (members == V{0, 2}) {
    u.tag = UTag::Z2_T2, u.generators = {2};
  } else if (members == V{0, 3}) {
    u.tag = UTag::Z2_T3, u.generators = {3};
  } else if (members == V{0, 4, 5}) {
    u.tag = UTag::Z3, u.generators = {4};
  } else if (members == V{0, 1, 2, 3, 4, 5}) {
    u.tag = UTag::S3, u.generators = {1, 4};
  } else {
    std::string list;
    for (auto k : members) list += (list.empty() ? "" : ", ") + std::string(anharmonic_group()[k].name);
    fail(ErrorKind::NotASubgroup, "{" + list + "} is not a subgroup of the anharmonic group");
  }
  return u;
}

RatFunc1 q_ratfunc(const Rat& lambda) {
  require_admissible_lambda(lambda);
  const RatFunc1 x = RatFunc1::x();
  const RatFunc1 l(lambda);
  const RatFunc1 s = RatFunc1(Rat(1)) + l;
  return RatFunc1(Rat(-1)) * (l * x - RatFunc1(Rat(1))) * (x - l) / (s * s * x);
}

RatFunc2 q_symbolic() {
  const RatFunc2 z = RatFunc2::z(), w = RatFunc2::w();
  return RatFunc2(-1) * (w * z - RatFunc2(1)) * (z - w) / (pow(RatFunc2(1) + w, 2) * z);
}

namespace {

template <Field S>
bool excluded(const S& rho) {
  for (const S& bad : {S(0), S(1), S(-1), S(1) / S(2), S(2)}) {
    if (rho == bad) return true;
  }
  return is_zero(rho * rho - rho + S(1));
}

}  // namespace

bool exclusion_check(const Rat& rho) { return !excluded(rho); }
bool exclusion_check(const GaussRat& rho) { return !excluded(rho); }
bool exclusion_check(const ApproxC& rho) { return !excluded(rho); }

// ---------------------------------------------------------------------------

IntPoly minimal_polynomial(const GaussRat& x) {
  auto scale = [](std::vector<Rat> q) {
    mpz_class l = 1;
    for (const Rat& c : q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> out;
    for (const Rat& c : q) out.push_back(c.num() * (l / c.den()));
    return detail::primitive(UPoly(out)).c;
  };
  if (x.is_real()) return scale({Rat(0) - x.re(), Rat(1)});
  return scale({x.re() * x.re() + x.im() * x.im(), Rat(-2) * x.re(), Rat(1)});
}

IntPoly rho_polynomial(const IntPoly& lambda_minpoly) {
  const UPoly m(lambda_minpoly);
  if (m.degree() < 1) fail(ErrorKind::DegenerateValue, "the minimal polynomial of lambda must have degree >= 1");
  // (λ+1)² x - (λ-1)² as a polynomial in λ over Z[x], low degree first.
  const UPoly g0({-1, 1}), g1({2, 2}), g2({-1, 1});
  const std::array<UPoly, 3> g{g0, g1, g2};
  const int n = m.degree();
  const std::size_t size = static_cast<std::size_t>(n + 2);
  std::vector<std::vector<UPoly>> syl(size, std::vector<UPoly>(size));
  for (std::size_t i = 0; i < 2; ++i) {
    for (int j = 0; j <= n; ++j) syl[i][i + static_cast<std::size_t>(j)] = UPoly::constant(m.c[static_cast<std::size_t>(n - j)]);
  }
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    for (std::size_t j = 0; j <= 2; ++j) syl[2 + i][i + j] = g[2 - j];
  }
  const UPoly res = detail::bareiss_determinant(std::move(syl));
  if (res.degree() < 1) fail(ErrorKind::DegenerateValue, "rho is not algebraic over Q for this polynomial");
  return detail::squarefree_part(res).c;
}

SubgroupU compute_U(const IntPoly& rho_minpoly) {
  const UPoly mu(rho_minpoly);
  const int n = mu.degree();
  if (n < 1) fail(ErrorKind::DegenerateValue, "minimal polynomial of rho must have degree >= 1");
  std::vector<std::size_t> members;
  const auto& group = anharmonic_group();
  for (std::size_t k = 0; k < group.size(); ++k) {
    const auto& m = group[k].map;
    auto lin = [](const Rat& s, const Rat& t) { return UPoly({t.num(), s.num()}); };
    const UPoly top = lin(m.a(), m.b()), bottom = lin(m.c(), m.d());
    UPoly acc;
    for (int j = 0; j <= n; ++j) {
      acc = acc + pow(top, static_cast<unsigned>(j)) * pow(bottom, static_cast<unsigned>(n - j)) * mu.c[static_cast<std::size_t>(j)];
    }
    if (!acc.zero() && detail::divides_over_q(mu, acc)) members.push_back(k);
  }
  return subgroup_from_members(std::move(members));
}

SubgroupU compute_U(const GaussRat& rho) { return compute_U(minimal_polynomial(rho)); }

ApproxC evaluate(const IntPoly& m, const ApproxC& x) {
  ApproxC acc(0);
  for (auto it = m.rbegin(); it != m.rend(); ++it) acc = acc * x + ApproxC(it->get_d());
  return acc;
}

ApproxC select_root(const IntPoly& m, const ApproxC& near) {
  const UPoly p(m);
  const int n = p.degree();
  if (n < 1) fail(ErrorKind::DegenerateValue, "polynomial has no roots");
  std::vector<std::complex<double>> roots;
  if (n == 1) {
    roots.emplace_back(-p.c[0].get_d() / p.c[1].get_d());
  } else {
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    const double lc = p.lc().get_d();
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -p.c[static_cast<std::size_t>(i)].get_d() / lc;
    const Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    for (int i = 0; i < n; ++i) roots.push_back(es.eigenvalues()[i]);
  }
  // A few Newton steps tighten the eigenvalues.
  const UPoly dp = detail::derivative(p);
  for (auto& r : roots) {
    for (int it = 0; it < 3; ++it) {
      const std::complex<double> d = evaluate(dp.c, ApproxC(r)).value();
      if (std::abs(d) == 0.0) break;
      r -= evaluate(p.c, ApproxC(r)).value() / d;
    }
  }
  std::sort(roots.begin(), roots.end(), [&](auto a, auto b) {
    return std::abs(a - near.value()) < std::abs(b - near.value());
  });
  if (roots.size() > 1) {
    const double d1 = std::abs(roots[0] - near.value()), d2 = std::abs(roots[1] - near.value());
    if (d2 <= 2.0 * d1) {
      std::ostringstream msg;
      msg << "two roots are comparably close to the hint (" << d1 << " vs " << d2 << ")";
      fail(ErrorKind::AmbiguousRoot, msg.str());
    }
  }
  return ApproxC(roots[0]);
}

std::string poly_string(const IntPoly& m, std::string_view var) {
  Poly2 p = poly_from_univariate(m);
  return p.str(var, "w");
}

// ---------------------------------------------------------------------------

namespace {

std::string matrix_string(const MobiusMap<RatFunc2>& m) {
  auto s = [](const RatFunc2& f) { return f.str("a0", "a1"); };
  return "[[" + s(m.a()) + ", " + s(m.b()) + "], [" + s(m.c()) + ", " + s(m.d()) + "]]";
}

IdentityVerdict commute(const std::string& name, const RatFunc1& r, const RatFunc1& g) {
  const RatFunc1 lhs = compose(r, g), rhs = compose(g, r);
  return {name, lhs == rhs, lhs.str(), rhs.str()};
}

}  // namespace

std::vector<IdentityVerdict> verify_equivariance(const SubgroupU& u, std::optional<std::pair<int, int>> coefficients) {
  const auto& group = anharmonic_group();
  std::vector<IdentityVerdict> out;
  auto gname = [&](std::size_t k) { return std::string(group[k].name); };
  switch (u.tag) {
    case UTag::Trivial: break;
    case UTag::Z2_T1:
    case UTag::Z2_T2:
    case UTag::Z2_T3: {
      const Rat r = rational_point(u, Rat(3)).r;
      const std::size_t k = u.generators.front();
      const ProjPoint<Rat> image = group[k].map(ProjPoint<Rat>(r));
      const std::string shown = image.is_infinity() ? "inf" : to_string(image.value());
      out.push_back({"g(r) = r for g = " + gname(k), image == ProjPoint<Rat>(r), shown, to_string(r)});
      break;
    }
    case UTag::Z3: {
      using M = MobiusMap<RatFunc2>;
      const RatFunc2 a0 = RatFunc2::z(), a1 = RatFunc2::w();
      const M r(a1, a0, RatFunc2(0) - a0, a0 + a1);
      const M g(RatFunc2(0), RatFunc2(1), RatFunc2(-1), RatFunc2(1));
      const M lhs = r * g, rhs = g * r;
      out.push_back({"r o g = g o r for g = 1/(1-x), symbolic (a0, a1)", lhs == rhs, matrix_string(lhs), matrix_string(rhs)});
      if (coefficients) {
        const auto [c0, c1] = *coefficients;
        const RatFunc1 rc = RatFunc1::mobius(Rat(c1), Rat(c0), Rat(-c0), Rat(c0 + c1));
        out.push_back(commute("r o g = g o r for g = 1/(1-x), (a0, a1) = (" + std::to_string(c0) + ", " +
                                  std::to_string(c1) + ")",
                              rc, as_ratfunc(group[4].map)));
      }
      break;
    }
    case UTag::S3: {
      const RatFunc1 x = RatFunc1::x();
      const RatFunc1 r = x * (x - RatFunc1(2)) / (RatFunc1(1) - RatFunc1(2) * x);
      for (std::size_t k : u.generators) out.push_back(commute("r o g = g o r for g = " + gname(k), r, as_ratfunc(group[k].map)));
      break;
    }
  }
  return out;
}

std::vector<IdentityVerdict> q_identities_symbolic() {
  const RatFunc2 q = q_symbolic();
  const RatFunc2 z = RatFunc2::z(), w = RatFunc2::w(), one(1);
  std::vector<IdentityVerdict> out;
  auto check = [&](std::string name, const RatFunc2& lhs, const RatFunc2& rhs) {
    out.push_back({"symbolic: " + std::move(name), lhs == rhs, lhs.str("z", "lambda"), rhs.str("z", "lambda")});
  };
  check("Q(1/z) = Q(z)", compose(q, one / z, w), q);
  // Poles: the denominator vanishes at z = 0 while the numerator does not,
  // and the numerator has the larger z-degree.
  const RatFunc2 num0 = q.num().eval(RatFunc2(0), w), den0 = q.den().eval(RatFunc2(0), w);
  out.push_back({"symbolic: Q(0) = inf", den0.is_zero() && !num0.is_zero(),
                 den0.is_zero() && !num0.is_zero() ? "inf" : "finite", "inf"});
  const bool pole_inf = q.num().degree_z() > q.den().degree_z();
  out.push_back({"symbolic: Q(inf) = inf", pole_inf, pole_inf ? "inf" : "finite", "inf"});
  check("Q(lambda) = 0", compose(q, w, w), RatFunc2(0));
  check("Q(1/lambda) = 0", compose(q, one / w, w), RatFunc2(0));
  check("Q(1) = rho", compose(q, one, w), pow((w - one) / (w + one), 2));
  check("Q(-1) = 1", compose(q, RatFunc2(-1), w), one);
  return out;
}

// ---------------------------------------------------------------------------

std::string_view branch_name(Branch b) {
  switch (b) {
    case Branch::Z2: return "Z2";
    case Branch::Quasiplatonic: return "quasiplatonic";
    case Branch::TrivialSymmetry: return "trivial";
  }
  return "?";
}

std::string conclusion_text(Branch b) {
  switch (b) {
    case Branch::Z2:
      return "definable over its field of moduli: the rational point r is compatible with the Galois action "
             "on rho, which gives Weil's descent condition";
    case Branch::Quasiplatonic:
      return "definable over its field of moduli: quasi-platonic surfaces can be defined over their field of "
             "moduli (Wolfart)";
    case Branch::TrivialSymmetry:
      return "definable over its field of moduli: the curve has a divisor of odd degree and rational over K "
             "(Huggins' lemma); no construction is attempted";
  }
  return "";
}

Certificate<GaussRat> certificate(const ParamPair<GaussRat>& p) {
  Certificate<GaussRat> c = detail::start_certificate(p);
  if (c.branch != Branch::Z2) return c;
  c.normalized = normalize_z2(p);
  const GaussRat rho_value = rho(c.normalized->lambda);
  c.rho_minpoly = minimal_polynomial(rho_value);
  detail::finish_z2(c, c.normalized->lambda, rho_value, compute_U(*c.rho_minpoly));
  return c;
}

Certificate<ApproxC> certificate(const ParamPair<ApproxC>& p) {
  Certificate<ApproxC> c = detail::start_certificate(p);
  if (c.branch == Branch::Z2)
    fail(ErrorKind::NotInExactField,
         "the Z2 branch needs exact or algebraic data for lambda; pass its minimal polynomial");
  return c;
}

Certificate<ApproxC> certificate_algebraic(const IntPoly& lambda_minpoly, const ApproxC& near) {
  const ApproxC lambda = select_root(lambda_minpoly, near);
  const ParamPair<ApproxC> p{lambda, ApproxC(1) / lambda};
  Certificate<ApproxC> c = detail::start_certificate(p);
  if (c.branch != Branch::Z2) return c;
  c.normalized = NormalizedPair<ApproxC>{lambda, 0};
  const ApproxC rho_value = rho(lambda);
  c.rho_minpoly = rho_polynomial(lambda_minpoly);
  double scale = 0.0;
  for (std::size_t k = 0; k < c.rho_minpoly->size(); ++k)
    scale += std::abs((*c.rho_minpoly)[k].get_d()) * std::pow(rho_value.abs(), static_cast<double>(k));
  if (evaluate(*c.rho_minpoly, rho_value).abs() > 1e-6 * scale) fail(ErrorKind::InternalError, "rho is not a root of its computed polynomial");
  detail::finish_z2(c, lambda, rho_value, compute_U(*c.rho_minpoly));
  return c;
}

}  // namespace humbert

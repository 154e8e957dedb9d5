// Acceptance checks. Prints one PASS/FAIL line per criterion, preceded by
// indented detail lines; `--criterion N` runs a single one.

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "humbert/canonical.hpp"
#include "humbert/cli.hpp"
#include "humbert/curve.hpp"
#include "humbert/invariants.hpp"

using namespace humbert;

namespace {

using PQ = ParamPair<GaussRat>;

class Report {
 public:
  void check(bool ok, const std::string& what) {
    std::cout << "  [" << (ok ? "ok" : "FAILED") << "] " << what << '\n';
    ok_ = ok_ && ok;
  }
  bool ok() const { return ok_; }

 private:
  bool ok_ = true;
};

Rat small_rat(std::mt19937_64& rng, long h) {
  std::uniform_int_distribution<long> num(-h, h), den(1, h);
  return Rat(mpz_class(num(rng)), mpz_class(den(rng)));
}

PQ random_pair(std::mt19937_64& rng, long h) {
  for (;;) {
    PQ p{GaussRat(small_rat(rng, h), small_rat(rng, h / 3 + 1)), GaussRat(small_rat(rng, h), small_rat(rng, h / 3 + 1))};
    if (p.in_torelli()) return p;
  }
}

ParamPair<ApproxC> fifth_roots() {
  using P = ProjPoint<ApproxC>;
  std::array<ApproxC, 5> z;
  for (int k = 0; k < 5; ++k) z[static_cast<std::size_t>(k)] = ApproxC(std::polar(1.0, 2 * M_PI * k / 5));
  const auto m = mob_from_triples<ApproxC>({P(z[0]), P(z[1]), P(z[2])}, {P::infinity(), P(ApproxC(0)), P(ApproxC(1))});
  return {m(P(z[3])).value(), m(P(z[4])).value()};
}

// ---------------------------------------------------------------------------

bool criterion1(Report& r) {
  const auto& g = HumbertGroup::instance();
  r.check(g.size() == 120, "closure of {A, B} has " + std::to_string(g.size()) + " elements");
  const std::map<int, int> expected{{1, 1}, {2, 25}, {3, 20}, {4, 30}, {5, 24}, {6, 20}};
  std::ostringstream stats;
  for (const auto& [o, n] : g.order_statistics()) stats << ' ' << o << ':' << n;
  r.check(g.order_statistics() == expected, "element orders" + stats.str());
  std::size_t hits = 0;
  std::vector<bool> used(g.size(), false);
  for (const Perm5& s : all_permutations()) {
    const auto k = g.find(perm_map(s));
    if (k && !used[*k]) used[*k] = true, ++hits;
  }
  r.check(hits == 120, "cross-ratio permutation maps matched to distinct group elements: " + std::to_string(hits));
  return r.ok();
}

bool criterion2(Report& r) {
  const InvariantMap& j = invariant_map();
  for (const auto& [name, t] : {std::pair{"A", generator_A()}, std::pair{"B", generator_B()}}) {
    r.check(compose(j.j1, t.first, t.second) == j.j1 && compose(j.j2, t.first, t.second) == j.j2,
            std::string("j o ") + name + " = j exactly");
  }
  const Fixtures f = load_fixtures(default_fixture_dir());
  for (const auto& c : compare_with_fixtures(j, f)) {
    std::string what = c.name + ": " + std::string(verdict_name(c.verdict));
    if (c.first_difference)
      what += " (first difference at z^" + std::to_string(c.first_difference->z) + " w^" +
              std::to_string(c.first_difference->w) + ")";
    r.check(c.verdict != Verdict::Mismatch, what);
  }
  std::mt19937_64 rng(2024);
  int agree = 0;
  for (int k = 0; k < 25; ++k) {
    ParamPair<Rat> p;
    do p = {small_rat(rng, 9), small_rat(rng, 9)};
    while (!p.in_torelli());
    const auto v = moduli_field(p);
    const bool ok = v.j1 == f.p1.eval(p.z, p.w) / f.r1.eval(p.z, p.w) && v.j2 == f.p2.eval(p.z, p.w) / f.r2.eval(p.z, p.w);
    agree += ok;
  }
  r.check(agree == 25, "fixture quotients agree with j at " + std::to_string(agree) + "/25 random rational points");
  return r.ok();
}

bool criterion3(Report& r) {
  const auto& g = HumbertGroup::instance();
  std::mt19937_64 rng(3003);
  int same = 0, positives = 0;
  for (int k = 0; k < 20; ++k) {
    const PQ p = random_pair(rng, 9);
    const PQ q = k % 2 == 0 ? random_pair(rng, 9) : g[static_cast<std::size_t>(rng() % g.size())](p);
    const bool a = same_orbit(p, q).has_value(), b = equivalent_via_j(p, q);
    same += a == b;
    positives += a;
  }
  r.check(same == 20, "same_orbit and equivalent_via_j agree on " + std::to_string(same) + "/20 pairs (" +
                          std::to_string(positives) + " equivalent)");
  int generic = 0;
  for (int k = 0; k < 10; ++k) generic += orbit(random_pair(rng, 997)).size() == 120;
  r.check(generic == 10, "orbit size 120 for " + std::to_string(generic) + "/10 random generic pairs");
  int z2 = 0, tried = 0;
  while (tried < 5) {
    const GaussRat l(small_rat(rng, 50), small_rat(rng, 10));
    const PQ p{l, GaussRat(1) / l};
    if (!p.in_torelli() || l == GaussRat(-1)) continue;
    ++tried;
    z2 += orbit(p).size() == 60;
  }
  r.check(z2 == 5, "orbit size 60 for " + std::to_string(z2) + "/5 pairs (lambda, 1/lambda)");
  return r.ok();
}

bool criterion4(Report& r) {
  const PQ p23{GaussRat(2), GaussRat(3)};
  const PQ p2h{GaussRat(2), GaussRat(Rat(1, 2))};
  const PQ z4{GaussRat(Rat(1), Rat(-1)), GaussRat(Rat(0), Rat(-1))};
  const auto t23 = symmetry_group(p23).type;
  r.check(t23 == IsoType::Trivial, "(2,3) -> " + std::string(iso_name(t23)) + " (expected trivial)");
  const auto t2h = symmetry_group(p2h).type;
  r.check(t2h == IsoType::Z2, "(2,1/2) -> " + std::string(iso_name(t2h)));
  const auto tz4 = symmetry_group(z4).type;
  r.check(tz4 == IsoType::Z4, "(1-i,-i) -> " + std::string(iso_name(tz4)));
  const auto t5 = symmetry_group(fifth_roots()).type;
  r.check(t5 == IsoType::D5, "normalized fifth roots of unity -> " + std::string(iso_name(t5)));

  const auto& g = HumbertGroup::instance();
  std::mt19937_64 rng(404);
  bool constant = true;
  for (const PQ& p : {p23, p2h, z4}) {
    for (int k = 0; k < 10; ++k) constant = constant && symmetry_invariance_check(p, g[rng() % g.size()]);
  }
  for (int k = 0; k < 10; ++k) constant = constant && symmetry_invariance_check(fifth_roots(), g[rng() % g.size()]);
  r.check(constant, "type constant along 10 random orbit translates of each");

  int anomalies = 0;
  for (int k = 0; k < 200; ++k) anomalies += symmetry_group(random_pair(rng, 9)).type == IsoType::Anomaly;
  r.check(anomalies == 0, "ANOMALY count on a 200-pair exact scan: " + std::to_string(anomalies));
  return r.ok();
}

bool all_pass(const std::vector<IdentityVerdict>& v, Report& r) {
  bool ok = true;
  for (const auto& x : v) {
    r.check(x.pass, x.name + (x.pass ? "" : "   lhs: " + x.lhs + "   rhs: " + x.rhs));
    ok = ok && x.pass;
  }
  return ok;
}

bool criterion5(Report& r) {
  all_pass(q_identities_symbolic(), r);
  const auto z3 = verify_equivariance(subgroup_from_members({0, 4, 5}));
  r.check(z3.size() == 1, "Z3 check uses symbolic (a0, a1)");
  all_pass(z3, r);
  const auto s3 = verify_equivariance(subgroup_from_members({0, 1, 2, 3, 4, 5}));
  r.check(s3.size() == 2, "S3 checks against 1/x and 1/(1-x)");
  all_pass(s3, r);
  for (std::vector<std::size_t> m : {std::vector<std::size_t>{0, 1}, {0, 2}, {0, 3}}) all_pass(verify_equivariance(subgroup_from_members(m)), r);
  return r.ok();
}

bool criterion6(Report& r) {
  const GaussRat i = GaussRat::i();
  const QuadricModel<GaussRat> m(PQ{GaussRat(2), GaussRat(5)});
  const ProjPoint5<GaussRat> pt(GaussRat(1), i, GaussRat(0), i, GaussRat(2) * i);
  r.check(is_on_curve(m, pt), "[1:i:0:i:2i] lies on the (2,5) curve");
  r.check(pi(pt) == ProjPoint<GaussRat>(GaussRat(1)), "pi([1:i:0:i:2i]) = 1");

  const QuadricModel<ApproxC> ma(ParamPair<ApproxC>{ApproxC(2), ApproxC(5)});
  std::mt19937_64 rng(606);
  std::uniform_real_distribution<double> d(-6, 6);
  bool sixteen = true;
  std::vector<ProjPoint5<ApproxC>> samples;
  for (int k = 0; k < 20; ++k) {
    const auto f = fiber(ma, ProjPoint<ApproxC>(ApproxC(d(rng), d(rng))));
    sixteen = sixteen && f.size() == 16;
    for (const auto& q : f) sixteen = sixteen && is_on_curve(ma, q);
    samples.push_back(f[rng() % f.size()]);
  }
  r.check(sixteen, "20 sampled generic fibers have 16 points on the curve");
  bool eight = true;
  for (const auto& b : {ProjPoint<ApproxC>::infinity(), ProjPoint<ApproxC>(ApproxC(0)), ProjPoint<ApproxC>(ApproxC(1)),
                        ProjPoint<ApproxC>(ApproxC(2)), ProjPoint<ApproxC>(ApproxC(5))}) {
    eight = eight && fiber(ma, b).size() == 8;
  }
  r.check(eight, "branch fibers over {inf, 0, 1, 2, 5} have 8 points");
  bool invariant = true;
  for (const auto& q : samples) {
    for (const auto& h : sign_group()) invariant = invariant && pi(h_action(h, q)) == pi(q);
  }
  r.check(invariant && sign_group().size() == 16, "pi o h = pi for all 16 sign elements on 20 sampled points");
  return r.ok();
}

nlohmann::json run_json(const std::vector<std::string>& args, std::string& raw) {
  std::ostringstream out;
  run(args, out);
  raw = out.str();
  return nlohmann::json::parse(raw);
}

bool criterion7(Report& r) {
  auto certificate_of = [&](std::vector<std::string> args) {
    std::string first, second;
    const auto j = run_json(args, first);
    run_json(args, second);
    std::string label = "certificate";
    for (const auto& a : args) label += a == "certificate" ? "" : " " + a;
    r.check(first == second, label + ": byte-identical rerun");
    return std::pair{label, j};
  };
  {
    const auto [label, j] = certificate_of({"certificate", "2", "1/2"});
    bool pass = j.value("all_pass", false) && !j["identities"].empty();
    r.check(j["branch"] == "Z2" && j["rho"] == "1/9" && j["u"]["tag"] == "trivial" && j["r"] == "2" && pass,
            label + ": branch " + j["branch"].dump() + ", rho " + j["rho"].dump() + ", U " + j["u"]["tag"].dump() +
                ", r " + j["r"].dump() + ", identities all PASS: " + (pass ? "yes" : "no"));
  }
  {
    const auto [label, j] = certificate_of({"certificate", "2", "3"});
    r.check(j.value("branch", "") == "trivial",
            label + ": branch " + j["branch"].dump() + " (expected the trivial-symmetry citation branch)");
  }
  {
    const auto [label, j] = certificate_of({"certificate", "1-i", "-i"});
    r.check(j.value("branch", "") == "quasiplatonic", label + ": branch " + j["branch"].dump());
  }
  return r.ok();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion")->check(CLI::Range(1, 7));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<bool(Report&)>>> criteria{
      {"group reconstruction", criterion1},   {"invariant reconstruction", criterion2},
      {"orbit/invariant duality", criterion3}, {"symmetry classifier", criterion4},
      {"quotient and equivariance identities", criterion5}, {"curve model", criterion6},
      {"end-to-end certificate", criterion7},
  };
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    if (only != 0 && static_cast<std::size_t>(only) != k + 1) continue;
    Report rep;
    bool ok = false;
    try {
      ok = criteria[k].second(rep);
    } catch (const std::exception& e) {
      std::cout << "  [FAILED] exception: " << e.what() << '\n';
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].first << '\n';
    all = all && ok;
  }
  return all ? 0 : 1;
}

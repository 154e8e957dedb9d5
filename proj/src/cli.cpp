#include "humbert/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <ostream>

#include "humbert/canonical.hpp"
#include "humbert/curve.hpp"
#include "humbert/invariants.hpp"

namespace humbert {

namespace {

using Json = nlohmann::ordered_json;

// CLI11 reads "-i" or "-1/2" as options. Scalars that start with '-' are
// shielded with this prefix before parsing and restored afterwards.
constexpr char kShield = '\x1f';

bool looks_negative_scalar(const std::string& a) {
  return a.size() >= 2 && a[0] == '-' && (std::isdigit(static_cast<unsigned char>(a[1])) || a[1] == 'i' || a[1] == '.');
}

std::string unshield(std::string s) {
  if (!s.empty() && s[0] == kShield) s[0] = '-';
  return s;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <Field S>
S parse_scalar(const std::string& text) {
  if constexpr (std::is_same_v<S, GaussRat>) {
    return parse_gauss(unshield(text));
  } else {
    return parse_approx(unshield(text));
  }
}

template <Field S>
ParamPair<S> parse_pair(const std::vector<std::string>& v, std::size_t at = 0) {
  return {parse_scalar<S>(v.at(at)), parse_scalar<S>(v.at(at + 1))};
}

template <Field S>
Json pair_json(const ParamPair<S>& p) {
  return Json::array({to_string(p.z), to_string(p.w)});
}

template <Field S>
Json proj_json(const ProjPoint<S>& p) {
  return p.is_infinity() ? Json("inf") : Json(to_string(p.value()));
}

Json identities_json(const std::vector<IdentityVerdict>& ids) {
  Json out = Json::array();
  for (const auto& v : ids) {
    out.push_back({{"name", v.name}, {"verdict", v.pass ? "PASS" : "FAIL"}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  }
  return out;
}

template <Field S>
Json certificate_json(const Certificate<S>& c) {
  const auto& g = HumbertGroup::instance();
  Json j;
  j["branch"] = branch_name(c.branch);
  j["symmetry"] = iso_name(c.symmetry);
  j["normalized"] = c.normalized ? Json{{"lambda", to_string(c.normalized->lambda)},
                                        {"witness", g.word(c.normalized->witness)}}
                                 : Json(nullptr);
  j["rho"] = c.rho ? Json(to_string(*c.rho)) : Json(nullptr);
  j["rho_minpoly"] = c.rho_minpoly ? Json(poly_string(*c.rho_minpoly, "x")) : Json(nullptr);
  if (c.u) {
    Json members = Json::array();
    for (auto k : c.u->members) members.push_back(anharmonic_group()[k].name);
    j["u"] = {{"tag", u_tag_name(c.u->tag)}, {"members", members}};
  } else {
    j["u"] = nullptr;
  }
  j["r"] = c.r ? Json(to_string(c.r->r)) : Json(nullptr);
  j["z3_coefficients"] = c.r && c.r->coefficients ? Json::array({c.r->coefficients->first, c.r->coefficients->second})
                                                  : Json(nullptr);
  j["identities"] = identities_json(c.identities);
  j["all_pass"] = c.all_pass();
  j["conclusion"] = c.conclusion;
  return j;
}

IntPoly parse_coefficients(const std::string& text) {
  IntPoly out;
  std::string item;
  std::stringstream ss(unshield(text));
  while (std::getline(ss, item, ',')) {
    mpz_class v;
    if (item.empty() || v.set_str(item, 10) != 0) fail(ErrorKind::ParseError, "bad integer coefficient '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) fail(ErrorKind::ParseError, "empty coefficient list");
  return out;
}

struct Request {
  std::string command;
  std::vector<std::string> args;
  bool approx = false;
  bool count_only = false;
  std::string minpoly;
  std::string near;
  std::string fixtures;
};

void require_args(const Request& r, std::size_t n) {
  if (r.args.size() != n) {
    fail(ErrorKind::ParseError, r.command + " expects " + std::to_string(n) + " scalar arguments, got " +
                                    std::to_string(r.args.size()));
  }
}

template <Field S>
Json dispatch(const Request& r) {
  const auto& g = HumbertGroup::instance();
  if (r.command == "invariants") {
    require_args(r, 2);
    const auto m = moduli_field(parse_pair<S>(r.args));
    return {{"j1", to_string(m.j1)}, {"j2", to_string(m.j2)}, {"field_of_moduli", m.field_description()}};
  }
  if (r.command == "equivalent") {
    require_args(r, 4);
    const auto p = parse_pair<S>(r.args), q = parse_pair<S>(r.args, 2);
    const auto k = same_orbit(p, q);
    return {{"equivalent", k.has_value()}, {"witness", k ? Json(g.word(*k)) : Json(nullptr)}};
  }
  if (r.command == "orbit") {
    require_args(r, 2);
    const auto o = orbit(parse_pair<S>(r.args));
    Json j{{"count", o.size()}};
    if (!r.count_only) {
      Json pts = Json::array();
      for (const auto& q : o) pts.push_back(pair_json(q));
      j["orbit"] = pts;
    }
    return j;
  }
  if (r.command == "symmetry") {
    require_args(r, 2);
    const auto rep = symmetry_group(parse_pair<S>(r.args));
    return {{"order", rep.order()}, {"type", iso_name(rep.type)}, {"quasiplatonic", rep.quasiplatonic()}};
  }
  if (r.command == "normalize") {
    require_args(r, 2);
    const auto n = normalize_z2(parse_pair<S>(r.args));
    return {{"lambda", to_string(n.lambda)},
            {"pair", pair_json(ParamPair<S>{n.lambda, S(1) / n.lambda})},
            {"witness", g.word(n.witness)}};
  }
  if (r.command == "certificate") {
    if (!r.minpoly.empty() || !r.near.empty()) {
      if (r.minpoly.empty() || r.near.empty()) fail(ErrorKind::ParseError, "--minpoly and --near go together");
      require_args(r, 0);
      return certificate_json(certificate_algebraic(parse_coefficients(r.minpoly), parse_approx(unshield(r.near))));
    }
    require_args(r, 2);
    return certificate_json(certificate(parse_pair<S>(r.args)));
  }
  if (r.command == "fiber") {
    require_args(r, 3);
    const QuadricModel<S> m(parse_pair<S>(r.args));
    const std::string t_text = unshield(r.args[2]);
    const ProjPoint<S> t = t_text == "inf" ? ProjPoint<S>::infinity() : ProjPoint<S>(parse_scalar<S>(t_text));
    Json pts = Json::array();
    const auto f = fiber(m, t);
    for (const auto& pt : f) {
      Json coords = Json::array();
      for (int k = 0; k < 5; ++k) coords.push_back(to_string(pt[k]));
      pts.push_back(coords);
    }
    return {{"t", proj_json(t)}, {"count", f.size()}, {"points", pts}};
  }
  fail(ErrorKind::InternalError, "unhandled subcommand " + r.command);
}

Json verify_j(const Request& r, bool& ok) {
  const InvariantMap& m = invariant_map();
  const std::filesystem::path dir = r.fixtures.empty() ? default_fixture_dir() : std::filesystem::path(r.fixtures);
  const auto comparisons = compare_with_fixtures(m, load_fixtures(dir));
  Json cmp = Json::array();
  ok = true;
  for (const auto& c : comparisons) {
    ok = ok && c.verdict != Verdict::Mismatch;
    Json first = nullptr;
    if (c.first_difference) first = Json::array({c.first_difference->z, c.first_difference->w});
    cmp.push_back({{"name", c.name},
                   {"verdict", verdict_name(c.verdict)},
                   {"scale", c.verdict == Verdict::Mismatch ? Json(nullptr) : Json(to_string(c.scale))},
                   {"first_difference", first}});
  }
  Json inv;
  for (const auto& [name, t] : {std::pair{"A", generator_A()}, std::pair{"B", generator_B()}}) {
    const bool fixed = compose(m.j1, t.first, t.second) == m.j1 && compose(m.j2, t.first, t.second) == m.j2;
    ok = ok && fixed;
    inv[name] = fixed;
  }
  return {{"invariant_under", inv}, {"fixtures", cmp}, {"ok", ok}};
}

Json error_json(std::string_view kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

int run(const std::vector<std::string>& raw, std::ostream& out) {
  Request req;
  CLI::App app{"Humbert curve moduli toolkit", "humbert"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--approx", req.approx, "floating-point complex regime for all inputs");
  const std::vector<std::pair<std::string, std::string>> commands{
      {"invariants", "j-invariants and the field of moduli"},
      {"equivalent", "same orbit test with a witness word"},
      {"orbit", "the orbit under the order-120 group"},
      {"symmetry", "reduced automorphism group"},
      {"normalize", "orbit element of the form (lambda, 1/lambda)"},
      {"certificate", "field-of-moduli certificate"},
      {"verify-j", "compare the computed invariants with fixtures"},
      {"fiber", "points of the quadric model over t"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (name != "verify-j") sub->add_option("args", req.args, "scalars");
    if (name == "orbit") sub->add_flag("--count-only", req.count_only, "print only the orbit size");
    if (name == "certificate") {
      sub->add_option("--minpoly", req.minpoly, "integer coefficients of the minimal polynomial of lambda, constant first");
      sub->add_option("--near", req.near, "approximate lambda selecting the root");
    }
    if (name == "verify-j") sub->add_option("--fixtures", req.fixtures, "fixture directory");
  }

  std::vector<std::string> args;
  for (const std::string& a : raw) args.push_back(looks_negative_scalar(a) ? kShield + a.substr(1) : a);
  std::reverse(args.begin(), args.end());  // CLI11 consumes from the back

  try {
    if (const char* eps = std::getenv("HUMBERT_EPS")) {
      char* end = nullptr;
      const double v = std::strtod(eps, &end);
      if (end == eps || *end != '\0' || !(v > 0.0)) throw UsageError("HUMBERT_EPS must be a positive number");
      set_default_tolerance(v);
    }
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    out << error_json("UsageError", e.what()).dump() << '\n';
    return 2;
  } catch (const UsageError& e) {
    out << error_json("UsageError", e.what()).dump() << '\n';
    return 2;
  }
  req.command = app.get_subcommands().front()->get_name();

  try {
    Json result;
    int code = 0;
    if (req.command == "verify-j") {
      bool ok = true;
      result = verify_j(req, ok);
      code = ok ? 0 : 1;
    } else {
      result = req.approx ? dispatch<ApproxC>(req) : dispatch<GaussRat>(req);
    }
    out << result.dump() << '\n';
    return code;
  } catch (const Error& e) {
    out << error_json(kind_name(e.kind()), e.what()).dump() << '\n';
    return e.kind() == ErrorKind::ParseError ? 2 : 1;
  }
}

}  // namespace humbert

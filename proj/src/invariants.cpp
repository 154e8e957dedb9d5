#include "humbert/invariants.hpp"

#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

#include "humbert/detail/parallel.hpp"

namespace humbert {

RatFunc2 tree_sum(std::vector<RatFunc2> terms) {
  if (terms.empty()) return RatFunc2();
  while (terms.size() > 1) {
    const std::size_t half = terms.size() / 2;
    std::vector<RatFunc2> next((terms.size() + 1) / 2);
    detail::parallel_for(half, [&](std::size_t k) { next[k] = terms[2 * k] + terms[2 * k + 1]; });
    if (terms.size() % 2 == 1) next.back() = std::move(terms.back());
    terms = std::move(next);
  }
  return terms.front();
}

InvariantMap build_invariants() {
  const HumbertGroup& g = HumbertGroup::instance();
  std::vector<RatFunc2> t1(g.size()), t2(g.size());
  detail::parallel_for(g.size(), [&](std::size_t k) {
    t1[k] = pow(g[k].first, 4);
    t2[k] = pow(g[k].second, 2);
  });
  return {tree_sum(std::move(t1)), tree_sum(std::move(t2))};
}

const InvariantMap& invariant_map() {
  static const InvariantMap m = build_invariants();
  return m;
}

// ---------------------------------------------------------------------------

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  Poly2 parse() {
    Poly2 p = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::ParseError, "polynomial expression, column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool starts_factor() {
    const char c = peek();
    return c == '(' || c == 'z' || c == 'w' || std::isdigit(static_cast<unsigned char>(c));
  }

  Poly2 expr() {
    Poly2 acc = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      const Poly2 t = term();
      acc = c == '+' ? acc + t : acc - t;
    }
    return acc;
  }

  Poly2 term() {
    bool neg = false;
    while (peek() == '-' || peek() == '+') neg ^= s_[pos_++] == '-';
    Poly2 acc = power();
    for (;;) {
      if (peek() == '*') {
        ++pos_;
        acc = acc * power();
      } else if (starts_factor()) {
        acc = acc * power();
      } else {
        break;
      }
    }
    return neg ? -acc : acc;
  }

  Poly2 power() {
    const Poly2 base = primary();
    if (peek() != '^') return base;
    ++pos_;
    return pow(base, static_cast<int>(integer().get_si()));
  }

  Poly2 primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Poly2 inner = expr();
      if (peek() != ')') error("missing ')'");
      ++pos_;
      return inner;
    }
    if (c == 'z' || c == 'w') {
      ++pos_;
      return c == 'z' ? Poly2::z() : Poly2::w();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly2(Rat(integer()));
    error(c == '\0' ? "unexpected end" : "unexpected '" + std::string(1, c) + "'");
  }

  mpz_class integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected an integer");
    if (pos_ - start > 64) error("integer literal too long");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

[[noreturn]] void fixture_error(const std::filesystem::path& file, const std::string& what) {
  fail(ErrorKind::FixtureError, file.string() + ": " + what);
}

}  // namespace

Poly2 parse_poly(std::string_view text) { return ExprParser(text).parse(); }

Poly2 read_fixture(const std::filesystem::path& file, std::string_view name) {
  std::ifstream in(file);
  if (!in) fixture_error(file, "cannot open");
  std::string header;
  if (!std::getline(in, header)) fixture_error(file, "empty file");
  while (!header.empty() && std::isspace(static_cast<unsigned char>(header.back()))) header.pop_back();
  if (header != name) fixture_error(file, "header '" + header + "' does not name " + std::string(name));

  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  }
  if (lines.empty()) fixture_error(file, "no polynomial data");

  static const std::regex row(R"(\s*(\d+)\s+(\d+)\s+(-?\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(lines.front(), m, row)) {
    std::string joined;
    for (const auto& l : lines) joined += l + " ";
    try {
      return parse_poly(joined);
    } catch (const Error& e) {
      fixture_error(file, e.what());
    }
  }
  Poly2::Terms terms;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    if (!std::regex_match(lines[k], m, row)) fixture_error(file, "malformed monomial line " + std::to_string(k + 2));
    const Monomial mono{std::stoi(m[1]), std::stoi(m[2])};
    if (terms.contains(mono)) fixture_error(file, "repeated monomial on line " + std::to_string(k + 2));
    terms.emplace(mono, mpz_class(m[3].str()));
  }
  return Poly2::from_terms(std::move(terms));
}

std::filesystem::path default_fixture_dir() { return std::filesystem::path(HUMBERT_DATA_DIR) / "fixtures"; }

Fixtures load_fixtures(const std::filesystem::path& dir) {
  return {read_fixture(dir / "P1.txt", "P1"), read_fixture(dir / "R1.txt", "R1"), read_fixture(dir / "P2.txt", "P2"),
          read_fixture(dir / "R2.txt", "R2")};
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::ExactMatch: return "EXACT_MATCH";
    case Verdict::Proportional: return "PROPORTIONAL";
    case Verdict::Mismatch: return "MISMATCH";
  }
  return "MISMATCH";
}

PolyComparison compare_poly(std::string name, const Poly2& computed, const Poly2& fixture) {
  PolyComparison out;
  out.name = std::move(name);
  if (computed == fixture) {
    out.verdict = Verdict::ExactMatch;
    out.scale = Rat(1);
    return out;
  }
  if (computed.is_zero() || fixture.is_zero()) {
    out.first_difference = computed.is_zero() ? fixture.leading_monomial() : computed.leading_monomial();
    return out;
  }
  const Rat scale = computed.leading_coefficient() / fixture.leading_coefficient();
  const Poly2 diff = computed - fixture * scale;
  if (diff.is_zero()) {
    out.verdict = Verdict::Proportional;
    out.scale = scale;
    return out;
  }
  // First monomial where the two disagree, either in support or value.
  auto ci = computed.terms().begin(), fi = fixture.terms().begin();
  const GrlexGreater before;
  for (;;) {
    const bool c_end = ci == computed.terms().end(), f_end = fi == fixture.terms().end();
    if (c_end || f_end) {
      out.first_difference = c_end ? fi->first : ci->first;
      break;
    }
    if (!(ci->first == fi->first)) {
      out.first_difference = before(ci->first, fi->first) ? ci->first : fi->first;
      break;
    }
    if (computed.coefficient(ci->first) != fixture.coefficient(fi->first) * scale) {
      out.first_difference = ci->first;
      break;
    }
    ++ci;
    ++fi;
  }
  return out;
}

std::vector<PolyComparison> compare_with_fixtures(const InvariantMap& m, const Fixtures& f) {
  return {compare_poly("P1", m.j1.num(), f.p1), compare_poly("R1", m.j1.den(), f.r1),
          compare_poly("P2", m.j2.num(), f.p2), compare_poly("R2", m.j2.den(), f.r2)};
}

}  // namespace humbert

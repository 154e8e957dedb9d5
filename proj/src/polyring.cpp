#include "humbert/polyring.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "humbert/detail/upoly.hpp"

namespace humbert {

using detail::UPoly;

namespace {

enum class Var { Z, W };

// Bivariate polynomial seen as a polynomial in the main variable with
// coefficients in Z[other variable]; index k multiplies main^k.
struct RPoly {
  std::vector<UPoly> c;

  bool zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const UPoly& lc() const { return c.back(); }
  void trim() {
    while (!c.empty() && c.back().zero()) c.pop_back();
  }
};

RPoly to_rpoly(const Poly2& p, Var main) {
  RPoly r;
  for (const auto& [m, coeff] : p.terms()) {
    const int outer = main == Var::Z ? m.z : m.w;
    const int inner = main == Var::Z ? m.w : m.z;
    if (static_cast<int>(r.c.size()) <= outer) r.c.resize(static_cast<std::size_t>(outer) + 1);
    UPoly& u = r.c[static_cast<std::size_t>(outer)];
    if (static_cast<int>(u.c.size()) <= inner) u.c.resize(static_cast<std::size_t>(inner) + 1);
    u.c[static_cast<std::size_t>(inner)] = coeff;
  }
  for (auto& u : r.c) u.trim();
  r.trim();
  return r;
}

Poly2 from_rpoly(const RPoly& r, Var main) {
  Poly2::Terms terms;
  for (std::size_t outer = 0; outer < r.c.size(); ++outer) {
    const UPoly& u = r.c[outer];
    for (std::size_t inner = 0; inner < u.c.size(); ++inner) {
      if (u.c[inner] == 0) continue;
      const int o = static_cast<int>(outer), i = static_cast<int>(inner);
      terms.emplace(main == Var::Z ? Monomial{o, i} : Monomial{i, o}, u.c[inner]);
    }
  }
  return Poly2::from_terms(std::move(terms));
}

UPoly rcontent(const RPoly& r) {
  UPoly g;
  for (const auto& u : r.c) {
    if (u.zero()) continue;
    g = detail::gcd(g, u);
    if (g.degree() == 0 && g.lc() == 1) break;
  }
  return g;
}

RPoly rdivexact(const RPoly& r, const UPoly& s) {
  if (s.degree() == 0 && s.lc() == 1) return r;
  RPoly q;
  q.c.reserve(r.c.size());
  for (const auto& u : r.c) q.c.push_back(u.zero() ? u : detail::divexact(u, s));
  return q;
}

RPoly rprimitive(const RPoly& r) {
  if (r.zero()) return r;
  return rdivexact(r, rcontent(r));
}

RPoly rprem(const RPoly& a, const RPoly& b) {
  RPoly r = a;
  const int db = b.degree();
  if (r.degree() < db) return r;
  int e = r.degree() - db + 1;
  const UPoly& lb = b.lc();
  while (!r.zero() && r.degree() >= db) {
    const int shift = r.degree() - db;
    const UPoly lr = r.lc();
    for (auto& u : r.c) u = u * lb;
    for (int k = 0; k <= db; ++k) {
      auto& slot = r.c[static_cast<std::size_t>(k + shift)];
      slot = slot - lr * b.c[static_cast<std::size_t>(k)];
    }
    r.trim();
    --e;
  }
  if (e > 0 && !r.zero()) {
    const UPoly f = detail::pow(lb, static_cast<unsigned>(e));
    for (auto& u : r.c) u = u * f;
  }
  return r;
}

bool rtry_divexact(const RPoly& a, const RPoly& b, RPoly& q) {
  RPoly r = a;
  const int db = b.degree();
  if (r.zero()) {
    q = RPoly{};
    return true;
  }
  if (r.degree() < db) return false;
  q.c.assign(static_cast<std::size_t>(r.degree() - db + 1), UPoly());
  while (!r.zero() && r.degree() >= db) {
    const int shift = r.degree() - db;
    UPoly t;
    if (!detail::try_divexact(r.lc(), b.lc(), t)) return false;
    for (int k = 0; k <= db; ++k) {
      auto& slot = r.c[static_cast<std::size_t>(k + shift)];
      slot = slot - t * b.c[static_cast<std::size_t>(k)];
    }
    q.c[static_cast<std::size_t>(shift)] = std::move(t);
    r.trim();
  }
  q.trim();
  return r.zero();
}

// Primitive-PRS gcd in Z[u][v], content handled recursively in Z[u].
RPoly rgcd(RPoly a, RPoly b) {
  const UPoly ca = rcontent(a), cb = rcontent(b);
  const UPoly cg = detail::gcd(ca, cb);
  a = rdivexact(a, ca);
  b = rdivexact(b, cb);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.zero()) {
    if (b.degree() == 0) {
      a = RPoly{{UPoly::constant(1)}};
      break;
    }
    RPoly r = rprem(a, b);
    a = std::move(b);
    b = rprimitive(r);
  }
  a = rprimitive(a);
  for (auto& u : a.c) u = u * cg;
  return a;
}

mpz_class rmax_norm(const RPoly& r) {
  mpz_class m = 0;
  for (const auto& u : r.c) m = std::max(m, detail::max_norm(u));
  return m;
}

mpz_class rint_content(const RPoly& r) {
  mpz_class g = 0;
  for (const auto& u : r.c) {
    for (const auto& x : u.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

RPoly rscale(const RPoly& r, const mpz_class& s, bool divide) {
  RPoly q = r;
  for (auto& u : q.c) u = divide ? detail::divexact(u, s) : u * s;
  return q;
}

// Integer-primitive with positive leading integer coefficient.
RPoly rint_primitive(const RPoly& r) {
  if (r.zero()) return r;
  mpz_class g = rint_content(r);
  if (r.lc().lc() < 0) g = -g;
  return rscale(r, g, true);
}

UPoly reval(const RPoly& r, const mpz_class& x) {
  std::vector<mpz_class> out;
  out.reserve(r.c.size());
  for (const auto& u : r.c) out.push_back(detail::evaluate(u, x));
  return UPoly(std::move(out));
}

RPoly rinterpolate(const UPoly& h, const mpz_class& x) {
  RPoly r;
  for (const auto& v : h.c) r.c.push_back(detail::interpolate_digits(v, x));
  r.trim();
  return r;
}

// Bivariate heuristic gcd; the inner variable is evaluated at one large
// integer and the univariate answer lifted back by balanced digits.
bool rheuristic_gcd(const RPoly& f0, const RPoly& g0, RPoly& h) {
  mpz_class common;
  const mpz_class cf = rint_content(f0), cg = rint_content(g0);
  mpz_gcd(common.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  const RPoly f = rscale(f0, common, true), g = rscale(g0, common, true);
  const mpz_class fn = rmax_norm(f), gn = rmax_norm(g);
  const mpz_class b = 2 * std::min(fn, gn) + 29;
  mpz_class x = std::max(mpz_class(std::min(b, mpz_class(99 * sqrt(b)))),
                         mpz_class(2 * std::min(mpz_class(fn / abs(f.lc().lc())), mpz_class(gn / abs(g.lc().lc()))) + 4));
  RPoly q;
  for (int attempt = 0; attempt < 6; ++attempt, x = 73794 * x * sqrt(sqrt(x)) / 27011) {
    const UPoly ff = reval(f, x), gg = reval(g, x);
    if (ff.zero() || gg.zero()) continue;
    UPoly hh, cff, cfg;
    detail::gcd_cofactors(ff, gg, hh, cff, cfg);
    RPoly cand = rint_primitive(rinterpolate(hh, x));
    if (!cand.zero() && rtry_divexact(f, cand, q) && rtry_divexact(g, cand, q)) {
      h = rscale(cand, common, false);
      return true;
    }
    for (const auto& [whole, other, cof] : {std::tuple{&f, &g, &cff}, std::tuple{&g, &f, &cfg}}) {
      const RPoly co = rinterpolate(*cof, x);
      if (co.zero() || !rtry_divexact(*whole, co, cand)) continue;
      cand = rint_primitive(cand);
      if (!cand.zero() && rtry_divexact(*other, cand, q)) {
        h = rscale(cand, common, false);
        return true;
      }
    }
  }
  return false;
}

Poly2 integral_numerator(const Poly2& p) {
  return p.is_integral() ? p : Poly2::from_terms(p.terms());
}

Var main_variable(const Poly2& a, const Poly2& b) {
  const int dz = std::max(a.degree_z(), b.degree_z());
  const int dw = std::max(a.degree_w(), b.degree_w());
  return dz >= dw ? Var::Z : Var::W;
}

bool is_one(const Poly2& p) { return p.is_constant() && p == Poly2(1); }

std::string power_str(std::string_view name, int e) {
  std::string s(name);
  if (e > 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Poly2

Poly2::Poly2(const Rat& c) {
  if (!c.is_zero()) {
    terms_.emplace(Monomial{0, 0}, c.num());
    den_ = c.den();
  }
}

Poly2 Poly2::monomial(Monomial m, const Rat& c) {
  Poly2 p;
  if (!c.is_zero()) {
    p.terms_.emplace(m, c.num());
    p.den_ = c.den();
  }
  return p;
}

Poly2 Poly2::from_terms(Terms terms, const mpz_class& denominator) {
  if (denominator == 0) fail(ErrorKind::DegenerateValue, "polynomial with zero denominator");
  Poly2 p;
  p.terms_ = std::move(terms);
  p.den_ = denominator;
  p.normalize();
  return p;
}

void Poly2::normalize() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
  if (den_ < 0) {
    den_ = -den_;
    for (auto& [m, c] : terms_) c = -c;
  }
  if (terms_.empty()) {
    den_ = 1;
    return;
  }
  if (den_ == 1) return;
  mpz_class g = den_;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  den_ /= g;
  for (auto& [m, c] : terms_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

bool Poly2::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

int Poly2::degree_z() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.z);
  return d;
}

int Poly2::degree_w() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.w);
  return d;
}

int Poly2::total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.total(); }

Rat Poly2::coefficient(Monomial m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : Rat(it->second, den_);
}

Monomial Poly2::leading_monomial() const {
  if (terms_.empty()) fail(ErrorKind::DegenerateValue, "leading monomial of zero");
  return terms_.begin()->first;
}

Rat Poly2::leading_coefficient() const {
  if (terms_.empty()) return Rat(0);
  return Rat(terms_.begin()->second, den_);
}

mpz_class Poly2::integer_content() const {
  mpz_class g = 0;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly2 Poly2::primitive_part() const {
  if (terms_.empty()) return *this;
  mpz_class g = integer_content();
  if (terms_.begin()->second < 0) g = -g;
  Poly2 p;
  p.terms_ = terms_;
  for (auto& [m, c] : p.terms_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return p;
}

Poly2 Poly2::operator-() const {
  Poly2 p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Poly2 operator+(const Poly2& a, const Poly2& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Poly2::Terms terms = a.terms_;
  if (a.den_ != b.den_) {
    for (auto& [m, c] : terms) c *= b.den_;
  }
  for (const auto& [m, c] : b.terms_) {
    auto& slot = terms[m];
    if (a.den_ != b.den_) mpz_addmul(slot.get_mpz_t(), c.get_mpz_t(), a.den_.get_mpz_t());
    else slot += c;
  }
  return Poly2::from_terms(std::move(terms), a.den_ == b.den_ ? a.den_ : mpz_class(a.den_ * b.den_));
}

Poly2 operator-(const Poly2& a, const Poly2& b) { return a + (-b); }

Poly2 operator*(const Poly2& a, const Poly2& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const int zdim = a.degree_z() + b.degree_z() + 1;
  const int wdim = a.degree_w() + b.degree_w() + 1;
  std::vector<mpz_class> grid(static_cast<std::size_t>(zdim) * static_cast<std::size_t>(wdim));
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      auto& slot = grid[static_cast<std::size_t>(ma.z + mb.z) * static_cast<std::size_t>(wdim) + static_cast<std::size_t>(ma.w + mb.w)];
      mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  }
  Poly2::Terms terms;
  for (int i = 0; i < zdim; ++i) {
    for (int j = 0; j < wdim; ++j) {
      auto& c = grid[static_cast<std::size_t>(i) * static_cast<std::size_t>(wdim) + static_cast<std::size_t>(j)];
      if (c != 0) terms.emplace_hint(terms.end(), Monomial{i, j}, std::move(c));
    }
  }
  return Poly2::from_terms(std::move(terms), a.den_ * b.den_);
}

Poly2 operator*(const Poly2& a, const Rat& s) {
  if (s.is_zero() || a.is_zero()) return {};
  Poly2::Terms terms = a.terms_;
  for (auto& [m, c] : terms) c *= s.num();
  return Poly2::from_terms(std::move(terms), a.den_ * s.den());
}

std::string Poly2::str(std::string_view zname, std::string_view wname) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    const mpz_class mag = abs(c);
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    std::string mono;
    if (m.z > 0) mono += power_str(zname, m.z);
    if (m.w > 0) mono += (mono.empty() ? "" : "*") + power_str(wname, m.w);
    if (mono.empty()) out << mag.get_str();
    else if (mag == 1) out << mono;
    else out << mag.get_str() << "*" << mono;
  }
  if (den_ != 1) return "(" + out.str() + ")/" + den_.get_str();
  return out.str();
}

Poly2 pow(const Poly2& p, int e) {
  if (e < 0) fail(ErrorKind::DegenerateValue, "negative polynomial power");
  Poly2 result(1);
  Poly2 base = p;
  while (e != 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

Poly2 divide_exact(const Poly2& a, const Poly2& b) {
  if (b.is_zero()) fail(ErrorKind::DegenerateValue, "division by the zero polynomial");
  if (a.is_zero()) return {};
  const Poly2 na = integral_numerator(a);
  const Poly2 nb = integral_numerator(b);
  const mpz_class cb = nb.integer_content();
  const Poly2 pb = Poly2::from_terms(nb.terms(), cb);  // content stripped, integral
  RPoly q;
  if (!rtry_divexact(to_rpoly(na, Var::Z), to_rpoly(pb, Var::Z), q))
    fail(ErrorKind::InternalError, "inexact polynomial division");
  // a / b = (na / pb) * b.den / (cb * a.den)
  return from_rpoly(q, Var::Z) * Rat(b.denominator(), cb * a.denominator());
}

Poly2 gcd(const Poly2& a, const Poly2& b) {
  if (a.is_zero() && b.is_zero()) fail(ErrorKind::DegenerateValue, "gcd(0, 0)");
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  if (a.is_constant() || b.is_constant()) return Poly2(1);
  const Poly2 pa = a.primitive_part(), pb = b.primitive_part();
  if (pa == pb) return pa;
  const Var v = main_variable(pa, pb);
  const RPoly ra = to_rpoly(pa, v), rb = to_rpoly(pb, v);
  RPoly h;
  if (!rheuristic_gcd(ra, rb, h)) h = rgcd(ra, rb);
  return from_rpoly(h, v).primitive_part();
}

// ---------------------------------------------------------------------------
// RatFunc2

RatFunc2::RatFunc2(const Poly2& p) : RatFunc2(Coprime{}, p, Poly2(1)) {}

RatFunc2::RatFunc2(const Poly2& num, const Poly2& den) {
  if (den.is_zero()) fail(ErrorKind::DegenerateValue, "rational function with zero denominator");
  Poly2 n = num, d = den;
  if (!n.is_zero()) {
    const Poly2 g = gcd(n, d);
    if (!g.is_constant()) {
      n = divide_exact(n, g);
      d = divide_exact(d, g);
    }
  }
  *this = RatFunc2(Coprime{}, std::move(n), std::move(d));
}

// Clears denominators, removes the joint integer content and fixes the sign;
// num and den must already be coprime over Q.
RatFunc2::RatFunc2(Coprime, Poly2 num, Poly2 den) {
  if (den.is_zero()) fail(ErrorKind::DegenerateValue, "rational function with zero denominator");
  if (num.is_zero()) {
    num_ = Poly2();
    den_ = Poly2(1);
    return;
  }
  const mpz_class nd = num.denominator(), dd = den.denominator();
  Poly2::Terms nt = num.terms(), dt = den.terms();
  if (nd != dd) {
    for (auto& [m, c] : nt) c *= dd;
    for (auto& [m, c] : dt) c *= nd;
  }
  mpz_class g = 0;
  for (const auto& [m, c] : nt) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  for (const auto& [m, c] : dt) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (dt.begin()->second < 0) g = -g;
  if (g != 1) {
    for (auto& [m, c] : nt) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    for (auto& [m, c] : dt) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  num_ = Poly2::from_terms(std::move(nt));
  den_ = Poly2::from_terms(std::move(dt));
}

RatFunc2 RatFunc2::operator-() const { return RatFunc2(Coprime{}, -num_, den_); }

RatFunc2 RatFunc2::inverse() const {
  if (num_.is_zero()) fail(ErrorKind::DegenerateValue, "division by zero");
  return RatFunc2(Coprime{}, den_, num_);
}

RatFunc2 operator+(const RatFunc2& a, const RatFunc2& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (is_one(a.den_)) return RatFunc2(RatFunc2::Coprime{}, a.num_ + b.num_, a.den_);
    const Poly2 n = a.num_ + b.num_;
    if (n.is_zero()) return {};
    const Poly2 h = gcd(n, a.den_);
    return RatFunc2(RatFunc2::Coprime{}, divide_exact(n, h), divide_exact(a.den_, h));
  }
  const Poly2 g = gcd(a.den_, b.den_);
  if (g.is_constant()) {
    return RatFunc2(RatFunc2::Coprime{}, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  const Poly2 bp = divide_exact(a.den_, g);
  const Poly2 dp = divide_exact(b.den_, g);
  Poly2 n = a.num_ * dp + b.num_ * bp;
  if (n.is_zero()) return {};
  Poly2 d = a.den_ * dp;
  const Poly2 h = gcd(n, g);
  if (!h.is_constant()) {
    n = divide_exact(n, h);
    d = divide_exact(d, h);
  }
  return RatFunc2(RatFunc2::Coprime{}, std::move(n), std::move(d));
}

RatFunc2 operator-(const RatFunc2& a, const RatFunc2& b) { return a + (-b); }

RatFunc2 operator*(const RatFunc2& a, const RatFunc2& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Poly2 an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!is_one(bd)) {
    const Poly2 g1 = gcd(an, bd);
    if (!g1.is_constant()) {
      an = divide_exact(an, g1);
      bd = divide_exact(bd, g1);
    }
  }
  if (!is_one(ad)) {
    const Poly2 g2 = gcd(bn, ad);
    if (!g2.is_constant()) {
      bn = divide_exact(bn, g2);
      ad = divide_exact(ad, g2);
    }
  }
  return RatFunc2(RatFunc2::Coprime{}, an * bn, ad * bd);
}

RatFunc2 operator/(const RatFunc2& a, const RatFunc2& b) { return a * b.inverse(); }

std::string RatFunc2::str(std::string_view zname, std::string_view wname) const {
  const std::string n = num_.str(zname, wname);
  if (is_one(den_)) return n;
  std::string d = den_.str(zname, wname);
  const bool wrap_num = num_.size() > 1;
  const bool wrap_den = den_.size() > 1 || d.find_first_of("*-") != std::string::npos;
  return (wrap_num ? "(" + n + ")" : n) + "/" + (wrap_den ? "(" + d + ")" : d);
}

RatFunc2 pow(const RatFunc2& f, int e) {
  if (e < 0) return pow(f.inverse(), -e);
  return RatFunc2(pow(f.num(), e), pow(f.den(), e));
}

RatFunc2 compose(const RatFunc2& f, const RatFunc2& g1, const RatFunc2& g2) {
  const int a = std::max(f.num().degree_z(), f.den().degree_z());
  const int b = std::max(f.num().degree_w(), f.den().degree_w());
  auto powers = [](const Poly2& p, int n) {
    std::vector<Poly2> out{Poly2(1)};
    for (int k = 1; k <= n; ++k) out.push_back(out.back() * p);
    return out;
  };
  const auto n1 = powers(g1.num(), a), d1 = powers(g1.den(), a);
  const auto n2 = powers(g2.num(), b), d2 = powers(g2.den(), b);
  std::vector<Poly2> zpart, wpart;
  for (int i = 0; i <= a; ++i) zpart.push_back(n1[static_cast<std::size_t>(i)] * d1[static_cast<std::size_t>(a - i)]);
  for (int j = 0; j <= b; ++j) wpart.push_back(n2[static_cast<std::size_t>(j)] * d2[static_cast<std::size_t>(b - j)]);
  // sum_i zpart[i] * (sum_j c_ij wpart[j])
  auto substitute = [&](const Poly2& p) {
    std::vector<Poly2> inner(static_cast<std::size_t>(a) + 1);
    for (const auto& [m, c] : p.terms())
      inner[static_cast<std::size_t>(m.z)] += wpart[static_cast<std::size_t>(m.w)] * Rat(c, p.denominator());
    Poly2 acc;
    for (int i = 0; i <= a; ++i)
      if (!inner[static_cast<std::size_t>(i)].is_zero()) acc += zpart[static_cast<std::size_t>(i)] * inner[static_cast<std::size_t>(i)];
    return acc;
  };
  const Poly2 den = substitute(f.den());
  if (den.is_zero()) fail(ErrorKind::DegenerateMap, "composition makes the denominator vanish");
  return RatFunc2(substitute(f.num()), den);
}

// ---------------------------------------------------------------------------
// RatFunc1

RatFunc1::RatFunc1(RatFunc2 f) : f_(std::move(f)) {
  if (f_.num().degree_w() > 0 || f_.den().degree_w() > 0)
    fail(ErrorKind::InternalError, "univariate rational function depends on w");
}

RatFunc1 RatFunc1::mobius(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  const Poly2 x = Poly2::z();
  return RatFunc1(RatFunc2(x * a + Poly2(b), x * c + Poly2(d)));
}

RatFunc1 compose(const RatFunc1& f, const RatFunc1& g) {
  return RatFunc1(compose(f.as_bivariate(), g.as_bivariate(), RatFunc2::w()));
}

std::string RatFunc1::str() const { return f_.str("x", "w"); }

std::vector<mpz_class> univariate_coefficients(const Poly2& p) {
  if (p.degree_w() > 0) fail(ErrorKind::InternalError, "polynomial depends on w");
  std::vector<mpz_class> out(static_cast<std::size_t>(std::max(p.degree_z(), 0)) + 1);
  for (const auto& [m, c] : p.terms()) out[static_cast<std::size_t>(m.z)] = c;
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

Poly2 poly_from_univariate(const std::vector<mpz_class>& coeffs) {
  Poly2::Terms terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] != 0) terms.emplace(Monomial{static_cast<int>(k), 0}, coeffs[k]);
  return Poly2::from_terms(std::move(terms));
}

}  // namespace humbert

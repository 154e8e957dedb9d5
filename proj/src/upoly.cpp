#include "humbert/detail/upoly.hpp"

#include <algorithm>
#include <utility>

#include "humbert/error.hpp"

namespace humbert::detail {

UPoly UPoly::monomial(int k, const mpz_class& v) {
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(k) + 1);
  coeffs[static_cast<std::size_t>(k)] = v;
  return UPoly(std::move(coeffs));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<mpz_class> r(std::max(a.c.size(), b.c.size()));
  for (std::size_t k = 0; k < a.c.size(); ++k) r[k] = a.c[k];
  for (std::size_t k = 0; k < b.c.size(); ++k) r[k] += b.c[k];
  return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a) {
  UPoly r = a;
  for (auto& x : r.c) x = -x;
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<mpz_class> r(std::max(a.c.size(), b.c.size()));
  for (std::size_t k = 0; k < a.c.size(); ++k) r[k] = a.c[k];
  for (std::size_t k = 0; k < b.c.size(); ++k) r[k] -= b.c[k];
  return UPoly(std::move(r));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.zero() || b.zero()) return {};
  std::vector<mpz_class> r(a.c.size() + b.c.size() - 1);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a.c[i].get_mpz_t(), b.c[j].get_mpz_t());
  }
  return UPoly(std::move(r));
}

UPoly operator*(const UPoly& a, const mpz_class& s) {
  if (s == 0) return {};
  UPoly r = a;
  for (auto& x : r.c) x *= s;
  return r;
}

UPoly pow(const UPoly& a, unsigned e) {
  UPoly result = UPoly::constant(1);
  UPoly base = a;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

UPoly derivative(const UPoly& a) {
  if (a.degree() < 1) return {};
  std::vector<mpz_class> r(a.c.size() - 1);
  for (std::size_t k = 1; k < a.c.size(); ++k) r[k - 1] = a.c[k] * static_cast<unsigned long>(k);
  return UPoly(std::move(r));
}

mpz_class content(const UPoly& a) {
  mpz_class g = 0;
  for (const auto& x : a.c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UPoly divexact(const UPoly& a, const mpz_class& s) {
  UPoly r = a;
  for (auto& x : r.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
  return r;
}

UPoly primitive(const UPoly& a) {
  if (a.zero()) return a;
  mpz_class g = content(a);
  if (a.lc() < 0) g = -g;
  return g == 1 ? a : divexact(a, g);
}

UPoly prem(const UPoly& a, const UPoly& b) {
  if (b.zero()) fail(ErrorKind::InternalError, "pseudo-remainder by zero");
  UPoly r = a;
  const int db = b.degree();
  if (r.degree() < db) return r;
  int e = r.degree() - db + 1;
  const mpz_class lb = b.lc();
  while (!r.zero() && r.degree() >= db) {
    const int shift = r.degree() - db;
    const mpz_class lr = r.lc();
    for (auto& x : r.c) x *= lb;
    for (int k = 0; k <= db; ++k) mpz_submul(r.c[static_cast<std::size_t>(k + shift)].get_mpz_t(), lr.get_mpz_t(), b.c[static_cast<std::size_t>(k)].get_mpz_t());
    r.trim();
    --e;
  }
  if (e > 0) {
    mpz_class f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    r = r * f;
  }
  return r;
}

bool try_divexact(const UPoly& a, const UPoly& b, UPoly& q) {
  if (b.zero()) fail(ErrorKind::InternalError, "division by zero polynomial");
  if (a.zero()) {
    q = UPoly();
    return true;
  }
  if (a.degree() < b.degree()) return false;
  UPoly r = a;
  std::vector<mpz_class> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const int db = b.degree();
  while (!r.zero() && r.degree() >= db) {
    const int shift = r.degree() - db;
    mpz_class t;
    if (!mpz_divisible_p(r.lc().get_mpz_t(), b.lc().get_mpz_t())) return false;
    mpz_divexact(t.get_mpz_t(), r.lc().get_mpz_t(), b.lc().get_mpz_t());
    quot[static_cast<std::size_t>(shift)] = t;
    for (int k = 0; k <= db; ++k) mpz_submul(r.c[static_cast<std::size_t>(k + shift)].get_mpz_t(), t.get_mpz_t(), b.c[static_cast<std::size_t>(k)].get_mpz_t());
    r.trim();
  }
  if (!r.zero()) return false;
  q = UPoly(std::move(quot));
  return true;
}

UPoly divexact(const UPoly& a, const UPoly& b) {
  UPoly q;
  if (!try_divexact(a, b, q)) fail(ErrorKind::InternalError, "inexact univariate division");
  return q;
}

bool divides_over_q(const UPoly& b, const UPoly& a) {
  if (b.zero()) return a.zero();
  if (b.degree() == 0) return true;
  return prem(a, b).zero();
}

UPoly prs_gcd(const UPoly& a, const UPoly& b) {
  if (a.zero() && b.zero()) return {};
  if (a.zero()) return b.lc() < 0 ? -b : b;
  if (b.zero()) return a.lc() < 0 ? -a : a;
  mpz_class c;
  mpz_class ca = content(a), cb = content(b);
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  UPoly x = primitive(a), y = primitive(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.zero()) {
    if (y.degree() == 0) {
      x = UPoly::constant(1);
      break;
    }
    UPoly r = prem(x, y);
    x = std::move(y);
    y = primitive(r);
  }
  return primitive(x) * c;
}

mpz_class max_norm(const UPoly& a) {
  mpz_class m = 0;
  for (const auto& x : a.c) {
    if (mpz_cmpabs(x.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(x);
  }
  return m;
}

mpz_class evaluate(const UPoly& a, const mpz_class& x) {
  mpz_class acc = 0;
  for (std::size_t k = a.c.size(); k-- > 0;) {
    acc *= x;
    acc += a.c[k];
  }
  return acc;
}

UPoly interpolate_digits(mpz_class h, const mpz_class& x) {
  std::vector<mpz_class> out;
  const mpz_class half = x / 2;
  mpz_class d;
  while (h != 0) {
    mpz_fdiv_r(d.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
    if (d > half) d -= x;
    out.push_back(d);
    h -= d;
    mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
  }
  return UPoly(std::move(out));
}

namespace {

constexpr int kHeuristicAttempts = 6;

mpz_class heuristic_start(const mpz_class& fn, const mpz_class& gn, const mpz_class& flc, const mpz_class& glc) {
  const mpz_class b = 2 * std::min(fn, gn) + 29;
  mpz_class root = sqrt(b);
  mpz_class x = std::min(b, mpz_class(99 * root));
  const mpz_class alt = 2 * std::min(mpz_class(fn / abs(flc)), mpz_class(gn / abs(glc))) + 4;
  return std::max(x, alt);
}

mpz_class heuristic_next(const mpz_class& x) {
  return 73794 * x * sqrt(sqrt(x)) / 27011;
}

bool normalize_sign(UPoly& h, UPoly& cff, UPoly& cfg) {
  if (h.lc() < 0) {
    h = -h;
    cff = -cff;
    cfg = -cfg;
  }
  return true;
}

}  // namespace

bool heuristic_gcd(const UPoly& f0, const UPoly& g0, UPoly& h, UPoly& cff, UPoly& cfg) {
  if (f0.zero() || g0.zero()) return false;
  mpz_class common;
  const mpz_class cf = content(f0), cg = content(g0);
  mpz_gcd(common.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  const UPoly f = divexact(f0, common), g = divexact(g0, common);
  if (f.degree() == 0 || g.degree() == 0) {
    h = UPoly::constant(common);
    cff = f;
    cfg = g;
    return true;
  }
  mpz_class x = heuristic_start(max_norm(f), max_norm(g), f.lc(), g.lc());
  for (int attempt = 0; attempt < kHeuristicAttempts; ++attempt, x = heuristic_next(x)) {
    const mpz_class ff = evaluate(f, x), gg = evaluate(g, x);
    if (ff == 0 || gg == 0) continue;
    mpz_class hv;
    mpz_gcd(hv.get_mpz_t(), ff.get_mpz_t(), gg.get_mpz_t());
    UPoly cand = primitive(interpolate_digits(hv, x));
    if (!cand.zero() && try_divexact(f, cand, cff) && try_divexact(g, cand, cfg)) {
      h = cand * common;
      return normalize_sign(h, cff, cfg);
    }
    const UPoly cf_cand = interpolate_digits(ff / hv, x);
    if (!cf_cand.zero() && try_divexact(f, cf_cand, cand) && try_divexact(g, cand, cfg)) {
      cff = cf_cand;
      h = cand * common;
      return normalize_sign(h, cff, cfg);
    }
    const UPoly cg_cand = interpolate_digits(gg / hv, x);
    if (!cg_cand.zero() && try_divexact(g, cg_cand, cand) && try_divexact(f, cand, cff)) {
      cfg = cg_cand;
      h = cand * common;
      return normalize_sign(h, cff, cfg);
    }
  }
  return false;
}

void gcd_cofactors(const UPoly& f, const UPoly& g, UPoly& h, UPoly& cff, UPoly& cfg) {
  if (heuristic_gcd(f, g, h, cff, cfg)) return;
  h = prs_gcd(f, g);
  cff = divexact(f, h);
  cfg = divexact(g, h);
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.zero() || b.zero()) return prs_gcd(a, b);
  UPoly h, cff, cfg;
  if (heuristic_gcd(a, b, h, cff, cfg)) return h;
  return prs_gcd(a, b);
}

UPoly squarefree_part(const UPoly& a) {
  if (a.degree() < 1) return primitive(a);
  const UPoly g = gcd(a, derivative(a));
  return primitive(divexact(primitive(a), primitive(g)));
}

UPoly bareiss_determinant(std::vector<std::vector<UPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return UPoly::constant(1);
  int sign = 1;
  UPoly prev = UPoly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].zero()) ++p;
      if (p == n) return {};
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = divexact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = UPoly();
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace humbert::detail

#include "humbert/exactnum.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>

namespace humbert {

namespace {

std::atomic<double> g_tolerance{1e-9};

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

[[noreturn]] void bad_scalar(std::string_view text) {
  fail(ErrorKind::ParseError, "malformed scalar '" + std::string(text) + "'");
}

// Sign-and-magnitude key: |numerator|, denominator, then non-negative first.
int rat_key_compare(const Rat& a, const Rat& b) {
  const int c1 = mpz_cmpabs(a.num().get_mpz_t(), b.num().get_mpz_t());
  if (c1 != 0) return c1 < 0 ? -1 : 1;
  const int c2 = cmp(a.den(), b.den());
  if (c2 != 0) return c2 < 0 ? -1 : 1;
  const bool na = a.sign() < 0, nb = b.sign() < 0;
  if (na != nb) return na ? 1 : -1;
  return 0;
}

bool rat_sqrt(const Rat& q, Rat& root) {
  if (q.sign() < 0) return false;
  if (!mpz_perfect_square_p(q.num().get_mpz_t()) || !mpz_perfect_square_p(q.den().get_mpz_t()))
    return false;
  root = Rat(sqrt(q.num()), sqrt(q.den()));
  return true;
}

double parse_double(std::string_view s, std::string_view whole) {
  if (s.empty()) bad_scalar(whole);
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) bad_scalar(whole);
  return v;
}

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // folds -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

double default_tolerance() { return g_tolerance.load(std::memory_order_relaxed); }

void set_default_tolerance(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps))
    fail(ErrorKind::ParseError, "tolerance must be a positive finite number");
  g_tolerance.store(eps, std::memory_order_relaxed);
}

bool ApproxC::is_zero() const { return !inf_ && approx_eq(*this, ApproxC(0.0), default_tolerance()); }

bool approx_eq(const ApproxC& a, const ApproxC& b, double eps) {
  if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
  const double scale = std::max({1.0, std::abs(a.v_), std::abs(b.v_)});
  return std::abs(a.v_ - b.v_) <= eps * scale;
}

double relative_distance(const ApproxC& a, const ApproxC& b) {
  if (a.is_infinity() || b.is_infinity())
    return (a.is_infinity() && b.is_infinity()) ? 0.0 : HUGE_VAL;
  const double scale = std::max({1.0, a.abs(), b.abs()});
  return std::abs(a.value() - b.value()) / scale;
}

int canonical_compare(const Rat& a, const Rat& b) { return rat_key_compare(a, b); }

int canonical_compare(const GaussRat& a, const GaussRat& b) {
  const int c = rat_key_compare(a.re(), b.re());
  return c != 0 ? c : rat_key_compare(a.im(), b.im());
}

int canonical_compare(const ApproxC& a, const ApproxC& b) {
  if (a.is_infinity() || b.is_infinity()) {
    if (a.is_infinity() == b.is_infinity()) return 0;
    return a.is_infinity() ? 1 : -1;
  }
  const double eps = default_tolerance();
  auto part = [eps](double x, double y) {
    const double scale = std::max({1.0, std::abs(x), std::abs(y)});
    if (std::abs(std::abs(x) - std::abs(y)) > eps * scale) return std::abs(x) < std::abs(y) ? -1 : 1;
    const bool nx = x < -eps * scale, ny = y < -eps * scale;
    if (nx != ny) return nx ? 1 : -1;
    return 0;
  };
  const int c = part(a.re(), b.re());
  return c != 0 ? c : part(a.im(), b.im());
}

Rat parse_rat(std::string_view text) {
  std::string_view s = text;
  bool neg = false;
  if (!s.empty() && s.front() == '-') {
    neg = true;
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view n = s.substr(0, slash);
  const std::string_view d = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(n) || !all_digits(d)) bad_scalar(text);
  mpz_class num{std::string(n)}, den{std::string(d)};
  if (neg) num = -num;
  return Rat(num, den);
}

GaussRat parse_gauss(std::string_view text) {
  if (text.empty()) bad_scalar(text);
  if (text.back() != 'i') return GaussRat(parse_rat(text));
  const std::string_view body = text.substr(0, text.size() - 1);
  const auto split = body.find_last_of("+-");
  std::string_view re_part, im_part;
  if (split == std::string_view::npos || split == 0) {
    im_part = body;
  } else {
    re_part = body.substr(0, split);
    im_part = body.substr(split);
  }
  Rat im;
  if (im_part.empty() || im_part == "+") {
    im = Rat(1);
  } else if (im_part == "-") {
    im = Rat(-1);
  } else {
    if (im_part.front() == '+') im_part.remove_prefix(1);
    if (im_part.empty() || im_part.front() == '+') bad_scalar(text);
    im = parse_rat(im_part);
  }
  Rat re = re_part.empty() ? Rat(0) : parse_rat(re_part);
  return {re, im};
}

ApproxC parse_approx(std::string_view text) {
  if (text.empty()) bad_scalar(text);
  if (text.back() != 'i') return ApproxC(parse_double(text, text));
  const std::string_view body = text.substr(0, text.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  std::string_view re_part, im_part = body;
  if (split != std::string_view::npos) {
    re_part = body.substr(0, split);
    im_part = body.substr(split);
  }
  double im = 0.0;
  if (im_part.empty() || im_part == "+") im = 1.0;
  else if (im_part == "-") im = -1.0;
  else im = parse_double(im_part, text);
  const double re = re_part.empty() ? 0.0 : parse_double(re_part, text);
  return {re, im};
}

std::string to_string(const Rat& q) {
  std::string s = q.num().get_str();
  if (q.den() != 1) s += "/" + q.den().get_str();
  return s;
}

std::string to_string(const GaussRat& g) {
  if (g.is_real()) return to_string(g.re());
  std::string im;
  if (g.im() == Rat(1)) im = "i";
  else if (g.im() == Rat(-1)) im = "-i";
  else im = to_string(g.im()) + "i";
  if (g.re().is_zero()) return im;
  const std::string sep = im.front() == '-' ? "" : "+";
  return to_string(g.re()) + sep + im;
}

std::string to_string(const ApproxC& a) {
  if (a.is_infinity()) return "inf";
  if (a.im() == 0.0) return format_double(a.re());
  std::string im = format_double(a.im());
  const std::string sep = im.front() == '-' ? "" : "+";
  return format_double(a.re()) + sep + im + "i";
}

bool try_sqrt(const GaussRat& x, GaussRat& root) {
  const Rat& a = x.re();
  const Rat& b = x.im();
  Rat r;
  if (b.is_zero()) {
    if (a.sign() >= 0) {
      if (!rat_sqrt(a, r)) return false;
      root = GaussRat(r);
    } else {
      if (!rat_sqrt(-a, r)) return false;
      root = GaussRat(Rat(0), r);
    }
    return true;
  }
  Rat modulus;
  if (!rat_sqrt(x.norm(), modulus)) return false;
  Rat re;
  if (!rat_sqrt((a + modulus) / Rat(2), re) || re.is_zero()) return false;
  root = GaussRat(re, b / (Rat(2) * re));
  return true;
}

bool try_sqrt(const ApproxC& x, ApproxC& root) {
  if (x.is_infinity()) return false;
  root = ApproxC(std::sqrt(x.value()));
  return true;
}

}  // namespace humbert

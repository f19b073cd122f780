#include "slab/quadratic.hpp"

#include <cctype>
#include <cmath>
#include <regex>

#include "slab/error.hpp"

namespace slab {

namespace {

// Writes n = s^2 * d with d square-free (up to trial division by all p with
// p^2 <= d, then a perfect-square extraction; unreachable composite square
// factors beyond 10^6 are accepted as-is at desk scale).
void extract_square(Int n, Int& s, Int& d) {
  s = 1;
  d = n;
  if (d <= 1) return;
  if (mpz_perfect_square_p(d.get_mpz_t())) {
    Int r = isqrt(d);
    s = r;
    d = 1;
    return;
  }
  const long kTrialBound = 1000000;
  for (Int p = 2; p * p <= d && p <= kTrialBound; ++p) {
    Int pp = p * p;
    while (mpz_divisible_p(d.get_mpz_t(), pp.get_mpz_t())) {
      d /= pp;
      s *= p;
    }
  }
  if (mpz_perfect_square_p(d.get_mpz_t())) {
    s *= isqrt(d);
    d = 1;
  }
}

// Shared radicand of two canonical values; rationals are compatible with any
// field, two distinct irrational radicands are not.
Int common_radicand(const QuadraticReal& x, const QuadraticReal& y) {
  if (x.is_rational()) return y.radicand();
  if (y.is_rational()) return x.radicand();
  require(x.radicand() == y.radicand(), "unsupported-field",
          "mixed radicands sqrt(" + x.radicand().get_str() + ") and sqrt(" +
              y.radicand().get_str() + ")");
  return x.radicand();
}

}  // namespace

QuadraticReal::QuadraticReal(Rat a, Rat b, Int D) : a_(std::move(a)), b_(std::move(b)), D_(std::move(D)) {
  require(D_ >= 0, "unsupported-field", "negative radicand");
  canonicalize();
}

void QuadraticReal::canonicalize() {
  if (sgn(b_) == 0) {
    D_ = 0;
    b_ = 0;
    return;
  }
  if (D_ == 0) {
    b_ = 0;
    return;
  }
  if (D_ == 1) {
    a_ += b_;
    b_ = 0;
    D_ = 0;
    return;
  }
  Int s, d;
  extract_square(D_, s, d);
  if (d <= 1) {  // the radicand was a perfect square
    a_ += b_ * Rat(s);
    b_ = 0;
    D_ = 0;
    return;
  }
  b_ *= Rat(s);
  D_ = d;
}

Rat QuadraticReal::as_rational() const {
  require(is_rational(), "unsupported-field", "value is irrational: " + str());
  return a_;
}

int QuadraticReal::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 against b^2 D. Equality is impossible for
  // canonical D (it would make sqrt(D) rational).
  Rat t = a_ * a_ - b_ * b_ * Rat(D_);
  int st = sgn(t);
  require(st != 0, "unsupported-field", "non-square-free radicand slipped through");
  return sa > 0 ? st : -st;
}

int qr_compare(const QuadraticReal& x, const QuadraticReal& y) { return (x - y).sign(); }

Int QuadraticReal::floor() const {
  if (is_rational()) return rat_floor(a_);
  Int s = isqrt(D_);
  Rat lo_r, hi_r;
  if (sgn(b_) > 0) {
    lo_r = a_ + b_ * Rat(s);
    hi_r = a_ + b_ * Rat(s + 1);
  } else {
    lo_r = a_ + b_ * Rat(s + 1);
    hi_r = a_ + b_ * Rat(s);
  }
  Int lo = rat_floor(lo_r);
  Int hi = rat_floor(hi_r) + 1;  // strictly above the value
  // Largest n in [lo, hi] with n <= *this, by exact bisection.
  while (lo < hi) {
    Int mid = (lo + hi + 1) / 2;
    if ((*this - QuadraticReal(mid)).sign() >= 0)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

QuadraticReal QuadraticReal::frac() const { return *this - QuadraticReal(floor()); }

QuadraticReal QuadraticReal::abs() const { return sign() >= 0 ? *this : -*this; }

double QuadraticReal::to_double() const {
  return rat_double(a_) + rat_double(b_) * std::sqrt(D_.get_d());
}

QuadraticReal QuadraticReal::operator-() const {
  QuadraticReal r;
  r.a_ = -a_;
  r.b_ = -b_;
  r.D_ = D_;
  return r;
}

QuadraticReal operator+(const QuadraticReal& x, const QuadraticReal& y) {
  Int D = common_radicand(x, y);
  return QuadraticReal(x.a_ + y.a_, x.b_ + y.b_, D);
}

QuadraticReal operator-(const QuadraticReal& x, const QuadraticReal& y) { return x + (-y); }

QuadraticReal operator*(const QuadraticReal& x, const QuadraticReal& y) {
  Int D = common_radicand(x, y);
  return QuadraticReal(x.a_ * y.a_ + x.b_ * y.b_ * Rat(D), x.a_ * y.b_ + x.b_ * y.a_, D);
}

QuadraticReal operator/(const QuadraticReal& x, const QuadraticReal& y) {
  require(y.sign() != 0, "invalid-arguments", "division by zero");
  Int D = common_radicand(x, y);
  // 1/(a+b*sqrt(D)) = (a-b*sqrt(D)) / (a^2 - b^2 D); the norm is nonzero for
  // nonzero canonical values.
  Rat norm = y.a_ * y.a_ - y.b_ * y.b_ * Rat(D);
  require(sgn(norm) != 0, "unsupported-field", "zero norm");
  QuadraticReal inv(y.a_ / norm, -y.b_ / norm, D);
  return x * inv;
}

bool operator==(const QuadraticReal& x, const QuadraticReal& y) {
  return x.a_ == y.a_ && x.b_ == y.b_ && x.D_ == y.D_;
}
bool operator!=(const QuadraticReal& x, const QuadraticReal& y) { return !(x == y); }
bool operator<(const QuadraticReal& x, const QuadraticReal& y) { return qr_compare(x, y) < 0; }
bool operator<=(const QuadraticReal& x, const QuadraticReal& y) { return qr_compare(x, y) <= 0; }
bool operator>(const QuadraticReal& x, const QuadraticReal& y) { return qr_compare(x, y) > 0; }
bool operator>=(const QuadraticReal& x, const QuadraticReal& y) { return qr_compare(x, y) >= 0; }

std::string QuadraticReal::str() const {
  if (is_rational()) return rational_str(a_);
  std::string out;
  if (sgn(a_) != 0) out += rational_str(a_);
  Rat ab = ::abs(b_);
  if (sgn(b_) < 0)
    out += "-";
  else if (!out.empty())
    out += "+";
  if (ab != 1) out += rational_str(ab) + "*";
  out += "sqrt(" + D_.get_str() + ")";
  return out;
}

QuadraticReal QuadraticReal::parse(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  static const std::regex rat_only(R"(^[+-]?\d+(?:/\d+)?$)");
  if (std::regex_match(t, rat_only)) return QuadraticReal(parse_rational(t));
  // Either "a+b*sqrt(D)" with a mandatory sign between the terms, or a lone
  // "b*sqrt(D)" term with an optional leading sign; b may be omitted when 1.
  static const std::regex with_sqrt(
      R"(^(?:([+-]?\d+(?:/\d+)?)([+-])|([+-])?)(?:(\d+(?:/\d+)?)\*)?sqrt\((\d+)\)$)");
  std::smatch m;
  require(std::regex_match(t, m, with_sqrt), "invalid-arguments",
          "cannot parse quadratic literal: " + s);
  Rat a = m[1].matched ? parse_rational(m[1].str()) : Rat(0);
  Rat b = m[4].matched ? parse_rational(m[4].str()) : Rat(1);
  std::string sign = m[2].matched ? m[2].str() : m[3].str();
  if (sign == "-") b = -b;
  Int D(m[5].str());
  return QuadraticReal(a, b, D);
}

}  // namespace slab

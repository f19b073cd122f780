#pragma once

#include <string>

#include "slab/rational.hpp"

namespace slab {

// Exact element a + b*sqrt(D) of a real quadratic field, or a rational when
// b = 0. Canonical form: D square-free and >= 2 whenever b != 0; D = 0 and
// b = 0 otherwise. All comparisons are exact integer arithmetic; no floating
// point is ever consulted for a decision.
class QuadraticReal {
public:
  QuadraticReal() : a_(0), b_(0), D_(0) {}
  QuadraticReal(const Rat& a) : a_(a), b_(0), D_(0) {}  // rationals embed
  QuadraticReal(const Int& a) : a_(Rat(a)), b_(0), D_(0) {}
  QuadraticReal(long a) : a_(a), b_(0), D_(0) {}
  QuadraticReal(int a) : a_(a), b_(0), D_(0) {}
  QuadraticReal(Rat a, Rat b, Int D);

  const Rat& rational_part() const { return a_; }
  const Rat& surd_coeff() const { return b_; }
  const Int& radicand() const { return D_; }
  bool is_rational() const { return sgn(b_) == 0; }
  Rat as_rational() const;  // requires is_rational()

  int sign() const;  // exact: -1, 0, +1
  Int floor() const;
  QuadraticReal frac() const;  // x - floor(x), in [0, 1)
  QuadraticReal abs() const;
  double to_double() const;  // diagnostics only, never used for decisions

  QuadraticReal operator-() const;
  friend QuadraticReal operator+(const QuadraticReal& x, const QuadraticReal& y);
  friend QuadraticReal operator-(const QuadraticReal& x, const QuadraticReal& y);
  friend QuadraticReal operator*(const QuadraticReal& x, const QuadraticReal& y);
  friend QuadraticReal operator/(const QuadraticReal& x, const QuadraticReal& y);

  friend bool operator==(const QuadraticReal& x, const QuadraticReal& y);
  friend bool operator!=(const QuadraticReal& x, const QuadraticReal& y);
  friend bool operator<(const QuadraticReal& x, const QuadraticReal& y);
  friend bool operator<=(const QuadraticReal& x, const QuadraticReal& y);
  friend bool operator>(const QuadraticReal& x, const QuadraticReal& y);
  friend bool operator>=(const QuadraticReal& x, const QuadraticReal& y);

  std::string str() const;  // "a+b*sqrt(D)" family; plain "p/q" when rational
  static QuadraticReal parse(const std::string& s);

private:
  Rat a_, b_;
  Int D_;
  void canonicalize();
};

// -1, 0, +1 of x - y.
int qr_compare(const QuadraticReal& x, const QuadraticReal& y);

}  // namespace slab

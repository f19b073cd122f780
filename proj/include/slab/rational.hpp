#pragma once

#include <gmpxx.h>

#include <string>

namespace slab {

// Exact integers and rationals. GMP keeps rationals canonical after
// canonicalize(): gcd(num, den) = 1 and den > 0. Every constructor path in
// this library canonicalizes.
using Int = mpz_class;
using Rat = mpq_class;

Int rat_floor(const Rat& x);
Rat make_rat(const Int& num, const Int& den);
Rat parse_rational(const std::string& s);  // "p" or "p/q", optional leading sign
std::string rational_str(const Rat& x);    // "p" or "p/q"
double rat_double(const Rat& x);
Int isqrt(const Int& n);  // floor(sqrt(n)), n >= 0

}  // namespace slab

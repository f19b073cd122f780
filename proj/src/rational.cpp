#include "slab/rational.hpp"

#include <cctype>

#include "slab/error.hpp"

namespace slab {

Int rat_floor(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rat make_rat(const Int& num, const Int& den) {
  require(den != 0, "invalid-arguments", "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rational(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (!t.empty() && t[0] == '+') t = t.substr(1);
  require(!t.empty(), "invalid-arguments", "empty rational literal");
  for (char c : t)
    require(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/',
            "invalid-arguments", "bad rational literal: " + s);
  Rat r;
  require(mpq_set_str(r.get_mpq_t(), t.c_str(), 10) == 0 && sgn(Rat(r.get_den())) > 0,
          "invalid-arguments", "bad rational literal: " + s);
  r.canonicalize();
  return r;
}

std::string rational_str(const Rat& x) { return x.get_str(); }

double rat_double(const Rat& x) { return x.get_d(); }

Int isqrt(const Int& n) {
  require(n >= 0, "invalid-arguments", "isqrt of negative value");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace slab

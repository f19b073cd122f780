#include "slab/contfrac.hpp"

#include <map>
#include <sstream>

#include "slab/error.hpp"

namespace slab {

std::vector<Int> CFExpansion::preperiod() const {
  return {quotients.begin(), quotients.begin() + static_cast<long>(preperiod_len)};
}

std::vector<Int> CFExpansion::period() const {
  if (!periodic) return {};
  return {quotients.begin() + static_cast<long>(preperiod_len), quotients.end()};
}

bool CFExpansion::has_term(std::size_t k) const { return periodic || k < quotients.size(); }

Int CFExpansion::term(std::size_t k) const {
  if (k < quotients.size()) return quotients[k];
  require(periodic, "invalid-arguments", "continued fraction term out of range");
  std::size_t m = quotients.size() - preperiod_len;
  return quotients[preperiod_len + (k - preperiod_len) % m];
}

std::string CFExpansion::json() const {
  std::ostringstream os;
  os << "{\"preperiod\": [";
  for (std::size_t i = 0; i < preperiod_len; ++i)
    os << (i ? ", " : "") << quotients[i].get_str();
  os << "], \"period\": ";
  if (periodic) {
    os << "[";
    for (std::size_t i = preperiod_len; i < quotients.size(); ++i)
      os << (i > preperiod_len ? ", " : "") << quotients[i].get_str();
    os << "]";
  } else {
    os << "null";
  }
  os << ", \"terminated\": " << (terminated ? "true" : "false") << "}";
  return os.str();
}

CFExpansion cf_expand(const QuadraticReal& x, std::size_t max_terms) {
  require(x.sign() > 0, "invalid-arguments", "continued fraction requires x > 0");
  require(max_terms >= 1, "invalid-arguments", "max_terms must be >= 1");
  CFExpansion cf;
  if (x.is_rational()) {
    // Euclidean algorithm; the canonical form (last quotient >= 2 unless the
    // whole expansion is a single term) falls out automatically.
    Int p = Int(x.as_rational().get_num()), q = Int(x.as_rational().get_den());
    while (q != 0 && cf.quotients.size() < max_terms) {
      Int a, r;
      mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      cf.quotients.push_back(a);
      p = q;
      q = r;
    }
    cf.preperiod_len = cf.quotients.size();
    if (q == 0)
      cf.terminated = true;
    else
      cf.truncated = true;
    return cf;
  }
  // Lagrange: the sequence of complete quotients of a quadratic irrational is
  // eventually periodic; detect the first repeated state exactly.
  std::map<QuadraticReal, std::size_t> seen;
  QuadraticReal z = x;
  while (cf.quotients.size() < max_terms) {
    auto it = seen.find(z);
    if (it != seen.end()) {
      cf.periodic = true;
      cf.preperiod_len = it->second;
      return cf;
    }
    seen.emplace(z, cf.quotients.size());
    Int a = z.floor();
    cf.quotients.push_back(a);
    QuadraticReal f = z - QuadraticReal(a);
    // f = 0 would mean z rational; impossible for canonical irrationals.
    require(f.sign() > 0, "unsupported-field", "irrational expansion terminated");
    z = QuadraticReal(1) / f;
  }
  cf.preperiod_len = cf.quotients.size();
  cf.truncated = true;
  return cf;
}

std::vector<Rat> convergents(const CFExpansion& cf, std::size_t k) {
  require(cf.periodic || k <= cf.quotients.size(), "invalid-arguments",
          "not enough continued fraction terms available");
  std::vector<Rat> out;
  Int p_prev = 1, p_prev2 = 0;  // p_{-1}, p_{-2}
  Int q_prev = 0, q_prev2 = 1;  // q_{-1}, q_{-2}
  for (std::size_t i = 0; i < k; ++i) {
    Int a = cf.term(i);
    Int p = a * p_prev + p_prev2;
    Int q = a * q_prev + q_prev2;
    out.push_back(make_rat(p, q));
    p_prev2 = p_prev;
    p_prev = p;
    q_prev2 = q_prev;
    q_prev = q;
  }
  return out;
}

QuadraticReal periodic_cf_value(const std::vector<Int>& pre, const std::vector<Int>& period) {
  require(!period.empty(), "invalid-arguments", "period must be nonempty");
  for (const Int& c : period)
    require(c >= 1, "invalid-arguments", "period entries must be >= 1");
  for (std::size_t i = 0; i < pre.size(); ++i)
    require(pre[i] >= (i == 0 ? 0 : 1), "invalid-arguments",
            "preperiod entries must be >= 1 after the first");
  // y = [c_0; c_1, ..., c_{m-1}, y]  =>  y = (A y + B) / (C y + D) with
  // [[A,B],[C,D]] the product of [[c,1],[1,0]]; take the positive root of
  // C y^2 + (D - A) y - B = 0.
  Int A = 1, B = 0, C = 0, D = 1;
  for (const Int& c : period) {
    Int A2 = A * c + B, C2 = C * c + D;
    B = A;
    D = C;
    A = A2;
    C = C2;
  }
  require(C > 0, "invalid-arguments", "degenerate period matrix");
  Int disc = (A - D) * (A - D) + 4 * C * B;
  QuadraticReal y(make_rat(A - D, 2 * C), make_rat(1, 2 * C), disc);
  require(!y.is_rational(), "invalid-arguments", "degenerate rational value");
  // Fold the preperiod from the right: x_j = pre_j + 1/x_{j+1}.
  QuadraticReal x = y;
  for (auto it = pre.rbegin(); it != pre.rend(); ++it)
    x = QuadraticReal(*it) + QuadraticReal(1) / x;
  return x;
}

}  // namespace slab

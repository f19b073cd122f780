#pragma once

#include <cstddef>
#include <vector>

#include "slab/quadratic.hpp"

namespace slab {

// Continued fraction expansion of a positive real. Exactly one of the three
// shapes holds:
//   terminated: finite expansion (rational input), quotients complete;
//   periodic:   quotients = preperiod followed by one copy of the period;
//   truncated:  max_terms partial quotients computed, no verdict yet.
// Partial quotients satisfy a_0 >= 0 and a_k >= 1 for k >= 1; a terminated
// expansion of length > 1 never ends in 1 (Euclidean canonical form).
struct CFExpansion {
  std::vector<Int> quotients;
  std::size_t preperiod_len = 0;
  bool periodic = false;
  bool terminated = false;
  bool truncated = false;

  std::vector<Int> preperiod() const;
  std::vector<Int> period() const;
  // k-th partial quotient, unfolding the period; requires k in range for
  // non-periodic expansions.
  Int term(std::size_t k) const;
  bool has_term(std::size_t k) const;
  std::string json() const;
};

// Expands x > 0. Quadratic irrational inputs always reach a periodic complete
// quotient; max_terms bounds the work and yields `truncated` if hit first.
CFExpansion cf_expand(const QuadraticReal& x, std::size_t max_terms = 64);

// First k convergents p_i/q_i via p_i = a_i p_{i-1} + p_{i-2}.
std::vector<Rat> convergents(const CFExpansion& cf, std::size_t k);

// Exact value of the eventually periodic continued fraction
// [pre_0; pre_1, ..., (per_0, ..., per_{m-1}) repeating]. Period must be
// nonempty with entries >= 1; the value is a quadratic irrational.
QuadraticReal periodic_cf_value(const std::vector<Int>& pre, const std::vector<Int>& period);

}  // namespace slab

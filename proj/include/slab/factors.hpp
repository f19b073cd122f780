#pragma once

#include <map>
#include <vector>

#include "slab/word.hpp"

namespace slab {

// Horizon-bounded factor table: every length-n block of prefix(horizon) with
// its exact occurrence count (overlaps included). For n = 0 the single factor
// is the empty word with horizon+1 occurrences. `saturated` means the factor
// set was observed stable under growing the horizon (set by the saturating
// constructors; plain factor_table leaves it false = unknown).
struct FactorTable {
  int n = 0;
  std::uint64_t horizon = 0;
  bool saturated = false;
  std::map<FiniteWord, std::uint64_t> counts;

  std::vector<FiniteWord> factors() const;  // sorted lexicographically
  std::uint64_t distinct() const { return counts.size(); }
  bool contains(const FiniteWord& u) const { return counts.count(u) > 0; }
  std::string json() const;
};

FactorTable factor_table(const WordStream& w, int n, std::uint64_t horizon);

// Deems the table saturated when the factor sets at horizon/2 and horizon
// coincide (factor sets grow monotonically with the horizon).
FactorTable saturated_factor_table(const WordStream& w, int n, std::uint64_t horizon);

// Runs the schedule (ascending horizons) and returns the table at the first
// point where two consecutive schedule points yield identical factor sets,
// flagged saturated; otherwise the table at the last point, unsaturated.
FactorTable stabilize_horizon(const WordStream& w, int n,
                              const std::vector<std::uint64_t>& schedule);

// Complexity profile p(0..n_max) of prefix(horizon), with per-length
// saturation flags (horizon/2 vs horizon factor counts). Computed via a
// suffix automaton; equals |factor_table(w, n, horizon).counts| for each n.
struct ComplexityProfile {
  std::uint64_t horizon = 0;
  std::vector<std::uint64_t> p;     // index n = 0..n_max
  std::vector<bool> saturated_at;   // same indexing
  bool saturated = false;           // all lengths saturated
};
ComplexityProfile complexity(const WordStream& w, int n_max, std::uint64_t horizon);

// Right/left special factors of length n with their extension degrees.
struct SpecialFactors {
  int n = 0;
  std::map<FiniteWord, int> right_degree;  // only degrees >= 2
  std::map<FiniteWord, int> left_degree;
};
SpecialFactors special_factors(const WordStream& w, int n, std::uint64_t horizon);

// Bounded-complexity periodicity evidence: eventually periodic iff some
// n0 <= n_max has p(n0+1) = p(n0) at saturated lengths. Never claims a proof
// of aperiodicity; absence of evidence carries the saturation caveat.
struct MHVerdict {
  bool eventually_periodic = false;
  int n0 = -1;                      // witness length when eventually_periodic
  std::vector<std::uint64_t> p;     // p(0..n_max+1)
  bool saturated = false;
};
MHVerdict morse_hedlund_detect(const WordStream& w, int n_max, std::uint64_t horizon);

std::map<Letter, std::uint64_t> letter_counts(const WordStream& w, std::uint64_t prefix_len);

}  // namespace slab

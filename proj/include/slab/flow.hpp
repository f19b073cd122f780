#pragma once

#include <optional>
#include <utility>

#include "slab/linalg.hpp"
#include "slab/quadratic.hpp"
#include "slab/rauzy.hpp"
#include "slab/sturmian.hpp"
#include "slab/word.hpp"

namespace slab {

// R[u][v] = 1 iff v starts with u, L[u][v] = 1 iff v ends with u; rows are
// the length-n factors, columns the length-(n+1) factors, both sorted. Every
// column of each matrix holds exactly one 1.
std::pair<RationalMatrix, RationalMatrix> extension_matrices(const WordStream& w, int n,
                                                             std::uint64_t horizon);

// M = R - L: +1 when v starts but does not end with u, -1 when it ends but
// does not start, 0 otherwise (self-loops included). Column sums are 0.
RationalMatrix flow_matrix(const WordStream& w, int n, std::uint64_t horizon);

// Vertex split: u becomes u/1 (left letters L1, right letters R1) and u/2
// (L2, R2). L1|L2 and R1|R2 must partition L(u) and R(u), at least three of
// the four parts non-empty, and no factor aub may cross the parts (checked
// against g's source stream; a crossing raises not-a-disconnection). Returns
// the flow matrix of the split graph: |V|+1 rows, the same edge columns.
struct SplitParts {
  std::vector<Letter> L1, R1, L2, R2;
};
RationalMatrix vertex_split_flow_matrix(const RauzyGraph& g, const FiniteWord& u,
                                        const SplitParts& parts);

struct FrequencyVector {
  std::vector<FiniteWord> index;  // sorted factors
  std::vector<QuadraticReal> values;
  std::uint64_t prefix_len = 0;  // 0 in exact mode
  bool exact = false;
  std::string json() const;
};

// Empirical pseudo-frequencies count(v in prefix)/prefix_len, one vector per
// requested prefix length (increasing); the index set is the factor list at
// the largest prefix.
std::vector<FrequencyVector> frequency_vector(const WordStream& w, int n,
                                              const std::vector<std::uint64_t>& prefixes);

// Exact factor frequencies of the standard word of `spec`. The circle
// rotation by alpha = f2 codes the word; the length-n coding cells are the
// arcs cut by the points {-j alpha}, j = 0..n, and each factor's frequency
// is the length of its arc (read off by coding the arc midpoint).
FrequencyVector exact_factor_frequencies(const DirectiveSpec& spec, int n);

// max over rows of |M f|. Exactly 0 in exact mode; O(n/prefix_len) boundary
// noise in empirical mode. The frequency index must match M's columns.
QuadraticReal kirchhoff_residual(const RationalMatrix& M, const FrequencyVector& f);

struct TijdemanAudit {
  int d = 0;
  int n_max = 0;
  bool saturated = true;
  std::vector<std::uint64_t> p;  // p(0..n_max+1)
  int Delta_used = 0;            // 0 when no bound was audited
  bool Delta_exact = false;      // true when derived from exact frequencies
  std::optional<int> delta_claimed;
  std::optional<int> Delta_claimed;
  std::vector<bool> holds;  // p(n) >= (Delta-1)(n-1)+d, n = 1..n_max
  std::vector<bool> tight;  // equality cases
  bool all_hold = true;
  int forced_upper = 0;  // largest Delta consistent with the observed p
  std::string json() const;
};

// Audits the complexity lower bound p(n) >= (Delta-1)(n-1)+d. Delta comes
// from exact letter frequencies when supplied (rational_span_dimension),
// else from claimed_Delta; with neither, only p and forced_upper are
// reported. Requires p(1) = d (alphabet-mismatch otherwise).
TijdemanAudit tijdeman_audit(
    const WordStream& w, int d, int n_max, std::uint64_t horizon,
    const std::optional<std::vector<QuadraticReal>>& exact_freqs = std::nullopt,
    std::optional<int> claimed_Delta = std::nullopt,
    std::optional<int> claimed_delta = std::nullopt);

}  // namespace slab

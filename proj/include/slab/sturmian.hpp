#pragma once

#include <utility>

#include "slab/contfrac.hpp"
#include "slab/word.hpp"

namespace slab {

// Run-length directive b_0, b_1, b_2, ... for the substitution sequence
// sigma1^{b0} sigma2^{b1} sigma1^{b2} ...; b_0 >= 0 and b_k >= 1 for k >= 1.
// A plain finite list continues with the all-ones period (so every directive
// names a genuine infinite word); the explicit period is used verbatim. The
// default-constructed spec is therefore the all-ones directive (fibonacci).
struct DirectiveSpec {
  std::vector<long> pre;
  std::vector<long> period;  // empty means the implicit all-ones continuation

  static DirectiveSpec parse(const std::string& s);  // "1,1,2" or "pre:[..] period:[..]"
  void validate() const;
  long b(std::size_t k) const;
  std::string str() const;
};

// Limit word of the directive: the common prefixes of s_1...s_n(1) and
// s_1...s_n(2) grow without bound and the stream emits them.
WordStream standard_sturmian(const DirectiveSpec& spec);

enum class WordType { Type1, Type2, Undetermined };

// Scans doubling windows (from 64 letters up to horizon_cap) for the squares
// 11 / 22; exactly one may occur in a Sturmian word. Finding both raises
// not-sturmian; finding neither within the cap yields Undetermined.
WordType word_type(const WordStream& w, std::uint64_t horizon_cap = 1 << 20);

// One renormalization step: erase the letter i immediately preceding every j
// ({i,j} = {1,2}, i = detected type). Lazy; a leading j is preserved.
// Raises undetermined-type when the type cannot be resolved within the cap.
WordStream renormalize(const WordStream& w, std::uint64_t horizon_cap = 1 << 20);

// First `terms` run lengths of the directive recovered by iterated
// renormalization of a materialized prefix (in-place erasure passes; the
// trailing letter is dropped when its fate needs unseen lookahead).
struct RunLengths {
  std::vector<long> values;
  bool truncated = false;  // horizon exhausted before `terms` run lengths
};
RunLengths run_length_extract(const WordStream& w, std::size_t terms,
                              std::uint64_t horizon = 1 << 20);

// Exact letter frequencies (f1, f2) of the directive word: f1/f2 equals the
// continued fraction [b0; b1, b2, ...], which is eventually periodic, so the
// frequencies live in a real quadratic field.
std::pair<QuadraticReal, QuadraticReal> exact_frequencies(const DirectiveSpec& spec);

}  // namespace slab

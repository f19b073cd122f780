#pragma once

#include <map>

#include "slab/word.hpp"

namespace slab {

// Letter-to-word morphism between alphabets; images must be nonempty so that
// images of infinite words are infinite.
class Substitution {
public:
  Substitution(Alphabet domain, Alphabet codomain,
               std::map<Letter, std::vector<Letter>> images);

  const Alphabet& domain() const { return dom_; }
  const Alphabet& codomain() const { return cod_; }
  const std::vector<Letter>& image(Letter a) const;

  FiniteWord apply(const FiniteWord& u) const;
  WordStream apply(const WordStream& w, const std::string& label = "") const;

  // The two elementary Sturmian substitutions on {1,2}.
  static Substitution sigma1();  // 1 -> 1,  2 -> 12
  static Substitution sigma2();  // 1 -> 21, 2 -> 2

private:
  Alphabet dom_, cod_;
  std::map<Letter, std::vector<Letter>> img_;
};

}  // namespace slab

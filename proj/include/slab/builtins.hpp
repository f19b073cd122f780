#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slab/quadratic.hpp"
#include "slab/sturmian.hpp"
#include "slab/word.hpp"

namespace slab {

// A named example word with whatever exact metadata it carries. Frequencies
// are listed by letter; words without well-defined letter frequencies (the
// exercise words, champernowne) carry none.
struct BuiltinWord {
  WordStream stream;
  std::optional<DirectiveSpec> directive;                  // standard Sturmian only
  std::optional<std::vector<QuadraticReal>> letter_freqs;  // by letter 1..d
};

BuiltinWord builtin_word(const std::string& name);  // unknown-builtin on miss
std::vector<std::string> builtin_names();           // sorted

}  // namespace slab

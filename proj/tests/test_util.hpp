#pragma once

// Shared test helpers: typed-error capture and brute-force oracles that
// recompute library answers from first principles.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "slab/error.hpp"
#include "slab/word.hpp"

template <typename F>
std::string error_code_of(F&& f) {
  try {
    f();
  } catch (const slab::Error& e) {
    return e.code();
  }
  return "";
}

// Length-n windows of w's prefix, with multiplicity. Independent of the
// library's factor tables.
inline std::map<std::vector<slab::Letter>, std::uint64_t> brute_windows(
    const slab::WordStream& w, int n, std::uint64_t horizon) {
  std::map<std::vector<slab::Letter>, std::uint64_t> out;
  std::vector<slab::Letter> pref = w.prefix(horizon).letters();
  for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= pref.size(); ++i)
    ++out[std::vector<slab::Letter>(pref.begin() + static_cast<std::ptrdiff_t>(i),
                                    pref.begin() + static_cast<std::ptrdiff_t>(i) + n)];
  return out;
}

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "slab/error.hpp"

namespace slab {

// Internal letters are always 1..d; an Alphabet maps them to display symbols
// (strictly increasing integers), so internal order equals display order.
// Words over symbols like {0,1,2} stay exact without a reserved zero letter.
using Letter = int;

class Alphabet {
public:
  Alphabet();                                   // {1, 2}
  explicit Alphabet(int d);                     // symbols 1..d
  explicit Alphabet(std::vector<int> symbols);  // strictly increasing
  int size() const;
  int symbol(Letter a) const;        // a in 1..d
  Letter letter_of(int symbol) const;
  bool single_char() const;          // all symbols in 0..9: digit-string form
  const std::vector<int>& symbols() const;
  bool operator==(const Alphabet& o) const;
  std::string str() const;  // "12", "012", or "0 1 ... 10"

private:
  std::shared_ptr<const std::vector<int>> syms_;
};

class FiniteWord {
public:
  FiniteWord() = default;
  FiniteWord(Alphabet a, std::vector<Letter> letters);
  static FiniteWord parse(const Alphabet& a, const std::string& text);

  std::size_t size() const { return a_.size(); }
  bool empty() const { return a_.empty(); }
  Letter operator[](std::size_t i) const { return a_[i]; }
  const std::vector<Letter>& letters() const { return a_; }
  const Alphabet& alphabet() const { return alpha_; }

  FiniteWord prefix(std::size_t n) const;
  FiniteWord suffix(std::size_t n) const;
  FiniteWord subword(std::size_t pos, std::size_t n) const;
  FiniteWord reversed() const;

  std::string str() const;  // display symbols; empty string for the empty word
  std::string display() const;  // like str() but "eps" for the empty word

  // Order and equality look at letters only (lexicographic, shorter prefix
  // first); the alphabet is carried context.
  friend bool operator==(const FiniteWord& x, const FiniteWord& y) { return x.a_ == y.a_; }
  friend bool operator!=(const FiniteWord& x, const FiniteWord& y) { return x.a_ != y.a_; }
  friend bool operator<(const FiniteWord& x, const FiniteWord& y) { return x.a_ < y.a_; }

private:
  Alphabet alpha_;
  std::vector<Letter> a_;
};

// Lazy infinite (or finite, see literal_stream) word. Letters are produced by
// an extender and cached; a stream queried twice yields identical letters.
// Generators are immutable once built and the cache is mutex-guarded, so a
// stream may be shared across threads.
class WordStream {
public:
  // Must append at least one letter per call (or throw).
  using Extender = std::function<void(std::vector<Letter>&)>;
  WordStream(Alphabet a, std::string label, Extender extend,
             std::optional<std::uint64_t> known_length = std::nullopt);

  Letter at(std::uint64_t k) const;
  FiniteWord prefix(std::uint64_t n) const;
  const Alphabet& alphabet() const { return alpha_; }
  const std::string& label() const { return label_; }
  std::optional<std::uint64_t> known_length() const { return length_; }

private:
  struct State {
    std::mutex m;
    std::vector<Letter> buf;
    Extender extend;
  };
  Alphabet alpha_;
  std::string label_;
  std::optional<std::uint64_t> length_;
  std::shared_ptr<State> st_;
  void ensure(std::uint64_t n) const;
};

// head followed by cycle repeated forever.
WordStream periodic_stream(const Alphabet& a, std::vector<Letter> head,
                           std::vector<Letter> cycle, std::string label);
// Finite source: reading at or beyond letters.size() raises horizon-exhausted.
WordStream literal_stream(const Alphabet& a, std::vector<Letter> letters, std::string label);
// w shifted left by `offset` letters.
WordStream shifted(const WordStream& w, std::uint64_t offset);

// Word file format: "alphabet: <symbols>" line, then the letters (digit
// string when all symbols are single digits, whitespace-separated otherwise).
std::string word_file_text(const WordStream& w, std::uint64_t n);
std::pair<Alphabet, std::vector<Letter>> parse_word_file(const std::string& text);

}  // namespace slab

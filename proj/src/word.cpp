#include "slab/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace slab {

Alphabet::Alphabet() : syms_(std::make_shared<const std::vector<int>>(std::vector<int>{1, 2})) {}

Alphabet::Alphabet(int d) {
  require(d >= 1, "invalid-arguments", "alphabet size must be >= 1");
  std::vector<int> s(d);
  for (int i = 0; i < d; ++i) s[i] = i + 1;
  syms_ = std::make_shared<const std::vector<int>>(std::move(s));
}

Alphabet::Alphabet(std::vector<int> symbols) {
  require(!symbols.empty(), "invalid-arguments", "alphabet must be nonempty");
  for (std::size_t i = 1; i < symbols.size(); ++i)
    require(symbols[i - 1] < symbols[i], "invalid-arguments",
            "alphabet symbols must be strictly increasing");
  syms_ = std::make_shared<const std::vector<int>>(std::move(symbols));
}

int Alphabet::size() const { return static_cast<int>(syms_->size()); }

int Alphabet::symbol(Letter a) const {
  require(a >= 1 && a <= size(), "invalid-arguments", "letter out of range");
  return (*syms_)[a - 1];
}

Letter Alphabet::letter_of(int symbol) const {
  auto it = std::lower_bound(syms_->begin(), syms_->end(), symbol);
  require(it != syms_->end() && *it == symbol, "invalid-arguments",
          "symbol " + std::to_string(symbol) + " not in alphabet");
  return static_cast<Letter>(it - syms_->begin()) + 1;
}

bool Alphabet::single_char() const {
  return syms_->front() >= 0 && syms_->back() <= 9;
}

const std::vector<int>& Alphabet::symbols() const { return *syms_; }

bool Alphabet::operator==(const Alphabet& o) const { return *syms_ == *o.syms_; }

std::string Alphabet::str() const {
  std::string out;
  bool compact = single_char();
  for (std::size_t i = 0; i < syms_->size(); ++i) {
    if (!compact && i) out += ' ';
    out += std::to_string((*syms_)[i]);
  }
  return out;
}

FiniteWord::FiniteWord(Alphabet a, std::vector<Letter> letters)
    : alpha_(std::move(a)), a_(std::move(letters)) {
  for (Letter x : a_)
    require(x >= 1 && x <= alpha_.size(), "invalid-arguments", "letter out of range");
}

FiniteWord FiniteWord::parse(const Alphabet& a, const std::string& text) {
  std::vector<Letter> ls;
  if (a.single_char()) {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      require(std::isdigit(static_cast<unsigned char>(c)), "invalid-arguments",
              "bad letter character in word text");
      ls.push_back(a.letter_of(c - '0'));
    }
  } else {
    std::istringstream is(text);
    int v;
    while (is >> v) ls.push_back(a.letter_of(v));
  }
  return FiniteWord(a, std::move(ls));
}

FiniteWord FiniteWord::prefix(std::size_t n) const { return subword(0, n); }

FiniteWord FiniteWord::suffix(std::size_t n) const {
  require(n <= size(), "invalid-arguments", "suffix longer than word");
  return subword(size() - n, n);
}

FiniteWord FiniteWord::subword(std::size_t pos, std::size_t n) const {
  require(pos + n <= size(), "invalid-arguments", "subword out of range");
  return FiniteWord(alpha_, {a_.begin() + static_cast<long>(pos),
                             a_.begin() + static_cast<long>(pos + n)});
}

FiniteWord FiniteWord::reversed() const {
  std::vector<Letter> r(a_.rbegin(), a_.rend());
  return FiniteWord(alpha_, std::move(r));
}

std::string FiniteWord::str() const {
  std::string out;
  bool compact = alpha_.single_char();
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (!compact && i) out += ' ';
    out += std::to_string(alpha_.symbol(a_[i]));
  }
  return out;
}

std::string FiniteWord::display() const { return empty() ? "eps" : str(); }

WordStream::WordStream(Alphabet a, std::string label, Extender extend,
                       std::optional<std::uint64_t> known_length)
    : alpha_(std::move(a)), label_(std::move(label)), length_(known_length),
      st_(std::make_shared<State>()) {
  st_->extend = std::move(extend);
}

void WordStream::ensure(std::uint64_t n) const {
  while (st_->buf.size() < n) {
    std::size_t before = st_->buf.size();
    st_->extend(st_->buf);
    require(st_->buf.size() > before, "horizon-exhausted",
            "stream '" + label_ + "' stopped producing letters");
  }
}

Letter WordStream::at(std::uint64_t k) const {
  std::lock_guard<std::mutex> lock(st_->m);
  ensure(k + 1);
  return st_->buf[k];
}

FiniteWord WordStream::prefix(std::uint64_t n) const {
  std::lock_guard<std::mutex> lock(st_->m);
  ensure(n);
  return FiniteWord(alpha_, {st_->buf.begin(), st_->buf.begin() + static_cast<long>(n)});
}

WordStream periodic_stream(const Alphabet& a, std::vector<Letter> head,
                           std::vector<Letter> cycle, std::string label) {
  require(!cycle.empty(), "invalid-arguments", "cycle must be nonempty");
  for (Letter x : head)
    require(x >= 1 && x <= a.size(), "invalid-arguments", "letter out of range");
  for (Letter x : cycle)
    require(x >= 1 && x <= a.size(), "invalid-arguments", "letter out of range");
  auto extend = [head = std::move(head), cycle](std::vector<Letter>& buf) {
    if (buf.size() < head.size()) {
      buf.insert(buf.end(), head.begin() + static_cast<long>(buf.size()), head.end());
      return;
    }
    std::size_t k = (buf.size() - head.size()) % cycle.size();
    buf.insert(buf.end(), cycle.begin() + static_cast<long>(k), cycle.end());
  };
  return WordStream(a, std::move(label), std::move(extend));
}

WordStream literal_stream(const Alphabet& a, std::vector<Letter> letters, std::string label) {
  std::uint64_t len = letters.size();
  auto extend = [letters = std::move(letters)](std::vector<Letter>& buf) {
    if (buf.size() >= letters.size())
      fail("horizon-exhausted", "finite word source exhausted");
    buf.insert(buf.end(), letters.begin() + static_cast<long>(buf.size()), letters.end());
  };
  return WordStream(a, std::move(label), std::move(extend), len);
}

WordStream shifted(const WordStream& w, std::uint64_t offset) {
  std::optional<std::uint64_t> len;
  if (w.known_length()) {
    require(*w.known_length() >= offset, "invalid-arguments", "shift beyond word length");
    len = *w.known_length() - offset;
  }
  auto extend = [w, offset](std::vector<Letter>& buf) {
    buf.push_back(w.at(offset + buf.size()));
  };
  return WordStream(w.alphabet(), "S^" + std::to_string(offset) + "(" + w.label() + ")",
                    std::move(extend), len);
}

std::string word_file_text(const WordStream& w, std::uint64_t n) {
  std::string out = "alphabet: " + w.alphabet().str() + "\n";
  out += w.prefix(n).str();
  out += "\n";
  return out;
}

std::pair<Alphabet, std::vector<Letter>> parse_word_file(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  require(static_cast<bool>(std::getline(is, line)), "invalid-arguments", "empty word file");
  const std::string tag = "alphabet:";
  require(line.rfind(tag, 0) == 0, "invalid-arguments",
          "word file must start with 'alphabet:'");
  std::string symtext = line.substr(tag.size());
  std::vector<int> symbols;
  {
    std::istringstream ss(symtext);
    std::string tok;
    std::vector<std::string> toks;
    while (ss >> tok) toks.push_back(tok);
    require(!toks.empty(), "invalid-arguments", "empty alphabet line");
    bool all_digits = true;
    for (const auto& t : toks)
      for (char c : t)
        if (!std::isdigit(static_cast<unsigned char>(c))) all_digits = false;
    if (toks.size() == 1 && all_digits && toks[0].size() > 1) {
      for (char c : toks[0]) symbols.push_back(c - '0');
    } else {
      for (const auto& t : toks) symbols.push_back(std::stoi(t));
    }
  }
  Alphabet a(symbols);
  std::string rest, chunk;
  while (std::getline(is, chunk)) rest += chunk + " ";
  FiniteWord word = FiniteWord::parse(a, rest);
  return {a, word.letters()};
}

}  // namespace slab

#include "slab/builtins.hpp"

#include <algorithm>
#include <memory>

#include "slab/extension.hpp"

namespace slab {

namespace {

QuadraticReal q(long num, long den) {
  return QuadraticReal(make_rat(Int(num), Int(den)));
}

std::vector<QuadraticReal> rational_freqs(std::vector<std::pair<long, long>> fr) {
  std::vector<QuadraticReal> out;
  out.reserve(fr.size());
  for (auto [n, d] : fr) out.push_back(q(n, d));
  return out;
}

// u0 = 1; even stages append 0s until both letters are equally frequent,
// odd stage n appends n*|u_n| extra 1s. Alphabet {0,1}: letter 1 is '0',
// letter 2 is '1'. Each extend call completes one stage.
WordStream exercise_binary() {
  struct St {
    std::uint64_t stage = 0, zeros = 0, ones = 0;
  };
  auto st = std::make_shared<St>();
  return WordStream(Alphabet({0, 1}), "tijdeman-exercise-binary",
                    [st](std::vector<Letter>& buf) {
                      if (buf.empty()) {
                        buf.push_back(2);
                        st->ones = 1;
                        return;
                      }
                      if (st->stage % 2 == 0) {
                        std::uint64_t k = st->ones - st->zeros;
                        buf.insert(buf.end(), k, 1);
                        st->zeros += k;
                      } else {
                        std::uint64_t k = st->stage * buf.size();
                        buf.insert(buf.end(), k, 2);
                        st->ones += k;
                      }
                      ++st->stage;
                    });
}

// The binary exercise word with its k-th occurrence of '1' replaced by the
// k-th Fibonacci letter; '0' stays '0'. Alphabet {0,1,2}.
WordStream exercise_ternary() {
  struct St {
    WordStream bin, fib;
    std::uint64_t pos = 0, ones = 0;
  };
  auto st = std::make_shared<St>(St{exercise_binary(), standard_sturmian(DirectiveSpec{})});
  return WordStream(Alphabet({0, 1, 2}), "tijdeman-exercise-ternary",
                    [st](std::vector<Letter>& buf) {
                      for (int i = 0; i < 256; ++i) {
                        Letter a = st->bin.at(st->pos++);
                        if (a == 1)
                          buf.push_back(1);
                        else
                          buf.push_back(1 + st->fib.at(st->ones++));
                      }
                    });
}

WordStream champernowne() {
  auto counter = std::make_shared<std::uint64_t>(0);
  return WordStream(Alphabet({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}), "champernowne",
                    [counter](std::vector<Letter>& buf) {
                      for (int i = 0; i < 64; ++i) {
                        for (char c : std::to_string(++*counter))
                          buf.push_back(c - '0' + 1);
                      }
                    });
}

}  // namespace

BuiltinWord builtin_word(const std::string& name) {
  if (name == "ones")
    return {periodic_stream(Alphabet(1), {}, {1}, "ones"), std::nullopt,
            rational_freqs({{1, 1}})};
  if (name == "12-cycle")
    return {periodic_stream(Alphabet(), {}, {1, 2}, "12-cycle"), std::nullopt,
            rational_freqs({{1, 2}, {1, 2}})};
  if (name == "123-cycle")
    return {periodic_stream(Alphabet(3), {}, {1, 2, 3}, "123-cycle"), std::nullopt,
            rational_freqs({{1, 3}, {1, 3}, {1, 3}})};
  if (name == "1233-cycle")
    return {periodic_stream(Alphabet(3), {}, {1, 2, 3, 3}, "1233-cycle"), std::nullopt,
            rational_freqs({{1, 4}, {1, 4}, {1, 2}})};
  if (name == "1122-cycle")
    return {periodic_stream(Alphabet(), {}, {1, 1, 2, 2}, "1122-cycle"), std::nullopt,
            rational_freqs({{1, 2}, {1, 2}})};
  if (name == "2(010)")
    return {periodic_stream(Alphabet({0, 1, 2}), {3}, {1, 2, 1}, "2(010)"), std::nullopt,
            rational_freqs({{2, 3}, {1, 3}, {0, 1}})};
  if (name == "2(1)")
    return {periodic_stream(Alphabet(), {2}, {1}, "2(1)"), std::nullopt,
            rational_freqs({{1, 1}, {0, 1}})};
  if (name == "fibonacci") {
    DirectiveSpec spec;  // empty = the all-ones directive
    auto [f1, f2] = exact_frequencies(spec);
    return {standard_sturmian(spec), spec, std::vector<QuadraticReal>{f1, f2}};
  }
  if (name == "fibonacci-renormalized") {
    DirectiveSpec spec;
    spec.pre = {0};
    auto [f1, f2] = exact_frequencies(spec);
    return {renormalize(builtin_word("fibonacci").stream), spec,
            std::vector<QuadraticReal>{f1, f2}};
  }
  if (name == "quasi-sturmian-31-32") {
    auto [f1, f2] = exact_frequencies(DirectiveSpec{});
    QuadraticReal half = q(1, 2);
    return {quasi_sturmian_build(builtin_word("fibonacci").stream, 0, {1}, {2}, {3}),
            std::nullopt, std::vector<QuadraticReal>{f1 * half, f2 * half, half}};
  }
  if (name == "tijdeman-exercise-binary")
    return {exercise_binary(), std::nullopt, std::nullopt};
  if (name == "tijdeman-exercise-ternary")
    return {exercise_ternary(), std::nullopt, std::nullopt};
  if (name == "champernowne") return {champernowne(), std::nullopt, std::nullopt};
  fail("unknown-builtin", "no builtin word named '" + name + "'");
}

std::vector<std::string> builtin_names() {
  return {"12-cycle",
          "1122-cycle",
          "123-cycle",
          "1233-cycle",
          "2(010)",
          "2(1)",
          "champernowne",
          "fibonacci",
          "fibonacci-renormalized",
          "ones",
          "quasi-sturmian-31-32",
          "tijdeman-exercise-binary",
          "tijdeman-exercise-ternary"};
}

}  // namespace slab

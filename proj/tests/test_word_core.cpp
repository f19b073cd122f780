#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "slab/builtins.hpp"
#include "slab/factors.hpp"
#include "slab/sturmian.hpp"
#include "slab/word.hpp"
#include "test_util.hpp"

using namespace slab;

TEST_CASE("alphabet mapping") {
  Alphabet d;  // {1, 2}
  CHECK(d.size() == 2);
  CHECK(d.symbol(1) == 1);
  CHECK(d.letter_of(2) == 2);
  CHECK(d.str() == "12");

  Alphabet z(std::vector<int>{0, 1, 2});
  CHECK(z.size() == 3);
  CHECK(z.symbol(1) == 0);
  CHECK(z.symbol(3) == 2);
  CHECK(z.letter_of(0) == 1);
  CHECK(z.str() == "012");
  CHECK(z.single_char());

  Alphabet wide(std::vector<int>{0, 5, 10});
  CHECK_FALSE(wide.single_char());
  CHECK(wide.str() == "0 5 10");

  CHECK(error_code_of([] { Alphabet(std::vector<int>{1, 1}); }) == "invalid-arguments");
  CHECK(error_code_of([] { Alphabet(std::vector<int>{2, 1}); }) == "invalid-arguments");
  CHECK(error_code_of([&] { d.symbol(3); }) == "invalid-arguments");
  CHECK(error_code_of([&] { d.letter_of(7); }) == "invalid-arguments");
}

TEST_CASE("finite word slicing matches manual slices") {
  Alphabet a;
  FiniteWord w(a, {1, 2, 1, 1, 2, 1, 2});
  CHECK(w.size() == 7);
  CHECK(w.str() == "1211212");
  CHECK(w.display() == "1211212");
  CHECK(w.prefix(3).str() == "121");
  CHECK(w.suffix(2).str() == "12");
  CHECK(w.subword(2, 4).str() == "1121");
  CHECK(w.reversed().str() == "2121121");
  CHECK(FiniteWord(a, {}).display() == "eps");
  CHECK(FiniteWord(a, {}).str() == "");
  CHECK(error_code_of([&] { w.subword(5, 4); }) == "invalid-arguments");
  CHECK(error_code_of([&] { w.prefix(8); }) == "invalid-arguments");
  CHECK(error_code_of([&] { FiniteWord(a, {3}); }) == "invalid-arguments");
}

TEST_CASE("finite word order is lexicographic with shorter prefixes first") {
  Alphabet a;
  auto W = [&](std::vector<Letter> v) { return FiniteWord(a, std::move(v)); };
  CHECK(W({1}) < W({1, 1}));
  CHECK(W({1, 2}) < W({2}));
  CHECK(W({1, 2}) == W({1, 2}));
  std::vector<FiniteWord> all;
  for (int x = 1; x <= 2; ++x)
    for (int y = 1; y <= 2; ++y) all.push_back(W({x, y}));
  CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("finite word parse round trip") {
  Alphabet digits(std::vector<int>{0, 1, 2});
  FiniteWord u = FiniteWord::parse(digits, "2010");
  CHECK(u.letters() == std::vector<Letter>{3, 1, 2, 1});
  CHECK(u.str() == "2010");

  Alphabet wide(std::vector<int>{1, 2, 10});
  FiniteWord v = FiniteWord::parse(wide, "10 2 1");
  CHECK(v.letters() == std::vector<Letter>{3, 2, 1});
  CHECK(v.str() == "10 2 1");

  CHECK(error_code_of([&] { FiniteWord::parse(digits, "203"); }) == "invalid-arguments");
}

TEST_CASE("periodic stream unrolls head + cycle") {
  Alphabet a;
  WordStream w = periodic_stream(a, {2}, {1, 2, 1}, "test");
  CHECK(w.prefix(10).str() == "2121121121");
  CHECK(w.at(0) == 2);
  CHECK(w.at(9) == w.at(6));
  // Determinism: repeated reads agree.
  CHECK(w.prefix(10).str() == "2121121121");
  CHECK(w.label() == "test");
  CHECK_FALSE(w.known_length().has_value());
}

TEST_CASE("literal stream is finite") {
  Alphabet a;
  WordStream w = literal_stream(a, {1, 2, 2}, "lit");
  CHECK(w.known_length() == 3);
  CHECK(w.prefix(3).str() == "122");
  CHECK(error_code_of([&] { w.at(3); }) == "horizon-exhausted");
  CHECK(error_code_of([&] { w.prefix(4); }) == "horizon-exhausted");
}

TEST_CASE("shifted stream agrees with an index offset") {
  WordStream fib = builtin_word("fibonacci").stream;
  WordStream s = shifted(fib, 5);
  for (std::uint64_t i = 0; i < 50; ++i) CHECK(s.at(i) == fib.at(i + 5));
}

TEST_CASE("word file round trip") {
  WordStream fib = builtin_word("fibonacci").stream;
  std::string text = word_file_text(fib, 40);
  auto [a, letters] = parse_word_file(text);
  CHECK(a == fib.alphabet());
  CHECK(letters == fib.prefix(40).letters());

  WordStream wide = periodic_stream(Alphabet(std::vector<int>{3, 11}), {}, {1, 2}, "w");
  auto [b, bl] = parse_word_file(word_file_text(wide, 9));
  CHECK(b == wide.alphabet());
  CHECK(bl == wide.prefix(9).letters());

  CHECK(error_code_of([] { parse_word_file("alphabet: 12\n1231\n"); }) ==
        "invalid-arguments");
  CHECK(error_code_of([] { parse_word_file("letters: 12\n11\n"); }) ==
        "invalid-arguments");
}

TEST_CASE("factor tables match brute-force window counts") {
  std::vector<WordStream> corpus = {builtin_word("fibonacci").stream,
                                    builtin_word("2(010)").stream,
                                    builtin_word("1233-cycle").stream};
  for (const WordStream& w : corpus) {
    for (int n = 0; n <= 6; ++n) {
      FactorTable t = factor_table(w, n, 400);
      auto brute = brute_windows(w, n, 400);
      if (n == 0) {
        CHECK(t.distinct() == 1);
        continue;
      }
      REQUIRE(t.distinct() == brute.size());
      for (const auto& [letters, count] : brute) {
        FiniteWord u(w.alphabet(), letters);
        REQUIRE(t.contains(u));
        CHECK(t.counts.at(u) == count);
      }
    }
  }
}

TEST_CASE("factors() is sorted and contains() rejects non-factors") {
  WordStream fib = builtin_word("fibonacci").stream;
  FactorTable t = factor_table(fib, 3, 1000);
  auto fs = t.factors();
  CHECK(std::is_sorted(fs.begin(), fs.end()));
  CHECK(t.distinct() == 4);  // Sturmian: p(3) = 4
  CHECK_FALSE(t.contains(FiniteWord(fib.alphabet(), {2, 2, 2})));
}

TEST_CASE("complexity profile equals per-length table counts") {
  std::vector<WordStream> corpus = {builtin_word("fibonacci").stream,
                                    builtin_word("2(010)").stream,
                                    builtin_word("champernowne").stream,
                                    builtin_word("quasi-sturmian-31-32").stream};
  for (const WordStream& w : corpus) {
    ComplexityProfile cp = complexity(w, 7, 600);
    REQUIRE(cp.p.size() == 8);
    for (int n = 0; n <= 7; ++n)
      CHECK(cp.p[static_cast<std::size_t>(n)] == factor_table(w, n, 600).distinct());
  }
}

TEST_CASE("saturation flags distinguish settled and growing factor sets") {
  WordStream cyc = builtin_word("12-cycle").stream;
  CHECK(saturated_factor_table(cyc, 3, 100).saturated);
  CHECK(complexity(cyc, 4, 100).saturated);

  WordStream fib = builtin_word("fibonacci").stream;
  CHECK_FALSE(saturated_factor_table(fib, 10, 24).saturated);
  CHECK(saturated_factor_table(fib, 10, 2000).saturated);

  FactorTable st = stabilize_horizon(fib, 10, {50, 100, 5000, 10000});
  CHECK(st.saturated);
  CHECK(st.distinct() == 11);
  FactorTable un = stabilize_horizon(fib, 10, {20, 24});
  CHECK_FALSE(un.saturated);
  CHECK(error_code_of([&] { stabilize_horizon(fib, 3, {}); }) == "invalid-arguments");
  CHECK(error_code_of([&] { stabilize_horizon(fib, 3, {100, 50}); }) ==
        "invalid-arguments");
}

TEST_CASE("special factors match a brute-force recount") {
  WordStream fib = builtin_word("fibonacci").stream;
  for (int n = 1; n <= 6; ++n) {
    SpecialFactors sp = special_factors(fib, n, 2000);
    // Sturmian words have exactly one right-special and one left-special
    // factor per length, both of degree 2.
    CHECK(sp.right_degree.size() == 1);
    CHECK(sp.left_degree.size() == 1);
    CHECK(sp.right_degree.begin()->second == 2);
    CHECK(sp.left_degree.begin()->second == 2);

    // Brute force: u is right-special iff at least two letters extend it.
    auto t1 = brute_windows(fib, n + 1, 2000);
    std::map<std::vector<Letter>, std::set<Letter>> right;
    for (const auto& [v, c] : t1)
      right[std::vector<Letter>(v.begin(), v.end() - 1)].insert(v.back());
    for (const auto& [u, exts] : right) {
      bool special = exts.size() >= 2;
      CHECK(special == (sp.right_degree.count(FiniteWord(fib.alphabet(), u)) > 0));
    }
  }
}

TEST_CASE("morse-hedlund detector: periodic evidence and aperiodic silence") {
  MHVerdict v = morse_hedlund_detect(builtin_word("2(010)").stream, 6, 500);
  CHECK(v.eventually_periodic);
  CHECK(v.n0 == 2);  // p(3) = p(2) = 4
  CHECK(v.p[2] == 4);
  CHECK(v.p[3] == 4);

  MHVerdict c = morse_hedlund_detect(builtin_word("12-cycle").stream, 4, 200);
  CHECK(c.eventually_periodic);
  CHECK(c.n0 == 1);

  MHVerdict f = morse_hedlund_detect(builtin_word("fibonacci").stream, 20, 100000);
  CHECK_FALSE(f.eventually_periodic);
  CHECK(f.saturated);

  // Random eventually periodic words are always detected once n covers
  // preperiod + period.
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> letter(1, 3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Letter> head, cycle;
    for (int i = 0; i < trial % 3; ++i) head.push_back(letter(rng));
    for (int i = 0; i < 1 + trial % 4; ++i) cycle.push_back(letter(rng));
    WordStream w = periodic_stream(Alphabet(3), head, cycle, "rnd");
    MHVerdict r = morse_hedlund_detect(w, static_cast<int>(head.size() + 3 * cycle.size() + 2), 500);
    CHECK(r.eventually_periodic);
  }
}

TEST_CASE("letter counts match a manual tally") {
  WordStream fib = builtin_word("fibonacci").stream;
  auto counts = letter_counts(fib, 1000);
  std::uint64_t ones = 0, twos = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) (fib.at(i) == 1 ? ones : twos) += 1;
  CHECK(counts.at(1) == ones);
  CHECK(counts.at(2) == twos);
  CHECK(ones + twos == 1000);
}

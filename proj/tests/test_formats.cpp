#include <doctest.h>

#include <string>
#include <vector>

#include "slab/builtins.hpp"
#include "slab/contfrac.hpp"
#include "slab/extension.hpp"
#include "slab/factors.hpp"
#include "slab/flow.hpp"
#include "slab/linalg.hpp"
#include "slab/rauzy.hpp"
#include "slab/sturmian.hpp"
#include "test_util.hpp"

using namespace slab;

namespace {

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size()))
    ++n;
  return n;
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == '\n') {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  return out;
}

}  // namespace

TEST_CASE("word file text and its parse are inverse") {
  WordStream fib = builtin_word("fibonacci").stream;
  CHECK(word_file_text(fib, 13) == "alphabet: 12\n1211212112112\n");
  auto [a, letters] = parse_word_file(word_file_text(fib, 200));
  CHECK(a == fib.alphabet());
  CHECK(FiniteWord(a, letters) == fib.prefix(200));

  // Wide symbols force the whitespace-separated letter form.
  Alphabet wide({0, 5, 10});
  WordStream w = periodic_stream(wide, {}, {3, 1, 2}, "wide");
  std::string text = word_file_text(w, 5);
  CHECK(text == "alphabet: 0 5 10\n10 0 5 10 0\n");
  auto [a2, letters2] = parse_word_file(text);
  CHECK(a2 == wide);
  CHECK(letters2 == std::vector<Letter>{3, 1, 2, 3, 1});
}

TEST_CASE("rauzy graph dot output") {
  RauzyGraph g = rauzy_graph(builtin_word("fibonacci").stream, 1, 1000);
  std::string dot = g.dot();
  CHECK(dot ==
        "digraph rauzy {\n"
        "  \"1\";\n"
        "  \"2\";\n"
        "  \"1\" -> \"1\" [label=\"11\"];\n"
        "  \"1\" -> \"2\" [label=\"12\"];\n"
        "  \"2\" -> \"1\" [label=\"21\"];\n"
        "}\n");
  CHECK(dot == g.dot());

  RauzyGraph g4 = rauzy_graph(builtin_word("fibonacci").stream, 4, 1000);
  CHECK(count_occurrences(g4.dot(), " -> ") == g4.edges.size());
  CHECK(g4.dot().rfind("digraph rauzy {", 0) == 0);
}

TEST_CASE("extension graph dot output") {
  WordStream fib = builtin_word("fibonacci").stream;
  ExtensionGraph e = extension_graph(fib, FiniteWord(Alphabet(), {}), 1000);
  CHECK(e.dot() ==
        "graph extension {\n"
        "  label=\"Ext(eps)\";\n"
        "  \"L1\" [label=\"1\"];\n"
        "  \"L2\" [label=\"2\"];\n"
        "  \"R1\" [label=\"1\"];\n"
        "  \"R2\" [label=\"2\"];\n"
        "  \"L1\" -- \"R1\";\n"
        "  \"L1\" -- \"R2\";\n"
        "  \"L2\" -- \"R1\";\n"
        "}\n");
  ExtensionGraph e2 = extension_graph(fib, FiniteWord(Alphabet(), {1, 2}), 1000);
  CHECK(count_occurrences(e2.dot(), " -- ") == e2.edges.size());
}

TEST_CASE("csv layout: header plus one line per row, fractions verbatim") {
  RationalMatrix m;
  m.row_labels = {"a"};
  m.col_labels = {"x", "y"};
  m.entries = {{make_rat(Int(1), Int(2)), Rat(-3)}};
  CHECK(m.csv() == ",x,y\na,1/2,-3\n");

  RationalMatrix M = flow_matrix(builtin_word("fibonacci").stream, 3, 2000);
  auto lines = split_lines(M.csv());
  REQUIRE(lines.size() == M.rows() + 1);
  for (const auto& line : lines)
    CHECK(count_occurrences(line, ",") == M.cols());
}

TEST_CASE("kernel basis json spells exact fractions") {
  RationalMatrix m;
  m.row_labels = {"r"};
  m.col_labels = {"x", "y"};
  m.entries = {{Rat(1), Rat(2)}};
  KernelBasis k = kernel_basis(m, KernelSide::Right);
  CHECK(k.json() ==
        "{\"dimension\": 1, \"rank\": 1, \"index\": [\"x\", \"y\"], "
        "\"basis\": [[\"1\", \"-1/2\"]]}");
  CHECK(k.json() == kernel_basis(m, KernelSide::Right).json());
}

TEST_CASE("factor table json") {
  FactorTable t = factor_table(builtin_word("12-cycle").stream, 1, 100);
  CHECK(t.json() ==
        "{\"n\": 1, \"horizon\": 100, \"saturated\": false, "
        "\"factors\": [\"1\", \"2\"], \"counts\": {\"1\": 50, \"2\": 50}}");
}

TEST_CASE("frequency vector json in exact mode") {
  FrequencyVector fv = exact_factor_frequencies(DirectiveSpec{}, 1);
  CHECK(fv.json() ==
        "{\"exact\": true, \"values\": {\"1\": \"-1/2+1/2*sqrt(5)\", "
        "\"2\": \"3/2-1/2*sqrt(5)\"}}");
  FrequencyVector emp = frequency_vector(builtin_word("fibonacci").stream, 1, {10})[0];
  CHECK(emp.json().find("\"prefix_len\": 10") != std::string::npos);
}

TEST_CASE("dendricity report json on a failing word") {
  DendricityReport rep = dendricity_check(builtin_word("1122-cycle").stream, 4, 1000);
  CHECK(rep.json() ==
        "{\"max_n\": 4, \"verdict\": \"fails-at\", \"witness\": \"eps\", "
        "\"kind\": \"cyclic\", \"saturated\": true}");
}

TEST_CASE("tijdeman audit json rows") {
  BuiltinWord fib = builtin_word("fibonacci");
  TijdemanAudit a = tijdeman_audit(fib.stream, 2, 3, 10000, fib.letter_freqs);
  std::string js = a.json();
  CHECK(js.find("\"d\": 2") != std::string::npos);
  CHECK(js.find("\"Delta\": 2, \"Delta_source\": \"exact\"") != std::string::npos);
  CHECK(js.find("{\"n\": 1, \"bound\": 2, \"p\": 2, \"holds\": true, \"tight\": true}") !=
        std::string::npos);
  CHECK(js.find("\"all_hold\": true") != std::string::npos);
  CHECK(js.find("\"forced_upper\": 2") != std::string::npos);
  CHECK(js == tijdeman_audit(fib.stream, 2, 3, 10000, fib.letter_freqs).json());
}

TEST_CASE("continued fraction json forms") {
  CHECK(cf_expand(QuadraticReal(make_rat(Int(17), Int(6))), 64).json() ==
        "{\"preperiod\": [2, 1, 5], \"period\": null, \"terminated\": true}");
  QuadraticReal phi(make_rat(Int(1), Int(2)), make_rat(Int(1), Int(2)), Int(5));
  CHECK(cf_expand(phi, 64).json() ==
        "{\"preperiod\": [], \"period\": [1], \"terminated\": false}");
  CHECK(cf_expand(QuadraticReal(Rat(0), Rat(1), Int(2)), 64).json() ==
        "{\"preperiod\": [1], \"period\": [2], \"terminated\": false}");
}

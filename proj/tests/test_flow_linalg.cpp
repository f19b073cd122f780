#include <doctest.h>

#include <random>
#include <vector>

#include "slab/builtins.hpp"
#include "slab/factors.hpp"
#include "slab/flow.hpp"
#include "slab/linalg.hpp"
#include "slab/rauzy.hpp"
#include "slab/sturmian.hpp"
#include "test_util.hpp"

using namespace slab;

namespace {

// Row-reduction rank with plain rational pivoting, independent of the
// fraction-free elimination inside kernel_basis.
std::size_t naive_rank(std::vector<std::vector<Rat>> m) {
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0, rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && sgn(m[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || sgn(m[r][c]) == 0) continue;
      Rat f = m[r][c] / m[rank][c];
      for (std::size_t cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

std::vector<Rat> mat_vec(const RationalMatrix& M, const std::vector<Rat>& v) {
  std::vector<Rat> out(M.rows(), Rat(0));
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t c = 0; c < M.cols(); ++c) out[r] += M.entries[r][c] * v[c];
  return out;
}

std::vector<Rat> vec_mat(const std::vector<Rat>& y, const RationalMatrix& M) {
  std::vector<Rat> out(M.cols(), Rat(0));
  for (std::size_t c = 0; c < M.cols(); ++c)
    for (std::size_t r = 0; r < M.rows(); ++r) out[c] += y[r] * M.entries[r][c];
  return out;
}

bool all_zero(const std::vector<Rat>& v) {
  for (const Rat& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

void check_kernel_contract(const RationalMatrix& M) {
  KernelBasis right = kernel_basis(M, KernelSide::Right);
  KernelBasis left = kernel_basis(M, KernelSide::Left);
  std::size_t r = naive_rank(M.entries);
  CHECK(right.rank == r);
  CHECK(left.rank == r);
  CHECK(right.dimension == M.cols() - r);
  CHECK(left.dimension == M.rows() - r);
  CHECK(right.basis.size() == right.dimension);
  CHECK(left.basis.size() == left.dimension);
  for (const auto& v : right.basis) {
    CHECK(all_zero(mat_vec(M, v)));
    std::size_t first = 0;
    while (first < v.size() && sgn(v[first]) == 0) ++first;
    REQUIRE(first < v.size());
    CHECK(v[first] == Rat(1));
  }
  for (const auto& y : left.basis) CHECK(all_zero(vec_mat(y, M)));
  // Returned vectors are independent.
  if (!right.basis.empty()) CHECK(naive_rank(right.basis) == right.dimension);
  if (!left.basis.empty()) CHECK(naive_rank(left.basis) == left.dimension);
}

const char* kCorpus[] = {"fibonacci", "12-cycle",  "1122-cycle",
                         "2(010)",    "123-cycle", "quasi-sturmian-31-32"};

}  // namespace

TEST_CASE("extension matrices have one 1 per column at the right slots") {
  for (const char* name : {"fibonacci", "2(010)"}) {
    WordStream w = builtin_word(name).stream;
    for (int n = 0; n <= 6; ++n) {
      auto [R, L] = extension_matrices(w, n, 500);
      const std::size_t un = static_cast<std::size_t>(n);
      FactorTable tn1 = factor_table(w, n + 1, 500);
      std::vector<FiniteWord> cols = tn1.factors();
      REQUIRE(R.cols() == cols.size());
      for (std::size_t c = 0; c < R.cols(); ++c) {
        int rsum = 0, lsum = 0;
        for (std::size_t r = 0; r < R.rows(); ++r) {
          CHECK((R.entries[r][c] == 0 || R.entries[r][c] == 1));
          CHECK((L.entries[r][c] == 0 || L.entries[r][c] == 1));
          if (R.entries[r][c] == 1) {
            ++rsum;
            CHECK(R.row_labels[r] == cols[c].prefix(un).display());
          }
          if (L.entries[r][c] == 1) {
            ++lsum;
            CHECK(L.row_labels[r] == cols[c].suffix(un).display());
          }
        }
        CHECK(rsum == 1);
        CHECK(lsum == 1);
      }
    }
  }
  CHECK(error_code_of([] {
          extension_matrices(builtin_word("fibonacci").stream, -1, 100);
        }) == "invalid-arguments");
  CHECK(error_code_of([] {
          extension_matrices(builtin_word("fibonacci").stream, 9, 9);
        }) == "invalid-arguments");
}

TEST_CASE("flow matrix of 2(010) at n = 1") {
  RationalMatrix M = flow_matrix(builtin_word("2(010)").stream, 1, 1000);
  CHECK(M.csv() ==
        ",00,01,10,20\n"
        "0,0,1,-1,-1\n"
        "1,0,-1,1,0\n"
        "2,0,0,0,1\n");
}

TEST_CASE("flow matrix columns sum to zero") {
  for (const char* name : kCorpus) {
    WordStream w = builtin_word(name).stream;
    for (int n = 0; n <= 8; ++n) {
      RationalMatrix M = flow_matrix(w, n, 600);
      for (std::size_t c = 0; c < M.cols(); ++c) {
        Rat s(0);
        for (std::size_t r = 0; r < M.rows(); ++r) s += M.entries[r][c];
        CHECK(sgn(s) == 0);
      }
    }
  }
}

TEST_CASE("kernels of flow matrices: all-ones on the left, cycle space on the right") {
  for (const char* name : kCorpus) {
    WordStream w = builtin_word(name).stream;
    ComplexityProfile cp = complexity(w, 7, 5000);
    for (int n = 0; n <= 6; ++n) {
      RationalMatrix M = flow_matrix(w, n, 5000);
      check_kernel_contract(M);
      KernelBasis left = kernel_basis(M, KernelSide::Left);
      // The Rauzy graph is connected, so the left kernel is span(1).
      REQUIRE(left.dimension == 1);
      for (const Rat& x : left.basis[0]) CHECK(x == Rat(1));
      KernelBasis right = kernel_basis(M, KernelSide::Right);
      std::size_t un = static_cast<std::size_t>(n);
      CHECK(right.dimension == cp.p[un + 1] - cp.p[un] + 1);
    }
  }
}

TEST_CASE("kernel basis against naive elimination on random matrices") {
  std::mt19937 rng(97);
  std::uniform_int_distribution<int> dim(1, 5), num(-3, 3), den(1, 3);
  for (int trial = 0; trial < 40; ++trial) {
    RationalMatrix M;
    std::size_t rows = static_cast<std::size_t>(dim(rng));
    std::size_t cols = static_cast<std::size_t>(dim(rng));
    for (std::size_t r = 0; r < rows; ++r) M.row_labels.push_back("r" + std::to_string(r));
    for (std::size_t c = 0; c < cols; ++c) M.col_labels.push_back("c" + std::to_string(c));
    M.entries.assign(rows, std::vector<Rat>(cols));
    for (auto& row : M.entries)
      for (Rat& x : row) x = make_rat(Int(num(rng)), Int(den(rng)));
    check_kernel_contract(M);
  }
  // Degenerate shapes.
  RationalMatrix wide;
  wide.col_labels = {"a", "b"};
  KernelBasis k = kernel_basis(wide, KernelSide::Right);
  CHECK(k.dimension == 2);
  CHECK(k.rank == 0);
}

TEST_CASE("rational rank basics") {
  CHECK(rational_rank({}) == 0);
  CHECK(rational_rank({{Rat(0), Rat(0)}, {Rat(0), Rat(0)}}) == 0);
  CHECK(rational_rank({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}) == 2);
  CHECK(rational_rank({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}) == 1);
  CHECK(rational_rank({{make_rat(Int(1), Int(2)), Rat(1), Rat(0)},
                       {Rat(0), Rat(1), Rat(1)}}) == 2);
}

TEST_CASE("dimension of the rational span of quadratic values") {
  QuadraticReal one(1), half(make_rat(Int(1), Int(2)));
  QuadraticReal rt2(Rat(0), Rat(1), Int(2));
  CHECK(rational_span_dimension({}) == 0);
  CHECK(rational_span_dimension({QuadraticReal(0)}) == 0);
  CHECK(rational_span_dimension({one, half}) == 1);
  CHECK(rational_span_dimension({one, rt2}) == 2);
  CHECK(rational_span_dimension({rt2, rt2 + rt2, QuadraticReal(3) + rt2}) == 2);
  auto [f1, f2] = exact_frequencies(DirectiveSpec{});
  CHECK(rational_span_dimension({f1, f2}) == 2);
  QuadraticReal rt3(Rat(0), Rat(1), Int(3));
  CHECK(error_code_of([&] { rational_span_dimension({rt2, rt3}); }) ==
        "unsupported-field");
}

TEST_CASE("vertex split of the quasi-sturmian empty factor") {
  WordStream q = builtin_word("quasi-sturmian-31-32").stream;
  RauzyGraph g = rauzy_graph(q, 0, 2000);
  FiniteWord eps(q.alphabet(), {});
  SplitParts parts{{1, 2}, {3}, {3}, {1, 2}};
  RationalMatrix M = vertex_split_flow_matrix(g, eps, parts);
  REQUIRE(M.rows() == 2);
  REQUIRE(M.cols() == 3);
  CHECK(M.row_labels == std::vector<std::string>{"eps/1", "eps/2"});
  for (std::size_t c = 0; c < 3; ++c) CHECK(sgn(M.entries[0][c] + M.entries[1][c]) == 0);
  KernelBasis right = kernel_basis(M, KernelSide::Right);
  CHECK(right.rank == 1);
  CHECK(right.dimension == 2);
}

TEST_CASE("vertex split validation") {
  WordStream q = builtin_word("quasi-sturmian-31-32").stream;
  RauzyGraph g = rauzy_graph(q, 0, 2000);
  FiniteWord eps(q.alphabet(), {});
  // A crossing factor: splitting 1122-cycle's empty factor puts 12 across.
  WordStream sq = builtin_word("1122-cycle").stream;
  RauzyGraph gsq = rauzy_graph(sq, 0, 400);
  FiniteWord eps2(sq.alphabet(), {});
  CHECK(error_code_of([&] {
          vertex_split_flow_matrix(gsq, eps2, {{1}, {1}, {2}, {2}});
        }) == "not-a-disconnection");
  // Duplicate letter across the left parts.
  CHECK(error_code_of([&] {
          vertex_split_flow_matrix(g, eps, {{1}, {3}, {1, 2, 3}, {1, 2}});
        }) == "invalid-arguments");
  // Left parts fail to cover the extension letters.
  CHECK(error_code_of([&] {
          vertex_split_flow_matrix(g, eps, {{1}, {3}, {2}, {1, 2}});
        }) == "invalid-arguments");
  // Fewer than three non-empty parts.
  CHECK(error_code_of([&] {
          vertex_split_flow_matrix(g, eps, {{1, 2, 3}, {1, 2, 3}, {}, {}});
        }) == "invalid-arguments");
  // Not a vertex of the graph.
  CHECK(error_code_of([&] {
          vertex_split_flow_matrix(g, FiniteWord(q.alphabet(), {1}), {{}, {}, {}, {}});
        }) == "not-a-factor");
}

TEST_CASE("empirical frequency vectors match raw window counts") {
  WordStream fib = builtin_word("fibonacci").stream;
  std::vector<std::uint64_t> prefixes{50, 100, 400};
  auto fvs = frequency_vector(fib, 2, prefixes);
  REQUIRE(fvs.size() == 3);
  for (std::size_t k = 0; k < fvs.size(); ++k) {
    const FrequencyVector& fv = fvs[k];
    CHECK(!fv.exact);
    CHECK(fv.prefix_len == prefixes[k]);
    auto counts = brute_windows(fib, 2, prefixes[k]);
    for (std::size_t i = 0; i < fv.index.size(); ++i) {
      auto it = counts.find(fv.index[i].letters());
      std::uint64_t c = it == counts.end() ? 0 : it->second;
      CHECK(fv.values[i] == QuadraticReal(make_rat(Int(c), Int(prefixes[k]))));
    }
  }
  CHECK(error_code_of([&] { frequency_vector(fib, 0, {100}); }) == "invalid-arguments");
  CHECK(error_code_of([&] { frequency_vector(fib, 2, {}); }) == "invalid-arguments");
  CHECK(error_code_of([&] { frequency_vector(fib, 2, {100, 100}); }) ==
        "invalid-arguments");
  CHECK(error_code_of([&] { frequency_vector(fib, 9, {5}); }) == "invalid-arguments");
}

TEST_CASE("exact factor frequencies: total mass, letter case, factor set") {
  DirectiveSpec fibspec;
  DirectiveSpec other = DirectiveSpec::parse("pre:[2,1] period:[3,1]");
  WordStream fib = builtin_word("fibonacci").stream;
  for (const DirectiveSpec& spec : {fibspec, other}) {
    for (int n = 1; n <= 8; ++n) {
      FrequencyVector fv = exact_factor_frequencies(spec, n);
      CHECK(fv.exact);
      QuadraticReal sum(0);
      for (const auto& x : fv.values) {
        CHECK(x.sign() > 0);
        sum = sum + x;
      }
      CHECK(sum == QuadraticReal(1));
      CHECK(fv.index.size() == static_cast<std::size_t>(n) + 1);
    }
  }
  auto [f1, f2] = exact_frequencies(fibspec);
  FrequencyVector fv1 = exact_factor_frequencies(fibspec, 1);
  REQUIRE(fv1.index.size() == 2);
  CHECK(fv1.values[0] == f1);
  CHECK(fv1.values[1] == f2);
  // The rotation cells name exactly the factors the word exhibits.
  for (int n = 1; n <= 6; ++n) {
    FrequencyVector fv = exact_factor_frequencies(fibspec, n);
    FactorTable t = saturated_factor_table(fib, n, 50000);
    REQUIRE(t.saturated);
    CHECK(fv.index == t.factors());
  }
  // Empirical counts approach the exact values.
  const std::uint64_t N = 20000;
  for (int n = 1; n <= 4; ++n) {
    FrequencyVector exact = exact_factor_frequencies(fibspec, n);
    FrequencyVector emp = frequency_vector(fib, n, {N})[0];
    REQUIRE(exact.index == emp.index);
    for (std::size_t i = 0; i < exact.index.size(); ++i)
      CHECK((exact.values[i] - emp.values[i]).abs() <
            QuadraticReal(make_rat(Int(1), Int(100))));
  }
}

TEST_CASE("kirchhoff residual: zero exactly, small empirically") {
  DirectiveSpec spec;
  WordStream fib = builtin_word("fibonacci").stream;
  for (int n = 0; n <= 6; ++n) {
    RationalMatrix M = flow_matrix(fib, n, 50000);
    FrequencyVector f = exact_factor_frequencies(spec, n + 1);
    CHECK(kirchhoff_residual(M, f).sign() == 0);
  }
  const std::uint64_t N = 10000;
  RationalMatrix M3 = flow_matrix(fib, 3, N);
  FrequencyVector emp = frequency_vector(fib, 4, {N})[0];
  QuadraticReal tol(make_rat(Int(10 * 4 * 4), Int(N)));
  CHECK(!(tol < kirchhoff_residual(M3, emp)));
  // Mismatched index: wrong factor length.
  CHECK(error_code_of([&] {
          kirchhoff_residual(flow_matrix(fib, 3, 50000), exact_factor_frequencies(spec, 3));
        }) == "invalid-arguments");
  // Matching size, different words.
  RationalMatrix M1 = flow_matrix(builtin_word("12-cycle").stream, 1, 100);
  FrequencyVector wrong;
  wrong.index = {FiniteWord(Alphabet(), {1, 1}), FiniteWord(Alphabet(), {2, 2})};
  wrong.values = {QuadraticReal(make_rat(Int(1), Int(2))),
                  QuadraticReal(make_rat(Int(1), Int(2)))};
  CHECK(error_code_of([&] { kirchhoff_residual(M1, wrong); }) == "invalid-arguments");
}

TEST_CASE("tijdeman audit on exact frequencies") {
  BuiltinWord fib = builtin_word("fibonacci");
  TijdemanAudit a = tijdeman_audit(fib.stream, 2, 12, 100000, fib.letter_freqs);
  CHECK(a.saturated);
  CHECK(a.Delta_used == 2);
  CHECK(a.Delta_exact);
  CHECK(a.all_hold);
  for (bool t : a.tight) CHECK(t);  // p(n) = n+1 meets (2-1)(n-1)+2 exactly
  CHECK(a.forced_upper == 2);
  CHECK(a.json().find("\"Delta_source\": \"exact\"") != std::string::npos);

  BuiltinWord cyc = builtin_word("123-cycle");
  TijdemanAudit b = tijdeman_audit(cyc.stream, 3, 8, 1000, cyc.letter_freqs);
  CHECK(b.Delta_used == 1);  // rational frequencies span one dimension
  CHECK(b.all_hold);
  for (bool t : b.tight) CHECK(t);  // p(n) = 3 = bound for every n >= 1
  CHECK(b.forced_upper == 1);

  BuiltinWord quasi = builtin_word("quasi-sturmian-31-32");
  TijdemanAudit c = tijdeman_audit(quasi.stream, 3, 12, 100000, quasi.letter_freqs);
  CHECK(c.Delta_used == 2);
  CHECK(c.all_hold);
  for (bool t : c.tight) CHECK(t);  // p(n) = n+2 meets (2-1)(n-1)+3 exactly
  CHECK(c.forced_upper == 2);
}

TEST_CASE("tijdeman audit on claims and degenerate inputs") {
  BuiltinWord fib = builtin_word("fibonacci");
  // No frequencies and no claim: only the profile and the forced upper bound.
  TijdemanAudit none = tijdeman_audit(fib.stream, 2, 8, 10000);
  CHECK(none.Delta_used == 0);
  CHECK(none.holds.empty());
  CHECK(none.forced_upper == 2);
  CHECK(none.json().find("\"Delta\": null") != std::string::npos);

  // Claimed bound audited without exact frequencies.
  TijdemanAudit claimed = tijdeman_audit(fib.stream, 2, 8, 10000, std::nullopt, 2);
  CHECK(claimed.Delta_used == 2);
  CHECK(!claimed.Delta_exact);
  CHECK(claimed.all_hold);

  CHECK(error_code_of([&] {
          tijdeman_audit(fib.stream, 3, 8, 10000);
        }) == "alphabet-mismatch");
  CHECK(error_code_of([&] {
          tijdeman_audit(fib.stream, 2, 8, 10000, std::nullopt, 3);
        }) == "invalid-arguments");  // Delta > d
  CHECK(error_code_of([&] {
          tijdeman_audit(fib.stream, 2, 8, 10000, fib.letter_freqs, std::nullopt, 3);
        }) == "invalid-arguments");  // delta > Delta
  CHECK(error_code_of([&] {
          tijdeman_audit(fib.stream, 2, 0, 10000);
        }) == "invalid-arguments");

  // The ternary exercise word: claimed Delta = 3 with delta = 2 holds at
  // desk scale, while the delta-floor n+2 sits far below the observed p.
  WordStream ex = builtin_word("tijdeman-exercise-ternary").stream;
  TijdemanAudit t = tijdeman_audit(ex, 3, 8, 100000, std::nullopt, 3, 2);
  CHECK(t.Delta_used == 3);
  CHECK(t.all_hold);
  CHECK(t.delta_claimed == 2);
  for (std::size_t i = 0; i < t.holds.size(); ++i) {
    std::uint64_t n = i + 1;
    CHECK(t.p[n] >= 2 * n + 1);  // the claimed-Delta bound
    CHECK(t.p[n] >= n + 2);      // the delta floor is strictly weaker here
  }
}

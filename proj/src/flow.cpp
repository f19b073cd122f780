#include "slab/flow.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "slab/factors.hpp"

namespace slab {

namespace {

std::vector<std::string> labels_of(const std::vector<FiniteWord>& words) {
  std::vector<std::string> out;
  out.reserve(words.size());
  for (const auto& u : words) out.push_back(u.display());
  return out;
}

}  // namespace

std::pair<RationalMatrix, RationalMatrix> extension_matrices(const WordStream& w, int n,
                                                             std::uint64_t horizon) {
  require(n >= 0, "invalid-arguments", "n must be >= 0");
  require(horizon >= static_cast<std::uint64_t>(n) + 1, "invalid-arguments",
          "horizon must cover length n+1 factors");
  FactorTable tn = saturated_factor_table(w, n, horizon);
  FactorTable tn1 = saturated_factor_table(w, n + 1, horizon);
  std::vector<FiniteWord> rows = tn.factors(), cols = tn1.factors();
  std::map<FiniteWord, std::size_t> row_of;
  for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;
  RationalMatrix R, L;
  R.row_labels = L.row_labels = labels_of(rows);
  R.col_labels = L.col_labels = labels_of(cols);
  R.entries.assign(rows.size(), std::vector<Rat>(cols.size(), Rat(0)));
  L.entries = R.entries;
  const std::size_t un = static_cast<std::size_t>(n);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    R.entries[row_of.at(cols[c].prefix(un))][c] = 1;
    L.entries[row_of.at(cols[c].suffix(un))][c] = 1;
  }
  return {std::move(R), std::move(L)};
}

RationalMatrix flow_matrix(const WordStream& w, int n, std::uint64_t horizon) {
  auto [R, L] = extension_matrices(w, n, horizon);
  for (std::size_t r = 0; r < R.rows(); ++r)
    for (std::size_t c = 0; c < R.cols(); ++c) R.entries[r][c] -= L.entries[r][c];
  return std::move(R);
}

RationalMatrix vertex_split_flow_matrix(const RauzyGraph& g, const FiniteWord& u,
                                        const SplitParts& parts) {
  const std::size_t idx = g.vertex_index(u);
  const std::size_t n = u.size();
  require(g.source != nullptr, "invalid-arguments", "graph carries no source stream");
  require(g.horizon >= n + 2, "invalid-arguments",
          "graph horizon too small to validate the split");

  std::set<Letter> left, right;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (g.arcs[e].second == idx) left.insert(g.edges[e][0]);
    if (g.arcs[e].first == idx) right.insert(g.edges[e][n]);
  }
  auto check_parts = [](const std::vector<Letter>& p1, const std::vector<Letter>& p2,
                        const std::set<Letter>& whole, const char* side) {
    std::set<Letter> seen;
    for (Letter a : p1) require(seen.insert(a).second, "invalid-arguments",
                                std::string("duplicate letter in the ") + side + " parts");
    for (Letter a : p2) require(seen.insert(a).second, "invalid-arguments",
                                std::string("duplicate letter in the ") + side + " parts");
    require(seen == whole, "invalid-arguments",
            std::string(side) + " parts must partition the extension letters");
  };
  check_parts(parts.L1, parts.L2, left, "left");
  check_parts(parts.R1, parts.R2, right, "right");
  int nonempty = !parts.L1.empty() + !parts.L2.empty() + !parts.R1.empty() +
                 !parts.R2.empty();
  require(nonempty >= 3, "invalid-arguments",
          "at least three of the four parts must be non-empty");

  std::set<Letter> L1(parts.L1.begin(), parts.L1.end());
  std::set<Letter> R1(parts.R1.begin(), parts.R1.end());
  FactorTable t2 = factor_table(*g.source, static_cast<int>(n) + 2, g.horizon);
  for (const auto& [v, c] : t2.counts) {
    if (v.subword(1, n) != u) continue;
    bool a1 = L1.count(v[0]) > 0, b1 = R1.count(v[n + 1]) > 0;
    require(a1 == b1, "not-a-disconnection",
            "factor '" + v.display() + "' crosses the parts");
  }

  // Rows: each vertex keeps its sorted slot; u expands into u/1 and u/2.
  RationalMatrix M;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    if (i == idx) {
      M.row_labels.push_back(u.display() + "/1");
      M.row_labels.push_back(u.display() + "/2");
    } else {
      M.row_labels.push_back(g.vertices[i].display());
    }
  }
  M.col_labels = labels_of(g.edges);
  M.entries.assign(g.vertices.size() + 1, std::vector<Rat>(g.edges.size(), Rat(0)));
  auto row_of = [&](std::size_t vi) { return vi < idx ? vi : vi + 1; };
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const FiniteWord& v = g.edges[e];
    auto [s, t] = g.arcs[e];
    std::size_t src = s == idx ? (R1.count(v[n]) ? idx : idx + 1) : row_of(s);
    std::size_t dst = t == idx ? (L1.count(v[0]) ? idx : idx + 1) : row_of(t);
    M.entries[src][e] += 1;
    M.entries[dst][e] -= 1;
  }
  return M;
}

std::string FrequencyVector::json() const {
  std::ostringstream os;
  os << "{";
  if (exact)
    os << "\"exact\": true";
  else
    os << "\"prefix_len\": " << prefix_len;
  os << ", \"values\": {";
  for (std::size_t i = 0; i < index.size(); ++i)
    os << (i ? ", " : "") << "\"" << index[i].display() << "\": \"" << values[i].str()
       << "\"";
  os << "}}";
  return os.str();
}

std::vector<FrequencyVector> frequency_vector(const WordStream& w, int n,
                                              const std::vector<std::uint64_t>& prefixes) {
  require(n >= 1, "invalid-arguments", "factor length must be >= 1");
  require(!prefixes.empty(), "invalid-arguments", "at least one prefix length required");
  for (std::size_t i = 0; i + 1 < prefixes.size(); ++i)
    require(prefixes[i] < prefixes[i + 1], "invalid-arguments",
            "prefix lengths must increase");
  const std::uint64_t big = prefixes.back();
  require(big >= static_cast<std::uint64_t>(n), "invalid-arguments",
          "largest prefix shorter than the factor length");
  FactorTable t = factor_table(w, n, big);
  std::vector<FiniteWord> index = t.factors();
  std::map<FiniteWord, std::size_t> pos;
  for (std::size_t i = 0; i < index.size(); ++i) pos[index[i]] = i;

  FiniteWord prefix = w.prefix(big);
  const auto& letters = prefix.letters();
  std::vector<std::uint64_t> counts(index.size(), 0);
  std::vector<FrequencyVector> out;
  const std::uint64_t un = static_cast<std::uint64_t>(n);
  std::uint64_t k = 0;  // next unprocessed window start
  for (std::uint64_t N : prefixes) {
    for (; k + un <= N; ++k) {
      FiniteWord v(w.alphabet(),
                   std::vector<Letter>(letters.begin() + static_cast<std::ptrdiff_t>(k),
                                       letters.begin() + static_cast<std::ptrdiff_t>(k + un)));
      ++counts[pos.at(v)];
    }
    FrequencyVector fv;
    fv.index = index;
    fv.prefix_len = N;
    for (std::size_t i = 0; i < index.size(); ++i)
      fv.values.push_back(QuadraticReal(make_rat(Int(counts[i]), Int(N))));
    out.push_back(std::move(fv));
  }
  return out;
}

FrequencyVector exact_factor_frequencies(const DirectiveSpec& spec, int n) {
  require(n >= 1, "invalid-arguments", "factor length must be >= 1");
  auto [f1, f2] = exact_frequencies(spec);
  QuadraticReal alpha = f2, one(1);
  QuadraticReal threshold = one - alpha;
  std::vector<QuadraticReal> pts;
  QuadraticReal z(0);
  for (int j = 0; j <= n; ++j) {
    pts.push_back(z);
    z = (z - alpha).frac();
  }
  std::sort(pts.begin(), pts.end());
  std::map<FiniteWord, QuadraticReal> freq;
  Alphabet ab;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    QuadraticReal a = pts[i];
    QuadraticReal b = i + 1 < pts.size() ? pts[i + 1] : pts[0] + one;
    QuadraticReal mid = ((a + b) / QuadraticReal(2)).frac();
    std::vector<Letter> letters;
    QuadraticReal y = mid;
    for (int k = 0; k < n; ++k) {
      letters.push_back(y < threshold ? 1 : 2);
      y = (y + alpha).frac();
    }
    FiniteWord v(ab, std::move(letters));
    auto it = freq.find(v);
    if (it == freq.end())
      freq.emplace(v, b - a);
    else
      it->second = it->second + (b - a);
  }
  FrequencyVector fv;
  fv.exact = true;
  for (auto& [v, x] : freq) {
    fv.index.push_back(v);
    fv.values.push_back(x);
  }
  return fv;
}

QuadraticReal kirchhoff_residual(const RationalMatrix& M, const FrequencyVector& f) {
  require(f.index.size() == M.cols(), "invalid-arguments",
          "frequency index size does not match the matrix columns");
  for (std::size_t c = 0; c < M.cols(); ++c)
    require(f.index[c].display() == M.col_labels[c], "invalid-arguments",
            "frequency index does not match the matrix columns");
  QuadraticReal best(0);
  for (std::size_t r = 0; r < M.rows(); ++r) {
    QuadraticReal s(0);
    for (std::size_t c = 0; c < M.cols(); ++c) {
      if (sgn(M.entries[r][c]) == 0) continue;
      s = s + QuadraticReal(M.entries[r][c]) * f.values[c];
    }
    s = s.abs();
    if (best < s) best = s;
  }
  return best;
}

std::string TijdemanAudit::json() const {
  std::ostringstream os;
  os << "{\"d\": " << d << ", \"n_max\": " << n_max
     << ", \"saturated\": " << (saturated ? "true" : "false") << ", \"p\": [";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i];
  os << "], \"Delta\": ";
  if (Delta_used > 0)
    os << Delta_used << ", \"Delta_source\": \"" << (Delta_exact ? "exact" : "claimed")
       << "\"";
  else
    os << "null, \"Delta_source\": \"none\"";
  if (delta_claimed) os << ", \"delta_claimed\": " << *delta_claimed;
  if (Delta_claimed) os << ", \"Delta_claimed\": " << *Delta_claimed;
  os << ", \"rows\": [";
  for (std::size_t i = 0; i < holds.size(); ++i) {
    int nn = static_cast<int>(i) + 1;
    long long bound = static_cast<long long>(Delta_used - 1) * (nn - 1) + d;
    os << (i ? ", " : "") << "{\"n\": " << nn << ", \"bound\": " << bound
       << ", \"p\": " << p[static_cast<std::size_t>(nn)]
       << ", \"holds\": " << (holds[i] ? "true" : "false")
       << ", \"tight\": " << (tight[i] ? "true" : "false") << "}";
  }
  os << "], \"all_hold\": " << (all_hold ? "true" : "false")
     << ", \"forced_upper\": " << forced_upper << "}";
  return os.str();
}

TijdemanAudit tijdeman_audit(const WordStream& w, int d, int n_max, std::uint64_t horizon,
                             const std::optional<std::vector<QuadraticReal>>& exact_freqs,
                             std::optional<int> claimed_Delta,
                             std::optional<int> claimed_delta) {
  require(d >= 1, "invalid-arguments", "alphabet size must be >= 1");
  require(n_max >= 1, "invalid-arguments", "n_max must be >= 1");
  require(horizon >= static_cast<std::uint64_t>(n_max) + 2, "invalid-arguments",
          "horizon must cover length n_max+1 factors");
  ComplexityProfile prof = complexity(w, n_max + 1, horizon);
  TijdemanAudit audit;
  audit.d = d;
  audit.n_max = n_max;
  audit.saturated = prof.saturated;
  audit.p = prof.p;
  require(prof.p[1] == static_cast<std::uint64_t>(d), "alphabet-mismatch",
          "p(1) = " + std::to_string(prof.p[1]) + " but the audit claims d = " +
              std::to_string(d));

  if (exact_freqs) {
    require(static_cast<int>(exact_freqs->size()) == d, "invalid-arguments",
            "need one exact frequency per letter");
    audit.Delta_used = static_cast<int>(rational_span_dimension(*exact_freqs));
    audit.Delta_exact = true;
  } else if (claimed_Delta) {
    audit.Delta_used = *claimed_Delta;
  }
  audit.delta_claimed = claimed_delta;
  audit.Delta_claimed = claimed_Delta;
  if (claimed_delta) {
    int upper = audit.Delta_used > 0 ? audit.Delta_used : d;
    require(1 <= *claimed_delta && *claimed_delta <= upper, "invalid-arguments",
            "claimed dimensions must satisfy 1 <= delta <= Delta <= d");
  }
  if (audit.Delta_used > 0)
    require(audit.Delta_used <= d, "invalid-arguments",
            "Delta cannot exceed the alphabet size");

  if (audit.Delta_used > 0) {
    for (int nn = 1; nn <= n_max; ++nn) {
      long long bound = static_cast<long long>(audit.Delta_used - 1) * (nn - 1) + d;
      std::uint64_t pn = prof.p[static_cast<std::size_t>(nn)];
      bool ok = pn >= static_cast<std::uint64_t>(bound);
      audit.holds.push_back(ok);
      audit.tight.push_back(ok && pn == static_cast<std::uint64_t>(bound));
      audit.all_hold = audit.all_hold && ok;
    }
  }

  // Largest Delta' with p(n) >= (Delta'-1)(n-1)+d everywhere observed.
  long long forced = d;
  for (int nn = 2; nn <= n_max + 1; ++nn) {
    long long slack = static_cast<long long>(prof.p[static_cast<std::size_t>(nn)]) - d;
    forced = std::min(forced, slack / (nn - 1) + 1);
  }
  audit.forced_upper = static_cast<int>(std::max(1LL, forced));
  return audit;
}

}  // namespace slab

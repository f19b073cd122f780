#include "slab/factors.hpp"

#include <algorithm>
#include <sstream>

namespace slab {

namespace {

// Suffix automaton over int letters; counts distinct substrings per length in
// O(|s| log d).
class SuffixAutomaton {
public:
  explicit SuffixAutomaton(const std::vector<Letter>& s) {
    nodes_.push_back({0, -1, {}});
    int last = 0;
    for (Letter c : s) last = extend(last, c);
  }

  // Distinct substrings of each length 0..n_max; a state covers lengths
  // link.len+1 .. len.
  std::vector<std::uint64_t> count_by_length(int n_max) const {
    std::vector<std::int64_t> diff(static_cast<std::size_t>(n_max) + 2, 0);
    for (std::size_t v = 1; v < nodes_.size(); ++v) {
      int lo = nodes_[nodes_[v].link].len + 1;
      int hi = std::min(nodes_[v].len, n_max);
      if (lo > hi) continue;
      diff[lo] += 1;
      diff[hi + 1] -= 1;
    }
    std::vector<std::uint64_t> out(static_cast<std::size_t>(n_max) + 1, 0);
    std::int64_t run = 0;
    for (int n = 0; n <= n_max; ++n) {
      run += diff[n];
      out[n] = static_cast<std::uint64_t>(run);
    }
    out[0] = 1;  // the empty word
    return out;
  }

private:
  struct Node {
    int len;
    int link;
    std::map<Letter, int> next;
  };
  std::vector<Node> nodes_;

  int extend(int last, Letter c) {
    int cur = static_cast<int>(nodes_.size());
    nodes_.push_back({nodes_[last].len + 1, -1, {}});
    int p = last;
    while (p != -1 && !nodes_[p].next.count(c)) {
      nodes_[p].next[c] = cur;
      p = nodes_[p].link;
    }
    if (p == -1) {
      nodes_[cur].link = 0;
      return cur;
    }
    int q = nodes_[p].next[c];
    if (nodes_[p].len + 1 == nodes_[q].len) {
      nodes_[cur].link = q;
      return cur;
    }
    int clone = static_cast<int>(nodes_.size());
    nodes_.push_back({nodes_[p].len + 1, nodes_[q].link, nodes_[q].next});
    while (p != -1 && nodes_[p].next.count(c) && nodes_[p].next[c] == q) {
      nodes_[p].next[c] = clone;
      p = nodes_[p].link;
    }
    nodes_[q].link = clone;
    nodes_[cur].link = clone;
    return cur;
  }
};

bool same_factor_set(const FactorTable& x, const FactorTable& y) {
  if (x.counts.size() != y.counts.size()) return false;
  auto i = x.counts.begin();
  auto j = y.counts.begin();
  for (; i != x.counts.end(); ++i, ++j)
    if (!(i->first == j->first)) return false;
  return true;
}

}  // namespace

std::vector<FiniteWord> FactorTable::factors() const {
  std::vector<FiniteWord> out;
  out.reserve(counts.size());
  for (const auto& [u, c] : counts) out.push_back(u);
  return out;
}

std::string FactorTable::json() const {
  std::ostringstream os;
  os << "{\"n\": " << n << ", \"horizon\": " << horizon
     << ", \"saturated\": " << (saturated ? "true" : "false") << ", \"factors\": [";
  bool first = true;
  for (const auto& [u, c] : counts) {
    os << (first ? "" : ", ") << "\"" << u.str() << "\"";
    first = false;
  }
  os << "], \"counts\": {";
  first = true;
  for (const auto& [u, c] : counts) {
    os << (first ? "" : ", ") << "\"" << u.str() << "\": " << c;
    first = false;
  }
  os << "}}";
  return os.str();
}

FactorTable factor_table(const WordStream& w, int n, std::uint64_t horizon) {
  require(n >= 0, "invalid-arguments", "factor length must be >= 0");
  require(horizon >= static_cast<std::uint64_t>(n), "invalid-arguments",
          "horizon must be >= n");
  FactorTable t;
  t.n = n;
  t.horizon = horizon;
  if (n == 0) {
    t.counts.emplace(FiniteWord(w.alphabet(), {}), horizon + 1);
    return t;
  }
  FiniteWord pref = w.prefix(horizon);
  const std::vector<Letter>& s = pref.letters();
  for (std::uint64_t i = 0; i + n <= horizon; ++i) {
    FiniteWord u(w.alphabet(),
                 {s.begin() + static_cast<long>(i), s.begin() + static_cast<long>(i + n)});
    ++t.counts[u];
  }
  return t;
}

FactorTable saturated_factor_table(const WordStream& w, int n, std::uint64_t horizon) {
  FactorTable full = factor_table(w, n, horizon);
  std::uint64_t half = horizon / 2;
  if (half >= static_cast<std::uint64_t>(n) && half < horizon) {
    FactorTable h = factor_table(w, n, half);
    full.saturated = same_factor_set(h, full);
  }
  return full;
}

FactorTable stabilize_horizon(const WordStream& w, int n,
                              const std::vector<std::uint64_t>& schedule) {
  require(!schedule.empty(), "invalid-arguments", "empty horizon schedule");
  for (std::size_t i = 1; i < schedule.size(); ++i)
    require(schedule[i - 1] < schedule[i], "invalid-arguments",
            "horizon schedule must be ascending");
  FactorTable prev = factor_table(w, n, schedule[0]);
  for (std::size_t i = 1; i < schedule.size(); ++i) {
    FactorTable cur = factor_table(w, n, schedule[i]);
    if (same_factor_set(prev, cur)) {
      prev.saturated = true;
      return prev;
    }
    prev = std::move(cur);
  }
  prev.saturated = false;
  return prev;
}

ComplexityProfile complexity(const WordStream& w, int n_max, std::uint64_t horizon) {
  require(n_max >= 0, "invalid-arguments", "n_max must be >= 0");
  require(horizon >= static_cast<std::uint64_t>(n_max), "invalid-arguments",
          "horizon must be >= n_max");
  ComplexityProfile cp;
  cp.horizon = horizon;
  FiniteWord pref = w.prefix(horizon);
  SuffixAutomaton full(pref.letters());
  cp.p = full.count_by_length(n_max);
  std::uint64_t half = horizon / 2;
  std::vector<std::uint64_t> ph;
  if (half > 0 && half < horizon) {
    std::vector<Letter> hl(pref.letters().begin(),
                           pref.letters().begin() + static_cast<long>(half));
    SuffixAutomaton h(hl);
    ph = h.count_by_length(n_max);
  }
  cp.saturated_at.assign(cp.p.size(), false);
  cp.saturated = true;
  for (std::size_t n = 0; n < cp.p.size(); ++n) {
    // Factor sets grow monotonically with the horizon, so equal counts at
    // horizon/2 and horizon mean equal sets.
    bool sat = !ph.empty() && n <= static_cast<std::size_t>(half) && ph[n] == cp.p[n];
    if (n == 0) sat = true;
    cp.saturated_at[n] = sat;
    cp.saturated = cp.saturated && sat;
  }
  return cp;
}

SpecialFactors special_factors(const WordStream& w, int n, std::uint64_t horizon) {
  FactorTable ext = factor_table(w, n + 1, horizon);
  SpecialFactors sf;
  sf.n = n;
  std::map<FiniteWord, int> r, l;
  for (const auto& [v, c] : ext.counts) {
    ++r[v.prefix(n)];
    ++l[v.suffix(n)];
  }
  for (const auto& [u, d] : r)
    if (d >= 2) sf.right_degree.emplace(u, d);
  for (const auto& [u, d] : l)
    if (d >= 2) sf.left_degree.emplace(u, d);
  return sf;
}

MHVerdict morse_hedlund_detect(const WordStream& w, int n_max, std::uint64_t horizon) {
  require(n_max >= 1, "invalid-arguments", "n_max must be >= 1");
  require(horizon >= static_cast<std::uint64_t>(n_max) + 1, "invalid-arguments",
          "horizon must be >= n_max + 1");
  ComplexityProfile cp = complexity(w, n_max + 1, horizon);
  MHVerdict v;
  v.p = cp.p;
  v.saturated = cp.saturated;
  for (int n = 0; n <= n_max; ++n) {
    if (cp.p[n + 1] == cp.p[n] && cp.saturated_at[n] && cp.saturated_at[n + 1]) {
      v.eventually_periodic = true;
      v.n0 = n;
      return v;
    }
  }
  return v;
}

std::map<Letter, std::uint64_t> letter_counts(const WordStream& w, std::uint64_t prefix_len) {
  std::map<Letter, std::uint64_t> out;
  for (int a = 1; a <= w.alphabet().size(); ++a) out[a] = 0;
  FiniteWord pref = w.prefix(prefix_len);
  for (Letter x : pref.letters()) ++out[x];
  return out;
}

}  // namespace slab

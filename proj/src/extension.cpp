#include "slab/extension.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "slab/substitution.hpp"

namespace slab {

namespace {

// Assembles Ext(u) from the factor tables at lengths |u|+1 and |u|+2.
ExtensionGraph assemble(const FiniteWord& u, const FactorTable& t1, const FactorTable& t2) {
  const std::size_t n = u.size();
  ExtensionGraph e;
  e.u = u;
  e.horizon = t2.horizon;
  e.saturated = t1.saturated && t2.saturated;
  std::set<Letter> left, right;
  for (const auto& [v, c] : t1.counts) {
    if (v.suffix(n) == u) left.insert(v[0]);
    if (v.prefix(n) == u) right.insert(v[n]);
  }
  for (const auto& [v, c] : t2.counts)
    if (v.subword(1, n) == u) e.edges.emplace_back(v[0], v[n + 1]);
  e.left.assign(left.begin(), left.end());
  e.right.assign(right.begin(), right.end());
  std::sort(e.edges.begin(), e.edges.end());
  return e;
}

}  // namespace

std::string ExtensionGraph::dot() const {
  std::string out = "graph extension {\n  label=\"Ext(" + u.display() + ")\";\n";
  for (Letter a : left)
    out += "  \"L" + std::to_string(a) + "\" [label=\"" + std::to_string(a) + "\"];\n";
  for (Letter b : right)
    out += "  \"R" + std::to_string(b) + "\" [label=\"" + std::to_string(b) + "\"];\n";
  for (const auto& [a, b] : edges)
    out += "  \"L" + std::to_string(a) + "\" -- \"R" + std::to_string(b) + "\";\n";
  out += "}\n";
  return out;
}

ExtensionGraph extension_graph(const WordStream& w, const FiniteWord& u,
                               std::uint64_t horizon) {
  const std::size_t n = u.size();
  require(horizon >= n + 2, "invalid-arguments", "horizon must cover length |u|+2");
  FactorTable t0 = saturated_factor_table(w, static_cast<int>(n), horizon);
  require(t0.contains(u), "not-a-factor",
          "'" + u.display() + "' is not a factor at this horizon");
  FactorTable t1 = saturated_factor_table(w, static_cast<int>(n) + 1, horizon);
  FactorTable t2 = saturated_factor_table(w, static_cast<int>(n) + 2, horizon);
  return assemble(u, t1, t2);
}

std::string ext_class_name(ExtClass c) {
  switch (c) {
    case ExtClass::Tree: return "tree";
    case ExtClass::Disconnected: return "disconnected";
    default: return "cyclic";
  }
}

ExtClass classify(const ExtensionGraph& e) {
  const std::size_t nl = e.left.size(), nr = e.right.size();
  require(nl + nr > 0, "degenerate-graph", "extension graph has no vertices");
  // Union-find over left vertices 0..nl-1 and right vertices nl..nl+nr-1.
  std::vector<std::size_t> parent(nl + nr);
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto lpos = [&](Letter a) {
    return static_cast<std::size_t>(
        std::lower_bound(e.left.begin(), e.left.end(), a) - e.left.begin());
  };
  auto rpos = [&](Letter b) {
    return nl + static_cast<std::size_t>(
                    std::lower_bound(e.right.begin(), e.right.end(), b) - e.right.begin());
  };
  std::size_t comps = nl + nr;
  for (const auto& [a, b] : e.edges) {
    std::size_t x = find(lpos(a)), y = find(rpos(b));
    if (x != y) {
      parent[x] = y;
      --comps;
    }
  }
  if (comps > 1) return ExtClass::Disconnected;
  return e.edges.size() == nl + nr - 1 ? ExtClass::Tree : ExtClass::Cyclic;
}

std::string DendricityReport::json() const {
  std::ostringstream os;
  os << "{\"max_n\": " << max_n << ", \"verdict\": ";
  if (dendric) {
    os << "\"dendric-up-to-" << max_n << "\"";
  } else {
    os << "\"fails-at\", \"witness\": \"" << witness.display() << "\", \"kind\": \""
       << ext_class_name(failure) << "\"";
  }
  os << ", \"saturated\": " << (saturated ? "true" : "false") << "}";
  return os.str();
}

DendricityReport dendricity_check(const WordStream& w, int max_n, std::uint64_t horizon) {
  require(max_n >= 0, "invalid-arguments", "max_n must be >= 0");
  require(horizon >= static_cast<std::uint64_t>(max_n) + 2, "invalid-arguments",
          "horizon must cover length max_n+2");
  DendricityReport rep;
  rep.max_n = max_n;
  FactorTable t0 = saturated_factor_table(w, 0, horizon);
  FactorTable ta = saturated_factor_table(w, 1, horizon);
  for (int n = 0; n <= max_n; ++n) {
    FactorTable tb = saturated_factor_table(w, n + 2, horizon);
    rep.saturated = rep.saturated && t0.saturated && ta.saturated && tb.saturated;
    for (const auto& [u, c] : t0.counts) {
      ExtensionGraph e = assemble(u, ta, tb);
      ExtClass cl = classify(e);
      if (cl != ExtClass::Tree) {
        rep.dendric = false;
        rep.witness = u;
        rep.failure = cl;
        return rep;
      }
    }
    t0 = std::move(ta);
    ta = std::move(tb);
  }
  return rep;
}

bool second_derivative_identity_check(const WordStream& w, int n, std::uint64_t horizon) {
  require(n >= 0, "invalid-arguments", "n must be >= 0");
  require(horizon >= static_cast<std::uint64_t>(n) + 2, "invalid-arguments",
          "horizon must cover length n+2");
  FactorTable t0 = factor_table(w, n, horizon);
  FactorTable t1 = factor_table(w, n + 1, horizon);
  FactorTable t2 = factor_table(w, n + 2, horizon);
  std::map<FiniteWord, std::int64_t> left_deg, right_deg, bi_deg;
  const std::size_t un = static_cast<std::size_t>(n);
  for (const auto& [v, c] : t1.counts) {
    ++left_deg[v.suffix(un)];
    ++right_deg[v.prefix(un)];
  }
  for (const auto& [v, c] : t2.counts) ++bi_deg[v.subword(1, un)];
  std::int64_t rhs = 0;
  for (const auto& [u, c] : t0.counts)
    rhs += bi_deg[u] - left_deg[u] - right_deg[u] + 1;
  std::int64_t p0 = static_cast<std::int64_t>(t0.distinct());
  std::int64_t p1 = static_cast<std::int64_t>(t1.distinct());
  std::int64_t p2 = static_cast<std::int64_t>(t2.distinct());
  return p2 - 2 * p1 + p0 == rhs;
}

WordStream quasi_sturmian_build(const WordStream& w0, std::uint64_t m,
                                std::vector<Letter> A, std::vector<Letter> B,
                                std::vector<Letter> C) {
  require(w0.alphabet().size() == 2, "invalid-arguments",
          "the base word must be binary");
  require(!C.empty(), "invalid-arguments", "part C must be non-empty");
  require(!A.empty() || !B.empty(), "invalid-arguments",
          "parts A and B must not both be empty");
  std::sort(A.begin(), A.end());
  std::sort(B.begin(), B.end());
  std::sort(C.begin(), C.end());
  std::vector<Letter> all;
  all.insert(all.end(), A.begin(), A.end());
  all.insert(all.end(), B.begin(), B.end());
  all.insert(all.end(), C.begin(), C.end());
  std::sort(all.begin(), all.end());
  const int d = static_cast<int>(all.size());
  for (int i = 0; i < d; ++i)
    require(all[static_cast<std::size_t>(i)] == i + 1, "invalid-arguments",
            "parts must partition the letters 1..d");
  std::vector<Letter> img1 = C, img2 = C;
  img1.insert(img1.end(), A.begin(), A.end());
  img2.insert(img2.end(), B.begin(), B.end());
  Substitution sigma(w0.alphabet(), Alphabet(d),
                     {{1, std::move(img1)}, {2, std::move(img2)}});
  std::string label = "quasi[m=" + std::to_string(m) + "](" + w0.label() + ")";
  WordStream image = sigma.apply(w0, label);
  return m == 0 ? image : shifted(image, m);
}

}  // namespace slab

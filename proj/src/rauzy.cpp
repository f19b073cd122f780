#include "slab/rauzy.hpp"

#include <algorithm>
#include <set>

namespace slab {

namespace {

std::vector<std::vector<std::size_t>> adjacency(const RauzyGraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.vertices.size());
  for (const auto& [s, t] : g.arcs) adj[s].push_back(t);
  return adj;
}

// Iterative Tarjan; component ids come out in reverse topological order
// (sinks get the smallest ids).
std::vector<std::size_t> strongly_connected_components(
    const std::vector<std::vector<std::size_t>>& adj, std::size_t& n_comp) {
  const std::size_t n = adj.size();
  const std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> idx(n, unset), low(n, 0), comp(n, unset);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> stack;
  struct Frame {
    std::size_t v, ei;
  };
  std::vector<Frame> frames;
  std::size_t counter = 0;
  n_comp = 0;
  for (std::size_t r = 0; r < n; ++r) {
    if (idx[r] != unset) continue;
    idx[r] = low[r] = counter++;
    stack.push_back(r);
    on_stack[r] = 1;
    frames.push_back({r, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.ei < adj[f.v].size()) {
        std::size_t u = adj[f.v][f.ei++];
        if (idx[u] == unset) {
          idx[u] = low[u] = counter++;
          stack.push_back(u);
          on_stack[u] = 1;
          frames.push_back({u, 0});
        } else if (on_stack[u]) {
          low[f.v] = std::min(low[f.v], idx[u]);
        }
      } else {
        std::size_t v = f.v;
        if (low[v] == idx[v]) {
          while (true) {
            std::size_t u = stack.back();
            stack.pop_back();
            on_stack[u] = 0;
            comp[u] = n_comp;
            if (u == v) break;
          }
          ++n_comp;
        }
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }
  return comp;
}

}  // namespace

std::size_t RauzyGraph::vertex_index(const FiniteWord& u) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), u);
  require(it != vertices.end() && *it == u, "not-a-factor",
          "'" + u.display() + "' is not a vertex of the order-" + std::to_string(n) +
              " Rauzy graph");
  return static_cast<std::size_t>(it - vertices.begin());
}

std::string RauzyGraph::dot() const {
  std::string out = "digraph rauzy {\n";
  for (const auto& v : vertices) out += "  \"" + v.display() + "\";\n";
  for (std::size_t i = 0; i < edges.size(); ++i)
    out += "  \"" + vertices[arcs[i].first].display() + "\" -> \"" +
           vertices[arcs[i].second].display() + "\" [label=\"" + edges[i].display() +
           "\"];\n";
  out += "}\n";
  return out;
}

RauzyGraph rauzy_graph(const WordStream& w, int n, std::uint64_t horizon) {
  require(n >= 0, "invalid-arguments", "Rauzy graph order must be non-negative");
  require(horizon >= static_cast<std::uint64_t>(n) + 1, "invalid-arguments",
          "horizon must cover length n+1 factors");
  FactorTable tn = saturated_factor_table(w, n, horizon);
  FactorTable tn1 = saturated_factor_table(w, n + 1, horizon);
  RauzyGraph g;
  g.n = n;
  g.horizon = horizon;
  g.saturated = tn.saturated && tn1.saturated;
  g.vertices = tn.factors();
  g.edges = tn1.factors();
  g.source = std::make_shared<const WordStream>(w);
  for (const auto& e : g.edges) {
    std::size_t s = g.vertex_index(e.prefix(static_cast<std::size_t>(n)));
    std::size_t t = g.vertex_index(e.suffix(static_cast<std::size_t>(n)));
    g.arcs.emplace_back(s, t);
  }
  return g;
}

bool is_strongly_connected(const RauzyGraph& g) {
  if (g.vertices.empty()) return true;
  std::size_t n_comp = 0;
  strongly_connected_components(adjacency(g), n_comp);
  return n_comp == 1;
}

bool is_semi_connected(const RauzyGraph& g) {
  if (g.vertices.size() <= 1) return true;
  std::size_t n_comp = 0;
  auto comp = strongly_connected_components(adjacency(g), n_comp);
  if (n_comp == 1) return true;
  std::set<std::pair<std::size_t, std::size_t>> darcs;
  for (const auto& [s, t] : g.arcs)
    if (comp[s] != comp[t]) darcs.emplace(comp[s], comp[t]);
  std::vector<std::size_t> indeg(n_comp, 0);
  std::vector<std::vector<std::size_t>> dadj(n_comp);
  for (const auto& [s, t] : darcs) {
    dadj[s].push_back(t);
    ++indeg[t];
  }
  // Kahn with a uniqueness requirement at every step.
  std::vector<std::size_t> zero;
  for (std::size_t c = 0; c < n_comp; ++c)
    if (indeg[c] == 0) zero.push_back(c);
  for (std::size_t step = 0; step < n_comp; ++step) {
    if (zero.size() != 1) return false;
    std::size_t c = zero.back();
    zero.pop_back();
    for (std::size_t t : dadj[c])
      if (--indeg[t] == 0) zero.push_back(t);
  }
  return true;
}

}  // namespace slab

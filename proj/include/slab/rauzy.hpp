#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "slab/factors.hpp"
#include "slab/word.hpp"

namespace slab {

// Rauzy graph of order n: vertices are the length-n factors, and each
// length-(n+1) factor v is an arc from its length-n prefix to its length-n
// suffix. Arcs are distinct words, so multi-edges cannot occur; self-loops
// can. Index lists are sorted lexicographically.
struct RauzyGraph {
  int n = 0;
  std::uint64_t horizon = 0;
  bool saturated = false;
  std::vector<FiniteWord> vertices;                        // L_n, sorted
  std::vector<FiniteWord> edges;                           // L_{n+1}, sorted
  std::vector<std::pair<std::size_t, std::size_t>> arcs;   // parallel to edges
  std::shared_ptr<const WordStream> source;                // for split checks

  std::size_t vertex_index(const FiniteWord& u) const;  // not-a-factor if absent
  std::string dot() const;  // deterministic: sorted vertices, sorted edges
};

RauzyGraph rauzy_graph(const WordStream& w, int n, std::uint64_t horizon);

bool is_strongly_connected(const RauzyGraph& g);

// True iff every vertex pair is joined by a path in at least one direction;
// decided on the condensation: semi-connected iff the component DAG has a
// unique topological order (exactly one zero-indegree choice at every step).
bool is_semi_connected(const RauzyGraph& g);

}  // namespace slab

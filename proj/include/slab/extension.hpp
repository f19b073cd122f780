#pragma once

#include <string>
#include <utility>
#include <vector>

#include "slab/factors.hpp"
#include "slab/word.hpp"

namespace slab {

// Bipartite extension graph of a factor u: left vertices are letters a with
// au a factor, right vertices letters b with ub a factor, and (a,b) is an
// edge iff aub is a factor. The same letter on both sides gives two distinct
// vertices.
struct ExtensionGraph {
  FiniteWord u;
  std::vector<Letter> left;                      // sorted
  std::vector<Letter> right;                     // sorted
  std::vector<std::pair<Letter, Letter>> edges;  // sorted pairs
  std::uint64_t horizon = 0;
  bool saturated = false;

  std::string dot() const;  // deterministic bipartite rendering
};

ExtensionGraph extension_graph(const WordStream& w, const FiniteWord& u,
                               std::uint64_t horizon);

enum class ExtClass { Tree, Disconnected, Cyclic };
std::string ext_class_name(ExtClass c);

// Tree iff connected and |edges| = |left| + |right| - 1; a disconnected graph
// reports Disconnected even when some component has a cycle. Empty vertex set
// raises degenerate-graph.
ExtClass classify(const ExtensionGraph& e);

struct DendricityReport {
  int max_n = 0;
  bool dendric = true;
  FiniteWord witness;                  // failing factor when !dendric
  ExtClass failure = ExtClass::Tree;   // failure kind when !dendric
  bool saturated = true;
  std::string json() const;
};

// Classifies Ext(u) for every factor u with |u| <= max_n, the empty word
// included; stops at the first non-tree.
DendricityReport dendricity_check(const WordStream& w, int max_n, std::uint64_t horizon);

// Checks p(n+2) - 2p(n+1) + p(n) = sum over u in L_n of
// |B(u)| - |L(u)| - |R(u)| + 1. The identity holds for factor tables taken
// at one common horizon whether or not they are saturated.
bool second_derivative_identity_check(const WordStream& w, int n, std::uint64_t horizon);

// S^m sigma(w0) for the block substitution sigma: 1 -> C A, 2 -> C B (each
// part's letters in ascending order). A, B, C must partition 1..d with C and
// A union B non-empty; w0 must be binary.
WordStream quasi_sturmian_build(const WordStream& w0, std::uint64_t m,
                                std::vector<Letter> A, std::vector<Letter> B,
                                std::vector<Letter> C);

}  // namespace slab

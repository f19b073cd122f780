#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "slab/quadratic.hpp"
#include "slab/rational.hpp"

namespace slab {

// Dense rational matrix with display labels for the indexing words. Every
// constructor keeps the labels in the underlying words' lexicographic order.
struct RationalMatrix {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::vector<Rat>> entries;  // entries[r][c]

  std::size_t rows() const { return entries.size(); }
  std::size_t cols() const { return col_labels.size(); }
  // Header line ",c1,c2,..."; then one "label,e1,e2,..." line per row.
  std::string csv() const;
};

struct KernelBasis {
  std::size_t dimension = 0;
  std::size_t rank = 0;                 // rank of the matrix, a byproduct
  std::vector<std::string> index;       // coordinate labels of the vectors
  std::vector<std::vector<Rat>> basis;  // first nonzero coordinate scaled to 1
  std::string json() const;
};

enum class KernelSide { Right, Left };

// Exact kernel by fraction-free (integer-pivot) elimination on the
// denominator-cleared matrix, then rational back-substitution per free
// column. Right kernel {v : Mv = 0}; left kernel via the transpose. Each
// basis vector is re-verified against M before being returned.
KernelBasis kernel_basis(const RationalMatrix& M, KernelSide side);

// Rank over Q by the same elimination. Takes the grid by value.
std::size_t rational_rank(std::vector<std::vector<Rat>> grid);

// dim over Q of Span(values) inside one quadratic field Q(sqrt(D)): the rank
// of the coordinate pairs (a_i, b_i) in the basis {1, sqrt(D)}. Rational
// values embed in any field; two different irrational radicands raise
// unsupported-field.
std::size_t rational_span_dimension(const std::vector<QuadraticReal>& values);

}  // namespace slab

#include "slab/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "slab/error.hpp"

namespace slab {

namespace {

// Fraction-free echelon reduction in place (Bareiss: every division by the
// previous pivot is exact). Returns the pivot columns in ascending order.
std::vector<std::size_t> bareiss(std::vector<std::vector<Int>>& a) {
  const std::size_t nr = a.size();
  const std::size_t nc = nr ? a[0].size() : 0;
  std::vector<std::size_t> pivots;
  Int prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t sel = r;
    while (sel < nr && sgn(a[sel][c]) == 0) ++sel;
    if (sel == nr) continue;
    std::swap(a[sel], a[r]);
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        Int num = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Row-wise denominator clearing; scaling rows preserves kernel and rank.
std::vector<std::vector<Int>> cleared(const std::vector<std::vector<Rat>>& grid) {
  std::vector<std::vector<Int>> a;
  a.reserve(grid.size());
  for (const auto& row : grid) {
    Int l(1);
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<Int> irow;
    irow.reserve(row.size());
    for (const auto& x : row) irow.push_back(Int(x.get_num() * (l / x.get_den())));
    a.push_back(std::move(irow));
  }
  return a;
}

std::vector<std::vector<Rat>> transpose(const std::vector<std::vector<Rat>>& g,
                                        std::size_t nr, std::size_t nc) {
  std::vector<std::vector<Rat>> t(nc, std::vector<Rat>(nr));
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) t[c][r] = g[r][c];
  return t;
}

}  // namespace

std::string RationalMatrix::csv() const {
  std::string out;
  for (const auto& c : col_labels) out += "," + c;
  out += "\n";
  for (std::size_t r = 0; r < rows(); ++r) {
    out += row_labels[r];
    for (const auto& x : entries[r]) out += "," + rational_str(x);
    out += "\n";
  }
  return out;
}

std::string KernelBasis::json() const {
  std::ostringstream os;
  os << "{\"dimension\": " << dimension << ", \"rank\": " << rank << ", \"index\": [";
  for (std::size_t i = 0; i < index.size(); ++i)
    os << (i ? ", " : "") << "\"" << index[i] << "\"";
  os << "], \"basis\": [";
  for (std::size_t v = 0; v < basis.size(); ++v) {
    os << (v ? ", " : "") << "[";
    for (std::size_t i = 0; i < basis[v].size(); ++i)
      os << (i ? ", " : "") << "\"" << rational_str(basis[v][i]) << "\"";
    os << "]";
  }
  os << "]}";
  return os.str();
}

KernelBasis kernel_basis(const RationalMatrix& M, KernelSide side) {
  std::vector<std::vector<Rat>> grid =
      side == KernelSide::Right ? M.entries : transpose(M.entries, M.rows(), M.cols());
  const std::size_t dim = side == KernelSide::Right ? M.cols() : M.rows();
  if (grid.empty()) grid.assign(1, std::vector<Rat>(dim));  // zero map
  auto a = cleared(grid);
  auto pivots = bareiss(a);

  KernelBasis k;
  k.rank = pivots.size();
  k.index = side == KernelSide::Right ? M.col_labels : M.row_labels;
  std::vector<char> is_pivot(dim, 0);
  for (std::size_t c : pivots) is_pivot[c] = 1;
  for (std::size_t f = 0; f < dim; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(dim, Rat(0));
    v[f] = 1;
    for (std::size_t k2 = pivots.size(); k2-- > 0;) {
      std::size_t c = pivots[k2];
      if (c > f) continue;  // pivots right of f stay 0: nothing feeds them
      Rat s(0);
      for (std::size_t j = c + 1; j < dim; ++j)
        if (sgn(v[j]) != 0 && sgn(a[k2][j]) != 0) s += Rat(a[k2][j]) * v[j];
      v[c] = -s / Rat(a[k2][c]);
    }
    // Scale so the first nonzero coordinate is 1.
    for (std::size_t j = 0; j < dim; ++j)
      if (sgn(v[j]) != 0) {
        Rat lead = v[j];
        for (auto& x : v) x /= lead;
        break;
      }
    // Exact re-verification against the original entries.
    for (const auto& row : grid) {
      Rat s(0);
      for (std::size_t j = 0; j < dim; ++j) s += row[j] * v[j];
      require(sgn(s) == 0, "invalid-arguments", "kernel verification failed");
    }
    k.basis.push_back(std::move(v));
  }
  k.dimension = k.basis.size();
  return k;
}

std::size_t rational_rank(std::vector<std::vector<Rat>> grid) {
  if (grid.empty()) return 0;
  auto a = cleared(grid);
  return bareiss(a).size();
}

std::size_t rational_span_dimension(const std::vector<QuadraticReal>& values) {
  Int D(0);
  for (const auto& x : values) {
    if (x.is_rational()) continue;
    if (sgn(D) == 0)
      D = x.radicand();
    else
      require(D == x.radicand(), "unsupported-field",
              "values lie in different quadratic fields");
  }
  std::vector<std::vector<Rat>> grid;
  grid.reserve(values.size());
  for (const auto& x : values) grid.push_back({x.rational_part(), x.surd_coeff()});
  return rational_rank(std::move(grid));
}

}  // namespace slab

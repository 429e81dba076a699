#include "germnf/resonance/intlattice.hpp"

#include "germnf/exactnum/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace germnf {

namespace {

bool is_zero_row(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

// Row operation helpers acting on a list of rows.
void combine(IntVector& a, IntVector& b, const Integer& s, const Integer& t, const Integer& u, const Integer& v) {
  // (a, b) <- (s a + t b, u a + v b)
  for (std::size_t k = 0; k < a.size(); ++k) {
    Integer na = s * a[k] + t * b[k];
    Integer nb = u * a[k] + v * b[k];
    a[k] = std::move(na);
    b[k] = std::move(nb);
  }
}

// Brings rows into echelon form with gcd steps on the first `width` columns.
// Applies the same operations to the trailing columns. Returns the pivot
// columns; rows past the pivots are zero on the first `width` columns.
std::vector<std::size_t> echelon(IntMatrix& rows, std::size_t width) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < width && r < rows.size(); ++c) {
    for (std::size_t k = r + 1; k < rows.size(); ++k) {
      if (rows[k][c] == 0) continue;
      if (rows[r][c] == 0) {
        std::swap(rows[r], rows[k]);
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), rows[r][c].get_mpz_t(), rows[k][c].get_mpz_t());
      const Integer u = -rows[k][c] / g;
      const Integer v = rows[r][c] / g;
      combine(rows[r], rows[k], s, t, u, v);
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0) {
      for (auto& x : rows[r]) x = -x;
    }
    for (std::size_t k = 0; k < r; ++k) {
      const Integer q = floor_div(rows[k][c], rows[r][c]);
      if (q == 0) continue;
      for (std::size_t j = 0; j < rows[k].size(); ++j) rows[k][j] -= q * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix rows) {
  rows.erase(std::remove_if(rows.begin(), rows.end(), is_zero_row), rows.end());
  if (rows.empty()) return rows;
  const std::size_t width = rows.front().size();
  const auto pivots = echelon(rows, width);
  rows.resize(pivots.size());
  return rows;
}

IntMatrix integer_kernel(const IntMatrix& M, std::size_t cols) {
  // Row-reduce [M^T | I]; rows whose M^T part vanishes carry kernel vectors.
  const std::size_t r = M.size();
  IntMatrix aug(cols, IntVector(r + cols, Integer(0)));
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < r; ++i) aug[j][i] = M[i][j];
    aug[j][r + j] = 1;
  }
  const auto pivots = echelon(aug, r);
  IntMatrix kernel;
  for (std::size_t k = pivots.size(); k < cols; ++k) kernel.emplace_back(aug[k].begin() + static_cast<long>(r), aug[k].end());
  return hermite_normal_form(std::move(kernel));
}

std::optional<IntVector> solve_integer(const IntMatrix& A, std::size_t cols, const IntVector& b) {
  const std::size_t r = A.size();
  if (b.size() != r) throw std::invalid_argument("solve_integer: right-hand side length mismatch");
  // Column operations A U = H via row operations on [A^T | I].
  IntMatrix aug(cols, IntVector(r + cols, Integer(0)));
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < r; ++i) aug[j][i] = A[i][j];
    aug[j][r + j] = 1;
  }
  const auto pivots = echelon(aug, r);
  // Row k of aug is (column k of H)^T followed by column k of U. Solve
  // sum_k y_k H_col_k = b; H_col_k has its leading entry at pivots[k].
  IntVector residual = b;
  IntVector y(pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    const std::size_t p = pivots[k];
    const Integer& lead = aug[k][p];
    if (!mpz_divisible_p(residual[p].get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    y[k] = residual[p] / lead;
    for (std::size_t i = 0; i < r; ++i) residual[i] -= y[k] * aug[k][i];
  }
  if (!is_zero_row(residual)) return std::nullopt;
  IntVector x(cols, Integer(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    for (std::size_t j = 0; j < cols; ++j) x[j] += y[k] * aug[k][r + j];
  }
  return x;
}

std::size_t rational_rank(const IntMatrix& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(rows[i][j]);
  }
  return m.rank();
}

namespace {

struct BoxSearch {
  const IntMatrix& basis;
  const IntVector& lo;
  const IntVector& hi;
  const Integer& sum_lo;
  const Integer& sum_hi;
  std::vector<std::size_t> pivots;
  std::vector<IntVector> out;

  void run(std::size_t j, IntVector& v) {
    const std::size_t dim = lo.size();
    // Columns before the next pivot are final.
    const std::size_t final_upto = j < basis.size() ? pivots[j] : dim;
    for (std::size_t c = (j == 0 ? 0 : pivots[j - 1]); c < final_upto; ++c) {
      if (v[c] < lo[c] || v[c] > hi[c]) return;
    }
    if (j == basis.size()) {
      Integer s = 0;
      for (const auto& x : v) s += x;
      if (s >= sum_lo && s <= sum_hi) out.push_back(v);
      return;
    }
    const std::size_t p = pivots[j];
    const Integer& piv = basis[j][p];
    const Integer cmin = ceil_div(lo[p] - v[p], piv);
    const Integer cmax = floor_div(hi[p] - v[p], piv);
    for (Integer c = cmin; c <= cmax; ++c) {
      for (std::size_t k = p; k < dim; ++k) v[k] += c * basis[j][k];
      run(j + 1, v);
      for (std::size_t k = p; k < dim; ++k) v[k] -= c * basis[j][k];
    }
  }
};

}  // namespace

std::vector<IntVector> enumerate_box(const IntMatrix& hnf_basis, const IntVector& lo, const IntVector& hi,
                                     const Integer& sum_lo, const Integer& sum_hi) {
  if (lo.size() != hi.size()) throw std::invalid_argument("enumerate_box: bound length mismatch");
  BoxSearch search{hnf_basis, lo, hi, sum_lo, sum_hi, {}, {}};
  for (const auto& row : hnf_basis) {
    if (row.size() != lo.size()) throw std::invalid_argument("enumerate_box: basis dimension mismatch");
    std::size_t p = 0;
    while (p < row.size() && row[p] == 0) ++p;
    if (p == row.size() || row[p] <= 0 || (!search.pivots.empty() && p <= search.pivots.back())) {
      throw std::invalid_argument("enumerate_box: basis is not in Hermite normal form");
    }
    search.pivots.push_back(p);
  }
  IntVector v(lo.size(), Integer(0));
  search.run(0, v);
  return search.out;
}

}  // namespace germnf

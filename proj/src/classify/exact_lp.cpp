#include "germnf/classify/exact_lp.hpp"

#include <stdexcept>

namespace germnf {

std::vector<Rational> multiply(const RationalMatrix& A, const std::vector<Rational>& y) {
  if (A.cols() != y.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  std::vector<Rational> out(A.rows(), Rational(0));
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) out[i] += A(i, j) * y[j];
  }
  return out;
}

std::optional<std::vector<Rational>> find_feasible_point(const RationalMatrix& A, const std::vector<Rational>& b) {
  const std::size_t m = A.rows();
  const std::size_t k = A.cols();
  if (b.size() != m) throw std::invalid_argument("find_feasible_point: right-hand side length mismatch");
  const std::size_t width = k + m + 1;
  const std::size_t rhs = k + m;
  // Tableau with one artificial variable per row; rows flipped so b >= 0.
  RationalMatrix T(m, width);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = sgn(b[i]) < 0;
    for (std::size_t j = 0; j < k; ++j) T(i, j) = flip ? Rational(-A(i, j)) : A(i, j);
    T(i, k + i) = 1;
    T(i, rhs) = flip ? Rational(-b[i]) : b[i];
    basis[i] = k + i;
  }
  // Reduced costs of min sum(artificials).
  std::vector<Rational> d(width, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) d[j] -= T(i, j);
    d[rhs] -= T(i, rhs);
  }
  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < k + m; ++j) {
      if (sgn(d[j]) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(T(i, enter)) <= 0) continue;
      Rational ratio = T(i, rhs) / T(i, enter);
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw std::logic_error("phase-1 objective is unbounded, which cannot happen");
    const Rational piv = T(leave, enter);
    for (std::size_t j = 0; j < width; ++j) T(leave, j) /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || sgn(T(i, enter)) == 0) continue;
      const Rational f = T(i, enter);
      for (std::size_t j = 0; j < width; ++j) T(i, j) -= f * T(leave, j);
    }
    const Rational f = d[enter];
    for (std::size_t j = 0; j < width; ++j) d[j] -= f * T(leave, j);
    basis[leave] = enter;
  }
  if (sgn(d[rhs]) != 0) return std::nullopt;
  std::vector<Rational> x(k, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < k) x[basis[i]] = T(i, rhs);
  }
  if (multiply(A, x) != b) throw std::logic_error("phase-1 point failed exact re-verification");
  return x;
}

}  // namespace germnf

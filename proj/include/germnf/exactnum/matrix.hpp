#pragma once

#include "germnf/exactnum/gaussian.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace germnf {

/// Small dense matrix over an exact field (Rational or GaussianRational).
template <typename Scalar>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = Scalar(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    DenseMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    }
    return out;
  }

  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t sel = row;
      while (sel < rows_ && is_zero((*this)(sel, col))) ++sel;
      if (sel == rows_) continue;
      swap_rows(sel, row);
      const Scalar inv = Scalar(1) / (*this)(row, col);
      for (std::size_t c = col; c < cols_; ++c) (*this)(row, c) *= inv;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row || is_zero((*this)(r, col))) continue;
        const Scalar f = (*this)(r, col);
        for (std::size_t c = col; c < cols_; ++c) {
          if (!is_zero((*this)(row, c))) (*this)(r, c) -= f * (*this)(row, c);
        }
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t rank() const {
    DenseMatrix copy = *this;
    return copy.rref().size();
  }

  /// Basis of {v : M v = 0}, one vector per free column, with a 1 in that
  /// free position.
  std::vector<std::vector<Scalar>> nullspace() const {
    DenseMatrix r = *this;
    const auto pivots = r.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<Scalar> v(cols_, Scalar(0));
      v[free] = Scalar(1);
      for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /// Throws std::domain_error when singular.
  DenseMatrix inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = rows_;
    DenseMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
      aug(i, n + i) = Scalar(1);
    }
    const auto pivots = aug.rref();
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular");
    DenseMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    }
    return out;
  }

  bool is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (i != j && !is_zero((*this)(i, j))) return false;
      }
    }
    return true;
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

using RationalMatrix = DenseMatrix<Rational>;
using GaussianMatrix = DenseMatrix<GaussianRational>;

}  // namespace germnf

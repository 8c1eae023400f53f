// Dense exact-rational matrices with Gaussian elimination: rank, kernel
// bases and square solves. Pivots are chosen deterministically (first
// nonzero in column order) so results are reproducible.
#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "verlinde/numeric.hpp"

namespace verlinde {

using RatVec = std::vector<Rational>;

class RatMat {
 public:
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, Rational(0)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("RatMat: negative shape");
  }

  static RatMat identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  friend RatMat operator*(const RatMat& a, const RatMat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("RatMat: shape mismatch in product");
    RatMat out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int k = 0; k < a.cols_; ++k) {
        if (a.at(i, k) == 0) continue;
        for (int j = 0; j < b.cols_; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
    return out;
  }

  RatVec apply(const RatVec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("RatMat: shape mismatch in apply");
    RatVec out(static_cast<std::size_t>(rows_), Rational(0));
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) {
        if (at(i, j) != 0 && v[static_cast<std::size_t>(j)] != 0) {
          out[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
        }
      }
    }
    return out;
  }

 private:
  int rows_, cols_;
  std::vector<Rational> data_;
};

namespace detail {

// Row echelon form in place; returns the pivot column of each pivot row.
inline std::vector<int> echelonize(RatMat& m) {
  std::vector<int> pivot_cols;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int i = row; i < m.rows(); ++i) {
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
    }
    const Rational inv = 1 / m.at(row, col);
    for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      const Rational f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

}  // namespace detail

inline int rank(RatMat m) { return static_cast<int>(detail::echelonize(m).size()); }

// Basis of the right kernel, one column vector per free column.
inline std::vector<RatVec> kernel_basis(RatMat m) {
  const auto pivots = detail::echelonize(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<RatVec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    RatVec v(static_cast<std::size_t>(m.cols()), Rational(0));
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[static_cast<std::size_t>(pivots[r])] = -m.at(static_cast<int>(r), free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Unique solution of a square system; throws if the matrix is singular.
inline RatVec solve_square(const RatMat& a, const RatVec& b) {
  if (a.rows() != a.cols() || static_cast<int>(b.size()) != a.rows()) {
    throw std::invalid_argument("solve_square: shape mismatch");
  }
  const int n = a.rows();
  RatMat aug(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n) = b[static_cast<std::size_t>(i)];
  }
  const auto pivots = detail::echelonize(aug);
  if (static_cast<int>(pivots.size()) != n || (n > 0 && pivots.back() == n)) {
    throw std::runtime_error("solve_square: singular matrix");
  }
  RatVec x(static_cast<std::size_t>(n), Rational(0));
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = aug.at(i, n);
  return x;
}

inline bool is_invertible(const RatMat& a) {
  return a.rows() == a.cols() && rank(a) == a.rows();
}

}  // namespace verlinde

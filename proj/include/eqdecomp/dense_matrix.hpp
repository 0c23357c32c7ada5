// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace eqdecomp {

using Complex = std::complex<double>;

/// Row-major dense matrix of complex doubles. Every graph matrix in the
/// library uses this one scalar type, real-valued or not.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  static DenseMatrix from_rows(const std::vector<std::vector<Complex>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Complex> data() const noexcept { return data_; }

  /// Submatrix M[rows, cols] selected by index lists (in the given order).
  DenseMatrix select(std::span<const std::size_t> row_indices,
                     std::span<const std::size_t> col_indices) const;

  DenseMatrix transpose() const;
  DenseMatrix adjoint() const;

  double max_abs() const;
  /// Maximum absolute row sum.
  double inf_norm() const;
  /// True when every entry has zero imaginary part and an integral real part.
  bool is_integer_valued() const;
  bool is_finite() const;

  DenseMatrix& operator+=(const DenseMatrix& other);
  DenseMatrix& operator-=(const DenseMatrix& other);
  DenseMatrix& operator*=(Complex scale);

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(DenseMatrix a, Complex s) { return a *= s; }
  friend DenseMatrix operator*(Complex s, DenseMatrix a) { return a *= s; }
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);

  /// Exact entrywise equality (no tolerance).
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Block-diagonal matrix with the given blocks along the diagonal.
DenseMatrix direct_sum(std::span<const DenseMatrix> blocks);

/// max |a_ij - b_ij|; matrices must have equal shape.
double max_abs_difference(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace eqdecomp

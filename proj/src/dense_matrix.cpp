// SPDX-License-Identifier: Apache-2.0

#include "eqdecomp/dense_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "eqdecomp/error.hpp"

namespace eqdecomp {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  std::vector<std::vector<Complex>> copy;
  copy.reserve(rows.size());
  for (const auto& row : rows) copy.emplace_back(row);
  return from_rows(copy);
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<Complex>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  DenseMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ParseError("matrix rows have unequal lengths");
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * cols));
  }
  return m;
}

DenseMatrix DenseMatrix::select(std::span<const std::size_t> row_indices,
                                std::span<const std::size_t> col_indices) const {
  DenseMatrix out(row_indices.size(), col_indices.size());
  for (std::size_t a = 0; a < row_indices.size(); ++a)
    for (std::size_t b = 0; b < col_indices.size(); ++b)
      out(a, b) = (*this)(row_indices[a], col_indices[b]);
  return out;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
  return t;
}

double DenseMatrix::max_abs() const {
  double best = 0.0;
  for (const auto& z : data_) best = std::max(best, std::abs(z));
  return best;
}

double DenseMatrix::inf_norm() const {
  double best = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) row += std::abs((*this)(i, j));
    best = std::max(best, row);
  }
  return best;
}

bool DenseMatrix::is_integer_valued() const {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
    return z.imag() == 0.0 && std::isfinite(z.real()) && std::trunc(z.real()) == z.real();
  });
}

bool DenseMatrix::is_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error("matrix shape mismatch in addition");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error("matrix shape mismatch in subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(Complex scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix shape mismatch in multiplication");
  DenseMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const Complex lhs = a(i, l);
      if (lhs == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += lhs * b(l, j);
    }
  return c;
}

DenseMatrix direct_sum(std::span<const DenseMatrix> blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (!b.is_square()) throw Error("direct_sum requires square blocks");
    n += b.rows();
  }
  DenseMatrix out(n, n);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(offset + i, offset + j) = b(i, j);
    offset += b.rows();
  }
  return out;
}

double max_abs_difference(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("matrix shape mismatch in comparison");
  double best = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    best = std::max(best, std::abs(a.data()[i] - b.data()[i]));
  return best;
}

}  // namespace eqdecomp

#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dehnkit/laurent.hpp"

namespace dehnkit {

/// Dense row-major matrix with optional row/column provenance tags.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<std::string> row_tags, col_tags;

  Matrix transpose() const {
    Matrix t(cols_, rows_, T());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    t.row_tags = col_tags;
    t.col_tags = row_tags;
    return t;
  }

  /// Columns [first, first + count).
  Matrix columns(std::size_t first, std::size_t count) const {
    if (first + count > cols_) throw std::out_of_range("Matrix::columns");
    Matrix m(rows_, count, zero_like());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
    m.row_tags = row_tags;
    if (!col_tags.empty()) m.col_tags.assign(col_tags.begin() + first, col_tags.begin() + first + count);
    return m;
  }

  /// Copy without column j.
  Matrix without_column(std::size_t j) const {
    Matrix m(rows_, cols_ - 1, zero_like());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t c = 0, k = 0; c < cols_; ++c)
        if (c != j) m(i, k++) = (*this)(i, c);
    return m;
  }

  Matrix without_row(std::size_t r) const {
    Matrix m(rows_ - 1, cols_, zero_like());
    for (std::size_t i = 0, k = 0; i < rows_; ++i) {
      if (i == r) continue;
      for (std::size_t c = 0; c < cols_; ++c) m(k, c) = (*this)(i, c);
      ++k;
    }
    return m;
  }

  /// Same entries; tags ignored.
  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

  T zero_like() const { return data_.empty() ? T() : data_.front() - data_.front(); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using LaurentMatrix = Matrix<LaurentPoly>;

IntMatrix int_matrix(const std::vector<std::vector<long>>& rows);

/// Fraction-free Bareiss elimination. The empty matrix has determinant 1.
Integer determinant(const IntMatrix& m);
/// Bareiss over Z[t^+-1] (one variable) with exact division.
LaurentPoly determinant(const LaurentMatrix& m);
/// Laplace expansion; exponential, for cross-checking small matrices.
Integer determinant_by_cofactors(const IntMatrix& m);
LaurentPoly determinant_by_cofactors(const LaurentMatrix& m);

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
/// a - t*b as a Laurent matrix.
LaurentMatrix minus_t_times(const IntMatrix& a, const IntMatrix& b);
bool is_zero(const IntMatrix& m);
bool is_symmetric(const IntMatrix& m);

/// [[3, -1], [-1, 3]]
std::string to_string(const IntMatrix& m);
/// \begin{pmatrix} 3 & -1 \\ -1 & 3 \end{pmatrix}
std::string to_latex(const IntMatrix& m);
std::string to_latex(const LaurentMatrix& m);

}  // namespace dehnkit

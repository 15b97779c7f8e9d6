#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sperner/field.hpp"

namespace sperner {

/// Dense row-major matrix over a single Field. Subspaces of K^cols are
/// represented by the row space of a Matrix throughout the library.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  static Matrix identity(Field field, std::size_t n);
  /// Throws DimensionMismatch on ragged input.
  static Matrix from_rows(Field field, const std::vector<std::vector<Scalar>>& rows,
                          std::size_t cols);
  static Matrix from_ints(Field field, const std::vector<std::vector<long long>>& rows);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  bool row_is_zero(std::size_t r) const;
  bool is_zero() const;

  Matrix transpose() const;
  /// Rows [begin, end).
  Matrix row_slice(std::size_t begin, std::size_t end) const;
  void append_row(std::span<const Scalar> values);

  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// this * other. Throws DimensionMismatch / FieldMismatch.
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& m, const Scalar& s);

/// Rows of `top` followed by rows of `bottom`.
Matrix vstack(const Matrix& top, const Matrix& bottom);
/// Columns of `left` followed by columns of `right`.
Matrix hstack(const Matrix& left, const Matrix& right);

struct RrefResult {
  Matrix reduced;                   // same shape as the input, zero rows last
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form. Pivots are chosen as the first nonzero entry
/// scanning columns left to right, rows top to bottom. Elimination across
/// rows is OpenMP-parallel for large inputs; see kernels::rref_serial for the
/// reference.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Nonzero rows of rref(m): the canonical basis of the row space.
Matrix row_basis(const Matrix& m);

/// Canonical basis of rowspace(a) + rowspace(b).
Matrix row_space_sum(const Matrix& a, const Matrix& b);
/// Canonical basis of rowspace(a) ∩ rowspace(b).
Matrix row_space_intersect(const Matrix& a, const Matrix& b);

/// Basis (in reduced row form) of { x : x * m = 0 }; m.rows() columns.
Matrix left_kernel(const Matrix& m);
/// Basis (rows) of { y : m * y^T = 0 }; m.cols() columns.
Matrix right_kernel(const Matrix& m);

/// True iff every row of `rows` lies in rowspace(basis).
bool row_space_contains(const Matrix& basis, const Matrix& rows);

}  // namespace sperner

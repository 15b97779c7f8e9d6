#include "sperner/matrix.hpp"

#include <sstream>

#include "sperner/errors.hpp"
#include "sperner/kernels.hpp"

namespace sperner {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("matrices over different fields");
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<Scalar>>& rows,
                         std::size_t cols) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!(rows[r][c].field() == field)) throw FieldMismatch("entry from another field");
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::from_ints(Field field, const std::vector<std::vector<long long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.from_int(rows[r][c]);
  }
  return m;
}

bool Matrix::row_is_zero(std::size_t r) const {
  for (const auto& x : row(r)) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::row_slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > rows_) throw DimensionMismatch("row slice out of range");
  Matrix s(field_, end - begin, cols_);
  for (std::size_t r = begin; r < end; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) s(r - begin, c) = (*this)(r, c);
  }
  return s;
}

void Matrix::append_row(std::span<const Scalar> values) {
  if (values.size() != cols_) throw DimensionMismatch("appended row has wrong length");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ',';
      os << (*this)(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
  Matrix p(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) p(i, j) += x * b(k, j);
      }
    }
  }
  return p;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("matrix sum shape mismatch");
  }
  Matrix s = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) += b(i, j);
  }
  return s;
}

Matrix scale(const Matrix& m, const Scalar& s) {
  Matrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (auto& x : out.row(i)) x *= s;
  }
  return out;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  require_same_field(top, bottom);
  if (top.cols() != bottom.cols()) throw DimensionMismatch("vstack column mismatch");
  Matrix out = top;
  for (std::size_t r = 0; r < bottom.rows(); ++r) out.append_row(bottom.row(r));
  return out;
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  require_same_field(left, right);
  if (left.rows() != right.rows()) throw DimensionMismatch("hstack row mismatch");
  Matrix out(left.field(), left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    for (std::size_t c = 0; c < left.cols(); ++c) out(r, c) = left(r, c);
    for (std::size_t c = 0; c < right.cols(); ++c) out(r, left.cols() + c) = right(r, c);
  }
  return out;
}

RrefResult rref(const Matrix& m) { return kernels::rref_parallel(m); }

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix row_basis(const Matrix& m) {
  auto r = rref(m);
  return r.reduced.row_slice(0, r.rank);
}

Matrix row_space_sum(const Matrix& a, const Matrix& b) {
  return row_basis(vstack(a, b));
}

Matrix row_space_intersect(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.cols()) throw DimensionMismatch("intersection column mismatch");
  const Matrix ba = row_basis(a);
  const Matrix bb = row_basis(b);
  if (ba.rows() == 0 || bb.rows() == 0) return Matrix(a.field(), 0, a.cols());
  // x*ba + y*bb = 0  <=>  x*ba lies in both spaces.
  const Matrix kernel = left_kernel(vstack(ba, bb));
  Matrix coeffs(a.field(), kernel.rows(), ba.rows());
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    for (std::size_t c = 0; c < ba.rows(); ++c) coeffs(r, c) = kernel(r, c);
  }
  return row_basis(coeffs * ba);
}

Matrix right_kernel(const Matrix& m) {
  const auto r = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (const auto p : r.pivots) is_pivot[p] = true;
  Matrix basis(m.field(), 0, cols);
  std::vector<Scalar> v(cols, m.field().zero());
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::fill(v.begin(), v.end(), m.field().zero());
    v[f] = m.field().one();
    for (std::size_t k = 0; k < r.rank; ++k) v[r.pivots[k]] = -r.reduced(k, f);
    basis.append_row(v);
  }
  return row_basis(basis);
}

Matrix left_kernel(const Matrix& m) { return right_kernel(m.transpose()); }

bool row_space_contains(const Matrix& basis, const Matrix& rows) {
  if (rows.rows() == 0) return true;
  return rank(vstack(basis, rows)) == rank(basis);
}

}  // namespace sperner

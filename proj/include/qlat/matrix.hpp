#pragma once

// Dense exact matrices over Z and Q, with the handful of algorithms the
// lattice code needs: elimination, Smith normal form, integer kernels and
// primitive closures.

#include <cstddef>
#include <span>
#include <vector>

#include "qlat/arith.hpp"

namespace qlat {

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) fail(ErrorCode::kInvalidArgument, "ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<T> row_vector(std::size_t i) const { return {row(i).begin(), row(i).end()}; }
  std::vector<T> col_vector(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  void append_row(const std::vector<T>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) fail(ErrorCode::kInvalidArgument, "row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_square() const { return rows_ == cols_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using ZMatrix = Matrix<Integer>;

QMatrix to_rational(const ZMatrix& m);
ZMatrix to_integer(const QMatrix& m);  // throws kNotIntegral

QMatrix operator*(const QMatrix& a, const QMatrix& b);
ZMatrix operator*(const ZMatrix& a, const ZMatrix& b);
QVector operator*(const QMatrix& a, const QVector& x);
ZVector operator*(const ZMatrix& a, const ZVector& x);
// Row vector times matrix.
QVector operator*(const QVector& x, const QMatrix& a);

// Bilinear value x^T G y.
Rational bilinear(const QMatrix& gram, const QVector& x, const QVector& y);

bool is_symmetric(const QMatrix& m);
std::size_t rank(const QMatrix& m);
Rational determinant(QMatrix m);
QMatrix inverse(const QMatrix& m);  // throws kDegenerate if singular
// Basis (as rows) of {x in Q^n : m x = 0}.
QMatrix rational_kernel(const QMatrix& m);
// Solve m x = b for square nonsingular m.
QVector solve(const QMatrix& m, const QVector& b);
// Coefficients c with c^T rows = v, when v lies in the row span of
// linearly independent rows; throws kNotContained otherwise.
QVector coordinates_in_rows(const QMatrix& rows, const QVector& v);

struct SmithForm {
  ZMatrix u, u_inv;  // m x m, unimodular
  ZMatrix v, v_inv;  // n x n, unimodular
  ZMatrix d;         // m x n, u * a * v = d
  std::size_t rank = 0;
  // Diagonal entries d_1 | d_2 | ... | d_rank, all positive.
  ZVector diagonal() const;
};

SmithForm smith_normal_form(const ZMatrix& a);

// Basis (as rows) of the saturated lattice {x in Z^n : a x = 0}.
ZMatrix integer_kernel(const ZMatrix& a);
// Basis (as rows) of the primitive closure (Q-span of rows) cap Z^n.
ZMatrix saturate_rows(const ZMatrix& rows);
// Completion of a saturated row basis to a basis of Z^n: returns n rows whose
// first k rows span the same lattice as `rows`.
ZMatrix complete_basis(const ZMatrix& rows);

// True iff all leading principal minors are positive.
bool is_positive_definite(const QMatrix& gram);

}  // namespace qlat

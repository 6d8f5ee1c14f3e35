#include "qlat/matrix.hpp"

#include <utility>

namespace qlat {

QMatrix to_rational(const ZMatrix& m) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

ZMatrix to_integer(const QMatrix& m) {
  ZMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integral(m(i, j))) fail(ErrorCode::kNotIntegral, "matrix has non-integral entry " + m(i, j).get_str());
      out(i, j) = m(i, j).get_num();
    }
  }
  return out;
}

namespace {

template <typename T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::kInvalidArgument, "matrix product shape mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

template <typename T>
std::vector<T> apply(const Matrix<T>& a, const std::vector<T>& x) {
  if (a.cols() != x.size()) fail(ErrorCode::kInvalidArgument, "matrix-vector shape mismatch");
  std::vector<T> y(a.rows(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (x[j] != 0) y[i] += a(i, j) * x[j];
  return y;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

QMatrix operator*(const QMatrix& a, const QMatrix& b) { return multiply(a, b); }
ZMatrix operator*(const ZMatrix& a, const ZMatrix& b) { return multiply(a, b); }
QVector operator*(const QMatrix& a, const QVector& x) { return apply(a, x); }
ZVector operator*(const ZMatrix& a, const ZVector& x) { return apply(a, x); }

QVector operator*(const QVector& x, const QMatrix& a) {
  if (a.rows() != x.size()) fail(ErrorCode::kInvalidArgument, "vector-matrix shape mismatch");
  QVector y(a.cols(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) y[j] += x[i] * a(i, j);
  }
  return y;
}

Rational bilinear(const QMatrix& gram, const QVector& x, const QVector& y) {
  if (gram.rows() != x.size() || gram.cols() != y.size())
    fail(ErrorCode::kInvalidArgument, "bilinear form shape mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0 && gram(i, j) != 0) row += gram(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

bool is_symmetric(const QMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

std::size_t rank(const QMatrix& m) {
  QMatrix copy = m;
  return row_reduce(copy).size();
}

Rational determinant(QMatrix m) {
  if (!m.is_square()) fail(ErrorCode::kInvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

QMatrix inverse(const QMatrix& m) {
  if (!m.is_square()) fail(ErrorCode::kInvalidArgument, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) fail(ErrorCode::kDegenerate, "matrix is singular");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

QMatrix rational_kernel(const QMatrix& m) {
  QMatrix r = m;
  const auto pivots = row_reduce(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  QMatrix basis(0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector x(m.cols(), Rational(0));
    x[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = -r(k, free);
    basis.append_row(x);
  }
  return basis;
}

QVector solve(const QMatrix& m, const QVector& b) {
  return inverse(m) * b;
}

QVector coordinates_in_rows(const QMatrix& rows, const QVector& v) {
  const std::size_t k = rows.rows();
  const std::size_t n = rows.cols();
  if (v.size() != n) fail(ErrorCode::kInvalidArgument, "coordinate vector length mismatch");
  QMatrix aug(n, k + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = rows(j, i);
    aug(i, k) = v[i];
  }
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == k) fail(ErrorCode::kNotContained, "vector not in the row span");
  if (pivots.size() < k) fail(ErrorCode::kDegenerate, "rows are linearly dependent");
  QVector c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = aug(i, k);
  return c;
}

ZVector SmithForm::diagonal() const {
  ZVector out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(d(i, i));
  return out;
}

namespace {

struct SmithWork {
  ZMatrix a, u, u_inv, v, v_inv;

  // row_i += c * row_j
  void add_row(std::size_t i, std::size_t j, const Integer& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) += c * a(j, k);
    for (std::size_t k = 0; k < u.cols(); ++k) u(i, k) += c * u(j, k);
    for (std::size_t k = 0; k < u_inv.rows(); ++k) u_inv(k, j) -= c * u_inv(k, i);
  }
  void swap_row(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    u.swap_rows(i, j);
    u_inv.swap_cols(i, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) = -a(i, k);
    for (std::size_t k = 0; k < u.cols(); ++k) u(i, k) = -u(i, k);
    for (std::size_t k = 0; k < u_inv.rows(); ++k) u_inv(k, i) = -u_inv(k, i);
  }
  // col_i += c * col_j
  void add_col(std::size_t i, std::size_t j, const Integer& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < a.rows(); ++k) a(k, i) += c * a(k, j);
    for (std::size_t k = 0; k < v.rows(); ++k) v(k, i) += c * v(k, j);
    for (std::size_t k = 0; k < v_inv.cols(); ++k) v_inv(j, k) -= c * v_inv(i, k);
  }
  void swap_col(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    v.swap_cols(i, j);
    v_inv.swap_rows(i, j);
  }
};

Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const ZMatrix& input) {
  const std::size_t m = input.rows();
  const std::size_t n = input.cols();
  SmithWork w{input, ZMatrix::identity(m), ZMatrix::identity(m), ZMatrix::identity(n), ZMatrix::identity(n)};
  ZMatrix& a = w.a;
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (a(i, j) == 0) continue;
        if (pi == m || abs(a(i, j)) < abs(a(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == m) break;
    w.swap_row(t, pi);
    w.swap_col(t, pj);
    for (;;) {
      bool changed = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        w.add_row(i, t, -trunc_div(a(i, t), a(t, t)));
        if (a(i, t) != 0) {
          w.swap_row(t, i);
          changed = true;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        w.add_col(j, t, -trunc_div(a(t, j), a(t, t)));
        if (a(t, j) != 0) {
          w.swap_col(t, j);
          changed = true;
        }
      }
      if (changed) continue;
      // Enforce divisibility of the trailing block by the pivot.
      for (std::size_t i = t + 1; i < m && !changed; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            w.add_row(t, i, Integer(1));
            changed = true;
            break;
          }
        }
      }
      if (!changed) break;
    }
    if (a(t, t) < 0) w.negate_row(t);
  }
  SmithForm s;
  s.rank = t;
  s.d = std::move(w.a);
  s.u = std::move(w.u);
  s.u_inv = std::move(w.u_inv);
  s.v = std::move(w.v);
  s.v_inv = std::move(w.v_inv);
  return s;
}

ZMatrix integer_kernel(const ZMatrix& a) {
  const SmithForm s = smith_normal_form(a);
  ZMatrix basis(0, a.cols());
  for (std::size_t j = s.rank; j < a.cols(); ++j) basis.append_row(s.v.col_vector(j));
  return basis;
}

ZMatrix saturate_rows(const ZMatrix& rows) {
  const SmithForm s = smith_normal_form(rows);
  ZMatrix basis(0, rows.cols());
  for (std::size_t i = 0; i < s.rank; ++i) basis.append_row(s.v_inv.row_vector(i));
  return basis;
}

ZMatrix complete_basis(const ZMatrix& rows) {
  const SmithForm s = smith_normal_form(rows);
  if (s.rank != rows.rows()) fail(ErrorCode::kDegenerate, "rows are linearly dependent");
  for (const auto& d : s.diagonal()) {
    if (d != 1) fail(ErrorCode::kInvalidArgument, "rows do not span a saturated lattice");
  }
  // Rows of v_inv: the first k span the same lattice as `rows`.
  return s.v_inv;
}

bool is_positive_definite(const QMatrix& gram) {
  if (!gram.is_square()) return false;
  QMatrix m = gram;
  const std::size_t n = m.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return true;
}

}  // namespace qlat

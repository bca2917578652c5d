#include "ctv/linalg.hpp"

#include <utility>

namespace ctv {

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Vector Matrix::apply(const Vector& x) const {
  Vector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

Matrix Matrix::multiply(const Matrix& other) const {
  Matrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  }
  return out;
}

namespace {

struct Echelon {
  std::vector<std::size_t> pivot_cols;
  int swaps = 0;
};

// Reduced row echelon form in place. When `aug` is non-null it receives the
// same row operations.
Echelon reduce(Matrix& m, Vector* aug) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
      if (aug) std::swap((*aug)[piv], (*aug)[row]);
      ++e.swaps;
    }
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    if (aug) (*aug)[row] *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
      if (aug) (*aug)[i] -= f * (*aug)[row];
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  return e;
}

}  // namespace

std::size_t rank(Matrix m) { return reduce(m, nullptr).pivot_cols.size(); }

std::size_t rank(const std::vector<Vector>& vectors, std::size_t n) {
  if (vectors.empty()) return 0;
  return rank(Matrix::from_rows(vectors, n));
}

Rational determinant(Matrix m) {
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    const Rational inv = 1 / m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      const Rational f = m(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

int determinant_sign(Matrix m) { return sign(determinant(std::move(m))); }

std::optional<Vector> solve_square(Matrix a, Vector b) {
  const auto e = reduce(a, &b);
  if (e.pivot_cols.size() != a.cols() || a.rows() != a.cols()) return std::nullopt;
  return b;
}

std::optional<Vector> solve_any(Matrix a, Vector b) {
  const auto e = reduce(a, &b);
  const std::size_t r = e.pivot_cols.size();
  for (std::size_t i = r; i < a.rows(); ++i) {
    if (b[i] != 0) return std::nullopt;
  }
  Vector x = zeros(a.cols());
  for (std::size_t i = 0; i < r; ++i) x[e.pivot_cols[i]] = b[i];
  return x;
}

std::vector<Vector> rref_basis(const std::vector<Vector>& vectors, std::size_t n) {
  if (vectors.empty()) return {};
  Matrix m = Matrix::from_rows(vectors, n);
  const auto e = reduce(m, nullptr);
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) rows.push_back(m.row(i));
  return rows;
}

std::vector<Vector> nullspace(Matrix a) {
  const auto e = reduce(a, nullptr);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    Vector v = zeros(a.cols());
    v[free_col] = 1;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = -a(i, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace ctv

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ctv/rational.hpp"

namespace ctv {

/// Row-major dense rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Builds a matrix whose rows are the given vectors (all of equal length).
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  /// Builds a matrix whose columns are the given vectors.
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] Vector row(std::size_t i) const;
  [[nodiscard]] Vector column(std::size_t j) const;
  [[nodiscard]] Matrix transposed() const;
  [[nodiscard]] Vector apply(const Vector& x) const;
  [[nodiscard]] Matrix multiply(const Matrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::size_t rank(Matrix m);

/// Rank of a family of vectors of common length n.
std::size_t rank(const std::vector<Vector>& vectors, std::size_t n);

/// Exact sign of the determinant of a square matrix.
int determinant_sign(Matrix m);

Rational determinant(Matrix m);

/// Solves A x = b when A is square and nonsingular; nullopt otherwise.
std::optional<Vector> solve_square(Matrix a, Vector b);

/// Any solution of A x = b (free variables set to zero), or nullopt if inconsistent.
std::optional<Vector> solve_any(Matrix a, Vector b);

/// Nonzero rows of the reduced row echelon form of the given vectors (canonical
/// basis of their span).
std::vector<Vector> rref_basis(const std::vector<Vector>& vectors, std::size_t n);

/// Basis of {x : A x = 0}, one vector per free column of the reduced row echelon form.
std::vector<Vector> nullspace(Matrix a);

}  // namespace ctv

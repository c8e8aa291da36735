#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core/rat.hpp"

namespace matpoly {

/// Dense matrix of exact rationals, row-major, 0-based accessors.
class Matrix {
public:
  Matrix(std::size_t rows, std::size_t cols);  // zero-filled; dims must be > 0
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const;
  Rat trace() const;  // throws ShapeError when not square

  bool operator==(const Matrix& o) const = default;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rat> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);  // throws ShapeError
Matrix operator-(const Matrix& a, const Matrix& b);  // throws ShapeError
Matrix operator*(const Matrix& a, const Matrix& b);  // throws ShapeError
Matrix operator*(const Rat& c, const Matrix& a);

/// Exact determinant by fraction-aware Gaussian elimination.
Rat det(const Matrix& a);

/// Exact inverse by Gauss-Jordan elimination. Throws SingularError (carrying
/// the failing 0-based column) when no pivot can be found, ShapeError when
/// the matrix is not square.
Matrix mat_inverse(const Matrix& a);

/// Monic univariate polynomial with rational coefficients; coeffs[k]
/// multiplies the k-th power and coeffs.back() is 1.
struct CharPoly {
  std::vector<Rat> coeffs;

  std::size_t degree() const { return coeffs.size() - 1; }
  Rat operator()(const Rat& x) const;
  Matrix operator()(const Matrix& a) const;
  std::string str(std::string_view var = "lambda") const;

  bool operator==(const CharPoly& o) const = default;
};

/// Characteristic polynomial det(lambda*I - a) via the Faddeev-LeVerrier
/// recurrence; division-free apart from the exact trace/k steps.
CharPoly char_poly(const Matrix& a);

/// All rational roots with multiplicities, sorted by value. Candidates come
/// from the integer divisor criterion on a primitive integer multiple of the
/// polynomial; every reported root is confirmed by exact evaluation and
/// removed by exact deflation to count its multiplicity.
std::vector<std::pair<Rat, unsigned>> rational_roots(const CharPoly& p);

/// Canonical basis of the right kernel as column vectors: the reduced row
/// echelon form's free variables, taken in increasing column order, each set
/// to one in turn. Empty result means the kernel is trivial.
std::vector<Matrix> null_space(const Matrix& a);

/// Reduces in place to reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& a);

/// CSV exchange format: one row per line, entries are integer, p/q or finite
/// decimal literals, whitespace around entries is ignored.
Matrix parse_matrix_csv(std::string_view text);  // throws ParseError
std::string matrix_to_csv(const Matrix& m);

}  // namespace matpoly

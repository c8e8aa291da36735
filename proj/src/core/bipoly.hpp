#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "core/matrix.hpp"
#include "core/rat.hpp"

namespace matpoly {

/// Declared coefficient-grid shape: x-degree < m, y-degree < n.
struct Shape {
  std::size_t m = 1;
  std::size_t n = 1;

  bool operator==(const Shape& o) const = default;
};

/// Bivariate polynomial with exact rational coefficients on a dense grid.
/// coeff(k1, k2) multiplies x^k1 * y^k2. The declared shape is part of the
/// value (it fixes which spaces the polynomial participates in), so two
/// objects can represent the same function at different shapes; poly_eq
/// compares the functions, operator== also compares shapes.
class BiPoly {
public:
  explicit BiPoly(Shape shape);  // zero polynomial

  Shape shape() const { return shape_; }
  std::size_t xdim() const { return shape_.m; }
  std::size_t ydim() const { return shape_.n; }

  Rat& coeff(std::size_t k1, std::size_t k2) { return coef_[k1 * shape_.n + k2]; }
  const Rat& coeff(std::size_t k1, std::size_t k2) const {
    return coef_[k1 * shape_.n + k2];
  }

  bool is_zero() const;
  Rat eval(const Rat& x, const Rat& y) const;

  /// Coefficients of the univariate polynomial x -> P(x, y0), length xdim().
  std::vector<Rat> slice_at_y(const Rat& y0) const;
  /// Coefficients of the univariate polynomial y -> P(x0, y), length ydim().
  std::vector<Rat> slice_at_x(const Rat& x0) const;

  /// Swaps the roles of x and y; shape (m, n) becomes (n, m).
  BiPoly transpose() const;

  /// Re-declares the polynomial at another shape, usually a wider one.
  /// Throws ShapeError when a nonzero coefficient would not fit.
  BiPoly reshaped(Shape target) const;

  /// Canonical text: terms by descending total degree, ties by descending
  /// x-degree; "5*x^2*y - 3*x + 1/2" style, unit coefficients omitted,
  /// the zero polynomial prints as "0".
  std::string str() const;

  /// Parses the text grammar. The one-argument form infers the minimal
  /// shape; the declared form throws ShapeError when a term exceeds it.
  static BiPoly parse(std::string_view text);
  static BiPoly parse(std::string_view text, Shape declared);

  bool operator==(const BiPoly& o) const = default;

private:
  Shape shape_;
  std::vector<Rat> coef_;
};

BiPoly operator+(const BiPoly& p, const BiPoly& q);  // requires equal shapes
BiPoly operator-(const BiPoly& p, const BiPoly& q);  // requires equal shapes
BiPoly operator*(const Rat& c, const BiPoly& p);

/// Equality of the underlying functions, ignoring declared shapes.
bool poly_eq(const BiPoly& p, const BiPoly& q);

/// True when the polynomial is square-shaped and fixed by transposition.
/// Non-square input gives false, never an error.
bool is_symmetric(const BiPoly& p);
/// True when square-shaped and negated by transposition.
bool is_skew_symmetric(const BiPoly& p);

/// JSON exchange format:
///   {"m": 2, "n": 2, "coeffs": [["-18", "13"], ["14", "-10"]]}
/// coeffs[k1][k2] is the coefficient of x^k1 * y^k2 as a rational literal
/// (JSON integers are also accepted on input).
BiPoly poly_from_json(std::string_view text);  // throws ParseError
std::string poly_to_json(const BiPoly& p);

}  // namespace matpoly

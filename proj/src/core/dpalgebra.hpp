#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "core/bipoly.hpp"
#include "core/interp.hpp"
#include "core/matrix.hpp"

namespace matpoly {

/// Dot product of polynomials: for p of shape (m, n) and q of shape (n, r),
///   (p . q)(x, y) = sum over k = 1..n of p(x, k) * q(k, y),
/// the polynomial image of the matrix product. Throws ShapeError when the
/// inner dimensions disagree.
BiPoly dp_product(const BiPoly& p, const BiPoly& q);

/// Interpolant of the n x n identity matrix; the two-sided unit for
/// dp_product at square shape n.
BiPoly identity_poly(std::size_t n);

/// True when the square polynomial's node-sample matrix is invertible.
/// Throws ShapeError for non-square shapes.
bool is_invertible(const BiPoly& p);

/// The polynomial q with dp_product(p, q) = dp_product(q, p) = identity.
/// Built by inverting the node samples and re-interpolating; both identities
/// are re-checked exactly before returning. Throws SingularError when the
/// sample matrix is singular.
BiPoly dp_inverse(const BiPoly& p);

/// r-fold dp_product power of a square polynomial; r = 0 gives the identity
/// of the matching size.
BiPoly dp_power(const BiPoly& p, std::uint64_t r);

/// Structure flags of a square polynomial under the dot-product algebra.
/// The index fields are empty when the property does not hold within the
/// probed range (nilpotency is decided exactly; periodicity is probed up to
/// max_period).
struct Classification {
  bool symmetric = false;
  bool skew_symmetric = false;
  bool invertible = false;
  bool orthogonal = false;
  bool involutory = false;
  bool idempotent = false;
  std::optional<unsigned> nilpotent_index;
  std::optional<unsigned> periodic_index;
};

Classification classify(const BiPoly& p, unsigned max_period = 16);

/// Characteristic polynomial of the polynomial's node-sample matrix.
CharPoly char_poly_of(const BiPoly& p);

/// sum over k of c_k * p^k under dp_product, with c_k the characteristic
/// coefficients; identically zero for every square polynomial.
BiPoly cayley_hamilton_residual(const BiPoly& p);

/// An eigenpair: dp_product(p, eigen_poly) = value * eigen_poly with
/// eigen_poly a nonzero univariate-in-x polynomial of shape (n, 1).
struct EigenPair {
  Rat value;
  BiPoly eigen_poly;
};

/// All eigenpairs with rational eigenvalue, eigenvalues ascending. Each
/// eigenvalue contributes one pair per canonical kernel direction of the
/// sample matrix, re-interpolated and normalized to leading coefficient one.
std::vector<EigenPair> eigen_pairs(const BiPoly& p);

/// Exact check of the eigen relation for a proposed pair. The candidate must
/// be a nonzero polynomial of shape (n, 1) for square p of size n.
bool verify_eigenpair(const BiPoly& p, const Rat& value, const BiPoly& x_poly);

}  // namespace matpoly

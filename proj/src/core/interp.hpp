#pragma once

#include <cstddef>
#include <vector>

#include "core/bipoly.hpp"
#include "core/matrix.hpp"
#include "core/rat.hpp"

namespace matpoly {

/// Route used to build the interpolating polynomial. All four agree on every
/// input; they differ only in how the coefficients are obtained.
enum class ConstructionMethod {
  lagrange,
  newton_forward,
  newton_backward,
  linear_system,
};

/// Univariate polynomial as ascending coefficients: u[k] multiplies x^k.
using UniPoly = std::vector<Rat>;

/// The unique polynomial of shape (rows, cols) taking the matrix entry
/// a(i, j) at each integer node (i, j), i in 1..rows, j in 1..cols.
BiPoly construct(const Matrix& a, ConstructionMethod method);

/// Samples the polynomial back at the integer node grid of its shape.
Matrix to_matrix(const BiPoly& p);

/// k-th Lagrange basis polynomial over the nodes 1..m (k is 1-based):
/// value 1 at x = k, value 0 at the other nodes. Throws DomainError when k
/// is out of range.
UniPoly lagrange_basis(std::size_t m, std::size_t k);

/// Row 0 is the input; row k holds the k-th forward differences, anchored at
/// the front: table[k][0] is the coefficient entering the forward formula.
std::vector<std::vector<Rat>> forward_difference_table(const std::vector<Rat>& v);

/// Row k holds the k-th backward differences; table[k].back() is the
/// coefficient entering the backward formula.
std::vector<std::vector<Rat>> backward_difference_table(const std::vector<Rat>& v);

/// V[i][k] = (i + 1)^k for i, k in 0..size-1; the node-power matrix whose
/// two-sided action turns coefficient grids into node samples.
Matrix vandermonde(std::size_t size);

/// The full (rows*cols) x (rows*cols) sampling operator of the node grid:
/// row index runs over nodes (i, j) row-major, column index over monomials
/// x^k1*y^k2 with k1 major, entry i^k1 * j^k2. Solving it against the
/// flattened matrix is the one-shot linear-system route; kept exposed so
/// tests can check factored solutions against the full system.
Matrix linear_system_matrix(std::size_t rows, std::size_t cols);

}  // namespace matpoly

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/matrix.hpp"

namespace matpoly {

/// Matrix of the interpolation map in the standard bases. Row index runs
/// over the matrix units E(i, j) in row-major order; column index runs over
/// the monomials x^k1*y^k2 ordered with k2 major and k1 minor (constant, x,
/// x^2, ..., then y, x*y, ...); the entry is that monomial's coefficient in
/// the interpolant of E(i, j).
Matrix coordinate_matrix(std::size_t m, std::size_t n);

/// Matrix of the node-evaluation map, the inverse direction: row index runs
/// over the monomials in the same order, column index over the nodes (i, j)
/// row-major, entry i^k1 * j^k2. coordinate_matrix * sampling_matrix is the
/// identity.
Matrix sampling_matrix(std::size_t m, std::size_t n);

/// One counterexample found by a randomized check.
struct CheckFailure {
  std::string check;
  std::string inputs;
  std::string expected;
  std::string actual;
};

/// Outcome of a randomized check suite. Reproducible from the seed.
struct CheckReport {
  std::string suite;
  std::uint64_t seed = 0;
  unsigned trials = 0;
  std::vector<CheckFailure> failures;

  bool passed() const { return failures.empty(); }
};

/// Interpolation is linear: construct(c*A + B) matches the matching linear
/// combination of interpolants, and to_matrix inverts construct, on random
/// shapes up to max_m x max_n.
CheckReport check_linearity(std::uint64_t seed, unsigned trials, std::size_t max_m,
                            std::size_t max_n);

/// Interpolation turns matrix products into dot products: construct(A*B)
/// matches dp_product of the interpolants on random conformable shapes with
/// dimensions up to max_dim, including linear combinations of products.
CheckReport check_product_structure(std::uint64_t seed, unsigned trials,
                                    std::size_t max_dim);

/// Ring axioms of the square dot-product algebra at random sizes up to
/// max_n: additive group laws, associativity, two-sided distributivity,
/// scalar compatibility and the two-sided unit.
CheckReport check_ring_axioms(std::uint64_t seed, unsigned trials, std::size_t max_n);

/// {"suite", "seed", "trials", "passed", "failures": [...]}
std::string report_to_json(const CheckReport& report);
/// Array of reports in the same layout.
std::string reports_to_json(const std::vector<CheckReport>& reports);

}  // namespace matpoly

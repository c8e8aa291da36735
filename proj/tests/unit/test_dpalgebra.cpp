#include <cstddef>
#include <vector>

#include "core/dpalgebra.hpp"
#include "core/interp.hpp"
#include "core/randgen.hpp"
#include "doctest.h"

using namespace matpoly;

namespace {

Matrix make(std::size_t rows, std::size_t cols, std::vector<Rat> entries) {
  Matrix m(rows, cols);
  std::size_t k = 0;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entries.at(k++);
  return m;
}

BiPoly poly_of(const Matrix& m) {
  return construct(m, ConstructionMethod::lagrange);
}

const Matrix kTau = make(2, 2, {-1, 2, 3, -4});

}  // namespace

TEST_CASE("dp product of rectangular polynomials") {
  const BiPoly p = BiPoly::parse("-10*x*y + 14*x + 13*y - 18", Shape{2, 2});
  const BiPoly q =
      BiPoly::parse("-11/2*x*y^2 + 41/2*x*y + 7*y^2 - 17*x - 26*y + 22", Shape{2, 3});

  const BiPoly r = dp_product(p, q);
  CHECK_EQ(r.xdim(), 2);
  CHECK_EQ(r.ydim(), 3);
  CHECK_EQ(r.str(), "30*x*y^2 - 112*x*y - 79/2*y^2 + 92*x + 295/2*y - 121");

  CHECK_THROWS_AS(dp_product(q, p), ShapeError);
}

TEST_CASE("dp product shrinks and grows with the outer shapes") {
  const BiPoly p = BiPoly::parse("2*y - 3", Shape{1, 2});
  const BiPoly q = BiPoly::parse("-2*x + 3", Shape{2, 1});

  const BiPoly pq = dp_product(p, q);
  CHECK_EQ(pq.xdim(), 1);
  CHECK_EQ(pq.ydim(), 1);
  CHECK_EQ(pq.str(), "-2");

  const BiPoly qp = dp_product(q, p);
  CHECK_EQ(qp.xdim(), 2);
  CHECK_EQ(qp.ydim(), 2);
  CHECK_EQ(qp.str(), "-4*x*y + 6*x + 6*y - 9");
}

TEST_CASE("dp product is not commutative") {
  const BiPoly p = BiPoly::parse("-x - y + 3", Shape{2, 2});
  const BiPoly q = BiPoly::parse("-2*x*y + 3*x + 3*y - 4", Shape{2, 2});

  CHECK_EQ(dp_product(p, q).str(), "-x + y");
  CHECK_EQ(dp_product(q, p).str(), "x - y");
}

TEST_CASE("dp product admits zero divisors") {
  const BiPoly p = BiPoly::parse("3*x*y - 3*x - 4*y + 4", Shape{2, 2});
  const BiPoly q = BiPoly::parse("2*x*y - 5*x - 4*y + 10", Shape{2, 2});

  CHECK(dp_product(p, q).is_zero());
  CHECK_EQ(dp_product(p, q).str(), "0");
  CHECK_EQ(dp_product(q, p).str(), "x*y - x - 2*y + 2");
}

TEST_CASE("dp product mirrors matrix multiplication") {
  const Matrix a1 = make(2, 3, {1, -1, 2, -1, 0, -2});
  const Matrix a2 = a1.transpose();
  const Matrix a3 = make(3, 3, {1, 2, 3, 2, 0, 4, 3, 4, -1});
  const Matrix a4 = make(3, 3, {0, 1, 2, -1, 0, 3, -2, -3, 0});

  CHECK_EQ(a1 * a2, make(2, 2, {6, -5, -5, 5}));
  CHECK(poly_eq(dp_product(poly_of(a1), poly_of(a2)), poly_of(a1 * a2)));
  CHECK(poly_eq(dp_product(poly_of(a2), poly_of(a1)), poly_of(a2 * a1)));
  CHECK(poly_eq(dp_product(poly_of(a1), poly_of(a3)), poly_of(a1 * a3)));
  CHECK(poly_eq(dp_product(poly_of(a3), poly_of(a4)), poly_of(a3 * a4)));
  CHECK(poly_eq(dp_product(poly_of(a4), poly_of(a3)), poly_of(a4 * a3)));

  SUBCASE("associativity across mixed shapes") {
    const BiPoly left = dp_product(dp_product(poly_of(a1), poly_of(a3)), poly_of(a2));
    const BiPoly right = dp_product(poly_of(a1), dp_product(poly_of(a3), poly_of(a2)));
    CHECK(poly_eq(left, right));
    CHECK(poly_eq(left, poly_of(a1 * a3 * a2)));
  }
}

TEST_CASE("dp product on random matrices matches the matrix product") {
  RatRng rng(404);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t m = rng.index(1, 4);
    const std::size_t n = rng.index(1, 4);
    const std::size_t q = rng.index(1, 4);
    const Matrix a = rng.matrix(m, n);
    const Matrix b = rng.matrix(n, q);
    CHECK(poly_eq(dp_product(poly_of(a), poly_of(b)), poly_of(a * b)));
  }
}

TEST_CASE("dp product respects scalars and addition") {
  RatRng rng(405);
  const BiPoly p = rng.poly(Shape{3, 2});
  const BiPoly q = rng.poly(Shape{2, 4});
  const BiPoly r = rng.poly(Shape{2, 4});
  const Rat c(7, 3);

  CHECK(poly_eq(dp_product(c * p, q), c * dp_product(p, q)));
  CHECK(poly_eq(dp_product(p, c * q), c * dp_product(p, q)));
  CHECK(poly_eq(dp_product(p, q + r), dp_product(p, q) + dp_product(p, r)));
}

TEST_CASE("identity polynomial strings") {
  CHECK_EQ(identity_poly(1).str(), "1");
  CHECK_EQ(identity_poly(2).str(), "2*x*y - 3*x - 3*y + 5");
  CHECK_EQ(identity_poly(3).str(),
           "3/2*x^2*y^2 - 6*x^2*y - 6*x*y^2 + 5*x^2 + 49/2*x*y + 5*y^2 - 21*x "
           "- 21*y + 19");
}

TEST_CASE("identity polynomial is the two-sided unit") {
  RatRng rng(406);
  for (std::size_t n = 1; n <= 4; ++n) {
    const BiPoly id = identity_poly(n);
    const BiPoly p = rng.poly(Shape{n, n});
    CHECK(poly_eq(dp_product(id, p), p));
    CHECK(poly_eq(dp_product(p, id), p));
  }

  SUBCASE("matching units on each side of a rectangular polynomial") {
    const BiPoly p = rng.poly(Shape{2, 3});
    CHECK(poly_eq(dp_product(identity_poly(2), p), p));
    CHECK(poly_eq(dp_product(p, identity_poly(3)), p));
  }
}

TEST_CASE("invertibility of square polynomials") {
  CHECK(is_invertible(poly_of(kTau)));
  CHECK(is_invertible(identity_poly(3)));
  CHECK_FALSE(is_invertible(BiPoly::parse("3*x*y - 3*x - 4*y + 4", Shape{2, 2})));
  CHECK_FALSE(is_invertible(BiPoly(Shape{2, 2})));
  CHECK_THROWS_AS(is_invertible(BiPoly::parse("x", Shape{2, 3})), ShapeError);
}

TEST_CASE("dp inverse of the running example") {
  const BiPoly p = poly_of(kTau);
  const BiPoly inv = dp_inverse(p);
  CHECK_EQ(inv.str(), "-1/2*x - y + 7/2");
  CHECK(poly_eq(dp_product(p, inv), identity_poly(2)));
  CHECK(poly_eq(dp_product(inv, p), identity_poly(2)));
  CHECK(poly_eq(dp_inverse(inv), p));
}

TEST_CASE("dp inverse failure modes") {
  CHECK_THROWS_AS(dp_inverse(BiPoly::parse("3*x*y - 3*x - 4*y + 4", Shape{2, 2})),
                  SingularError);
  CHECK_THROWS_AS(dp_inverse(BiPoly::parse("x", Shape{2, 3})), ShapeError);
}

TEST_CASE("dp inverse on random invertible polynomials") {
  RatRng rng(407);
  int done = 0;
  while (done < 10) {
    const std::size_t n = rng.index(1, 4);
    const BiPoly p = rng.poly(Shape{n, n});
    if (!is_invertible(p)) continue;
    const BiPoly inv = dp_inverse(p);
    CHECK(poly_eq(dp_product(p, inv), identity_poly(n)));
    CHECK(poly_eq(dp_inverse(inv), p));
    ++done;
  }
}

TEST_CASE("dp power") {
  const BiPoly p = poly_of(kTau);

  CHECK(poly_eq(dp_power(p, 0), identity_poly(2)));
  CHECK(poly_eq(dp_power(p, 1), p));
  CHECK_EQ(dp_power(p, 2).str(), "54*x*y - 76*x - 71*y + 100");
  CHECK(poly_eq(dp_power(p, 3), dp_product(dp_power(p, 2), p)));

  Matrix acc = Matrix::identity(2);
  for (int i = 0; i < 5; ++i) acc = acc * kTau;
  CHECK(poly_eq(dp_power(p, 5), poly_of(acc)));

  CHECK_THROWS_AS(dp_power(BiPoly(Shape{2, 3}), 2), ShapeError);
}

TEST_CASE("characteristic polynomial and Cayley-Hamilton") {
  const BiPoly p = poly_of(kTau);
  CHECK_EQ(char_poly_of(p).str(), "lambda^2 + 5*lambda - 2");
  CHECK(cayley_hamilton_residual(p).is_zero());

  SUBCASE("the relation written out term by term") {
    const BiPoly lhs = dp_power(p, 2) + Rat(5) * p + Rat(-2) * identity_poly(2);
    CHECK(lhs.is_zero());
  }

  SUBCASE("random square polynomials are annihilated") {
    RatRng rng(408);
    for (std::size_t n = 1; n <= 4; ++n) {
      const BiPoly q = poly_of(rng.integer_matrix(n, n, -5, 5));
      CHECK(cayley_hamilton_residual(q).is_zero());
    }
  }
}

TEST_CASE("classification of the running example") {
  const Classification c = classify(poly_of(kTau));
  CHECK_FALSE(c.symmetric);
  CHECK_FALSE(c.skew_symmetric);
  CHECK(c.invertible);
  CHECK_FALSE(c.orthogonal);
  CHECK_FALSE(c.involutory);
  CHECK_FALSE(c.idempotent);
  CHECK_FALSE(c.nilpotent_index.has_value());
  CHECK_FALSE(c.periodic_index.has_value());
}

TEST_CASE("classification of the identity") {
  const Classification c = classify(identity_poly(3));
  CHECK(c.symmetric);
  CHECK(c.invertible);
  CHECK(c.orthogonal);
  CHECK(c.involutory);
  CHECK(c.idempotent);
  CHECK_FALSE(c.nilpotent_index.has_value());
  CHECK_EQ(c.periodic_index, 1u);
}

TEST_CASE("classification of a swap") {
  const Classification c = classify(poly_of(make(2, 2, {0, 1, 1, 0})));
  CHECK(c.symmetric);
  CHECK_FALSE(c.skew_symmetric);
  CHECK(c.invertible);
  CHECK(c.orthogonal);
  CHECK(c.involutory);
  CHECK_FALSE(c.idempotent);
  CHECK_EQ(c.periodic_index, 2u);
}

TEST_CASE("classification of a quarter turn") {
  const Classification c = classify(poly_of(make(2, 2, {0, -1, 1, 0})));
  CHECK_FALSE(c.symmetric);
  CHECK(c.skew_symmetric);
  CHECK(c.invertible);
  CHECK(c.orthogonal);
  CHECK_FALSE(c.involutory);
  CHECK_FALSE(c.idempotent);
  CHECK_FALSE(c.nilpotent_index.has_value());
  CHECK_EQ(c.periodic_index, 4u);
}

TEST_CASE("classification of nilpotent and idempotent polynomials") {
  const BiPoly shift = poly_of(make(2, 2, {0, 1, 0, 0}));
  CHECK_EQ(shift.str(), "-x*y + x + 2*y - 2");
  CHECK(dp_product(shift, shift).is_zero());

  const Classification cn = classify(shift);
  CHECK_EQ(cn.nilpotent_index, 2u);
  CHECK_FALSE(cn.invertible);
  CHECK_FALSE(cn.periodic_index.has_value());

  const Classification cp = classify(poly_of(make(2, 2, {1, 0, 0, 0})));
  CHECK(cp.idempotent);
  CHECK(cp.symmetric);
  CHECK_FALSE(cp.invertible);
  CHECK_EQ(cp.periodic_index, 1u);
}

TEST_CASE("classification of the zero polynomial") {
  const Classification c = classify(BiPoly(Shape{2, 2}));
  CHECK(c.symmetric);
  CHECK(c.skew_symmetric);
  CHECK_FALSE(c.invertible);
  CHECK(c.idempotent);
  CHECK_EQ(c.nilpotent_index, 1u);
}

TEST_CASE("classification of symmetric and skew samples") {
  const Matrix a3 = make(3, 3, {1, 2, 3, 2, 0, 4, 3, 4, -1});
  const Matrix a4 = make(3, 3, {0, 1, 2, -1, 0, 3, -2, -3, 0});

  CHECK(classify(poly_of(a3)).symmetric);
  CHECK_FALSE(classify(poly_of(a3)).skew_symmetric);

  const Classification c4 = classify(poly_of(a4));
  CHECK(c4.skew_symmetric);
  CHECK_FALSE(c4.symmetric);
  CHECK_FALSE(c4.invertible);
}

TEST_CASE("periodicity is probed only up to the requested bound") {
  const BiPoly p = poly_of(make(2, 2, {1, -1, 1, 0}));
  CHECK_EQ(classify(p).periodic_index, 6u);
  CHECK_FALSE(classify(p, 3).periodic_index.has_value());
  CHECK_EQ(classify(p, 6).periodic_index, 6u);
}

TEST_CASE("classification rejects rectangular shapes") {
  CHECK_THROWS_AS(classify(BiPoly(Shape{1, 2})), ShapeError);
}

TEST_CASE("eigen pairs of a polynomial with two rational eigenvalues") {
  const BiPoly p = poly_of(make(2, 2, {1, 3, 4, 5}));
  CHECK_EQ(p.str(), "-x*y + 4*x + 3*y - 5");

  const std::vector<EigenPair> pairs = eigen_pairs(p);
  REQUIRE_EQ(pairs.size(), 2);

  CHECK_EQ(pairs[0].value, Rat(-1));
  CHECK_EQ(pairs[0].eigen_poly.str(), "x - 8/5");
  CHECK_EQ(pairs[0].eigen_poly.xdim(), 2);
  CHECK_EQ(pairs[0].eigen_poly.ydim(), 1);

  CHECK_EQ(pairs[1].value, Rat(7));
  CHECK_EQ(pairs[1].eigen_poly.str(), "x");

  for (const EigenPair& e : pairs) {
    CHECK(verify_eigenpair(p, e.value, e.eigen_poly));
    CHECK(poly_eq(dp_product(p, e.eigen_poly), e.value * e.eigen_poly));
  }
}

TEST_CASE("eigen pairs of a diagonal sample matrix") {
  Matrix d(3, 3);
  d.at(0, 0) = 1;
  d.at(1, 1) = 2;
  d.at(2, 2) = 3;

  const std::vector<EigenPair> pairs = eigen_pairs(poly_of(d));
  REQUIRE_EQ(pairs.size(), 3);
  CHECK_EQ(pairs[0].value, Rat(1));
  CHECK_EQ(pairs[0].eigen_poly.str(), "x^2 - 5*x + 6");
  CHECK_EQ(pairs[1].value, Rat(2));
  CHECK_EQ(pairs[1].eigen_poly.str(), "x^2 - 4*x + 3");
  CHECK_EQ(pairs[2].value, Rat(3));
  CHECK_EQ(pairs[2].eigen_poly.str(), "x^2 - 3*x + 2");
}

TEST_CASE("eigen pairs with a repeated eigenvalue") {
  const std::vector<EigenPair> pairs = eigen_pairs(identity_poly(2));
  REQUIRE_EQ(pairs.size(), 2);
  CHECK_EQ(pairs[0].value, Rat(1));
  CHECK_EQ(pairs[0].eigen_poly.str(), "x - 2");
  CHECK_EQ(pairs[1].value, Rat(1));
  CHECK_EQ(pairs[1].eigen_poly.str(), "x - 1");
}

TEST_CASE("eigen pairs may be empty over the rationals") {
  CHECK(eigen_pairs(poly_of(kTau)).empty());
  CHECK(eigen_pairs(poly_of(make(2, 2, {0, -1, 1, 0}))).empty());
}

TEST_CASE("eigenpair verification") {
  const BiPoly p = poly_of(make(2, 2, {1, 3, 4, 5}));
  const BiPoly x = BiPoly::parse("x", Shape{2, 1});
  const BiPoly scaled = BiPoly::parse("5*x - 8", Shape{2, 1});

  CHECK(verify_eigenpair(p, Rat(7), x));
  CHECK(verify_eigenpair(p, Rat(-1), scaled));
  CHECK_FALSE(verify_eigenpair(p, Rat(2), x));
  CHECK_FALSE(verify_eigenpair(p, Rat(7), scaled));

  CHECK_THROWS_AS(verify_eigenpair(p, Rat(7), BiPoly::parse("x", Shape{3, 1})),
                  ShapeError);
  CHECK_THROWS_AS(verify_eigenpair(p, Rat(7), BiPoly::parse("x*y", Shape{2, 2})),
                  ShapeError);
  CHECK_THROWS_AS(verify_eigenpair(p, Rat(7), BiPoly(Shape{2, 1})), DomainError);
  CHECK_THROWS_AS(verify_eigenpair(BiPoly(Shape{2, 3}), Rat(1), x), ShapeError);
}

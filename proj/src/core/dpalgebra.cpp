#include "core/dpalgebra.hpp"

#include <stdexcept>
#include <string>

namespace matpoly {

BiPoly dp_product(const BiPoly& p, const BiPoly& q) {
  if (p.ydim() != q.xdim())
    throw ShapeError("dot product needs shapes (m, n) x (n, r); got (" +
                     std::to_string(p.xdim()) + ", " + std::to_string(p.ydim()) +
                     ") x (" + std::to_string(q.xdim()) + ", " +
                     std::to_string(q.ydim()) + ")");
  BiPoly r(Shape{p.xdim(), q.ydim()});
  for (std::size_t k = 1; k <= p.ydim(); ++k) {
    const Rat node(static_cast<long long>(k));
    const std::vector<Rat> u = p.slice_at_y(node);
    const std::vector<Rat> v = q.slice_at_x(node);
    for (std::size_t k1 = 0; k1 < u.size(); ++k1) {
      if (u[k1].is_zero()) continue;
      for (std::size_t k2 = 0; k2 < v.size(); ++k2) {
        if (v[k2].is_zero()) continue;
        r.coeff(k1, k2) += u[k1] * v[k2];
      }
    }
  }
  return r;
}

BiPoly identity_poly(std::size_t n) {
  return construct(Matrix::identity(n), ConstructionMethod::lagrange);
}

namespace {

void require_square(const BiPoly& p, const char* what) {
  if (p.xdim() != p.ydim())
    throw ShapeError(std::string(what) + " needs a square shape; got (" +
                     std::to_string(p.xdim()) + ", " + std::to_string(p.ydim()) + ")");
}

}  // namespace

bool is_invertible(const BiPoly& p) {
  require_square(p, "invertibility");
  return !det(to_matrix(p)).is_zero();
}

BiPoly dp_inverse(const BiPoly& p) {
  require_square(p, "inverse");
  const BiPoly q = construct(mat_inverse(to_matrix(p)), ConstructionMethod::lagrange);
  const BiPoly id = identity_poly(p.xdim());
  if (!poly_eq(dp_product(p, q), id) || !poly_eq(dp_product(q, p), id))
    throw std::logic_error("inverse verification failed");
  return q;
}

BiPoly dp_power(const BiPoly& p, std::uint64_t r) {
  require_square(p, "power");
  if (r == 0) return identity_poly(p.xdim());
  BiPoly acc = p;
  for (std::uint64_t i = 1; i < r; ++i) acc = dp_product(acc, p);
  return acc;
}

Classification classify(const BiPoly& p, unsigned max_period) {
  require_square(p, "classification");
  const std::size_t n = p.xdim();

  Classification c;
  c.symmetric = is_symmetric(p);
  c.skew_symmetric = is_skew_symmetric(p);
  c.invertible = is_invertible(p);

  const BiPoly id = identity_poly(n);
  const BiPoly pt = p.transpose();
  c.orthogonal = poly_eq(dp_product(p, pt), id) && poly_eq(dp_product(pt, p), id);

  const BiPoly p2 = dp_product(p, p);
  c.involutory = poly_eq(p2, id);
  c.idempotent = poly_eq(p2, p);

  {
    BiPoly pw = p;
    for (unsigned r = 1; r <= n; ++r) {
      if (pw.is_zero()) {
        c.nilpotent_index = r;
        break;
      }
      if (r < static_cast<unsigned>(n)) pw = dp_product(pw, p);
    }
  }
  {
    BiPoly pw = p;
    for (unsigned r = 1; r <= max_period; ++r) {
      pw = dp_product(pw, p);  // p^(r+1)
      if (poly_eq(pw, p)) {
        c.periodic_index = r;
        break;
      }
    }
  }
  return c;
}

CharPoly char_poly_of(const BiPoly& p) {
  require_square(p, "characteristic polynomial");
  return char_poly(to_matrix(p));
}

BiPoly cayley_hamilton_residual(const BiPoly& p) {
  require_square(p, "Cayley-Hamilton residual");
  const std::size_t n = p.xdim();
  const CharPoly cp = char_poly_of(p);
  const BiPoly id = identity_poly(n);

  // Horner over the dot product; p^0 contributes through the identity.
  BiPoly acc(Shape{n, n});
  for (std::size_t k = cp.coeffs.size(); k-- > 0;) {
    acc = dp_product(acc, p);
    if (!cp.coeffs[k].is_zero()) acc = acc + cp.coeffs[k] * id;
  }
  return acc;
}

std::vector<EigenPair> eigen_pairs(const BiPoly& p) {
  require_square(p, "eigen decomposition");
  const std::size_t n = p.xdim();
  const Matrix m = to_matrix(p);

  std::vector<EigenPair> out;
  for (const auto& [value, multiplicity] : rational_roots(char_poly(m))) {
    const Matrix shifted = m - value * Matrix::identity(n);
    for (const Matrix& kv : null_space(shifted)) {
      BiPoly x = construct(kv, ConstructionMethod::lagrange);
      // Normalize the canonical leading coefficient (highest x-degree) to 1.
      for (std::size_t k1 = n; k1-- > 0;) {
        if (!x.coeff(k1, 0).is_zero()) {
          x = (Rat(1) / x.coeff(k1, 0)) * x;
          break;
        }
      }
      if (!verify_eigenpair(p, value, x))
        throw std::logic_error("eigenpair verification failed");
      out.push_back({value, std::move(x)});
    }
  }
  return out;
}

bool verify_eigenpair(const BiPoly& p, const Rat& value, const BiPoly& x_poly) {
  require_square(p, "eigenpair check");
  if (x_poly.xdim() != p.ydim() || x_poly.ydim() != 1)
    throw ShapeError("eigen candidate must have shape (" +
                     std::to_string(p.ydim()) + ", 1)");
  if (x_poly.is_zero()) throw DomainError("eigen candidate must be nonzero");
  return poly_eq(dp_product(p, x_poly), value * x_poly);
}

}  // namespace matpoly

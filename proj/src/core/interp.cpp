#include "core/interp.hpp"

#include <utility>

namespace matpoly {

namespace {

// p(x) * (x - root)
UniPoly mul_linear(const UniPoly& p, const Rat& root) {
  UniPoly r(p.size() + 1);
  for (std::size_t k = 0; k < p.size(); ++k) {
    r[k + 1] += p[k];
    r[k] -= root * p[k];
  }
  return r;
}

void add_scaled(UniPoly& dst, const UniPoly& src, const Rat& c) {
  if (c.is_zero()) return;
  for (std::size_t k = 0; k < src.size(); ++k) dst[k] += c * src[k];
}

// grid += px(x) * my(y)
void outer_add(BiPoly& grid, const UniPoly& px, const UniPoly& my) {
  for (std::size_t k1 = 0; k1 < px.size(); ++k1) {
    if (px[k1].is_zero()) continue;
    for (std::size_t k2 = 0; k2 < my.size(); ++k2) {
      if (my[k2].is_zero()) continue;
      grid.coeff(k1, k2) += px[k1] * my[k2];
    }
  }
}

BiPoly construct_lagrange(const Matrix& a) {
  const std::size_t m = a.rows(), n = a.cols();

  std::vector<UniPoly> xbasis(m);
  for (std::size_t k = 0; k < m; ++k) xbasis[k] = lagrange_basis(m, k + 1);

  // Stage 1: one univariate interpolant in x per matrix column.
  std::vector<UniPoly> col_polys(n, UniPoly(m));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < m; ++k) add_scaled(col_polys[r], xbasis[k], a.at(k, r));

  // Stage 2: blend the column interpolants across y.
  BiPoly p(Shape{m, n});
  for (std::size_t r = 0; r < n; ++r) outer_add(p, col_polys[r], lagrange_basis(n, r + 1));
  return p;
}

// Newton basis over the nodes 1..len.
//
// Forward:  F_0 = 1,  F_k = (x-1)(x-2)...(x-k) / k!
// Backward: B_0 = 1,  B_k = (x-len)(x-len+1)...(x-len+k-1) / k!
//
// Either family satisfies next = cur * (x - node) / (k+1) with
// node = k+1 (forward) or node = len-k (backward), since cur already
// carries 1/k!.
UniPoly newton_basis_step(const UniPoly& cur, std::size_t k, std::size_t len,
                          bool forward) {
  const Rat node(static_cast<long long>(forward ? k + 1 : len - k));
  UniPoly next = mul_linear(cur, node);
  const Rat inv(BigInt(1), BigInt(k + 1));
  for (Rat& c : next) c *= inv;
  return next;
}

template <bool Forward>
BiPoly construct_newton(const Matrix& a) {
  const std::size_t m = a.rows(), n = a.cols();

  // Stage 1: difference expansion down each matrix column gives one
  // univariate interpolant in x per column.
  std::vector<UniPoly> col_polys(n, UniPoly(m));
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<Rat> values(m);
    for (std::size_t i = 0; i < m; ++i) values[i] = a.at(i, r);
    const auto table =
        Forward ? forward_difference_table(values) : backward_difference_table(values);
    UniPoly basis{Rat(1)};
    for (std::size_t k = 0; k < m; ++k) {
      add_scaled(col_polys[r], basis, Forward ? table[k].front() : table[k].back());
      if (k + 1 < m) basis = newton_basis_step(basis, k, m, Forward);
    }
  }

  // Stage 2: the same expansion across y, differencing whole coefficient
  // vectors instead of scalars.
  std::vector<std::vector<UniPoly>> table;
  table.push_back(col_polys);
  for (std::size_t j = 1; j < n; ++j) {
    const auto& prev = table.back();
    std::vector<UniPoly> row(prev.size() - 1, UniPoly(m));
    for (std::size_t i = 0; i + 1 < prev.size(); ++i)
      for (std::size_t k = 0; k < m; ++k) row[i][k] = prev[i + 1][k] - prev[i][k];
    table.push_back(std::move(row));
  }

  BiPoly p(Shape{m, n});
  UniPoly ybasis{Rat(1)};
  for (std::size_t j = 0; j < n; ++j) {
    outer_add(p, Forward ? table[j].front() : table[j].back(), ybasis);
    if (j + 1 < n) ybasis = newton_basis_step(ybasis, j, n, Forward);
  }
  return p;
}

// Coefficients solve the two-sided node-power system: sampling the grid L at
// the nodes is V_m * L * V_n^T entrywise, so L = V_m^-1 * A * (V_n^T)^-1.
// Equivalent to eliminating the full (mn x mn) system, at a fraction of the
// cost; node-power matrices are invertible, so no pivoting concerns.
BiPoly construct_linear_system(const Matrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  const Matrix left = mat_inverse(vandermonde(m));
  const Matrix right = mat_inverse(vandermonde(n)).transpose();
  const Matrix coeffs = left * a * right;
  BiPoly p(Shape{m, n});
  for (std::size_t k1 = 0; k1 < m; ++k1)
    for (std::size_t k2 = 0; k2 < n; ++k2) p.coeff(k1, k2) = coeffs.at(k1, k2);
  return p;
}

}  // namespace

BiPoly construct(const Matrix& a, ConstructionMethod method) {
  switch (method) {
    case ConstructionMethod::lagrange:
      return construct_lagrange(a);
    case ConstructionMethod::newton_forward:
      return construct_newton<true>(a);
    case ConstructionMethod::newton_backward:
      return construct_newton<false>(a);
    case ConstructionMethod::linear_system:
      return construct_linear_system(a);
  }
  throw DomainError("unknown construction method");
}

Matrix to_matrix(const BiPoly& p) {
  Matrix a(p.xdim(), p.ydim());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      a.at(i, j) = p.eval(Rat(static_cast<long long>(i + 1)),
                          Rat(static_cast<long long>(j + 1)));
  return a;
}

UniPoly lagrange_basis(std::size_t m, std::size_t k) {
  if (k < 1 || k > m) throw DomainError("lagrange basis index out of range");
  UniPoly num{Rat(1)};
  Rat den = 1;
  for (std::size_t alpha = 1; alpha <= m; ++alpha) {
    if (alpha == k) continue;
    num = mul_linear(num, Rat(static_cast<long long>(alpha)));
    den *= Rat(static_cast<long long>(k)) - Rat(static_cast<long long>(alpha));
  }
  const Rat inv = Rat(1) / den;
  for (Rat& c : num) c *= inv;
  return num;
}

std::vector<std::vector<Rat>> forward_difference_table(const std::vector<Rat>& v) {
  if (v.empty()) throw DomainError("difference table of an empty sequence");
  std::vector<std::vector<Rat>> table;
  table.push_back(v);
  while (table.back().size() > 1) {
    const auto& prev = table.back();
    std::vector<Rat> row(prev.size() - 1);
    for (std::size_t i = 0; i + 1 < prev.size(); ++i) row[i] = prev[i + 1] - prev[i];
    table.push_back(std::move(row));
  }
  return table;
}

std::vector<std::vector<Rat>> backward_difference_table(const std::vector<Rat>& v) {
  // Same value triangle as the forward table; the backward expansion just
  // anchors at the other end, reading table[k].back().
  return forward_difference_table(v);
}

Matrix vandermonde(std::size_t size) {
  Matrix v(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    Rat p = 1;
    const Rat node(static_cast<long long>(i + 1));
    for (std::size_t k = 0; k < size; ++k) {
      v.at(i, k) = p;
      p *= node;
    }
  }
  return v;
}

Matrix linear_system_matrix(std::size_t rows, std::size_t cols) {
  const std::size_t dim = rows * cols;
  if (dim == 0) throw DomainError("matrix dimensions must be positive");
  Matrix s(dim, dim);
  for (std::size_t i = 1; i <= rows; ++i)
    for (std::size_t j = 1; j <= cols; ++j) {
      const std::size_t node = (i - 1) * cols + (j - 1);
      for (std::size_t k1 = 0; k1 < rows; ++k1)
        for (std::size_t k2 = 0; k2 < cols; ++k2)
          s.at(node, k1 * cols + k2) =
              Rat(static_cast<long long>(i)).pow(k1) *
              Rat(static_cast<long long>(j)).pow(k2);
    }
  return s;
}

}  // namespace matpoly

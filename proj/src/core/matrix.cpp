#include "core/matrix.hpp"

#include <algorithm>
#include <set>

namespace matpoly {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw DomainError("matrix dimensions must be positive");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Rat Matrix::trace() const {
  if (!is_square()) throw ShapeError("trace of a non-square matrix");
  Rat s;
  for (std::size_t i = 0; i < rows_; ++i) s += at(i, i);
  return s;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("matrix addition with mismatched shapes");
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("matrix subtraction with mismatched shapes");
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw ShapeError("matrix product with mismatched inner dimensions");
  Matrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) += aik * b.at(k, j);
      }
    }
  return r;
}

Matrix operator*(const Rat& c, const Matrix& a) {
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = c * a.at(i, j);
  return r;
}

Rat det(const Matrix& a) {
  if (!a.is_square()) throw ShapeError("determinant of a non-square matrix");
  Matrix w = a;
  const std::size_t n = w.rows();
  Rat d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && w.at(piv, col).is_zero()) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(w.at(piv, j), w.at(col, j));
      d = -d;
    }
    d *= w.at(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (w.at(r, col).is_zero()) continue;
      const Rat f = w.at(r, col) / w.at(col, col);
      for (std::size_t j = col; j < n; ++j) w.at(r, j) -= f * w.at(col, j);
    }
  }
  return d;
}

Matrix mat_inverse(const Matrix& a) {
  if (!a.is_square()) throw ShapeError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix w = a;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && w.at(piv, col).is_zero()) ++piv;
    if (piv == n)
      throw SingularError("singular matrix: no pivot in column " + std::to_string(col), col);
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(w.at(piv, j), w.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    }
    const Rat scale = Rat(1) / w.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      w.at(col, j) *= scale;
      inv.at(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || w.at(r, col).is_zero()) continue;
      const Rat f = w.at(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        w.at(r, j) -= f * w.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

Rat CharPoly::operator()(const Rat& x) const {
  Rat acc;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
  return acc;
}

Matrix CharPoly::operator()(const Matrix& a) const {
  if (!a.is_square()) throw ShapeError("polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix acc(n, n);
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    acc = acc * a;
    if (!coeffs[k].is_zero()) acc = acc + coeffs[k] * Matrix::identity(n);
  }
  return acc;
}

std::string CharPoly::str(std::string_view var) const {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Rat& c = coeffs[k];
    if (c.is_zero()) continue;
    const Rat mag = abs(c);
    if (out.empty()) {
      if (c.sign() < 0) out += '-';
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    const bool unit = mag.is_one() && k > 0;
    if (!unit) out += mag.str();
    if (k > 0) {
      if (!unit) out += '*';
      out += var;
      if (k > 1) {
        out += '^';
        out += std::to_string(k);
      }
    }
  }
  if (out.empty()) out = "0";
  return out;
}

CharPoly char_poly(const Matrix& a) {
  if (!a.is_square()) throw ShapeError("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  CharPoly p;
  p.coeffs.assign(n + 1, Rat(0));
  p.coeffs[n] = 1;
  Matrix m = a;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) m = a * (m + p.coeffs[n - k + 1] * Matrix::identity(n));
    p.coeffs[n - k] = -(m.trace() / Rat(static_cast<long long>(k)));
  }
  return p;
}

namespace {

// Ascending-coefficient helpers shared by the root finder.

Rat eval_poly(const std::vector<Rat>& c, const Rat& x) {
  Rat acc;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

// Divides by (x - r); the remainder is known to vanish.
void deflate(std::vector<Rat>& c, const Rat& r) {
  std::vector<Rat> q(c.size() - 1);
  Rat carry = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    q[k] = carry;
    carry = c[k] + r * carry;
  }
  c = std::move(q);
}

std::vector<BigInt> divisors(const BigInt& v) {
  std::vector<BigInt> small, large;
  for (BigInt i = 1; i * i <= v; ++i) {
    if (v % i != 0) continue;
    small.push_back(i);
    if (i * i != v) large.push_back(v / i);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<std::pair<Rat, unsigned>> rational_roots(const CharPoly& p) {
  std::vector<Rat> cur = p.coeffs;
  std::vector<std::pair<Rat, unsigned>> out;

  unsigned zero_mult = 0;
  while (cur.size() > 1 && cur.front().is_zero()) {
    cur.erase(cur.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) out.emplace_back(Rat(0), zero_mult);

  if (cur.size() > 1) {
    // Scale to a primitive integer polynomial to generate candidates.
    BigInt common_den = 1;
    for (const Rat& c : cur) common_den = boost::multiprecision::lcm(common_den, c.den());
    std::vector<BigInt> ints;
    ints.reserve(cur.size());
    BigInt content = 0;
    for (const Rat& c : cur) {
      ints.push_back(c.num() * (common_den / c.den()));
      content = boost::multiprecision::gcd(content, boost::multiprecision::abs(ints.back()));
    }
    const BigInt a0 = boost::multiprecision::abs(ints.front()) / content;
    const BigInt an = boost::multiprecision::abs(ints.back()) / content;

    std::set<Rat> candidates;
    for (const BigInt& pd : divisors(a0))
      for (const BigInt& qd : divisors(an)) {
        if (boost::multiprecision::gcd(pd, qd) != 1) continue;
        Rat r{BigInt(pd), BigInt(qd)};
        candidates.insert(r);
        candidates.insert(-r);
      }

    for (const Rat& cand : candidates) {
      unsigned mult = 0;
      while (cur.size() > 1 && eval_poly(cur, cand).is_zero()) {
        deflate(cur, cand);
        ++mult;
      }
      if (mult > 0) out.emplace_back(cand, mult);
    }
  }

  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<std::size_t> rref(Matrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a.at(piv, col).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(piv, j), a.at(rank, j));
    const Rat scale = Rat(1) / a.at(rank, col);
    for (std::size_t j = col; j < cols; ++j) a.at(rank, j) *= scale;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a.at(r, col).is_zero()) continue;
      const Rat f = a.at(r, col);
      for (std::size_t j = col; j < cols; ++j) a.at(r, j) -= f * a.at(rank, j);
    }
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

std::vector<Matrix> null_space(const Matrix& a) {
  Matrix r = a;
  const std::vector<std::size_t> pivots = rref(r);
  const std::size_t cols = a.cols();

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<Matrix> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    Matrix v(cols, 1);
    v.at(free_col, 0) = 1;
    for (std::size_t pr = 0; pr < pivots.size(); ++pr)
      v.at(pivots[pr], 0) = -r.at(pr, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix parse_matrix_csv(std::string_view text) {
  std::vector<std::vector<Rat>> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;

    bool blank = line.find_first_not_of(" \t") == std::string_view::npos;
    if (!blank) {
      std::vector<Rat> row;
      std::size_t cell_start = 0;
      for (;;) {
        std::size_t comma = line.find(',', cell_start);
        std::string_view cell = line.substr(
            cell_start, comma == std::string_view::npos ? line.size() - cell_start
                                                        : comma - cell_start);
        try {
          row.push_back(Rat::parse(cell));
        } catch (const ParseError& e) {
          throw ParseError("line " + std::to_string(line_no) + ", entry " +
                           std::to_string(row.size() + 1) + ": " + e.what());
        }
        if (comma == std::string_view::npos) break;
        cell_start = comma + 1;
      }
      if (!rows.empty() && row.size() != rows.front().size())
        throw ParseError("line " + std::to_string(line_no) + ": expected " +
                         std::to_string(rows.front().size()) + " entries, found " +
                         std::to_string(row.size()));
      rows.push_back(std::move(row));
    } else if (!rows.empty() && eol < text.size()) {
      // Blank lines are tolerated only before the data or at the very end.
      std::string_view rest = text.substr(eol + 1);
      if (rest.find_first_not_of(" \t\r\n") != std::string_view::npos)
        throw ParseError("line " + std::to_string(line_no) + ": blank line inside matrix");
    }

    if (eol == text.size()) break;
    pos = eol + 1;
  }
  if (rows.empty()) throw ParseError("matrix file has no rows");

  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = std::move(rows[i][j]);
  return m;
}

std::string matrix_to_csv(const Matrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ',';
      out += m.at(i, j).str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace matpoly

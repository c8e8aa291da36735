#include "core/bipoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

#include "json.hpp"

namespace matpoly {

BiPoly::BiPoly(Shape shape) : shape_(shape), coef_(shape.m * shape.n) {
  if (shape.m == 0 || shape.n == 0)
    throw DomainError("polynomial shape dimensions must be positive");
}

bool BiPoly::is_zero() const {
  return std::all_of(coef_.begin(), coef_.end(),
                     [](const Rat& c) { return c.is_zero(); });
}

Rat BiPoly::eval(const Rat& x, const Rat& y) const {
  Rat acc;
  for (std::size_t k1 = shape_.m; k1-- > 0;) {
    Rat row;
    for (std::size_t k2 = shape_.n; k2-- > 0;) row = row * y + coeff(k1, k2);
    acc = acc * x + row;
  }
  return acc;
}

std::vector<Rat> BiPoly::slice_at_y(const Rat& y0) const {
  std::vector<Rat> u(shape_.m);
  for (std::size_t k1 = 0; k1 < shape_.m; ++k1) {
    Rat row;
    for (std::size_t k2 = shape_.n; k2-- > 0;) row = row * y0 + coeff(k1, k2);
    u[k1] = std::move(row);
  }
  return u;
}

std::vector<Rat> BiPoly::slice_at_x(const Rat& x0) const {
  std::vector<Rat> v(shape_.n);
  for (std::size_t k2 = 0; k2 < shape_.n; ++k2) {
    Rat col;
    for (std::size_t k1 = shape_.m; k1-- > 0;) col = col * x0 + coeff(k1, k2);
    v[k2] = std::move(col);
  }
  return v;
}

BiPoly BiPoly::transpose() const {
  BiPoly t(Shape{shape_.n, shape_.m});
  for (std::size_t k1 = 0; k1 < shape_.m; ++k1)
    for (std::size_t k2 = 0; k2 < shape_.n; ++k2) t.coeff(k2, k1) = coeff(k1, k2);
  return t;
}

BiPoly BiPoly::reshaped(Shape target) const {
  BiPoly r(target);
  for (std::size_t k1 = 0; k1 < shape_.m; ++k1)
    for (std::size_t k2 = 0; k2 < shape_.n; ++k2) {
      if (coeff(k1, k2).is_zero()) continue;
      if (k1 >= target.m || k2 >= target.n)
        throw ShapeError("reshape drops a nonzero coefficient at x^" +
                         std::to_string(k1) + "*y^" + std::to_string(k2));
      r.coeff(k1, k2) = coeff(k1, k2);
    }
  return r;
}

std::string BiPoly::str() const {
  struct Term {
    std::size_t k1, k2;
    const Rat* c;
  };
  std::vector<Term> terms;
  for (std::size_t k1 = 0; k1 < shape_.m; ++k1)
    for (std::size_t k2 = 0; k2 < shape_.n; ++k2)
      if (!coeff(k1, k2).is_zero()) terms.push_back({k1, k2, &coeff(k1, k2)});
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    const std::size_t ta = a.k1 + a.k2, tb = b.k1 + b.k2;
    if (ta != tb) return ta > tb;
    return a.k1 > b.k1;
  });

  if (terms.empty()) return "0";
  std::string out;
  for (const Term& t : terms) {
    const Rat mag = abs(*t.c);
    if (out.empty()) {
      if (t.c->sign() < 0) out += '-';
    } else {
      out += t.c->sign() < 0 ? " - " : " + ";
    }
    const bool has_vars = t.k1 > 0 || t.k2 > 0;
    const bool unit = mag.is_one() && has_vars;
    if (!unit) out += mag.str();
    if (t.k1 > 0) {
      if (!unit) out += '*';
      out += 'x';
      if (t.k1 > 1) out += "^" + std::to_string(t.k1);
    }
    if (t.k2 > 0) {
      if (!unit || t.k1 > 0) out += '*';
      out += 'y';
      if (t.k2 > 1) out += "^" + std::to_string(t.k2);
    }
  }
  return out;
}

namespace {

constexpr std::size_t kMaxExponent = 9999;
constexpr std::size_t kMaxGridEntries = 1'000'000;

// Recursive-descent reader for the term grammar. Whitespace is free between
// tokens; terms are joined by '+'/'-', factors inside a term by '*'.
class TextReader {
public:
  explicit TextReader(std::string_view text) : text_(text) {}

  std::map<std::pair<std::size_t, std::size_t>, Rat> read() {
    std::map<std::pair<std::size_t, std::size_t>, Rat> monomials;
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty polynomial text", pos_);
    int sign = 1;
    if (peek() == '+' || peek() == '-') sign = get() == '-' ? -1 : 1;
    for (;;) {
      read_term(monomials, sign);
      skip_ws();
      if (pos_ == text_.size()) break;
      const char c = get();
      if (c == '+')
        sign = 1;
      else if (c == '-')
        sign = -1;
      else
        throw ParseError(std::string("expected '+' or '-', found '") + c + "'",
                         pos_ - 1);
    }
    std::erase_if(monomials, [](const auto& e) { return e.second.is_zero(); });
    return monomials;
  }

private:
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }

  void read_term(std::map<std::pair<std::size_t, std::size_t>, Rat>& monomials,
                 int sign) {
    Rat coeff = 1;
    std::size_t k1 = 0, k2 = 0;
    bool seen_x = false, seen_y = false;
    for (;;) {
      skip_ws();
      if (pos_ == text_.size()) throw ParseError("expected a factor", pos_);
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        coeff *= read_number();
      } else if (c == 'x' || c == 'y') {
        ++pos_;
        const std::size_t e = read_exponent();
        if (c == 'x') {
          if (seen_x) throw ParseError("variable x repeated in a term", pos_);
          seen_x = true;
          k1 = e;
        } else {
          if (seen_y) throw ParseError("variable y repeated in a term", pos_);
          seen_y = true;
          k2 = e;
        }
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
      }
      skip_ws();
      if (pos_ < text_.size() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    monomials[{k1, k2}] += sign < 0 ? -coeff : coeff;
  }

  Rat read_number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '/')
        ++pos_;
      else
        break;
    }
    try {
      return Rat::parse(text_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), start);
    }
  }

  std::size_t read_exponent() {
    if (pos_ == text_.size() || peek() != '^') return 1;
    ++pos_;
    if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected digits after '^'", pos_);
    std::size_t e = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      e = e * 10 + static_cast<std::size_t>(get() - '0');
      if (e > kMaxExponent) throw ParseError("exponent too large", pos_);
    }
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

BiPoly build_from_monomials(
    const std::map<std::pair<std::size_t, std::size_t>, Rat>& monomials,
    const Shape* declared) {
  Shape shape{1, 1};
  if (declared != nullptr) {
    shape = *declared;
    for (const auto& [deg, c] : monomials)
      if (deg.first >= shape.m || deg.second >= shape.n)
        throw ShapeError("term x^" + std::to_string(deg.first) + "*y^" +
                         std::to_string(deg.second) +
                         " exceeds the declared shape (" + std::to_string(shape.m) +
                         ", " + std::to_string(shape.n) + ")");
  } else {
    for (const auto& [deg, c] : monomials) {
      shape.m = std::max(shape.m, deg.first + 1);
      shape.n = std::max(shape.n, deg.second + 1);
    }
  }
  if (shape.m * shape.n > kMaxGridEntries)
    throw ShapeError("coefficient grid too large");
  BiPoly p(shape);
  for (const auto& [deg, c] : monomials) p.coeff(deg.first, deg.second) = c;
  return p;
}

}  // namespace

BiPoly BiPoly::parse(std::string_view text) {
  const auto monomials = TextReader(text).read();
  return build_from_monomials(monomials, nullptr);
}

BiPoly BiPoly::parse(std::string_view text, Shape declared) {
  const auto monomials = TextReader(text).read();
  return build_from_monomials(monomials, &declared);
}

BiPoly operator+(const BiPoly& p, const BiPoly& q) {
  if (!(p.shape() == q.shape()))
    throw ShapeError("polynomial addition with mismatched declared shapes");
  BiPoly r(p.shape());
  for (std::size_t k1 = 0; k1 < p.xdim(); ++k1)
    for (std::size_t k2 = 0; k2 < p.ydim(); ++k2)
      r.coeff(k1, k2) = p.coeff(k1, k2) + q.coeff(k1, k2);
  return r;
}

BiPoly operator-(const BiPoly& p, const BiPoly& q) {
  if (!(p.shape() == q.shape()))
    throw ShapeError("polynomial subtraction with mismatched declared shapes");
  BiPoly r(p.shape());
  for (std::size_t k1 = 0; k1 < p.xdim(); ++k1)
    for (std::size_t k2 = 0; k2 < p.ydim(); ++k2)
      r.coeff(k1, k2) = p.coeff(k1, k2) - q.coeff(k1, k2);
  return r;
}

BiPoly operator*(const Rat& c, const BiPoly& p) {
  BiPoly r(p.shape());
  for (std::size_t k1 = 0; k1 < p.xdim(); ++k1)
    for (std::size_t k2 = 0; k2 < p.ydim(); ++k2) r.coeff(k1, k2) = c * p.coeff(k1, k2);
  return r;
}

bool poly_eq(const BiPoly& p, const BiPoly& q) {
  const std::size_t m = std::max(p.xdim(), q.xdim());
  const std::size_t n = std::max(p.ydim(), q.ydim());
  static const Rat zero;
  for (std::size_t k1 = 0; k1 < m; ++k1)
    for (std::size_t k2 = 0; k2 < n; ++k2) {
      const Rat& a = k1 < p.xdim() && k2 < p.ydim() ? p.coeff(k1, k2) : zero;
      const Rat& b = k1 < q.xdim() && k2 < q.ydim() ? q.coeff(k1, k2) : zero;
      if (!(a == b)) return false;
    }
  return true;
}

bool is_symmetric(const BiPoly& p) {
  if (p.xdim() != p.ydim()) return false;
  for (std::size_t k1 = 0; k1 < p.xdim(); ++k1)
    for (std::size_t k2 = k1 + 1; k2 < p.ydim(); ++k2)
      if (!(p.coeff(k1, k2) == p.coeff(k2, k1))) return false;
  return true;
}

bool is_skew_symmetric(const BiPoly& p) {
  if (p.xdim() != p.ydim()) return false;
  for (std::size_t k1 = 0; k1 < p.xdim(); ++k1)
    for (std::size_t k2 = k1; k2 < p.ydim(); ++k2)
      if (!(p.coeff(k1, k2) == -p.coeff(k2, k1))) return false;
  return true;
}

BiPoly poly_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(),
                     e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!j.is_object()) throw ParseError("polynomial JSON must be an object");
  if (!j.contains("m") || !j.contains("n") || !j.contains("coeffs"))
    throw ParseError("polynomial JSON needs keys m, n, coeffs");
  if (!j["m"].is_number_integer() || !j["n"].is_number_integer() ||
      j["m"].get<long long>() < 1 || j["n"].get<long long>() < 1)
    throw ParseError("m and n must be positive integers");
  const auto m = j["m"].get<std::size_t>();
  const auto n = j["n"].get<std::size_t>();
  if (m * n > kMaxGridEntries) throw ParseError("coefficient grid too large");
  const auto& rows = j["coeffs"];
  if (!rows.is_array() || rows.size() != m)
    throw ParseError("coeffs must be an array of m rows");
  BiPoly p(Shape{m, n});
  for (std::size_t k1 = 0; k1 < m; ++k1) {
    const auto& row = rows[k1];
    if (!row.is_array() || row.size() != n)
      throw ParseError("coeffs row " + std::to_string(k1) +
                       " must be an array of n entries");
    for (std::size_t k2 = 0; k2 < n; ++k2) {
      const auto& cell = row[k2];
      std::string lit;
      if (cell.is_string())
        lit = cell.get<std::string>();
      else if (cell.is_number_integer())
        lit = std::to_string(cell.get<long long>());
      else
        throw ParseError("coefficient at [" + std::to_string(k1) + "][" +
                         std::to_string(k2) + "] must be a string or integer");
      try {
        p.coeff(k1, k2) = Rat::parse(lit);
      } catch (const ParseError& e) {
        throw ParseError("coefficient at [" + std::to_string(k1) + "][" +
                         std::to_string(k2) + "]: " + e.what());
      }
    }
  }
  return p;
}

std::string poly_to_json(const BiPoly& p) {
  nlohmann::ordered_json j;
  j["m"] = p.xdim();
  j["n"] = p.ydim();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t k1 = 0; k1 < p.xdim(); ++k1) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t k2 = 0; k2 < p.ydim(); ++k2) row.push_back(p.coeff(k1, k2).str());
    rows.push_back(std::move(row));
  }
  j["coeffs"] = std::move(rows);
  return j.dump();
}

}  // namespace matpoly

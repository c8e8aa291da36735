#include "core/rat.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace matpoly {

namespace {

BigInt pow10(std::size_t e) {
  BigInt r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= 10;
  return r;
}

std::size_t digit_count(const BigInt& v) {
  return v.str().size();  // v must be non-negative
}

}  // namespace

Rat::Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw DomainError("rational with zero denominator");
  normalize();
}

void Rat::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rat Rat::parse(std::string_view text) {
  // Normalize the one non-ASCII spelling we accept, then scan by hand.
  std::string buf;
  buf.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      buf += '-';
      i += 3;
    } else {
      buf += text[i];
      ++i;
    }
  }

  std::size_t pos = 0;
  std::size_t end = buf.size();
  while (pos < end && std::isspace(static_cast<unsigned char>(buf[pos]))) ++pos;
  while (end > pos && std::isspace(static_cast<unsigned char>(buf[end - 1]))) --end;
  if (pos == end) throw ParseError("empty rational literal", pos);

  bool negative = false;
  if (buf[pos] == '+' || buf[pos] == '-') {
    negative = buf[pos] == '-';
    ++pos;
  }

  auto scan_digits = [&](std::string& out) {
    while (pos < end && std::isdigit(static_cast<unsigned char>(buf[pos]))) {
      out += buf[pos];
      ++pos;
    }
  };

  std::string int_part;
  scan_digits(int_part);

  if (pos < end && buf[pos] == '.') {
    ++pos;
    std::string frac_part;
    scan_digits(frac_part);
    if (int_part.empty() && frac_part.empty())
      throw ParseError("decimal literal with no digits", pos);
    if (pos != end)
      throw ParseError("trailing characters after decimal literal", pos);
    BigInt num(int_part.empty() ? "0" : int_part);
    num *= pow10(frac_part.size());
    if (!frac_part.empty()) num += BigInt(frac_part);
    if (negative) num = -num;
    return Rat(std::move(num), pow10(frac_part.size()));
  }

  if (int_part.empty()) throw ParseError("expected digits", pos);

  if (pos < end && buf[pos] == '/') {
    ++pos;
    std::string den_part;
    scan_digits(den_part);
    if (den_part.empty())
      throw ParseError("expected digits after '/'", pos);
    if (pos != end)
      throw ParseError("trailing characters after fraction literal", pos);
    BigInt den(den_part);
    if (den == 0) throw ParseError("fraction literal with zero denominator", pos);
    BigInt num(int_part);
    if (negative) num = -num;
    return Rat(std::move(num), std::move(den));
  }

  if (pos != end)
    throw ParseError(std::string("unexpected character '") + buf[pos] + "'", pos);
  BigInt num(int_part);
  if (negative) num = -num;
  return Rat(std::move(num));
}

std::string Rat::str() const {
  std::string s = num_.str();
  if (den_ != 1) {
    s += '/';
    s += den_.str();
  }
  return s;
}

std::string Rat::decimal(unsigned significant_digits) const {
  if (significant_digits == 0)
    throw DomainError("decimal rendering needs at least one significant digit");
  if (num_ == 0) return "0";

  const BigInt a = boost::multiprecision::abs(num_);
  const BigInt& b = den_;

  // Find the shift s with round(|value| * 10^s) having exactly the requested
  // number of digits. The first guess is off by at most one; iterate to fix.
  long s = static_cast<long>(significant_digits) +
           static_cast<long>(digit_count(b)) - static_cast<long>(digit_count(a));
  BigInt q;
  for (int iter = 0; iter < 4; ++iter) {
    BigInt scaled_num = a;
    BigInt scaled_den = b;
    if (s >= 0)
      scaled_num *= pow10(static_cast<std::size_t>(s));
    else
      scaled_den *= pow10(static_cast<std::size_t>(-s));
    q = (2 * scaled_num + scaled_den) / (2 * scaled_den);  // round half up
    long have = static_cast<long>(digit_count(q));
    if (have == static_cast<long>(significant_digits)) break;
    s += static_cast<long>(significant_digits) - have;
  }

  std::string ds = q.str();
  // Exponent of the leading digit: |value| ~ d.ddd * 10^e.
  const long e = static_cast<long>(ds.size()) - 1 - s;
  std::string out = num_ < 0 ? "-" : "";

  if (e >= static_cast<long>(significant_digits) + 6 || e <= -7) {
    out += ds.substr(0, 1);
    if (ds.size() > 1) {
      out += '.';
      out += ds.substr(1);
    }
    out += 'e';
    out += std::to_string(e);
    return out;
  }
  if (e >= 0) {
    if (e + 1 >= static_cast<long>(ds.size())) {
      out += ds;
      out.append(static_cast<std::size_t>(e + 1 - static_cast<long>(ds.size())), '0');
    } else {
      out += ds.substr(0, static_cast<std::size_t>(e + 1));
      out += '.';
      out += ds.substr(static_cast<std::size_t>(e + 1));
    }
    return out;
  }
  out += "0.";
  out.append(static_cast<std::size_t>(-e - 1), '0');
  out += ds;
  return out;
}

Rat Rat::operator-() const {
  Rat r = *this;
  r.num_ = -r.num_;
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.num_ == 0) throw DomainError("division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::strong_ordering Rat::operator<=>(const Rat& o) const {
  const BigInt l = num_ * o.den_;
  const BigInt r = o.num_ * den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rat Rat::pow(std::uint64_t e) const {
  Rat base = *this;
  Rat result = 1;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace matpoly

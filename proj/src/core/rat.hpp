#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "core/errors.hpp"

namespace matpoly {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Always kept normalized: denominator > 0, gcd(|num|, den) = 1, and zero is
/// stored as 0/1. Because of that invariant, defaulted memberwise equality is
/// value equality.
class Rat {
public:
  Rat() : num_(0), den_(1) {}
  Rat(int v) : num_(v), den_(1) {}                 // NOLINT: implicit on purpose
  Rat(long long v) : num_(v), den_(1) {}           // NOLINT
  explicit Rat(BigInt v) : num_(std::move(v)), den_(1) {}
  Rat(BigInt num, BigInt den);

  /// Parses "123", "-4/7" or "3.25" (finite decimal). Surrounding whitespace
  /// is ignored; a U+2212 minus sign is accepted as "-". Throws ParseError on
  /// anything else, including a zero denominator.
  static Rat parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  /// "p/q" when the denominator is not 1, plain "p" otherwise.
  std::string str() const;

  /// Decimal rendering with the given number of significant digits
  /// (round half up). Falls back to scientific notation only for magnitudes
  /// far outside the plain-notation range.
  std::string decimal(unsigned significant_digits) const;

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);  // throws DomainError on division by zero

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  bool operator==(const Rat& o) const = default;
  std::strong_ordering operator<=>(const Rat& o) const;

  /// Exponent must be non-negative; 0^0 is 1.
  Rat pow(std::uint64_t e) const;

private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

Rat abs(const Rat& r);
std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace matpoly

#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace matpoly {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operand shapes are incompatible (addition, products, reshaping, ...).
class ShapeError : public Error {
public:
  explicit ShapeError(const std::string& what) : Error(what) {}
};

/// Elimination found no usable pivot; `pivot_col` is the 0-based column.
class SingularError : public Error {
public:
  SingularError(const std::string& what, std::size_t pivot_col)
      : Error(what), pivot_col(pivot_col) {}
  std::size_t pivot_col;
};

/// Malformed textual input. `pos` is a 0-based byte offset into the input
/// when known, `npos` otherwise.
class ParseError : public Error {
public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  explicit ParseError(const std::string& what, std::size_t pos = npos)
      : Error(what), pos(pos) {}
  std::size_t pos;
};

/// Invalid value outside the shape/singular/parse categories:
/// division by zero, out-of-range indices, bad sampling ranges.
class DomainError : public Error {
public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

}  // namespace matpoly

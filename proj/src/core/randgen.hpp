#pragma once

#include <cstdint>
#include <random>

#include "core/bipoly.hpp"
#include "core/matrix.hpp"
#include "core/rat.hpp"

namespace matpoly {

/// Deterministic generator for randomized checks. Same seed, same sequence,
/// on every platform: values are derived from raw mt19937_64 output with
/// plain modular reduction, never from distribution adapters, whose results
/// vary between standard library implementations.
class RatRng {
public:
  explicit RatRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  /// Uniform-ish integer in [lo, hi], endpoints included.
  long long integer(long long lo, long long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(eng_() % span);
  }

  std::size_t index(std::size_t lo, std::size_t hi) {
    return static_cast<std::size_t>(integer(static_cast<long long>(lo),
                                            static_cast<long long>(hi)));
  }

  /// Small rational with numerator in [-max_num, max_num] and denominator
  /// in [1, max_den].
  Rat rational(long long max_num = 9, long long max_den = 4) {
    return Rat(BigInt(integer(-max_num, max_num)), BigInt(integer(1, max_den)));
  }

  Rat nonzero_rational(long long max_num = 9, long long max_den = 4) {
    for (;;) {
      Rat r = rational(max_num, max_den);
      if (!r.is_zero()) return r;
    }
  }

  Matrix matrix(std::size_t rows, std::size_t cols, long long max_num = 9,
                long long max_den = 4) {
    Matrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a.at(i, j) = rational(max_num, max_den);
    return a;
  }

  Matrix integer_matrix(std::size_t rows, std::size_t cols, long long lo,
                        long long hi) {
    Matrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a.at(i, j) = Rat(integer(lo, hi));
    return a;
  }

  BiPoly poly(Shape shape, long long max_num = 9, long long max_den = 4) {
    BiPoly p(shape);
    for (std::size_t k1 = 0; k1 < shape.m; ++k1)
      for (std::size_t k2 = 0; k2 < shape.n; ++k2)
        p.coeff(k1, k2) = rational(max_num, max_den);
    return p;
  }

private:
  std::mt19937_64 eng_;
};

}  // namespace matpoly

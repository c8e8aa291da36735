#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "core/bipoly.hpp"
#include "core/rat.hpp"

namespace matpoly {

/// Rectangular evaluation grid over [x_min, x_max] x [y_min, y_max] with
/// equally spaced rational sample points, x-major. Always includes both
/// endpoints in each direction, so integer node ranges land exactly on the
/// nodes whenever the step count divides the span.
struct SurfaceGrid {
  struct Sample {
    Rat x, y, value;
  };

  Rat x_min, x_max, y_min, y_max;
  std::size_t steps_x = 0, steps_y = 0;
  std::vector<Sample> samples;
};

/// Evaluates the polynomial on the grid. Requires at least two steps per
/// direction and min <= max; throws DomainError otherwise.
SurfaceGrid sample_surface(const BiPoly& p, const Rat& x_min, const Rat& x_max,
                           const Rat& y_min, const Rat& y_max, std::size_t steps_x,
                           std::size_t steps_y);

/// CSV with header "x,y,z,z_decimal": coordinates and value as exact
/// rational literals plus a decimal rendering of the value.
std::string surface_to_csv(const SurfaceGrid& grid, unsigned significant_digits = 20);

}  // namespace matpoly

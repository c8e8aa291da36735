#include "core/surface.hpp"

namespace matpoly {

SurfaceGrid sample_surface(const BiPoly& p, const Rat& x_min, const Rat& x_max,
                           const Rat& y_min, const Rat& y_max, std::size_t steps_x,
                           std::size_t steps_y) {
  if (steps_x < 2 || steps_y < 2)
    throw DomainError("surface sampling needs at least two steps per direction");
  if (x_max < x_min || y_max < y_min)
    throw DomainError("surface sampling range is empty");

  SurfaceGrid grid{x_min, x_max, y_min, y_max, steps_x, steps_y, {}};
  grid.samples.reserve(steps_x * steps_y);
  const Rat dx = (x_max - x_min) / Rat(static_cast<long long>(steps_x - 1));
  const Rat dy = (y_max - y_min) / Rat(static_cast<long long>(steps_y - 1));
  for (std::size_t i = 0; i < steps_x; ++i) {
    const Rat x = x_min + Rat(static_cast<long long>(i)) * dx;
    for (std::size_t j = 0; j < steps_y; ++j) {
      const Rat y = y_min + Rat(static_cast<long long>(j)) * dy;
      grid.samples.push_back({x, y, p.eval(x, y)});
    }
  }
  return grid;
}

std::string surface_to_csv(const SurfaceGrid& grid, unsigned significant_digits) {
  std::string out = "x,y,z,z_decimal\n";
  for (const SurfaceGrid::Sample& s : grid.samples) {
    out += s.x.str();
    out += ',';
    out += s.y.str();
    out += ',';
    out += s.value.str();
    out += ',';
    out += s.value.decimal(significant_digits);
    out += '\n';
  }
  return out;
}

}  // namespace matpoly

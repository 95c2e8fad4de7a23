#include "rexosc/numerics/grid.hpp"

#include <cmath>
#include <string>

#include "rexosc/errors.hpp"

namespace rexosc::numerics {

Grid::Grid(double center, double half_width, std::size_t n_points)
    : center_(center), half_width_(half_width), n_points_(n_points), spacing_(0.0) {
  if (!(half_width > 0.0) || !std::isfinite(half_width) || !std::isfinite(center))
    throw DomainError("grid half-width must be positive and finite");
  if (n_points < kMinPoints)
    throw DomainError("grid needs at least " + std::to_string(kMinPoints) + " points, got " +
                      std::to_string(n_points));
  spacing_ = 2.0 * half_width / static_cast<double>(n_points - 1);
}

Grid Grid::with_spacing(double center, double half_width, double max_spacing) {
  if (!(max_spacing > 0.0)) throw DomainError("grid spacing must be positive");
  auto intervals = static_cast<std::size_t>(std::ceil(2.0 * half_width / max_spacing));
  if (intervals % 2 == 1) ++intervals;
  if (intervals + 1 < kMinPoints) intervals = kMinPoints - 1;
  return Grid(center, half_width, intervals + 1);
}

}  // namespace rexosc::numerics

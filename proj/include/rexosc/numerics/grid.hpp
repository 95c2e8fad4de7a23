#pragma once

#include <cstddef>

namespace rexosc::numerics {

/// Uniform sampling of [center - half_width, center + half_width], endpoints included.
class Grid {
 public:
  /// Smallest grid that still leaves one interior point for the 9-point stencil.
  static constexpr std::size_t kMinPoints = 9;

  Grid(double center, double half_width, std::size_t n_points);

  /// Grid whose spacing is at most `max_spacing`, with an odd point count (Simpson-friendly).
  static Grid with_spacing(double center, double half_width, double max_spacing);

  double center() const noexcept { return center_; }
  double half_width() const noexcept { return half_width_; }
  std::size_t size() const noexcept { return n_points_; }
  double spacing() const noexcept { return spacing_; }
  double lower() const noexcept { return center_ - half_width_; }
  double upper() const noexcept { return center_ + half_width_; }
  double point(std::size_t i) const noexcept { return lower() + spacing_ * static_cast<double>(i); }

 private:
  double center_;
  double half_width_;
  std::size_t n_points_;
  double spacing_;
};

}  // namespace rexosc::numerics

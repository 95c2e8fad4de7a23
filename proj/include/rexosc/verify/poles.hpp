#pragma once

#include <array>
#include <span>
#include <vector>

#include "rexosc/model/extension.hpp"

namespace rexosc::verify {

/// Closed interval per old-coordinate axis.
using Box = std::vector<std::array<double, 2>>;

/// Real points where one axis denominator vanishes: {p real : rows * p = rhs}, with orthonormal
/// rows (one or two of them).
struct PoleSurface {
  std::size_t axis = 0;
  model::cplx target;  // tilde coordinate of the zero
  std::vector<std::array<double, 3>> rows;
  std::vector<double> rhs;

  /// Euclidean distance from a real point to the surface.
  double distance(std::span<const double> point) const;
};

/// All real pole surfaces of the extended potential (unbounded; no box restriction).
/// `tolerance` is the distance below which an inconsistent imaginary part is treated as zero.
std::vector<PoleSurface> pole_surfaces(const model::ExtendedSystem& ext, double tolerance = 1e-9);

/// One representative real point per pole surface meeting the box, ascending by axis then
/// target. Empty means the potential is regular on the box. Points closer than `resolution`
/// are merged.
std::vector<std::vector<double>> pole_scan(const model::ExtendedSystem& ext, const Box& box, double resolution = 1e-9);
std::vector<std::vector<double>> pole_scan(const model::OscillatorSpec& spec, const model::REConfig& config,
                                           const Box& box, double resolution = 1e-9);

/// Box of half-width 12/sqrt(min Re w~) around the real point where all tilde coordinates vanish
/// (real part), wide enough that |psi|^2 of low states is below double precision at the edges.
Box default_box(const model::ExtendedSystem& ext);

}  // namespace rexosc::verify

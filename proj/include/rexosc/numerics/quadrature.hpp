#pragma once

#include <complex>
#include <span>
#include <vector>

#include "rexosc/numerics/grid.hpp"

namespace rexosc::numerics {

/// Composite Simpson weights for `n` equally spaced samples. Even `n` closes
/// the last three intervals with the 3/8 rule.
std::vector<double> simpson_weights(std::size_t n, double h);

/// Integral of the sampled function over the grid span.
std::complex<double> integrate(std::span<const std::complex<double>> samples, const Grid& grid);
double integrate(std::span<const double> samples, const Grid& grid);

}  // namespace rexosc::numerics

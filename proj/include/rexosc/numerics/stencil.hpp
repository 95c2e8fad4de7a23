#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "rexosc/numerics/grid.hpp"

namespace rexosc::numerics {

using cplx = std::complex<double>;

/// Eighth-order central estimate of f'' at `index`. Needs four neighbours on each side.
cplx second_derivative(std::span<const cplx> samples, const Grid& grid, std::size_t index);
double second_derivative(std::span<const double> samples, const Grid& grid, std::size_t index);

/// Row-major tensor-product grid in one to three dimensions (last axis fastest).
class TensorGrid {
 public:
  explicit TensorGrid(std::vector<Grid> axes);

  std::size_t dimension() const noexcept { return axes_.size(); }
  const Grid& axis(std::size_t a) const { return axes_.at(a); }
  const std::vector<Grid>& axes() const noexcept { return axes_; }
  std::size_t size() const noexcept { return total_; }
  std::ptrdiff_t stride(std::size_t a) const { return strides_.at(a); }

  /// Per-axis indices of flat index `flat`.
  std::vector<std::size_t> unflatten(std::size_t flat) const;
  std::vector<double> point(std::size_t flat) const;

  /// True when every axis index is at least four points from that axis' ends.
  bool is_interior(std::size_t flat) const;

  /// Composite-Simpson cubature weights, zero outside the stencil interior.
  std::vector<double> interior_weights() const;

 private:
  std::vector<Grid> axes_;
  std::vector<std::ptrdiff_t> strides_;
  std::size_t total_;
};

/// Eighth-order Laplacian of `samples` laid out on `grid`. Entries within four
/// points of any boundary are left at zero. Uses the active SIMD kernels.
std::vector<cplx> laplacian(std::span<const cplx> samples, const TensorGrid& grid);

}  // namespace rexosc::numerics

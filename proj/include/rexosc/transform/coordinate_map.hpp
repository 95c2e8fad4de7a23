#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>

namespace rexosc::transform {

using cplx = std::complex<double>;
using Matrix3 = std::array<std::array<cplx, 3>, 3>;
using Point = std::array<cplx, 3>;

/// Affine map from old to tilde coordinates: tilde = linear * old + shift. The stored inverse
/// is built from the closed-form back-substitution, not by inverting `linear` numerically.
class CoordinateMap {
 public:
  /// Identity map.
  explicit CoordinateMap(std::size_t dimension = 1);
  /// Inverse taken as the transpose of `linear`.
  CoordinateMap(std::size_t dimension, const Matrix3& linear, const Point& shift);
  CoordinateMap(std::size_t dimension, const Matrix3& linear, const Point& shift, const Matrix3& inverse_linear);

  std::size_t dimension() const noexcept { return dim_; }
  cplx linear(std::size_t row, std::size_t col) const { return linear_.at(row).at(col); }
  cplx inverse_linear(std::size_t row, std::size_t col) const { return inverse_.at(row).at(col); }
  cplx shift(std::size_t i) const { return shift_.at(i); }
  const Matrix3& linear_matrix() const noexcept { return linear_; }
  const Matrix3& inverse_matrix() const noexcept { return inverse_; }
  const Point& shift_vector() const noexcept { return shift_; }

  /// Old coordinates to tilde coordinates. `old` must have `dimension()` entries.
  Point forward(std::span<const cplx> old) const;
  /// Tilde coordinates back to old coordinates through the stored inverse.
  Point backward(std::span<const cplx> tilde) const;

  /// max |(L^T L - I)_ij| with the plain (non-conjugated) transpose.
  double orthogonality_defect() const;
  /// max |(L_inv L - I)_ij|.
  double inverse_defect() const;

 private:
  std::size_t dim_;
  Matrix3 linear_{};
  Matrix3 inverse_{};
  Point shift_{};
};

/// Block-diagonal combination: `first` acts on the leading axes, `second` on the rest.
CoordinateMap direct_sum(const CoordinateMap& first, const CoordinateMap& second);

}  // namespace rexosc::transform

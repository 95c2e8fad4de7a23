#pragma once

#include <complex>
#include <string>
#include <string_view>

namespace rexosc::transform {

using cplx = std::complex<double>;

enum class Flavor { real, imaginary };

/// A perturbation strength that is either real or purely imaginary. `magnitude` is signed:
/// the complex value is `magnitude` or `i * magnitude`.
struct CouplingValue {
  double magnitude = 0.0;
  Flavor flavor = Flavor::real;

  static CouplingValue real(double v) { return {v, Flavor::real}; }
  static CouplingValue imaginary(double g) { return {g, Flavor::imaginary}; }

  cplx value() const noexcept { return flavor == Flavor::real ? cplx(magnitude, 0.0) : cplx(0.0, magnitude); }
  /// value()^2, which is always real.
  double square() const noexcept { return flavor == Flavor::real ? magnitude * magnitude : -magnitude * magnitude; }
  bool is_zero() const noexcept { return magnitude == 0.0; }
  /// True for a nonzero imaginary coupling; zero counts as real.
  bool is_imaginary() const noexcept { return flavor == Flavor::imaginary && magnitude != 0.0; }

  friend bool operator==(const CouplingValue&, const CouplingValue&) = default;
};

std::string_view to_string(Flavor f);
/// Accepts "real" / "imaginary" (also "r" / "i"). Throws DomainError otherwise.
Flavor parse_flavor(std::string_view text);

/// Square root with the branch cut on the negative real axis and -0 imaginary parts
/// treated as +0, so negative reals map to the positive imaginary axis.
cplx principal_sqrt(cplx z);

}  // namespace rexosc::transform

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "rexosc/transform/coordinate_map.hpp"
#include "rexosc/transform/coupling.hpp"

namespace rexosc::transform {

/// Parameters of a complex rotation x~ = a x - b y, y~ = b x + a y.
struct RotationParameters {
  cplx k;
  cplx a;
  cplx b;
  cplx discriminant;  // sqrt(4 lambda^2 + (w1^2 - w2^2)^2)
};

struct DecoupledSystem {
  std::vector<cplx> tilde_frequencies;
  cplx potential_constant{};
  CoordinateMap map;
  std::optional<RotationParameters> rotation;
  /// Unit direction (c, d) of a combined yz/zx coupling.
  std::optional<std::array<cplx, 2>> direction;

  std::size_t dimension() const noexcept { return tilde_frequencies.size(); }
  /// All tilde frequencies real and positive within `tol` (relative).
  bool has_real_frequencies(double tol = 1e-12) const;
  /// 1/4 sum w~_i^2 x~_i^2 + potential_constant.
  cplx tilde_potential(const Point& tilde) const;
};

/// x~ = x + 2 lambda0 / w^2, constant -lambda0^2 / w^2.
DecoupledSystem shift_map_1d(double omega, CouplingValue lambda0);

/// Tilde frequencies of the 2D quadratic coupling. Defined even where the map is not
/// (zero discriminant gives equal frequencies).
std::array<cplx, 2> tilde_frequencies_2d(double omega1, double omega2, CouplingValue lambda);
DecoupledSystem rotate_map_2d(double omega1, double omega2, CouplingValue lambda);

/// Linear coupling on z plus quadratic xy coupling.
DecoupledSystem decouple_3d_lq(double omega1, double omega2, double omega3, CouplingValue lambda0,
                               CouplingValue lambda);

/// Equal x/y frequencies, yz and zx couplings, no xy coupling.
std::array<cplx, 3> tilde_frequencies_q1(double omega, double omega3, CouplingValue lambda2,
                                         CouplingValue lambda3);
DecoupledSystem decouple_3d_q1(double omega, double omega3, CouplingValue lambda2, CouplingValue lambda3);

/// Equal x/y frequencies, real xy coupling lambda1, equal yz and zx couplings lambda.
std::array<cplx, 3> tilde_frequencies_q2(double omega, double omega3, CouplingValue lambda1,
                                         CouplingValue lambda);
DecoupledSystem decouple_3d_q2(double omega, double omega3, CouplingValue lambda1, CouplingValue lambda);

}  // namespace rexosc::transform

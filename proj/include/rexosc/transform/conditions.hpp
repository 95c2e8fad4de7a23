#pragma once

#include <array>
#include <optional>
#include <string>

#include "rexosc/transform/coupling.hpp"

namespace rexosc::transform {

enum class Case3d { lq, q1, q2 };

/// Parameters of a 3D configuration. For q1 and q2, omega[0] == omega[1] is the shared
/// in-plane frequency and omega[2] the z frequency.
struct Params3d {
  std::array<double, 3> omega{1.0, 1.0, 1.0};
  CouplingValue lambda0;  // lq: linear z coupling
  CouplingValue lambda;   // lq: xy coupling; q2: shared yz/zx coupling
  CouplingValue lambda1;  // q2: xy coupling (real)
  CouplingValue lambda2;  // q1: yz coupling
  CouplingValue lambda3;  // q1: zx coupling
};

struct RealityVerdict {
  bool real = true;
  /// The inequality set that was evaluated.
  std::string condition;
  /// The inequality that failed; empty when `real`.
  std::string failed;
};

/// Real coupling: |lambda| <= w1 w2. Imaginary coupling: |gamma| < |w1^2 - w2^2| / 2 (strict).
bool spectral_reality_2d(double omega1, double omega2, CouplingValue lambda);
RealityVerdict spectral_reality_2d_verdict(double omega1, double omega2, CouplingValue lambda);

RealityVerdict spectral_reality_3d(Case3d which, const Params3d& params);

/// Coupling that makes the tilde-frequency ratio equal `r_tilde`. A negative radicand yields an
/// imaginary coupling. When `requested` is set and disagrees, throws FlavorMismatchError.
CouplingValue degeneracy_coupling_2d(double r_tilde, double omega1, double omega2,
                                     std::optional<Flavor> requested = std::nullopt);

/// q1: combined strength sqrt(lambda2^2 + lambda3^2) for ratio u_tilde.
/// q2: shared coupling lambda for ratio u_tilde, given params.lambda1.
CouplingValue degeneracy_coupling_3d(Case3d which, double u_tilde, const Params3d& params,
                                     std::optional<Flavor> requested = std::nullopt);

struct EtaMetric {
  std::array<std::array<cplx, 2>, 2> matrix;
};

/// [[-k, -sqrt(1-k^2)], [sqrt(1-k^2), -k]] with the principal root.
EtaMetric eta_metric_2d(cplx k);

}  // namespace rexosc::transform

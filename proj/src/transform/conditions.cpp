#include "rexosc/transform/conditions.hpp"

#include <cmath>
#include <sstream>

#include "rexosc/errors.hpp"

namespace rexosc::transform {
namespace {

void require_positive(double w, const char* name) {
  if (!(w > 0.0) || !std::isfinite(w)) throw DomainError(std::string(name) + " must be a positive finite frequency");
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

// Shared radicand of the ratio-to-coupling relation: (t^4 + 1) - (t/u)^2 (u^4 + 1).
double ratio_radicand(double t, double u) { return (t * t * t * t + 1.0) - (t / u) * (t / u) * (u * u * u * u + 1.0); }

CouplingValue from_square(double coupling_sq, std::optional<Flavor> requested, const char* what) {
  const Flavor natural = coupling_sq >= 0.0 ? Flavor::real : Flavor::imaginary;
  const double mag = std::sqrt(std::abs(coupling_sq));
  if (requested && *requested != natural && mag != 0.0)
    throw FlavorMismatchError(std::string(what) + ": the requested ratio needs a" +
                              (natural == Flavor::real ? " real" : "n imaginary") + " coupling, not " +
                              std::string(to_string(*requested)));
  return {mag, requested && mag == 0.0 ? *requested : natural};
}

void require_equal_inplane(const Params3d& p) {
  if (p.omega[0] != p.omega[1])
    throw DomainError("this configuration needs equal x and y frequencies");
}

}  // namespace

RealityVerdict spectral_reality_2d_verdict(double omega1, double omega2, CouplingValue lambda) {
  require_positive(omega1, "omega1");
  require_positive(omega2, "omega2");
  RealityVerdict v;
  if (!lambda.is_imaginary()) {
    v.condition = "|lambda| <= omega1*omega2";
    v.real = std::abs(lambda.magnitude) <= omega1 * omega2;
    if (!v.real)
      v.failed = "|lambda| <= omega1*omega2 violated: |lambda| = " + fmt(std::abs(lambda.magnitude)) +
                 " > " + fmt(omega1 * omega2);
  } else {
    const double half_gap = 0.5 * std::abs(omega1 * omega1 - omega2 * omega2);
    v.condition = "|gamma| < |omega1^2 - omega2^2|/2";
    v.real = std::abs(lambda.magnitude) < half_gap;
    if (!v.real)
      v.failed = "|gamma| < |omega1^2 - omega2^2|/2 violated: |gamma| = " + fmt(std::abs(lambda.magnitude)) +
                 " >= " + fmt(half_gap);
  }
  return v;
}

bool spectral_reality_2d(double omega1, double omega2, CouplingValue lambda) {
  return spectral_reality_2d_verdict(omega1, omega2, lambda).real;
}

RealityVerdict spectral_reality_3d(Case3d which, const Params3d& p) {
  for (double w : p.omega) require_positive(w, "frequency");
  switch (which) {
    case Case3d::lq:
      // The linear z term only shifts; reality is decided by the xy block.
      return spectral_reality_2d_verdict(p.omega[0], p.omega[1], p.lambda);
    case Case3d::q1: {
      require_equal_inplane(p);
      const double w2 = p.omega[0] * p.omega[0], w32 = p.omega[2] * p.omega[2];
      const double strength_sq = p.lambda2.square() + p.lambda3.square();
      const double lower = -0.25 * (w2 - w32) * (w2 - w32);
      RealityVerdict v;
      v.condition = "-(omega^2 - omega3^2)^2/4 <= lambda2^2 + lambda3^2 <= omega^2*omega3^2";
      if (strength_sq > w2 * w32) {
        v.real = false;
        v.failed = "lambda2^2 + lambda3^2 <= omega^2*omega3^2 violated: " + fmt(strength_sq) + " > " + fmt(w2 * w32);
      } else if (strength_sq < lower) {
        v.real = false;
        v.failed = "-(omega^2 - omega3^2)^2/4 <= lambda2^2 + lambda3^2 violated: " + fmt(strength_sq) + " < " +
                   fmt(lower);
      }
      return v;
    }
    case Case3d::q2: {
      require_equal_inplane(p);
      if (p.lambda1.is_imaginary()) throw DomainError("the xy coupling lambda1 must be real in this configuration");
      const double w2 = p.omega[0] * p.omega[0], w32 = p.omega[2] * p.omega[2];
      const double l1 = p.lambda1.magnitude;
      RealityVerdict v;
      if (l1 < -w2 || l1 > w2) {
        v.condition = "-omega^2 <= lambda1 <= omega^2";
        v.real = false;
        v.failed = "-omega^2 <= lambda1 <= omega^2 violated: lambda1 = " + fmt(l1);
        return v;
      }
      if (!p.lambda.is_imaginary()) {
        const double bound = (w2 + l1) * w32 / 2.0;
        v.condition = "-omega^2 <= lambda1 <= omega^2 and lambda^2 <= (omega^2 + lambda1)*omega3^2/2";
        if (p.lambda.square() > bound) {
          v.real = false;
          v.failed = "lambda^2 <= (omega^2 + lambda1)*omega3^2/2 violated: " + fmt(p.lambda.square()) + " > " +
                     fmt(bound);
        }
      } else {
        const double gap = w2 - w32 + l1;
        const double bound = gap * gap / 8.0;
        const double g2 = p.lambda.magnitude * p.lambda.magnitude;
        v.condition = "-omega^2 <= lambda1 <= omega^2 and gamma^2 <= (omega^2 - omega3^2 + lambda1)^2/8";
        if (g2 > bound) {
          v.real = false;
          v.failed = "gamma^2 <= (omega^2 - omega3^2 + lambda1)^2/8 violated: " + fmt(g2) + " > " + fmt(bound);
        }
      }
      return v;
    }
  }
  throw DomainError("unknown 3D configuration");
}

CouplingValue degeneracy_coupling_2d(double r_tilde, double omega1, double omega2, std::optional<Flavor> requested) {
  if (!(r_tilde > 0.0) || !std::isfinite(r_tilde)) throw DomainError("frequency ratio must be positive");
  require_positive(omega1, "omega1");
  require_positive(omega2, "omega2");
  const double r = omega1 / omega2;
  const double scale = omega1 * omega2 / (r_tilde * r_tilde + 1.0);
  return from_square(ratio_radicand(r_tilde, r) * scale * scale, requested, "degeneracy coupling");
}

CouplingValue degeneracy_coupling_3d(Case3d which, double u_tilde, const Params3d& p, std::optional<Flavor> requested) {
  if (!(u_tilde > 0.0) || !std::isfinite(u_tilde)) throw DomainError("frequency ratio must be positive");
  for (double w : p.omega) require_positive(w, "frequency");
  switch (which) {
    case Case3d::q1: {
      require_equal_inplane(p);
      const double u = p.omega[0] / p.omega[2];
      const double scale = p.omega[0] * p.omega[2] / (u_tilde * u_tilde + 1.0);
      return from_square(ratio_radicand(u_tilde, u) * scale * scale, requested, "degeneracy coupling");
    }
    case Case3d::q2: {
      require_equal_inplane(p);
      if (p.lambda1.is_imaginary()) throw DomainError("the xy coupling lambda1 must be real in this configuration");
      const double w2 = p.omega[0] * p.omega[0], w32 = p.omega[2] * p.omega[2];
      const double l1 = p.lambda1.magnitude;
      const double t2 = u_tilde * u_tilde;
      const double disc = std::abs(1.0 - t2) / (1.0 + t2) * (w2 + w32 + l1);
      const double gap = w2 - w32 + l1;
      return from_square((disc * disc - gap * gap) / 8.0, requested, "degeneracy coupling");
    }
    case Case3d::lq:
      break;
  }
  throw DomainError("degeneracy coupling is defined for the q1 and q2 configurations only");
}

EtaMetric eta_metric_2d(cplx k) {
  const cplx s = principal_sqrt(1.0 - k * k);
  return {{{{-k, -s}, {s, -k}}}};
}

}  // namespace rexosc::transform

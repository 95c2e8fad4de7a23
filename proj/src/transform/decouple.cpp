#include "rexosc/transform/decouple.hpp"

#include <cmath>
#include <numbers>

#include "rexosc/errors.hpp"

namespace rexosc::transform {
namespace {

void require_positive(double w, const char* name) {
  if (!(w > 0.0) || !std::isfinite(w))
    throw DomainError(std::string(name) + " must be a positive finite frequency");
}

void require_finite(CouplingValue c, const char* name) {
  if (!std::isfinite(c.magnitude)) throw DomainError(std::string(name) + " must be finite");
}

struct Rotation {
  RotationParameters params;
  cplx low_sq;   // (S - D) / 2
  cplx high_sq;  // (S + D) / 2
};

// sqrt of a real number, imaginary for negative input.
cplx signed_sqrt(double v) { return v >= 0.0 ? cplx(std::sqrt(v), 0.0) : cplx(0.0, std::sqrt(-v)); }

// Rotation decoupling 1/4 (p u^2 + q v^2) + (coupling / 2) u v given p = w_u^2 and q = w_v^2.
// `coupling_sq` is coupling^2 (real for every case handled here).
cplx discriminant(double p, double q, double coupling_sq) {
  return signed_sqrt(4.0 * coupling_sq + (p - q) * (p - q));
}

Rotation rotation(double p, double q, cplx coupling, double coupling_sq) {
  const cplx disc = discriminant(p, q, coupling_sq);
  // Compare the squared discriminant with the rounding level of its two terms.
  const double terms = 4.0 * std::abs(coupling_sq) + (p - q) * (p - q);
  if (std::norm(disc) <= 1e-13 * std::max(terms, 1e-300))
    throw DegenerateTransformError(
        "rotation undefined: 4*coupling^2 + (frequency gap)^2 vanishes (exceptional point)");
  const cplx k = (p - q) / disc;
  const cplx a = principal_sqrt((1.0 - k) / 2.0);
  cplx b = principal_sqrt((1.0 + k) / 2.0);
  // Principal roots fix |a b| but not its sign; the cross term cancels only when a b = coupling / D.
  const cplx target = coupling / disc;
  if (std::abs(a * b - target) > std::abs(a * b + target)) b = -b;
  return {{k, a, b, disc}, (p + q - disc) / 2.0, (p + q + disc) / 2.0};
}

}  // namespace

bool DecoupledSystem::has_real_frequencies(double tol) const {
  for (const cplx& w : tilde_frequencies)
    if (!(w.real() > 0.0) || std::abs(w.imag()) > tol * std::abs(w)) return false;
  return true;
}

cplx DecoupledSystem::tilde_potential(const Point& tilde) const {
  cplx v = potential_constant;
  for (std::size_t i = 0; i < tilde_frequencies.size(); ++i) {
    const cplx w = tilde_frequencies[i];
    v += 0.25 * w * w * tilde[i] * tilde[i];
  }
  return v;
}

DecoupledSystem shift_map_1d(double omega, CouplingValue lambda0) {
  require_positive(omega, "omega");
  require_finite(lambda0, "linear coupling");
  const cplx l0 = lambda0.value();
  Matrix3 lin{};
  lin[0][0] = 1.0;
  Point shift{};
  shift[0] = 2.0 * l0 / (omega * omega);
  DecoupledSystem sys{{cplx(omega, 0.0)}, -lambda0.square() / (omega * omega), CoordinateMap(1, lin, shift, lin),
                      std::nullopt, std::nullopt};
  return sys;
}

std::array<cplx, 2> tilde_frequencies_2d(double omega1, double omega2, CouplingValue lambda) {
  require_positive(omega1, "omega1");
  require_positive(omega2, "omega2");
  const double p = omega1 * omega1, q = omega2 * omega2;
  const cplx disc = discriminant(p, q, lambda.square());
  return {principal_sqrt((p + q - disc) / 2.0), principal_sqrt((p + q + disc) / 2.0)};
}

DecoupledSystem rotate_map_2d(double omega1, double omega2, CouplingValue lambda) {
  require_positive(omega1, "omega1");
  require_positive(omega2, "omega2");
  require_finite(lambda, "quadratic coupling");
  const Rotation r = rotation(omega1 * omega1, omega2 * omega2, lambda.value(), lambda.square());
  const cplx a = r.params.a, b = r.params.b;
  Matrix3 lin{}, inv{};
  lin[0] = {a, -b, 0.0};
  lin[1] = {b, a, 0.0};
  // x = a x~ + b y~,  y = -b x~ + a y~
  inv[0] = {a, b, 0.0};
  inv[1] = {-b, a, 0.0};
  return {{principal_sqrt(r.low_sq), principal_sqrt(r.high_sq)}, 0.0, CoordinateMap(2, lin, Point{}, inv),
          r.params, std::nullopt};
}

DecoupledSystem decouple_3d_lq(double omega1, double omega2, double omega3, CouplingValue lambda0,
                               CouplingValue lambda) {
  const DecoupledSystem xy = rotate_map_2d(omega1, omega2, lambda);
  const DecoupledSystem z = shift_map_1d(omega3, lambda0);
  return {{xy.tilde_frequencies[0], xy.tilde_frequencies[1], z.tilde_frequencies[0]},
          z.potential_constant, direct_sum(xy.map, z.map), xy.rotation, std::nullopt};
}

std::array<cplx, 3> tilde_frequencies_q1(double omega, double omega3, CouplingValue lambda2,
                                         CouplingValue lambda3) {
  require_positive(omega, "omega");
  require_positive(omega3, "omega3");
  const double p = omega * omega, q = omega3 * omega3;
  const cplx disc = discriminant(p, q, lambda2.square() + lambda3.square());
  return {cplx(omega, 0.0), principal_sqrt((p + q - disc) / 2.0), principal_sqrt((p + q + disc) / 2.0)};
}

DecoupledSystem decouple_3d_q1(double omega, double omega3, CouplingValue lambda2, CouplingValue lambda3) {
  require_positive(omega, "omega");
  require_positive(omega3, "omega3");
  require_finite(lambda2, "yz coupling");
  require_finite(lambda3, "zx coupling");
  const double strength_sq = lambda2.square() + lambda3.square();
  const cplx strength = signed_sqrt(strength_sq);
  const double scale = std::max(std::abs(lambda2.magnitude), std::abs(lambda3.magnitude));
  if (scale == 0.0 || std::abs(strength) <= 1e-14 * scale)
    throw DegenerateTransformError("coupling direction undefined: lambda2^2 + lambda3^2 vanishes");
  const cplx c = lambda2.value() / strength;
  const cplx d = lambda3.value() / strength;
  // u = d x + c y carries the combined coupling: 2 z (lambda3 x + lambda2 y) = 2 strength z u.
  const Rotation r = rotation(omega * omega, omega3 * omega3, strength, strength_sq);
  const cplx a = r.params.a, b = r.params.b;
  Matrix3 lin{}, inv{};
  lin[0] = {-c, d, 0.0};
  lin[1] = {a * d, a * c, -b};
  lin[2] = {b * d, b * c, a};
  // x = a d y~ + b d z~ - c x~,  y = d x~ + a c y~ + b c z~,  z = a z~ - b y~
  inv[0] = {-c, a * d, b * d};
  inv[1] = {d, a * c, b * c};
  inv[2] = {0.0, -b, a};
  return {{cplx(omega, 0.0), principal_sqrt(r.low_sq), principal_sqrt(r.high_sq)}, 0.0,
          CoordinateMap(3, lin, Point{}, inv), r.params, std::array<cplx, 2>{c, d}};
}

std::array<cplx, 3> tilde_frequencies_q2(double omega, double omega3, CouplingValue lambda1,
                                         CouplingValue lambda) {
  require_positive(omega, "omega");
  require_positive(omega3, "omega3");
  if (lambda1.is_imaginary()) throw DomainError("the xy coupling lambda1 must be real in this configuration");
  const double l1 = lambda1.magnitude;
  const double p = omega * omega + l1, q = omega3 * omega3;
  const cplx disc = discriminant(p, q, 2.0 * lambda.square());
  return {principal_sqrt(cplx(omega * omega - l1, 0.0)), principal_sqrt((p + q - disc) / 2.0),
          principal_sqrt((p + q + disc) / 2.0)};
}

DecoupledSystem decouple_3d_q2(double omega, double omega3, CouplingValue lambda1, CouplingValue lambda) {
  require_positive(omega, "omega");
  require_positive(omega3, "omega3");
  require_finite(lambda1, "xy coupling");
  require_finite(lambda, "yz/zx coupling");
  if (lambda1.is_imaginary()) throw DomainError("the xy coupling lambda1 must be real in this configuration");
  const double l1 = lambda1.magnitude;
  // s = (x + y)/sqrt2 sees w^2 + lambda1 and couples to z with strength sqrt2 * lambda.
  const Rotation r =
      rotation(omega * omega + l1, omega3 * omega3, std::numbers::sqrt2 * lambda.value(), 2.0 * lambda.square());
  const cplx a = r.params.a, b = r.params.b;
  const double h = 1.0 / std::numbers::sqrt2;
  Matrix3 lin{}, inv{};
  lin[0] = {-h, h, 0.0};
  lin[1] = {a * h, a * h, -b};
  lin[2] = {b * h, b * h, a};
  // x = a/sqrt2 y~ + b/sqrt2 z~ - x~/sqrt2,  y = a/sqrt2 y~ + b/sqrt2 z~ + x~/sqrt2,  z = a z~ - b y~
  inv[0] = {-h, a * h, b * h};
  inv[1] = {h, a * h, b * h};
  inv[2] = {0.0, -b, a};
  return {{principal_sqrt(cplx(omega * omega - l1, 0.0)), principal_sqrt(r.low_sq), principal_sqrt(r.high_sq)},
          0.0, CoordinateMap(3, lin, Point{}, inv), r.params, std::nullopt};
}

}  // namespace rexosc::transform

#include "rexosc/model/extension.hpp"

#include <cmath>
#include <string>

#include "rexosc/errors.hpp"
#include "rexosc/poly/hermite.hpp"

namespace rexosc::model {
namespace {

// Horner evaluation that also returns sum |c_k| |z|^k, the scale against which a zero is judged.
cplx eval_with_scale(const poly::Polynomial& p, cplx z, double& scale) {
  const auto c = p.coefficients();
  cplx acc = c.back();
  double s = std::abs(c.back());
  const double az = std::abs(z);
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    acc = acc * z + c[k];
    s = s * az + std::abs(c[k]);
  }
  scale = s;
  return acc;
}

cplx checked_denominator(const poly::Polynomial& seed, cplx z) {
  double scale = 0.0;
  const cplx h = eval_with_scale(seed, z, scale);
  if (std::abs(h) <= 1e-14 * scale)
    throw SingularityError("pseudo-Hermite denominator vanishes at scaled coordinate (" + std::to_string(z.real()) +
                           ", " + std::to_string(z.imag()) + ")");
  return h;
}

cplx rational_from(const poly::Polynomial& seed, const poly::Polynomial& d1, const poly::Polynomial& d2,
                   cplx omega, cplx z) {
  const cplx h = checked_denominator(seed, z);
  const cplx r1 = d1(z) / h;
  const cplx r2 = d2(z) / h;
  // Chain rule: d/dx = sqrt(w/2) d/dz, so -2 [ (w/2)(r2 - r1^2) + w/2 ].
  return -omega * (r2 - r1 * r1 + 1.0);
}

void check_codimension(int m) {
  if (m < 0) throw DomainError("co-dimension must be non-negative");
  if (m > poly::kMaxHermiteIndex) throw OverflowError("co-dimension exceeds " + std::to_string(poly::kMaxHermiteIndex));
}

}  // namespace

Eigenstate Eigenstate::excited(std::vector<int> n) {
  for (int& v : n) {
    if (v < 0) throw DomainError("quantum numbers must be non-negative");
    v += 1;
  }
  return {std::move(n)};
}

cplx rational_term_1d(cplx omega, int m, cplx x_tilde) {
  check_codimension(m);
  const poly::Polynomial seed = poly::pseudo_hermite(m);
  const poly::Polynomial d1 = poly::derivative(seed);
  return rational_from(seed, d1, poly::derivative(d1), omega, std::sqrt(omega / 2.0) * x_tilde);
}

ExtendedSystem::ExtendedSystem(OscillatorSpec spec, REConfig config)
    : spec_(std::move(spec)), config_(std::move(config)), sys_(decouple(spec_)) {
  if (config_.codimensions.size() != spec_.dimension)
    throw ShapeError("expected " + std::to_string(spec_.dimension) + " co-dimensions, got " +
                     std::to_string(config_.codimensions.size()));
  for (std::size_t i = 0; i < spec_.dimension; ++i) {
    const int m = config_.codimensions[i];
    check_codimension(m);
    Axis a;
    a.omega = sys_.tilde_frequencies[i];
    a.scale = std::sqrt(a.omega / 2.0);
    a.m = m;
    a.seed = poly::pseudo_hermite(m);
    a.seed_d1 = poly::derivative(a.seed);
    a.seed_d2 = poly::derivative(a.seed_d1);
    a.ground_phase = std::pow(cplx(0.0, -1.0), m);
    a.numerators.push_back(poly::Polynomial::constant(1.0));
    axes_.push_back(std::move(a));
  }
}

const poly::Polynomial& ExtendedSystem::numerator(const Axis& a, int level) const {
  if (level < 0) throw DomainError("level must be non-negative");
  // Levels are built lazily; ExtendedSystem is not shared across threads while growing.
  while (static_cast<int>(a.numerators.size()) <= level)
    a.numerators.push_back(poly::exceptional_hermite(a.m, static_cast<int>(a.numerators.size())));
  return a.numerators[level];
}

void ExtendedSystem::prepare(const Eigenstate& s) const {
  if (s.levels.size() != spec_.dimension)
    throw ShapeError("state has " + std::to_string(s.levels.size()) + " axes, system has " +
                     std::to_string(spec_.dimension));
  for (std::size_t i = 0; i < s.levels.size(); ++i) {
    if (s.levels[i] < 0) throw DomainError("levels must be non-negative");
    numerator(axes_[i], s.levels[i]);
  }
}

cplx ExtendedSystem::axis_rational(std::size_t axis, cplx x_tilde) const {
  const Axis& a = axes_.at(axis);
  return rational_from(a.seed, a.seed_d1, a.seed_d2, a.omega, a.scale * x_tilde);
}

cplx ExtendedSystem::axis_factor(std::size_t axis, int level, cplx x_tilde) const {
  const Axis& a = axes_.at(axis);
  const cplx z = a.scale * x_tilde;
  const cplx gauss = std::exp(-a.omega * x_tilde * x_tilde / 4.0);
  const cplx base = gauss / checked_denominator(a.seed, z);
  if (level == 0) return a.ground_phase * base;
  return base * numerator(a, level)(z);
}

cplx ExtendedSystem::potential_tilde(const transform::Point& tilde) const {
  cplx v = sys_.tilde_potential(tilde);
  for (std::size_t i = 0; i < axes_.size(); ++i) v += axis_rational(i, tilde[i]);
  return v;
}

cplx ExtendedSystem::potential(std::span<const cplx> old_point) const {
  const transform::Point t = sys_.map.forward(old_point);
  cplx v = base_potential(spec_, old_point);
  for (std::size_t i = 0; i < axes_.size(); ++i) v += axis_rational(i, t[i]);
  return v;
}

cplx ExtendedSystem::eigenfunction_tilde(const Eigenstate& state, const transform::Point& tilde) const {
  prepare(state);
  cplx psi = 1.0;
  for (std::size_t i = 0; i < axes_.size(); ++i) psi *= axis_factor(i, state.levels[i], tilde[i]);
  return psi;
}

cplx ExtendedSystem::eigenfunction(const Eigenstate& state, std::span<const cplx> old_point) const {
  return eigenfunction_tilde(state, sys_.map.forward(old_point));
}

cplx re_potential(const OscillatorSpec& spec, const REConfig& config, std::span<const cplx> point) {
  return ExtendedSystem(spec, config).potential(point);
}

cplx eigenfunction(const OscillatorSpec& spec, const REConfig& config, const Eigenstate& state,
                   std::span<const cplx> point) {
  return ExtendedSystem(spec, config).eigenfunction(state, point);
}

cplx relative_energy(const REConfig& config, const Eigenstate& state, const transform::DecoupledSystem& sys) {
  if (config.codimensions.size() != sys.dimension() || state.levels.size() != sys.dimension())
    throw ShapeError("configuration, state and system dimensions differ");
  cplx e{};
  for (std::size_t i = 0; i < sys.dimension(); ++i)
    if (state.levels[i] > 0)
      e += static_cast<double>(state.levels[i] + config.codimensions[i]) * sys.tilde_frequencies[i];
  return e;
}

cplx unextended_energy(const OscillatorSpec& spec, const Eigenstate& state) {
  const auto sys = decouple(spec);
  if (state.levels.size() != sys.dimension()) throw ShapeError("state dimension differs from the spec");
  cplx e = sys.potential_constant;
  for (std::size_t i = 0; i < sys.dimension(); ++i) {
    if (state.levels[i] < 0) throw DomainError("quantum numbers must be non-negative");
    e += (static_cast<double>(state.levels[i]) + 0.5) * sys.tilde_frequencies[i];
  }
  return e;
}

cplx ground_offset(const REConfig& config, const transform::DecoupledSystem& sys) {
  if (config.codimensions.size() != sys.dimension()) throw ShapeError("configuration dimension differs");
  cplx e = sys.potential_constant;
  for (std::size_t i = 0; i < sys.dimension(); ++i)
    e -= (static_cast<double>(config.codimensions[i]) + 0.5) * sys.tilde_frequencies[i];
  return e;
}

std::vector<CodimensionRule> admissible_codimensions(const OscillatorSpec& spec) {
  spec.validate();
  std::vector<CodimensionRule> rules(spec.dimension, CodimensionRule::even_only);
  if (spec.perturbation == Perturbation::linear && spec.lambda0.is_imaginary())
    rules[0] = CodimensionRule::even_and_odd;
  if (spec.perturbation == Perturbation::lq3d && spec.lambda0.is_imaginary())
    rules[2] = CodimensionRule::even_and_odd;
  return rules;
}

bool is_admissible(const OscillatorSpec& spec, const REConfig& config) {
  const auto rules = admissible_codimensions(spec);
  if (config.codimensions.size() != rules.size()) return false;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const int m = config.codimensions[i];
    if (m < 0) return false;
    if (rules[i] == CodimensionRule::even_only && m % 2 != 0) return false;
  }
  return true;
}

std::optional<int> predicted_pt_eigenvalue(const ExtendedSystem& ext, const Eigenstate& state,
                                           const transform::ParityOperator& parity) {
  const auto& sys = ext.system();
  for (const cplx& w : sys.tilde_frequencies)
    if (w.imag() != 0.0 && std::abs(w.imag()) > 1e-12 * std::abs(w)) return std::nullopt;
  const auto signs = transform::tilde_axis_signs(sys.map, parity);
  if (!signs) return std::nullopt;
  int value = 1;
  for (std::size_t i = 0; i < sys.dimension(); ++i) {
    const int level = state.levels.at(i);
    const int m = ext.config().codimensions[i];
    // Ground factors carry (-i)^m and have parity (-1)^m in x~; excited factors are real-coefficient
    // functions of parity (-1)^level.
    if ((*signs)[i] == -1) {
      if (level > 0 && level % 2 == 1) value = -value;
    } else if (level == 0 && m % 2 == 1) {
      value = -value;
    }
  }
  return value;
}

}  // namespace rexosc::model

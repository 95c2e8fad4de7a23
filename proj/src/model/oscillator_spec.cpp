#include "rexosc/model/oscillator_spec.hpp"

#include <cmath>
#include <string>

#include "rexosc/errors.hpp"

namespace rexosc::model {

std::string_view to_string(Perturbation p) {
  switch (p) {
    case Perturbation::none: return "none";
    case Perturbation::linear: return "linear";
    case Perturbation::quadratic2d: return "quadratic2d";
    case Perturbation::lq3d: return "lq3d";
    case Perturbation::q1_3d: return "q1_3d";
    case Perturbation::q2_3d: return "q2_3d";
  }
  return "none";
}

Perturbation parse_perturbation(std::string_view text) {
  for (Perturbation p : {Perturbation::none, Perturbation::linear, Perturbation::quadratic2d, Perturbation::lq3d,
                         Perturbation::q1_3d, Perturbation::q2_3d})
    if (text == to_string(p)) return p;
  throw DomainError("unknown perturbation '" + std::string(text) + "'");
}

void OscillatorSpec::validate() const {
  if (dimension < 1 || dimension > 3) throw DomainError("dimension must be 1, 2 or 3");
  if (frequencies.size() != dimension)
    throw ShapeError("expected " + std::to_string(dimension) + " frequencies, got " +
                     std::to_string(frequencies.size()));
  for (double w : frequencies)
    if (!(w > 0.0) || !std::isfinite(w)) throw DomainError("frequencies must be positive and finite");
  for (const CouplingValue* c : {&lambda0, &lambda, &lambda1, &lambda2, &lambda3})
    if (!std::isfinite(c->magnitude)) throw DomainError("couplings must be finite");
  auto need_dim = [&](std::size_t d) {
    if (dimension != d)
      throw DomainError("perturbation " + std::string(to_string(perturbation)) + " needs dimension " +
                        std::to_string(d));
  };
  switch (perturbation) {
    case Perturbation::none: break;
    case Perturbation::linear: need_dim(1); break;
    case Perturbation::quadratic2d: need_dim(2); break;
    case Perturbation::lq3d: need_dim(3); break;
    case Perturbation::q1_3d:
    case Perturbation::q2_3d:
      need_dim(3);
      if (frequencies[0] != frequencies[1]) throw DomainError("this perturbation needs equal x and y frequencies");
      if (perturbation == Perturbation::q2_3d && lambda1.is_imaginary())
        throw DomainError("the xy coupling lambda1 must be real in this configuration");
      break;
  }
}

bool OscillatorSpec::is_hermitian() const {
  switch (perturbation) {
    case Perturbation::none: return true;
    case Perturbation::linear: return !lambda0.is_imaginary();
    case Perturbation::quadratic2d: return !lambda.is_imaginary();
    case Perturbation::lq3d: return !lambda0.is_imaginary() && !lambda.is_imaginary();
    case Perturbation::q1_3d: return !lambda2.is_imaginary() && !lambda3.is_imaginary();
    case Perturbation::q2_3d: return !lambda.is_imaginary() && !lambda1.is_imaginary();
  }
  return true;
}

OscillatorSpec OscillatorSpec::oscillator(std::vector<double> frequencies) {
  OscillatorSpec s;
  s.dimension = frequencies.size();
  s.frequencies = std::move(frequencies);
  s.validate();
  return s;
}

OscillatorSpec OscillatorSpec::linear_1d(double omega, CouplingValue lambda0) {
  OscillatorSpec s;
  s.frequencies = {omega};
  s.perturbation = Perturbation::linear;
  s.lambda0 = lambda0;
  s.validate();
  return s;
}

OscillatorSpec OscillatorSpec::quadratic_2d(double omega1, double omega2, CouplingValue lambda) {
  OscillatorSpec s;
  s.dimension = 2;
  s.frequencies = {omega1, omega2};
  s.perturbation = Perturbation::quadratic2d;
  s.lambda = lambda;
  s.validate();
  return s;
}

OscillatorSpec OscillatorSpec::linear_quadratic_3d(double omega1, double omega2, double omega3,
                                                   CouplingValue lambda0, CouplingValue lambda) {
  OscillatorSpec s;
  s.dimension = 3;
  s.frequencies = {omega1, omega2, omega3};
  s.perturbation = Perturbation::lq3d;
  s.lambda0 = lambda0;
  s.lambda = lambda;
  s.validate();
  return s;
}

OscillatorSpec OscillatorSpec::q1(double omega, double omega3, CouplingValue lambda2, CouplingValue lambda3) {
  OscillatorSpec s;
  s.dimension = 3;
  s.frequencies = {omega, omega, omega3};
  s.perturbation = Perturbation::q1_3d;
  s.lambda2 = lambda2;
  s.lambda3 = lambda3;
  s.validate();
  return s;
}

OscillatorSpec OscillatorSpec::q2(double omega, double omega3, CouplingValue lambda1, CouplingValue lambda) {
  OscillatorSpec s;
  s.dimension = 3;
  s.frequencies = {omega, omega, omega3};
  s.perturbation = Perturbation::q2_3d;
  s.lambda1 = lambda1;
  s.lambda = lambda;
  s.validate();
  return s;
}

cplx base_potential(const OscillatorSpec& spec, std::span<const cplx> p) {
  if (p.size() != spec.dimension)
    throw ShapeError("point has " + std::to_string(p.size()) + " coordinates, spec has dimension " +
                     std::to_string(spec.dimension));
  const auto& w = spec.frequencies;
  cplx v{};
  for (std::size_t i = 0; i < spec.dimension; ++i) v += 0.25 * w[i] * w[i] * p[i] * p[i];
  switch (spec.perturbation) {
    case Perturbation::none: break;
    case Perturbation::linear: v += spec.lambda0.value() * p[0]; break;
    case Perturbation::quadratic2d: v += 0.5 * spec.lambda.value() * p[0] * p[1]; break;
    case Perturbation::lq3d: v += spec.lambda0.value() * p[2] + 0.5 * spec.lambda.value() * p[0] * p[1]; break;
    case Perturbation::q1_3d:
      v += 0.5 * (spec.lambda2.value() * p[1] * p[2] + spec.lambda3.value() * p[2] * p[0]);
      break;
    case Perturbation::q2_3d:
      v += 0.5 * (spec.lambda1.value() * p[0] * p[1] + spec.lambda.value() * (p[1] * p[2] + p[2] * p[0]));
      break;
  }
  return v;
}

transform::DecoupledSystem decouple(const OscillatorSpec& spec) {
  spec.validate();
  const auto& w = spec.frequencies;
  switch (spec.perturbation) {
    case Perturbation::none: {
      transform::DecoupledSystem sys{{}, 0.0, transform::CoordinateMap(spec.dimension), std::nullopt, std::nullopt};
      for (double f : w) sys.tilde_frequencies.emplace_back(f, 0.0);
      return sys;
    }
    case Perturbation::linear: return transform::shift_map_1d(w[0], spec.lambda0);
    case Perturbation::quadratic2d: return transform::rotate_map_2d(w[0], w[1], spec.lambda);
    case Perturbation::lq3d: return transform::decouple_3d_lq(w[0], w[1], w[2], spec.lambda0, spec.lambda);
    case Perturbation::q1_3d: return transform::decouple_3d_q1(w[0], w[2], spec.lambda2, spec.lambda3);
    case Perturbation::q2_3d: return transform::decouple_3d_q2(w[0], w[2], spec.lambda1, spec.lambda);
  }
  throw DomainError("unknown perturbation");
}

transform::RealityVerdict spectral_reality(const OscillatorSpec& spec) {
  spec.validate();
  const auto& w = spec.frequencies;
  switch (spec.perturbation) {
    case Perturbation::none:
    case Perturbation::linear:
      return {true, "uncoupled axes", ""};
    case Perturbation::quadratic2d:
    case Perturbation::lq3d:
      return transform::spectral_reality_2d_verdict(w[0], w[1], spec.lambda);
    case Perturbation::q1_3d:
    case Perturbation::q2_3d: {
      transform::Params3d p;
      p.omega = {w[0], w[1], w[2]};
      p.lambda = spec.lambda;
      p.lambda1 = spec.lambda1;
      p.lambda2 = spec.lambda2;
      p.lambda3 = spec.lambda3;
      return transform::spectral_reality_3d(
          spec.perturbation == Perturbation::q1_3d ? transform::Case3d::q1 : transform::Case3d::q2, p);
    }
  }
  throw DomainError("unknown perturbation");
}

}  // namespace rexosc::model

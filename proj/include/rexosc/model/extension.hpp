#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "rexosc/model/oscillator_spec.hpp"
#include "rexosc/poly/polynomial.hpp"
#include "rexosc/transform/parity.hpp"

namespace rexosc::model {

/// Co-dimension m_i per tilde axis.
struct REConfig {
  std::vector<int> codimensions;

  static REConfig uniform(std::size_t dimension, int m) { return {std::vector<int>(dimension, m)}; }
  friend bool operator==(const REConfig&, const REConfig&) = default;
};

/// Per tilde axis: level 0 is the extended ground state, level n+1 the n-th excited state
/// (numerator Ĥ_{m,n+1}).
struct Eigenstate {
  std::vector<int> levels;

  static Eigenstate ground(std::size_t dimension) { return {std::vector<int>(dimension, 0)}; }
  /// All axes excited with quantum numbers n_i (levels n_i + 1).
  static Eigenstate excited(std::vector<int> n);

  bool is_ground(std::size_t axis) const { return levels.at(axis) == 0; }
  /// Quantum number n on an excited axis.
  int quantum_number(std::size_t axis) const { return levels.at(axis) - 1; }
  friend bool operator==(const Eigenstate&, const Eigenstate&) = default;
};

enum class CodimensionRule { even_only, even_and_odd };

/// -2 [D^2 H/H - (D H/H)^2 + w/2], H = pseudo_hermite(m)(sqrt(w/2) x), D = d/dx.
/// Throws SingularityError at a zero of the denominator.
cplx rational_term_1d(cplx omega, int m, cplx x_tilde);

/// Decoupled system plus rational extension, with the polynomials cached for repeated
/// evaluation on grids.
class ExtendedSystem {
 public:
  ExtendedSystem(OscillatorSpec spec, REConfig config);

  const OscillatorSpec& spec() const noexcept { return spec_; }
  const REConfig& config() const noexcept { return config_; }
  const transform::DecoupledSystem& system() const noexcept { return sys_; }
  std::size_t dimension() const noexcept { return spec_.dimension; }

  cplx potential(std::span<const cplx> old_point) const;
  cplx potential_tilde(const transform::Point& tilde) const;
  cplx eigenfunction(const Eigenstate& state, std::span<const cplx> old_point) const;
  cplx eigenfunction_tilde(const Eigenstate& state, const transform::Point& tilde) const;

  /// Validates `state` and builds its numerators. Call before evaluating from several threads.
  void prepare(const Eigenstate& state) const;

  /// Rational term on one tilde axis.
  cplx axis_rational(std::size_t axis, cplx x_tilde) const;
  /// Unnormalized 1D factor on one tilde axis.
  cplx axis_factor(std::size_t axis, int level, cplx x_tilde) const;

 private:
  struct Axis {
    cplx omega;
    cplx scale;  // sqrt(omega / 2)
    int m;
    poly::Polynomial seed, seed_d1, seed_d2;
    cplx ground_phase;
    mutable std::vector<poly::Polynomial> numerators;  // index = level
  };
  const poly::Polynomial& numerator(const Axis& a, int level) const;

  OscillatorSpec spec_;
  REConfig config_;
  transform::DecoupledSystem sys_;
  std::vector<Axis> axes_;
};

cplx re_potential(const OscillatorSpec& spec, const REConfig& config, std::span<const cplx> point);
cplx eigenfunction(const OscillatorSpec& spec, const REConfig& config, const Eigenstate& state,
                   std::span<const cplx> point);

/// Energy above the extended ground level: each excited axis adds (n_i + m_i + 1) w~_i.
cplx relative_energy(const REConfig& config, const Eigenstate& state, const transform::DecoupledSystem& sys);

/// Unextended spectrum: levels are read as plain quantum numbers n_i,
/// sum (n_i + 1/2) w~_i + potential constant.
cplx unextended_energy(const OscillatorSpec& spec, const Eigenstate& state);

/// Closed-form absolute energy of the extended ground level: sum -(m_i + 1/2) w~_i + potential
/// constant. Absolute energy = relative_energy + this offset.
cplx ground_offset(const REConfig& config, const transform::DecoupledSystem& sys);

std::vector<CodimensionRule> admissible_codimensions(const OscillatorSpec& spec);
bool is_admissible(const OscillatorSpec& spec, const REConfig& config);

/// Expected parity-time eigenvalue (+1 or -1) of `state` when parity-time acts diagonally on
/// the tilde axes and the tilde frequencies are real; empty otherwise.
std::optional<int> predicted_pt_eigenvalue(const ExtendedSystem& ext, const Eigenstate& state,
                                           const transform::ParityOperator& parity);

}  // namespace rexosc::model

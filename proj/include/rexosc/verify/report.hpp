#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rexosc/verify/checks.hpp"

namespace rexosc::verify {

struct StateReport {
  model::Eigenstate state;
  double max_residual = 0.0;
  cplx fitted_offset;
  cplx relative_energy;
  std::optional<cplx> rayleigh;         // absolute energy; empty when indeterminate
  std::optional<cplx> pt_eigenvalue;    // empty when indeterminate
  std::optional<int> pt_predicted;
  double pt_residual = 0.0;
};

struct VerificationReport {
  double max_residual = 0.0;
  cplx fitted_offset;           // from the first state
  double offset_spread = 0.0;   // max |offset_i - offset_0|
  cplx predicted_offset;        // closed-form ground offset
  std::vector<std::vector<double>> poles;
  std::optional<cplx> pt_eigenvalue;  // first state
  std::string parity;
  ComplexMatrix gram;                 // Hermitian specs only
  std::vector<StateReport> states;
  std::string notes;
};

struct VerifyOptions {
  /// Spacing of the sampling grid; defaults to 1e-3 in 1D, 0.04 in 2D, 0.12 in 3D.
  std::optional<double> spacing;
  /// Overrides the default box (12/sqrt(min w~) around the tilde origin).
  std::optional<Box> box;
  /// Parity used for the parity-time fit; defaults to the first sampled symmetry of the potential,
  /// or time reversal alone for Hermitian specs.
  std::optional<std::string> parity;
  ScanOptions scan;
};

/// Runs every check on each state. Poles inside the box are reported; with exclusion off the
/// grid checks are then skipped and the note says why.
VerificationReport verify_states(const model::ExtendedSystem& ext, const std::vector<model::Eigenstate>& states,
                                 const VerifyOptions& options = {});

}  // namespace rexosc::verify

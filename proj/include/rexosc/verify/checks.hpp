#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rexosc/model/extension.hpp"
#include "rexosc/numerics/stencil.hpp"
#include "rexosc/transform/parity.hpp"
#include "rexosc/verify/poles.hpp"

namespace rexosc::verify {

using model::cplx;

struct ScanOptions {
  /// Drop points near real poles instead of refusing the grid.
  bool exclude_poles = false;
  /// Exclusion radius around pole surfaces: the larger of this many grid spacings and
  /// guard_length. The stencil error near a pole depends on the distance, not the spacing, so the
  /// fixed length dominates on fine grids.
  double guard_spacings = 5.0;
  double guard_length = 1.5;
};

/// Uniform grid over `box` with spacing at most `max_spacing` on every axis.
numerics::TensorGrid grid_over(const Box& box, double max_spacing);
Box box_of(const numerics::TensorGrid& grid);

struct ResidualResult {
  double max_residual = 0.0;
  cplx fitted_offset;   // absolute energy minus relative energy
  cplx relative_energy;
  std::size_t points = 0;
};

/// r = -lap psi + V psi on the grid interior; the offset c minimizes max |r - (E_rel + c) psi|
/// (three reweighted least-squares passes). max_residual is that value over
/// max|psi| (|E_rel| + max |w~|). Throws SingularityError if a pole meets the grid and
/// `exclude_poles` is off.
ResidualResult residual_scan(const model::ExtendedSystem& ext, const model::Eigenstate& state,
                             const numerics::TensorGrid& grid, const ScanOptions& options = {});

enum class Pairing { conjugate, bilinear };

/// <psi, H psi> / <psi, psi> with Simpson weights on the interior. Conjugate pairing for
/// Hermitian specs, bilinear otherwise unless forced. Throws IndeterminateError when the
/// denominator vanishes.
cplx rayleigh_energy(const model::ExtendedSystem& ext, const model::Eigenstate& state,
                     const numerics::TensorGrid& grid, const ScanOptions& options = {},
                     std::optional<Pairing> pairing = std::nullopt);

struct PtMeasurement {
  cplx eigenvalue;
  double residual = 0.0;  // relative l2 misfit of conj(psi(P p)) = s psi(p)
};

/// Least-squares s with conj(psi(P p)) = s psi(p) over grid points. Throws IndeterminateError when
/// the relative misfit exceeds 1e-4.
PtMeasurement pt_parity_eigenvalue(const model::ExtendedSystem& ext, const model::Eigenstate& state,
                                   const transform::ParityOperator& parity, const numerics::TensorGrid& grid,
                                   const ScanOptions& options = {});

/// Identity "parity": time reversal alone.
transform::ParityOperator identity_parity(std::size_t dimension);

using ComplexMatrix = std::vector<std::vector<cplx>>;

/// Gram matrix of the normalized states (conjugate pairing). Hermitian specs only.
ComplexMatrix orthogonality_gram(const model::ExtendedSystem& ext, const std::vector<model::Eigenstate>& states,
                                 const numerics::TensorGrid& grid, const ScanOptions& options = {});
double max_off_diagonal(const ComplexMatrix& gram);

}  // namespace rexosc::verify

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rexosc/transform/coordinate_map.hpp"

namespace rexosc::model {
struct OscillatorSpec;
}

namespace rexosc::transform {

/// Signed permutation matrix acting on old coordinates.
struct ParityOperator {
  std::string name;
  std::size_t dimension = 1;
  std::array<std::array<int, 3>, 3> matrix{};

  int determinant() const;
  Point apply(std::span<const cplx> point) const;
};

/// 2D: P1 = diag(-1,1), P2 = diag(1,-1), P3 = swap, P4 = -swap.
/// 3D: P1 = diag(-1,1,1), P2 = diag(1,1,-1), P3 = diag(1,-1,1), P4 = -I.
/// Throws DomainError for other dimensions.
std::vector<ParityOperator> parity_operators(std::size_t dimension);

/// x -> -x on the line.
ParityOperator reflection_1d();

/// Looks up a parity by name ("P", "P1".."P4") for the given dimension.
ParityOperator parity_by_name(std::size_t dimension, const std::string& name);

/// Per-axis signs s with conj(L P p + shift) = diag(s) (L p + shift) for all real p, when the
/// combined parity-time action is diagonal in tilde coordinates.
std::optional<std::array<int, 3>> tilde_axis_signs(const CoordinateMap& map, const ParityOperator& parity,
                                                   double tol = 1e-12);

struct PtClassification {
  /// Parities under which the potential is PT-invariant according to the case analysis.
  std::vector<std::string> assigned;
  /// Parities that pass V(P p)* == V(p) on sampled real points.
  std::vector<std::string> verified;
  /// All couplings real (time reversal alone is a symmetry).
  bool hermitian = false;
};

PtClassification pt_classification(const model::OscillatorSpec& spec, std::size_t samples = 100,
                                   std::uint64_t seed = 20240611);

}  // namespace rexosc::transform

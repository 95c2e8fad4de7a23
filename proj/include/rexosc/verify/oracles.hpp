#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rexosc/model/extension.hpp"
#include "rexosc/transform/conditions.hpp"

namespace rexosc::verify {

/// Lowest k eigenvalues of -d^2/dx^2 + V on n_points interior points of [lo, hi] with Dirichlet
/// ends (second-order differences). 1D specs with a real potential only; a pole in the box throws
/// SingularityError.
std::vector<double> grid_spectrum(const model::OscillatorSpec& spec, const model::REConfig& config,
                                  std::array<double, 2> box, std::size_t n_points, std::size_t k);

/// max |V(eta p)* - V(p)| / (1 + |V(p)|) over random real points in [-2, 2]^2, with eta acting on
/// coordinates. 2D quadratic specs only.
double pseudo_hermiticity_check(const model::OscillatorSpec& spec, const transform::EtaMetric& eta,
                                std::size_t samples = 100, std::uint64_t seed = 7);

/// max |A* - eta A eta^-1| / max|A| for the coefficient matrix A = [[w1^2, l], [l, w2^2]] of the
/// quadratic form (V = p^T A p / 4).
double pseudo_hermiticity_matrix_defect(const model::OscillatorSpec& spec, const transform::EtaMetric& eta);

}  // namespace rexosc::verify

#pragma once

#include "rexosc/poly/polynomial.hpp"

namespace rexosc::poly {

/// Largest index accepted by the Hermite constructors. Coefficients of H_30 are ~1e25 and
/// still carry integer-exact ratios to double precision in the low-order terms used here.
inline constexpr int kMaxHermiteIndex = 30;

/// Physicists' Hermite polynomial H_n.
Polynomial hermite(int n);

/// Pseudo-Hermite polynomial (-i)^m H_m(i x). Real coefficients, all non-negative.
Polynomial pseudo_hermite(int m);

/// Exceptional Hermite polynomial with seed index m. index 0 is the constant 1; index n+1 is
/// pseudo_hermite(m) * H_{n+1} + H_n * pseudo_hermite(m)'.
Polynomial exceptional_hermite(int m, int index);

}  // namespace rexosc::poly

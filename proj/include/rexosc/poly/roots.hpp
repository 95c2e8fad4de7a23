#pragma once

#include <cstddef>
#include <vector>

#include "rexosc/poly/polynomial.hpp"

namespace rexosc::poly {

/// Relative threshold below which remainder coefficients are treated as zero.
inline constexpr double kSturmTolerance = 1e-12;

/// Sturm chain of a real polynomial. Each member is normalized to unit max-norm.
std::vector<std::vector<double>> sturm_chain(const Polynomial& p);

/// Number of distinct real roots in (lo, hi]. Throws DomainError for non-real coefficients,
/// lo >= hi, or the zero polynomial.
std::size_t count_real_roots(const Polynomial& p, double lo, double hi);

/// Distinct real roots in (lo, hi], ascending, isolated by Sturm bisection and polished by
/// Newton steps.
std::vector<double> real_roots(const Polynomial& p, double lo, double hi, double tol = 1e-14);

/// Symmetric bound containing every root (Cauchy).
double root_bound(const Polynomial& p);

}  // namespace rexosc::poly

#include "rexosc/numerics/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rexosc/errors.hpp"

namespace rexosc::numerics {

TridiagonalMatrix::TridiagonalMatrix(std::vector<double> diagonal, std::vector<double> off_diagonal)
    : diagonal_(std::move(diagonal)), off_diagonal_(std::move(off_diagonal)) {
  if (diagonal_.empty()) throw ShapeError("tridiagonal matrix must be non-empty");
  if (off_diagonal_.size() + 1 != diagonal_.size())
    throw ShapeError("off-diagonal length must be one less than the diagonal length");
}

std::vector<double> lowest_eigenvalues(const TridiagonalMatrix& matrix, std::size_t k) {
  const std::size_t n = matrix.size();
  if (k == 0 || k > n)
    throw DomainError("requested " + std::to_string(k) + " eigenvalues of a " + std::to_string(n) +
                      "x" + std::to_string(n) + " matrix");

  constexpr int kMaxSweeps = 60;
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  std::vector<double> d = matrix.diagonal();
  std::vector<double> e = matrix.off_diagonal();
  e.push_back(0.0);

  for (std::size_t l = 0; l < n; ++l) {
    int sweeps = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= kEps * dd) break;
      }
      if (m == l) break;
      if (++sweeps > kMaxSweeps)
        throw NumericalFailure("tridiagonal QL iteration did not converge for eigenvalue " +
                               std::to_string(l));

      // Wilkinson-style shift from the leading 2x2 block.
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool deflated = false;
      for (std::size_t i = m; i-- > l;) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (deflated) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }

  std::partial_sort(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(k), d.end());
  d.resize(k);
  return d;
}

}  // namespace rexosc::numerics

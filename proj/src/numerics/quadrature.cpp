#include "rexosc/numerics/quadrature.hpp"

#include <numeric>
#include <string>

#include "rexosc/errors.hpp"
#include "rexosc/numerics/kernels.hpp"

namespace rexosc::numerics {

std::vector<double> simpson_weights(std::size_t n, double h) {
  if (n < 3) throw DomainError("Simpson rule needs at least 3 samples");
  std::vector<double> w(n, 0.0);
  // Simpson 1/3 over the first `m` points (m odd), 3/8 rule over the last 4 if needed.
  const std::size_t m = (n % 2 == 1) ? n : n - 3;
  if (m >= 3) {
    for (std::size_t i = 0; i < m; ++i) w[i] = (i == 0 || i == m - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    for (std::size_t i = 0; i < m; ++i) w[i] *= h / 3.0;
  }
  if (m != n) {
    const double c = 3.0 * h / 8.0;
    const std::size_t s = n - 4;
    w[s] += c;
    w[s + 1] += 3.0 * c;
    w[s + 2] += 3.0 * c;
    w[s + 3] += c;
  }
  return w;
}

std::complex<double> integrate(std::span<const std::complex<double>> samples, const Grid& grid) {
  if (samples.size() != grid.size())
    throw ShapeError("integrate: " + std::to_string(samples.size()) + " samples for a grid of " +
                     std::to_string(grid.size()));
  const auto w = simpson_weights(grid.size(), grid.spacing());
  return kernels::active().weighted_sum(w.data(), samples.data(), samples.size());
}

double integrate(std::span<const double> samples, const Grid& grid) {
  if (samples.size() != grid.size())
    throw ShapeError("integrate: " + std::to_string(samples.size()) + " samples for a grid of " +
                     std::to_string(grid.size()));
  const auto w = simpson_weights(grid.size(), grid.spacing());
  return std::inner_product(w.begin(), w.end(), samples.begin(), 0.0);
}

}  // namespace rexosc::numerics

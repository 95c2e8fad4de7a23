#include "rexosc/verify/oracles.hpp"

#include <cmath>
#include <random>

#include "rexosc/errors.hpp"
#include "rexosc/numerics/tridiagonal.hpp"
#include "rexosc/verify/poles.hpp"

namespace rexosc::verify {

std::vector<double> grid_spectrum(const model::OscillatorSpec& spec, const model::REConfig& config,
                                  std::array<double, 2> box, std::size_t n_points, std::size_t k) {
  if (spec.dimension != 1) throw DomainError("grid diagonalization is implemented for one dimension");
  if (!(box[0] < box[1])) throw DomainError("box needs lower < upper");
  if (n_points < 2 || k == 0 || k > n_points) throw DomainError("need 2 <= n_points and 1 <= k <= n_points");
  const model::ExtendedSystem ext(spec, config);
  const auto poles = pole_scan(ext, Box{box});
  if (!poles.empty()) throw SingularityError("real pole at x = " + std::to_string(poles.front()[0]) + " inside the box");

  const double h = (box[1] - box[0]) / static_cast<double>(n_points + 1);
  std::vector<double> diag(n_points), off(n_points - 1, -1.0 / (h * h));
  for (std::size_t i = 0; i < n_points; ++i) {
    const double x = box[0] + h * static_cast<double>(i + 1);
    const model::cplx v = ext.potential(std::vector<model::cplx>{x});
    if (std::abs(v.imag()) > 1e-12 * std::max(1.0, std::abs(v)))
      throw DomainError("grid diagonalization needs a real potential");
    diag[i] = 2.0 / (h * h) + v.real();
  }
  return numerics::lowest_eigenvalues(numerics::TridiagonalMatrix(std::move(diag), std::move(off)), k);
}

namespace {

void require_quadratic_2d(const model::OscillatorSpec& spec) {
  if (spec.perturbation != model::Perturbation::quadratic2d && spec.perturbation != model::Perturbation::none)
    throw DomainError("pseudo-hermiticity checks are defined for 2D quadratic couplings");
  if (spec.dimension != 2) throw DomainError("pseudo-hermiticity checks need a 2D spec");
}

}  // namespace

double pseudo_hermiticity_check(const model::OscillatorSpec& spec, const transform::EtaMetric& eta,
                                std::size_t samples, std::uint64_t seed) {
  require_quadratic_2d(spec);
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  double worst = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const std::vector<model::cplx> p{u(gen), u(gen)};
    const std::vector<model::cplx> q{eta.matrix[0][0] * p[0] + eta.matrix[0][1] * p[1],
                                     eta.matrix[1][0] * p[0] + eta.matrix[1][1] * p[1]};
    const model::cplx v = model::base_potential(spec, p);
    worst = std::max(worst, std::abs(std::conj(model::base_potential(spec, q)) - v) / (1.0 + std::abs(v)));
  }
  return worst;
}

double pseudo_hermiticity_matrix_defect(const model::OscillatorSpec& spec, const transform::EtaMetric& eta) {
  require_quadratic_2d(spec);
  using M = std::array<std::array<model::cplx, 2>, 2>;
  const model::cplx l = spec.perturbation == model::Perturbation::none ? model::cplx{} : spec.lambda.value();
  const M a{{{spec.frequencies[0] * spec.frequencies[0], l}, {l, spec.frequencies[1] * spec.frequencies[1]}}};
  const M& e = eta.matrix;
  const model::cplx det = e[0][0] * e[1][1] - e[0][1] * e[1][0];
  if (std::abs(det) < 1e-14) throw DegenerateTransformError("eta metric is singular");
  const M inv{{{e[1][1] / det, -e[0][1] / det}, {-e[1][0] / det, e[0][0] / det}}};
  const auto mul = [](const M& x, const M& y) {
    M r{};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) r[i][j] += x[i][k] * y[k][j];
    return r;
  };
  const M sim = mul(mul(e, a), inv);
  double worst = 0.0, scale = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      worst = std::max(worst, std::abs(std::conj(a[i][j]) - sim[i][j]));
      scale = std::max(scale, std::abs(a[i][j]));
    }
  return worst / scale;
}

}  // namespace rexosc::verify

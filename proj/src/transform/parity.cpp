#include "rexosc/transform/parity.hpp"

#include <algorithm>
#include <random>

#include "rexosc/errors.hpp"
#include "rexosc/model/oscillator_spec.hpp"

namespace rexosc::transform {
namespace {

ParityOperator make(std::string name, std::size_t d, std::initializer_list<std::initializer_list<int>> rows) {
  ParityOperator p{std::move(name), d, {}};
  std::size_t i = 0;
  for (auto row : rows) {
    std::size_t j = 0;
    for (int v : row) p.matrix[i][j++] = v;
    ++i;
  }
  return p;
}

}  // namespace

int ParityOperator::determinant() const {
  const auto& m = matrix;
  switch (dimension) {
    case 1: return m[0][0];
    case 2: return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    default:
      return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }
}

Point ParityOperator::apply(std::span<const cplx> p) const {
  if (p.size() != dimension) throw ShapeError("parity dimension does not match the point");
  Point out{};
  for (std::size_t i = 0; i < dimension; ++i)
    for (std::size_t j = 0; j < dimension; ++j) out[i] += static_cast<double>(matrix[i][j]) * p[j];
  return out;
}

std::vector<ParityOperator> parity_operators(std::size_t dimension) {
  if (dimension == 2)
    return {make("P1", 2, {{-1, 0}, {0, 1}}), make("P2", 2, {{1, 0}, {0, -1}}), make("P3", 2, {{0, 1}, {1, 0}}),
            make("P4", 2, {{0, -1}, {-1, 0}})};
  if (dimension == 3)
    return {make("P1", 3, {{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), make("P2", 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}),
            make("P3", 3, {{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}), make("P4", 3, {{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}})};
  throw DomainError("parity operators are listed for two and three dimensions only");
}

ParityOperator reflection_1d() { return make("P", 1, {{-1}}); }

ParityOperator parity_by_name(std::size_t dimension, const std::string& name) {
  if (dimension == 1) {
    if (name == "P" || name == "P1") return reflection_1d();
    throw DomainError("unknown parity '" + name + "' in one dimension");
  }
  for (auto& p : parity_operators(dimension))
    if (p.name == name) return p;
  throw DomainError("unknown parity '" + name + "'");
}

std::optional<std::array<int, 3>> tilde_axis_signs(const CoordinateMap& map, const ParityOperator& parity,
                                                   double tol) {
  const std::size_t d = map.dimension();
  if (parity.dimension != d) throw ShapeError("parity dimension does not match the map");
  std::array<int, 3> signs{1, 1, 1};
  for (std::size_t i = 0; i < d; ++i) {
    // Row i of conj(L) P must be +/- row i of L, and conj(shift_i) the same multiple of shift_i.
    std::array<cplx, 3> row{};
    double scale = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) row[j] += std::conj(map.linear(i, k)) * static_cast<double>(parity.matrix[k][j]);
      scale = std::max(scale, std::abs(map.linear(i, j)));
    }
    scale = std::max(scale, std::abs(map.shift(i)));
    bool matched = false;
    for (int s : {1, -1}) {
      double err = std::abs(std::conj(map.shift(i)) - static_cast<double>(s) * map.shift(i));
      for (std::size_t j = 0; j < d; ++j) err = std::max(err, std::abs(row[j] - static_cast<double>(s) * map.linear(i, j)));
      if (err <= tol * std::max(scale, 1.0)) {
        signs[i] = s;
        matched = true;
        break;
      }
    }
    if (!matched) return std::nullopt;
  }
  return signs;
}

PtClassification pt_classification(const model::OscillatorSpec& spec, std::size_t samples, std::uint64_t seed) {
  using model::Perturbation;
  spec.validate();
  PtClassification out;
  out.hermitian = spec.is_hermitian();
  const bool l0i = spec.lambda0.is_imaginary();
  const bool li = spec.lambda.is_imaginary();
  switch (spec.perturbation) {
    case Perturbation::none: break;
    case Perturbation::linear:
      if (l0i) out.assigned = {"P"};
      break;
    case Perturbation::quadratic2d:
      if (li) out.assigned = {"P1", "P2"};
      break;
    case Perturbation::lq3d:
      if (l0i && !li) out.assigned = {"P2"};
      if (!l0i && li) out.assigned = {"P1", "P3"};
      if (l0i && li) out.assigned = {"P4"};
      break;
    case Perturbation::q1_3d: {
      const bool l2i = spec.lambda2.is_imaginary(), l3i = spec.lambda3.is_imaginary();
      if (l2i && !l3i) out.assigned = {"P3"};
      if (!l2i && l3i) out.assigned = {"P1"};
      if (l2i && l3i) out.assigned = {"P2"};
      break;
    }
    case Perturbation::q2_3d:
      if (li) out.assigned = {"P2"};
      break;
  }

  std::vector<ParityOperator> candidates =
      spec.dimension == 1 ? std::vector<ParityOperator>{reflection_1d()} : parity_operators(spec.dimension);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<std::array<cplx, 3>> pts(samples);
  for (auto& p : pts)
    for (std::size_t i = 0; i < spec.dimension; ++i) p[i] = u(rng);
  for (const auto& par : candidates) {
    bool ok = true;
    for (const auto& p : pts) {
      const std::span<const cplx> sp(p.data(), spec.dimension);
      const Point q = par.apply(sp);
      const cplx v = model::base_potential(spec, sp);
      const cplx vq = model::base_potential(spec, std::span<const cplx>(q.data(), spec.dimension));
      if (std::abs(std::conj(vq) - v) > 1e-10 * (1.0 + std::abs(v))) {
        ok = false;
        break;
      }
    }
    if (ok) out.verified.push_back(par.name);
  }
  return out;
}

}  // namespace rexosc::transform

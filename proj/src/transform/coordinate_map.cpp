#include "rexosc/transform/coordinate_map.hpp"

#include <algorithm>
#include <string>

#include "rexosc/errors.hpp"

namespace rexosc::transform {
namespace {

Matrix3 identity() {
  Matrix3 m{};
  for (std::size_t i = 0; i < 3; ++i) m[i][i] = 1.0;
  return m;
}

Matrix3 transpose(const Matrix3& m) {
  Matrix3 t{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t[i][j] = m[j][i];
  return t;
}

void check_dimension(std::size_t d) {
  if (d < 1 || d > 3) throw DomainError("coordinate map dimension must be 1, 2 or 3");
}

double defect(const Matrix3& p, const Matrix3& q, std::size_t d) {
  double worst = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      cplx s{};
      for (std::size_t k = 0; k < d; ++k) s += p[i][k] * q[k][j];
      worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
    }
  return worst;
}

}  // namespace

CoordinateMap::CoordinateMap(std::size_t dimension) : dim_(dimension), linear_(identity()), inverse_(identity()) {
  check_dimension(dimension);
}

CoordinateMap::CoordinateMap(std::size_t dimension, const Matrix3& linear, const Point& shift)
    : CoordinateMap(dimension, linear, shift, transpose(linear)) {}

CoordinateMap::CoordinateMap(std::size_t dimension, const Matrix3& linear, const Point& shift,
                             const Matrix3& inverse_linear)
    : dim_(dimension), linear_(linear), inverse_(inverse_linear), shift_(shift) {
  check_dimension(dimension);
}

Point CoordinateMap::forward(std::span<const cplx> old) const {
  if (old.size() != dim_)
    throw ShapeError("point has " + std::to_string(old.size()) + " coordinates, map expects " + std::to_string(dim_));
  Point out{};
  for (std::size_t i = 0; i < dim_; ++i) {
    cplx s = shift_[i];
    for (std::size_t j = 0; j < dim_; ++j) s += linear_[i][j] * old[j];
    out[i] = s;
  }
  return out;
}

Point CoordinateMap::backward(std::span<const cplx> tilde) const {
  if (tilde.size() != dim_)
    throw ShapeError("point has " + std::to_string(tilde.size()) + " coordinates, map expects " + std::to_string(dim_));
  Point out{};
  for (std::size_t i = 0; i < dim_; ++i) {
    cplx s{};
    for (std::size_t j = 0; j < dim_; ++j) s += inverse_[i][j] * (tilde[j] - shift_[j]);
    out[i] = s;
  }
  return out;
}

double CoordinateMap::orthogonality_defect() const { return defect(transpose(linear_), linear_, dim_); }

double CoordinateMap::inverse_defect() const { return defect(inverse_, linear_, dim_); }

CoordinateMap direct_sum(const CoordinateMap& first, const CoordinateMap& second) {
  const std::size_t d1 = first.dimension();
  const std::size_t d = d1 + second.dimension();
  if (d > 3) throw DomainError("direct sum exceeds three dimensions");
  Matrix3 lin{}, inv{};
  Point shift{};
  for (std::size_t i = 0; i < d1; ++i) {
    shift[i] = first.shift(i);
    for (std::size_t j = 0; j < d1; ++j) {
      lin[i][j] = first.linear(i, j);
      inv[i][j] = first.inverse_linear(i, j);
    }
  }
  for (std::size_t i = 0; i < second.dimension(); ++i) {
    shift[d1 + i] = second.shift(i);
    for (std::size_t j = 0; j < second.dimension(); ++j) {
      lin[d1 + i][d1 + j] = second.linear(i, j);
      inv[d1 + i][d1 + j] = second.inverse_linear(i, j);
    }
  }
  return CoordinateMap(d, lin, shift, inv);
}

}  // namespace rexosc::transform

#include "rexosc/numerics/stencil.hpp"

#include <string>

#include "rexosc/errors.hpp"
#include "rexosc/numerics/kernels.hpp"
#include "rexosc/numerics/quadrature.hpp"

namespace rexosc::numerics {
namespace {

constexpr std::size_t kHalf = kernels::kStencilHalfWidth;

void check_stencil_index(std::size_t n_samples, const Grid& grid, std::size_t index) {
  if (n_samples != grid.size())
    throw ShapeError("sample count " + std::to_string(n_samples) + " does not match grid size " +
                     std::to_string(grid.size()));
  if (index < kHalf || index + kHalf >= grid.size())
    throw BoundaryError("stencil index " + std::to_string(index) +
                        " is within four points of the grid boundary");
}

template <class T>
T apply_stencil(std::span<const T> f, std::size_t i, double h) {
  // Difference form: the centre weight equals -2 * sum of the others, so constants cancel exactly.
  T acc{};
  for (std::size_t k = 1; k <= kHalf; ++k)
    acc += kernels::kD2Weights[k] * ((f[i + k] - f[i]) + (f[i - k] - f[i]));
  return acc / (h * h);
}

}  // namespace

cplx second_derivative(std::span<const cplx> samples, const Grid& grid, std::size_t index) {
  check_stencil_index(samples.size(), grid, index);
  return apply_stencil(samples, index, grid.spacing());
}

double second_derivative(std::span<const double> samples, const Grid& grid, std::size_t index) {
  check_stencil_index(samples.size(), grid, index);
  return apply_stencil(samples, index, grid.spacing());
}

TensorGrid::TensorGrid(std::vector<Grid> axes) : axes_(std::move(axes)), total_(1) {
  if (axes_.empty() || axes_.size() > 3)
    throw DomainError("tensor grid dimension must be 1, 2 or 3");
  strides_.assign(axes_.size(), 1);
  for (std::size_t a = axes_.size(); a-- > 0;) {
    strides_[a] = static_cast<std::ptrdiff_t>(total_);
    total_ *= axes_[a].size();
  }
}

std::vector<std::size_t> TensorGrid::unflatten(std::size_t flat) const {
  std::vector<std::size_t> idx(axes_.size());
  for (std::size_t a = 0; a < axes_.size(); ++a) {
    idx[a] = flat / static_cast<std::size_t>(strides_[a]);
    flat %= static_cast<std::size_t>(strides_[a]);
  }
  return idx;
}

std::vector<double> TensorGrid::point(std::size_t flat) const {
  const auto idx = unflatten(flat);
  std::vector<double> p(axes_.size());
  for (std::size_t a = 0; a < axes_.size(); ++a) p[a] = axes_[a].point(idx[a]);
  return p;
}

bool TensorGrid::is_interior(std::size_t flat) const {
  const auto idx = unflatten(flat);
  for (std::size_t a = 0; a < axes_.size(); ++a)
    if (idx[a] < kHalf || idx[a] + kHalf >= axes_[a].size()) return false;
  return true;
}

std::vector<double> TensorGrid::interior_weights() const {
  std::vector<std::vector<double>> per_axis;
  per_axis.reserve(axes_.size());
  for (const Grid& g : axes_) {
    std::vector<double> w(g.size(), 0.0);
    const auto inner = simpson_weights(g.size() - 2 * kHalf, g.spacing());
    std::copy(inner.begin(), inner.end(), w.begin() + kHalf);
    per_axis.push_back(std::move(w));
  }
  std::vector<double> weights(total_);
  for (std::size_t flat = 0; flat < total_; ++flat) {
    const auto idx = unflatten(flat);
    double w = 1.0;
    for (std::size_t a = 0; a < axes_.size(); ++a) w *= per_axis[a][idx[a]];
    weights[flat] = w;
  }
  return weights;
}

std::vector<cplx> laplacian(std::span<const cplx> samples, const TensorGrid& grid) {
  if (samples.size() != grid.size())
    throw ShapeError("sample count does not match tensor grid size");
  std::vector<cplx> out(grid.size(), cplx{});
  const auto& k = kernels::active();
  const std::size_t d = grid.dimension();
  const std::size_t last_n = grid.axis(d - 1).size();
  if (last_n < 2 * kHalf + 1) return out;

  // Iterate over interior "rows" along the fastest axis; each row is one kernel call per axis.
  const std::size_t rows = grid.size() / last_n;
  for (std::size_t row = 0; row < rows; ++row) {
    const std::size_t row_start = row * last_n;
    if (!grid.is_interior(row_start + kHalf)) continue;
    const std::size_t first = row_start + kHalf;
    const std::size_t count = last_n - 2 * kHalf;
    for (std::size_t a = 0; a < d; ++a) {
      const double h = grid.axis(a).spacing();
      k.d2_accumulate(samples.data() + first, grid.stride(a), count, 1.0 / (h * h),
                      out.data() + first);
    }
  }
  return out;
}

}  // namespace rexosc::numerics

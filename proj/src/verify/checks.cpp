#include "rexosc/verify/checks.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>

#include "rexosc/errors.hpp"
#include "rexosc/numerics/parallel.hpp"

namespace rexosc::verify {
namespace {

// psi (and optionally V) on every grid point, plus a mask of usable stencil-interior points.
struct Field {
  std::vector<cplx> psi;
  std::vector<cplx> potential;
  std::vector<char> usable;
};

std::string describe(const std::vector<double>& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i];
  os << ")";
  return os.str();
}

// Points within the guard radius of a pole surface are unusable; with exclusion off any pole
// meeting the grid is an error.
std::vector<PoleSurface> guard_surfaces(const model::ExtendedSystem& ext, const numerics::TensorGrid& grid,
                                        const ScanOptions& options) {
  const auto poles = pole_scan(ext, box_of(grid));
  if (poles.empty()) return {};
  if (!options.exclude_poles)
    throw SingularityError("real pole at " + describe(poles.front()) + " inside the sampling box");
  return pole_surfaces(ext);
}

template <class Fn>
void parallel_points(std::size_t n, Fn&& fn) {
  std::exception_ptr error;
  std::mutex mu;
  numerics::parallel_for(
      n,
      [&](std::size_t b, std::size_t e) {
        try {
          for (std::size_t i = b; i < e; ++i) fn(i);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!error) error = std::current_exception();
        }
      },
      2048);
  if (error) std::rethrow_exception(error);
}

Field sample(const model::ExtendedSystem& ext, const model::Eigenstate& state, const numerics::TensorGrid& grid,
             const ScanOptions& options, bool with_potential, bool interior_only) {
  if (grid.dimension() != ext.dimension()) throw ShapeError("grid dimension differs from the spec");
  ext.prepare(state);
  const auto guards = guard_surfaces(ext, grid, options);
  double h = 0.0;
  for (const auto& a : grid.axes()) h = std::max(h, a.spacing());
  const double radius = std::max(options.guard_spacings * h, options.guard_length);

  Field f;
  f.psi.assign(grid.size(), cplx{});
  if (with_potential) f.potential.assign(grid.size(), cplx{});
  f.usable.assign(grid.size(), 0);
  // Points inside the guard band get psi = 0 so neighbouring stencils stay finite; they are never usable.
  parallel_points(grid.size(), [&](std::size_t i) {
    const auto p = grid.point(i);
    for (const auto& s : guards)
      if (s.distance(p) < radius) return;
    std::vector<cplx> pc(p.begin(), p.end());
    f.psi[i] = ext.eigenfunction(state, pc);
    if (with_potential) f.potential[i] = ext.potential(pc);
    f.usable[i] = 1;
  });
  if (!guards.empty() || interior_only) {
    // A stencil touching an excluded point is unusable too: widen the mask by four points per axis.
    std::vector<char> keep(grid.size(), 0);
    parallel_points(grid.size(), [&](std::size_t i) {
      if (!f.usable[i] || (interior_only && !grid.is_interior(i))) return;
      if (!guards.empty()) {
        const auto idx = grid.unflatten(i);
        for (std::size_t a = 0; a < grid.dimension(); ++a)
          for (int k = -4; k <= 4; ++k) {
            const auto j = static_cast<std::ptrdiff_t>(idx[a]) + k;
            if (j < 0 || j >= static_cast<std::ptrdiff_t>(grid.axis(a).size())) continue;
            if (!f.usable[i + static_cast<std::size_t>(k * grid.stride(a))]) return;
          }
      }
      keep[i] = 1;
    });
    f.usable = std::move(keep);
  }
  return f;
}

double max_tilde_frequency(const model::ExtendedSystem& ext) {
  double w = 0.0;
  for (const auto& v : ext.system().tilde_frequencies) w = std::max(w, std::abs(v));
  return w;
}

}  // namespace

numerics::TensorGrid grid_over(const Box& box, double max_spacing) {
  std::vector<numerics::Grid> axes;
  for (const auto& iv : box)
    axes.push_back(numerics::Grid::with_spacing(0.5 * (iv[0] + iv[1]), 0.5 * (iv[1] - iv[0]), max_spacing));
  return numerics::TensorGrid(std::move(axes));
}

Box box_of(const numerics::TensorGrid& grid) {
  Box box;
  for (const auto& a : grid.axes()) box.push_back({a.lower(), a.upper()});
  return box;
}

ResidualResult residual_scan(const model::ExtendedSystem& ext, const model::Eigenstate& state,
                             const numerics::TensorGrid& grid, const ScanOptions& options) {
  const Field f = sample(ext, state, grid, options, true, true);
  const auto lap = numerics::laplacian(f.psi, grid);
  const cplx e_rel = model::relative_energy(ext.config(), state, ext.system());

  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (f.usable[i]) idx.push_back(i);
  if (idx.empty()) throw DomainError("no usable interior points on the grid");

  // q = H psi - E_rel psi; fit q ~ c psi in the minimax sense.
  std::vector<cplx> q(idx.size()), psi(idx.size());
  double psi_max = 0.0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const std::size_t i = idx[k];
    psi[k] = f.psi[i];
    q[k] = -lap[i] + f.potential[i] * f.psi[i] - e_rel * f.psi[i];
    psi_max = std::max(psi_max, std::abs(psi[k]));
  }
  std::vector<double> weight(idx.size(), 1.0);
  cplx c{};
  double worst = 0.0;
  // Plain least squares, then three Lawson reweightings toward the minimax fit.
  for (int pass = 0; pass < 4; ++pass) {
    cplx num{};
    double den = 0.0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      num += weight[k] * std::conj(psi[k]) * q[k];
      den += weight[k] * std::norm(psi[k]);
    }
    if (den <= 0.0) throw IndeterminateError("eigenfunction vanishes on the usable grid");
    c = num / den;
    worst = 0.0;
    double total = 0.0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const double e = std::abs(q[k] - c * psi[k]);
      worst = std::max(worst, e);
      weight[k] *= e;
      total += weight[k];
    }
    if (total <= 0.0) break;
    for (double& w : weight) w /= total;
  }
  ResidualResult r;
  r.fitted_offset = c;
  r.relative_energy = e_rel;
  r.points = idx.size();
  r.max_residual = worst / (psi_max * (std::abs(e_rel) + max_tilde_frequency(ext)));
  return r;
}

cplx rayleigh_energy(const model::ExtendedSystem& ext, const model::Eigenstate& state,
                     const numerics::TensorGrid& grid, const ScanOptions& options, std::optional<Pairing> pairing) {
  const Pairing mode = pairing.value_or(ext.spec().is_hermitian() ? Pairing::conjugate : Pairing::bilinear);
  const Field f = sample(ext, state, grid, options, true, true);
  const auto lap = numerics::laplacian(f.psi, grid);
  const auto w = grid.interior_weights();
  cplx num{}, den{};
  double scale = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!f.usable[i]) continue;
    const cplx left = mode == Pairing::conjugate ? std::conj(f.psi[i]) : f.psi[i];
    num += w[i] * left * (-lap[i] + f.potential[i] * f.psi[i]);
    den += w[i] * left * f.psi[i];
    scale += w[i] * std::norm(f.psi[i]);
  }
  if (std::abs(den) <= 1e-12 * scale || scale == 0.0)
    throw IndeterminateError("normalization integral vanishes for the chosen pairing");
  return num / den;
}

transform::ParityOperator identity_parity(std::size_t dimension) {
  transform::ParityOperator p;
  p.name = "identity";
  p.dimension = dimension;
  for (std::size_t i = 0; i < 3; ++i) p.matrix[i][i] = 1;
  return p;
}

PtMeasurement pt_parity_eigenvalue(const model::ExtendedSystem& ext, const model::Eigenstate& state,
                                   const transform::ParityOperator& parity, const numerics::TensorGrid& grid,
                                   const ScanOptions& options) {
  if (parity.dimension != ext.dimension()) throw ShapeError("parity dimension differs from the spec");
  const Field f = sample(ext, state, grid, options, false, false);
  // The image of a usable point must be usable too; poles are mapped to poles by a symmetry but not
  // by a wrong parity, so evaluate the image directly and skip singular ones.
  std::vector<cplx> image(grid.size());
  std::vector<char> ok(grid.size(), 0);
  parallel_points(grid.size(), [&](std::size_t i) {
    if (!f.usable[i]) return;
    const auto p = grid.point(i);
    std::vector<cplx> pc(p.begin(), p.end());
    const auto q = parity.apply(pc);
    try {
      image[i] = std::conj(ext.eigenfunction(state, std::span<const cplx>(q.data(), pc.size())));
      ok[i] = 1;
    } catch (const SingularityError&) {
    }
  });
  cplx num{};
  double den = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (ok[i]) {
      num += std::conj(f.psi[i]) * image[i];
      den += std::norm(f.psi[i]);
    }
  if (den <= 0.0) throw IndeterminateError("eigenfunction vanishes on the sampled points");
  const cplx s = num / den;
  double misfit = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (ok[i]) misfit += std::norm(image[i] - s * f.psi[i]);
  PtMeasurement m{s, std::sqrt(misfit / den)};
  if (m.residual > 1e-4) {
    std::ostringstream os;
    os << "state is not a parity-time eigenfunction under " << parity.name << " (relative misfit " << m.residual
       << ")";
    throw IndeterminateError(os.str());
  }
  return m;
}

ComplexMatrix orthogonality_gram(const model::ExtendedSystem& ext, const std::vector<model::Eigenstate>& states,
                                 const numerics::TensorGrid& grid, const ScanOptions& options) {
  if (!ext.spec().is_hermitian())
    throw DomainError("orthogonality needs a Hermitian spec; non-Hermitian states only pair bilinearly");
  const auto w = grid.interior_weights();
  std::vector<Field> fields;
  for (const auto& s : states) fields.push_back(sample(ext, s, grid, options, false, true));
  const std::size_t n = states.size();
  ComplexMatrix g(n, std::vector<cplx>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      cplx s{};
      for (std::size_t i = 0; i < grid.size(); ++i)
        if (fields[a].usable[i] && fields[b].usable[i]) s += w[i] * std::conj(fields[a].psi[i]) * fields[b].psi[i];
      g[a][b] = s;
    }
  std::vector<double> norm(n);
  for (std::size_t a = 0; a < n; ++a) {
    norm[a] = std::sqrt(g[a][a].real());
    if (!(norm[a] > 0.0)) throw IndeterminateError("state has zero norm on the grid");
  }
  for (std::size_t a = 0; a < n; ++a) {
    g[a][a] = 1.0;
    for (std::size_t b = a + 1; b < n; ++b) {
      g[a][b] /= norm[a] * norm[b];
      g[b][a] = std::conj(g[a][b]);
    }
  }
  return g;
}

double max_off_diagonal(const ComplexMatrix& gram) {
  double m = 0.0;
  for (std::size_t a = 0; a < gram.size(); ++a)
    for (std::size_t b = 0; b < gram.size(); ++b)
      if (a != b) m = std::max(m, std::abs(gram[a][b]));
  return m;
}

}  // namespace rexosc::verify

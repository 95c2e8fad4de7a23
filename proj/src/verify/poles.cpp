#include "rexosc/verify/poles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rexosc/errors.hpp"
#include "rexosc/poly/hermite.hpp"
#include "rexosc/poly/roots.hpp"

namespace rexosc::verify {
namespace {

using Vec = std::array<double, 3>;

double dot(const Vec& a, const Vec& b, std::size_t d) {
  double s = 0.0;
  for (std::size_t i = 0; i < d; ++i) s += a[i] * b[i];
  return s;
}

// Zeros of the pseudo-Hermite seed: 0 for odd m, and +-i r for every positive root r of H_m.
std::vector<model::cplx> seed_zeros(int m) {
  std::vector<model::cplx> out;
  if (m == 0) return out;
  const auto h = poly::hermite(m);
  const double bound = poly::root_bound(h) + 1.0;
  for (double r : poly::real_roots(h, -bound, bound)) {
    if (std::abs(r) < 1e-12) {
      out.emplace_back(0.0, 0.0);
    } else if (r > 0.0) {
      out.emplace_back(0.0, r);
      out.emplace_back(0.0, -r);
    }
  }
  return out;
}

bool inside(const Vec& p, const Box& box, double tol) {
  for (std::size_t i = 0; i < box.size(); ++i)
    if (p[i] < box[i][0] - tol || p[i] > box[i][1] + tol) return false;
  return true;
}

// A point of the surface inside the box, if any.
std::optional<Vec> box_point(const PoleSurface& s, const Box& box, double tol) {
  const std::size_t d = box.size();
  Vec base{};
  for (std::size_t k = 0; k < s.rows.size(); ++k)
    for (std::size_t i = 0; i < d; ++i) base[i] += s.rhs[k] * s.rows[k][i];
  if (s.rows.size() == d) return inside(base, box, tol) ? std::optional<Vec>(base) : std::nullopt;

  if (s.rows.size() == 1) {
    // Hyperplane: corners minimizing and maximizing q.p bracket the level set; interpolate.
    const Vec& q = s.rows[0];
    Vec lo{}, hi{};
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = q[i] >= 0.0 ? box[i][0] : box[i][1];
      hi[i] = q[i] >= 0.0 ? box[i][1] : box[i][0];
    }
    const double vlo = dot(q, lo, d), vhi = dot(q, hi, d);
    const double c = s.rhs[0];
    if (c < vlo - tol || c > vhi + tol) return std::nullopt;
    const double t = vhi > vlo ? std::clamp((c - vlo) / (vhi - vlo), 0.0, 1.0) : 0.0;
    Vec p{};
    for (std::size_t i = 0; i < d; ++i) p[i] = lo[i] + t * (hi[i] - lo[i]);
    return p;
  }

  // Line in 3D: base + t v, clipped against each slab.
  const Vec& a = s.rows[0];
  const Vec& b = s.rows[1];
  const Vec v{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  double tmin = -std::numeric_limits<double>::infinity(), tmax = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < 3; ++i) {
    if (std::abs(v[i]) < 1e-14) {
      if (base[i] < box[i][0] - tol || base[i] > box[i][1] + tol) return std::nullopt;
      continue;
    }
    double t0 = (box[i][0] - base[i]) / v[i], t1 = (box[i][1] - base[i]) / v[i];
    if (t0 > t1) std::swap(t0, t1);
    tmin = std::max(tmin, t0);
    tmax = std::min(tmax, t1);
  }
  if (tmin > tmax + tol) return std::nullopt;
  const double t = 0.5 * (tmin + tmax);
  Vec p{};
  for (std::size_t i = 0; i < 3; ++i) p[i] = base[i] + t * v[i];
  return p;
}

}  // namespace

double PoleSurface::distance(std::span<const double> point) const {
  double s2 = 0.0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    double v = -rhs[k];
    for (std::size_t i = 0; i < point.size(); ++i) v += rows[k][i] * point[i];
    s2 += v * v;
  }
  return std::sqrt(s2);
}

std::vector<PoleSurface> pole_surfaces(const model::ExtendedSystem& ext, double tolerance) {
  const auto& sys = ext.system();
  const std::size_t d = sys.dimension();
  std::vector<PoleSurface> out;
  for (std::size_t axis = 0; axis < d; ++axis) {
    const int m = ext.config().codimensions[axis];
    const model::cplx scale = std::sqrt(sys.tilde_frequencies[axis] / 2.0);
    for (const model::cplx& z : seed_zeros(m)) {
      // Real solutions of L_axis . p + shift_axis = target, split into real and imaginary rows.
      const model::cplx target = z / scale;
      const model::cplx c = target - sys.map.shift(axis);
      Vec re{}, im{};
      double norm = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        re[j] = sys.map.linear(axis, j).real();
        im[j] = sys.map.linear(axis, j).imag();
        norm = std::max(norm, std::abs(sys.map.linear(axis, j)));
      }
      std::vector<Vec> rows{re, im};
      std::vector<double> rhs{c.real(), c.imag()};
      PoleSurface s;
      s.axis = axis;
      s.target = target;
      bool consistent = true;
      for (std::size_t k = 0; k < 2; ++k) {
        Vec r = rows[k];
        double b = rhs[k];
        for (std::size_t q = 0; q < s.rows.size(); ++q) {
          const double proj = dot(r, s.rows[q], d);
          for (std::size_t j = 0; j < d; ++j) r[j] -= proj * s.rows[q][j];
          b -= proj * s.rhs[q];
        }
        const double len = std::sqrt(dot(r, r, d));
        if (len <= 1e-12 * norm) {
          // Row vanished: the equation reads 0 = b, consistent only within the distance tolerance.
          if (std::abs(b) > tolerance * std::max(norm, 1.0)) consistent = false;
          continue;
        }
        for (std::size_t j = 0; j < d; ++j) r[j] /= len;
        s.rows.push_back(r);
        s.rhs.push_back(b / len);
      }
      if (consistent && !s.rows.empty()) out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<std::vector<double>> pole_scan(const model::ExtendedSystem& ext, const Box& box, double resolution) {
  if (box.size() != ext.dimension()) throw ShapeError("box dimension differs from the spec");
  for (const auto& iv : box)
    if (!(iv[0] <= iv[1])) throw DomainError("box intervals need lower <= upper");
  std::vector<std::vector<double>> out;
  for (const auto& s : pole_surfaces(ext, resolution)) {
    const auto p = box_point(s, box, resolution);
    if (!p) continue;
    std::vector<double> point(p->begin(), p->begin() + static_cast<std::ptrdiff_t>(box.size()));
    const bool duplicate = std::any_of(out.begin(), out.end(), [&](const std::vector<double>& q) {
      double s2 = 0.0;
      for (std::size_t i = 0; i < q.size(); ++i) s2 += (q[i] - point[i]) * (q[i] - point[i]);
      return std::sqrt(s2) <= resolution;
    });
    if (!duplicate) out.push_back(std::move(point));
  }
  return out;
}

std::vector<std::vector<double>> pole_scan(const model::OscillatorSpec& spec, const model::REConfig& config,
                                           const Box& box, double resolution) {
  return pole_scan(model::ExtendedSystem(spec, config), box, resolution);
}

Box default_box(const model::ExtendedSystem& ext) {
  const auto& sys = ext.system();
  double wmin = std::numeric_limits<double>::infinity();
  for (const auto& w : sys.tilde_frequencies) wmin = std::min(wmin, w.real());
  if (!(wmin > 0.0)) throw DomainError("tilde frequencies need a positive real part for a bounded sampling box");
  const double half = 12.0 / std::sqrt(wmin);
  const transform::Point zero{};
  const auto center = sys.map.backward(std::span<const model::cplx>(zero.data(), sys.dimension()));
  Box box;
  for (std::size_t i = 0; i < sys.dimension(); ++i) box.push_back({center[i].real() - half, center[i].real() + half});
  return box;
}

}  // namespace rexosc::verify

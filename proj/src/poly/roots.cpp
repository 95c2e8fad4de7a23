#include "rexosc/poly/roots.hpp"

#include <algorithm>
#include <cmath>

#include "rexosc/errors.hpp"

namespace rexosc::poly {
namespace {

using Real = std::vector<double>;

double max_abs(const Real& p) {
  double m = 0.0;
  for (double c : p) m = std::max(m, std::abs(c));
  return m;
}

void drop_small_leading(Real& p, double scale) {
  while (p.size() > 1 && std::abs(p.back()) <= kSturmTolerance * scale) p.pop_back();
}

void normalize(Real& p) {
  const double m = max_abs(p);
  if (m > 0.0)
    for (double& c : p) c /= m;
}

// Remainder of a / b; b has a nonzero leading coefficient.
Real remainder(Real a, const Real& b) {
  const double scale = std::max(max_abs(a), max_abs(b));
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const double q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= q * b[j];
    a.pop_back();
  }
  if (a.empty()) a.push_back(0.0);
  drop_small_leading(a, scale);
  if (a.size() == 1 && std::abs(a[0]) <= kSturmTolerance * scale) a[0] = 0.0;
  return a;
}

bool is_zero(const Real& p) { return p.size() == 1 && p[0] == 0.0; }

double eval(const Real& p, double x) {
  double acc = p.back();
  for (std::size_t k = p.size() - 1; k-- > 0;) acc = acc * x + p[k];
  return acc;
}

int sign_changes(const std::vector<Real>& chain, double x) {
  int changes = 0;
  int last = 0;
  for (const Real& p : chain) {
    const double v = eval(p, x);
    const int s = (v > 0.0) - (v < 0.0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int sign_changes_at_infinity(const std::vector<Real>& chain, bool positive) {
  int changes = 0;
  int last = 0;
  for (const Real& p : chain) {
    int s = (p.back() > 0.0) - (p.back() < 0.0);
    if (!positive && (p.size() - 1) % 2 == 1) s = -s;
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Real checked_real(const Polynomial& p) {
  if (!p.has_real_coefficients(kSturmTolerance))
    throw DomainError("root counting requires real coefficients");
  if (p.is_zero()) throw DomainError("root counting on the zero polynomial");
  Real r = p.real_coefficients();
  drop_small_leading(r, max_abs(r));
  return r;
}

}  // namespace

std::vector<std::vector<double>> sturm_chain(const Polynomial& p) {
  Real p0 = checked_real(p);
  std::vector<Real> chain;
  normalize(p0);
  chain.push_back(p0);
  if (p0.size() == 1) return chain;
  Real p1(p0.size() - 1);
  for (std::size_t k = 1; k < p0.size(); ++k) p1[k - 1] = static_cast<double>(k) * p0[k];
  normalize(p1);
  chain.push_back(p1);
  while (chain.back().size() > 1) {
    Real r = remainder(chain[chain.size() - 2], chain.back());
    if (is_zero(r)) break;
    for (double& c : r) c = -c;
    normalize(r);
    chain.push_back(std::move(r));
  }
  return chain;
}

std::size_t count_real_roots(const Polynomial& p, double lo, double hi) {
  if (!(lo < hi)) throw DomainError("count_real_roots: need lo < hi");
  const auto chain = sturm_chain(p);
  if (chain.front().size() == 1) return 0;
  const int a = std::isinf(lo) ? sign_changes_at_infinity(chain, lo > 0) : sign_changes(chain, lo);
  const int b = std::isinf(hi) ? sign_changes_at_infinity(chain, hi > 0) : sign_changes(chain, hi);
  return static_cast<std::size_t>(std::max(0, a - b));
}

double root_bound(const Polynomial& p) {
  const auto c = p.coefficients();
  const double lead = std::abs(c.back());
  double m = 0.0;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) m = std::max(m, std::abs(c[k]) / lead);
  return 1.0 + m;
}

std::vector<double> real_roots(const Polynomial& p, double lo, double hi, double tol) {
  if (!(lo < hi)) throw DomainError("real_roots: need lo < hi");
  const auto chain = sturm_chain(p);
  std::vector<double> roots;
  if (chain.front().size() == 1) return roots;
  const double bound = root_bound(p);
  lo = std::max(lo, -bound - 1.0);
  hi = std::min(hi, bound + 1.0);
  if (!(lo < hi)) return roots;

  const Real& f = chain.front();
  Real df(f.size() - 1);
  for (std::size_t k = 1; k < f.size(); ++k) df[k - 1] = static_cast<double>(k) * f[k];
  struct Interval { double lo, hi; int vlo, vhi; };
  std::vector<Interval> stack{{lo, hi, sign_changes(chain, lo), sign_changes(chain, hi)}};
  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    const int count = iv.vlo - iv.vhi;
    if (count <= 0) continue;
    const double width_tol = tol * std::max(1.0, std::max(std::abs(iv.lo), std::abs(iv.hi)));
    if (count == 1 || iv.hi - iv.lo <= width_tol) {
      // Narrow the single-root bracket by Sturm bisection, then polish.
      double a = iv.lo, b = iv.hi;
      int va = iv.vlo;
      for (int it = 0; it < 200 && b - a > width_tol; ++it) {
        const double mid = 0.5 * (a + b);
        const int vm = sign_changes(chain, mid);
        if (va - vm >= 1) {
          b = mid;
        } else {
          a = mid;
          va = vm;
        }
      }
      double x = 0.5 * (a + b);
      for (int it = 0; it < 3; ++it) {
        const double d = eval(df, x);
        if (d == 0.0) break;
        const double nx = x - eval(f, x) / d;
        if (!(nx > iv.lo && nx <= iv.hi)) break;
        x = nx;
      }
      roots.push_back(x);
      continue;
    }
    const double mid = 0.5 * (iv.lo + iv.hi);
    const int vm = sign_changes(chain, mid);
    stack.push_back({iv.lo, mid, iv.vlo, vm});
    stack.push_back({mid, iv.hi, vm, iv.vhi});
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace rexosc::poly

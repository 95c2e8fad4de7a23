#include "rexosc/poly/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "rexosc/errors.hpp"

namespace rexosc::poly {

Polynomial::Polynomial() : coeffs_{cplx{}} {}

Polynomial::Polynomial(std::vector<cplx> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<double> real_coefficients)
    : coeffs_(real_coefficients.begin(), real_coefficients.end()) {
  trim();
}

Polynomial Polynomial::constant(cplx c) { return Polynomial(std::vector<cplx>{c}); }

Polynomial Polynomial::monomial(std::size_t degree, cplx c) {
  std::vector<cplx> v(degree + 1, cplx{});
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == cplx{}) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(cplx{});
}

cplx Polynomial::operator()(cplx z) const noexcept {
  cplx acc = coeffs_.back();
  for (std::size_t k = coeffs_.size() - 1; k-- > 0;) acc = acc * z + coeffs_[k];
  return acc;
}

bool Polynomial::has_real_coefficients(double tol) const noexcept {
  double scale = 0.0;
  for (const cplx& c : coeffs_) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return true;
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [&](const cplx& c) { return std::abs(c.imag()) <= tol * scale; });
}

std::vector<double> Polynomial::real_coefficients() const {
  if (!has_real_coefficients())
    throw DomainError("polynomial has non-real coefficients");
  std::vector<double> out(coeffs_.size());
  std::transform(coeffs_.begin(), coeffs_.end(), out.begin(), [](const cplx& c) { return c.real(); });
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), cplx{});
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), cplx{});
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(cplx s) {
  for (cplx& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<cplx> out(a.coeffs_.size() + b.coeffs_.size() - 1, cplx{});
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

cplx evaluate(const Polynomial& p, cplx z) { return p(z); }

Polynomial derivative(const Polynomial& p) {
  const auto c = p.coefficients();
  if (c.size() == 1) return Polynomial();
  std::vector<cplx> d(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = static_cast<double>(k) * c[k];
  return Polynomial(std::move(d));
}

Polynomial compose_affine(const Polynomial& p, cplx scale, cplx shift) {
  // Horner in polynomial arithmetic: q = (...(c_n * t + c_{n-1}) * t + ...), t = scale x + shift.
  const Polynomial t(std::vector<cplx>{shift, scale});
  const auto c = p.coefficients();
  Polynomial acc = Polynomial::constant(c.back());
  for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * t + Polynomial::constant(c[k]);
  return acc;
}

}  // namespace rexosc::poly

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace rexosc::poly {

using cplx = std::complex<double>;

/// Dense univariate polynomial with complex coefficients in ascending degree.
/// The zero polynomial is stored as the single coefficient 0.
class Polynomial {
 public:
  Polynomial();
  explicit Polynomial(std::vector<cplx> coefficients);
  Polynomial(std::initializer_list<double> real_coefficients);

  static Polynomial constant(cplx c);
  static Polynomial monomial(std::size_t degree, cplx c = 1.0);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == cplx{}; }
  std::span<const cplx> coefficients() const noexcept { return coeffs_; }
  cplx coefficient(std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : cplx{}; }
  cplx leading() const noexcept { return coeffs_.back(); }

  /// Horner evaluation.
  cplx operator()(cplx z) const noexcept;

  /// True when every imaginary part is within `tol` of zero, relative to the largest coefficient.
  bool has_real_coefficients(double tol = 1e-12) const noexcept;
  std::vector<double> real_coefficients() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(cplx s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, cplx s) { return a *= s; }
  friend Polynomial operator*(cplx s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();
  std::vector<cplx> coeffs_;
};

cplx evaluate(const Polynomial& p, cplx z);
Polynomial derivative(const Polynomial& p);

/// p(x) -> p(scale * x + shift).
Polynomial compose_affine(const Polynomial& p, cplx scale, cplx shift);

}  // namespace rexosc::poly

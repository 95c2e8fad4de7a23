#include "rexosc/numerics/kernels.hpp"

namespace rexosc::numerics::kernels {
namespace {

void d2_accumulate(const cplx* center, std::ptrdiff_t stride, std::size_t count, double inv_h2,
                   cplx* out) {
  for (std::size_t j = 0; j < count; ++j) {
    const cplx* c = center + j;
    // Difference form (centre weight = -2 * sum of the rest); exact zero on constants.
    double re = 0.0;
    double im = 0.0;
    for (int k = 1; k <= kStencilHalfWidth; ++k) {
      const cplx& up = c[k * stride];
      const cplx& dn = c[-k * stride];
      re += kD2Weights[k] * ((up.real() - c[0].real()) + (dn.real() - c[0].real()));
      im += kD2Weights[k] * ((up.imag() - c[0].imag()) + (dn.imag() - c[0].imag()));
    }
    out[j] += cplx(inv_h2 * re, inv_h2 * im);
  }
}

cplx weighted_sum(const double* w, const cplx* a, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += w[i] * a[i].real();
    im += w[i] * a[i].imag();
  }
  return {re, im};
}

cplx weighted_product_sum(const double* w, const cplx* a, const cplx* b, std::size_t n,
                          bool conjugate_a) {
  const double sign = conjugate_a ? -1.0 : 1.0;
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real();
    const double ai = sign * a[i].imag();
    const double br = b[i].real();
    const double bi = b[i].imag();
    re += w[i] * (ar * br - ai * bi);
    im += w[i] * (ar * bi + ai * br);
  }
  return {re, im};
}

void schrodinger_residual(const cplx* laplacian, const cplx* potential, const cplx* psi, cplx* out,
                          std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double vr = potential[i].real();
    const double vi = potential[i].imag();
    const double pr = psi[i].real();
    const double pi = psi[i].imag();
    out[i] = cplx(vr * pr - vi * pi - laplacian[i].real(), vr * pi + vi * pr - laplacian[i].imag());
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{Isa::scalar, d2_accumulate, weighted_sum, weighted_product_sum,
                                 schrodinger_residual};
  return table;
}

}  // namespace rexosc::numerics::kernels

// aarch64 only: one complex<double> per float64x2_t.
#include <arm_neon.h>

#include "kernels_internal.hpp"

namespace rexosc::numerics::kernels::detail {
namespace {

inline const double* as_doubles(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* as_doubles(cplx* p) { return reinterpret_cast<double*>(p); }

// (ar + i ai)(br + i bi); conj flips the sign of ai.
inline float64x2_t complex_mul(float64x2_t a, float64x2_t b, bool conjugate_a) {
  const float64x2_t a_re = vdupq_laneq_f64(a, 0);
  double ai = vgetq_lane_f64(a, 1);
  if (conjugate_a) ai = -ai;
  const float64x2_t b_swapped = vextq_f64(b, b, 1);               // [bi, br]
  const float64x2_t signed_ai = {-ai, ai};
  return vfmaq_f64(vmulq_f64(a_re, b), signed_ai, b_swapped);     // [ar br - ai bi, ar bi + ai br]
}

void d2_accumulate(const cplx* center, std::ptrdiff_t stride, std::size_t count, double inv_h2,
                   cplx* out) {
  const std::ptrdiff_t s = 2 * stride;
  for (std::size_t j = 0; j < count; ++j) {
    const double* c = as_doubles(center + j);
    const float64x2_t mid = vld1q_f64(c);
    float64x2_t acc = vdupq_n_f64(0.0);
    for (int k = 1; k <= kStencilHalfWidth; ++k)
      acc = vfmaq_n_f64(acc, vaddq_f64(vsubq_f64(vld1q_f64(c + k * s), mid), vsubq_f64(vld1q_f64(c - k * s), mid)),
                        kD2Weights[k]);
    double* o = as_doubles(out + j);
    vst1q_f64(o, vfmaq_n_f64(vld1q_f64(o), acc, inv_h2));
  }
}

cplx weighted_sum(const double* w, const cplx* a, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < n; ++i) acc = vfmaq_n_f64(acc, vld1q_f64(as_doubles(a + i)), w[i]);
  return {vgetq_lane_f64(acc, 0), vgetq_lane_f64(acc, 1)};
}

cplx weighted_product_sum(const double* w, const cplx* a, const cplx* b, std::size_t n,
                          bool conjugate_a) {
  float64x2_t acc = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t prod =
        complex_mul(vld1q_f64(as_doubles(a + i)), vld1q_f64(as_doubles(b + i)), conjugate_a);
    acc = vfmaq_n_f64(acc, prod, w[i]);
  }
  return {vgetq_lane_f64(acc, 0), vgetq_lane_f64(acc, 1)};
}

void schrodinger_residual(const cplx* laplacian, const cplx* potential, const cplx* psi, cplx* out,
                          std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t vpsi =
        complex_mul(vld1q_f64(as_doubles(potential + i)), vld1q_f64(as_doubles(psi + i)), false);
    vst1q_f64(as_doubles(out + i), vsubq_f64(vpsi, vld1q_f64(as_doubles(laplacian + i))));
  }
}

}  // namespace

const KernelTable& neon_table() {
  static const KernelTable table{Isa::neon, d2_accumulate, weighted_sum, weighted_product_sum,
                                 schrodinger_residual};
  return table;
}

}  // namespace rexosc::numerics::kernels::detail

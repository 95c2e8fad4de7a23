// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include "kernels_internal.hpp"

namespace rexosc::numerics::kernels::detail {
namespace {

inline const double* as_doubles(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* as_doubles(cplx* p) { return reinterpret_cast<double*>(p); }

// [w0, w0, w1, w1] from two consecutive weights.
inline __m256d duplicate_pairs(const double* w) {
  const __m128d pair = _mm_loadu_pd(w);
  return _mm256_permute4x64_pd(_mm256_castpd128_pd256(pair), 0b01010000);
}

inline cplx horizontal_complex_sum(__m256d acc) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  return {lanes[0] + lanes[2], lanes[1] + lanes[3]};
}

void d2_accumulate(const cplx* center, std::ptrdiff_t stride, std::size_t count, double inv_h2,
                   cplx* out) {
  const __m256d w1 = _mm256_set1_pd(kD2Weights[1]);
  const __m256d w2 = _mm256_set1_pd(kD2Weights[2]);
  const __m256d w3 = _mm256_set1_pd(kD2Weights[3]);
  const __m256d w4 = _mm256_set1_pd(kD2Weights[4]);
  const __m256d scale = _mm256_set1_pd(inv_h2);
  const std::ptrdiff_t s = 2 * stride;  // in doubles

  std::size_t j = 0;
  for (; j + 2 <= count; j += 2) {
    const double* c = as_doubles(center + j);
    const __m256d mid = _mm256_loadu_pd(c);
    auto pair = [&](std::ptrdiff_t off) {
      return _mm256_add_pd(_mm256_sub_pd(_mm256_loadu_pd(c + off), mid),
                           _mm256_sub_pd(_mm256_loadu_pd(c - off), mid));
    };
    __m256d acc = _mm256_mul_pd(w1, pair(s));
    acc = _mm256_fmadd_pd(w2, pair(2 * s), acc);
    acc = _mm256_fmadd_pd(w3, pair(3 * s), acc);
    acc = _mm256_fmadd_pd(w4, pair(4 * s), acc);
    double* o = as_doubles(out + j);
    _mm256_storeu_pd(o, _mm256_fmadd_pd(scale, acc, _mm256_loadu_pd(o)));
  }
  if (j < count) scalar_table().d2_accumulate(center + j, stride, count - j, inv_h2, out + j);
}

cplx weighted_sum(const double* w, const cplx* a, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(duplicate_pairs(w + i), _mm256_loadu_pd(as_doubles(a + i)), acc0);
    acc1 = _mm256_fmadd_pd(duplicate_pairs(w + i + 2), _mm256_loadu_pd(as_doubles(a + i + 2)), acc1);
  }
  cplx total = horizontal_complex_sum(_mm256_add_pd(acc0, acc1));
  if (i < n) total += scalar_table().weighted_sum(w + i, a + i, n - i);
  return total;
}

// a * b (or conj(a) * b) for two packed complex values.
inline __m256d complex_mul(__m256d a, __m256d b, bool conjugate_a) {
  const __m256d a_re = _mm256_movedup_pd(a);
  const __m256d a_im = _mm256_permute_pd(a, 0b1111);
  const __m256d b_swapped = _mm256_permute_pd(b, 0b0101);
  const __m256d cross = _mm256_mul_pd(a_im, b_swapped);
  return conjugate_a ? _mm256_fmsubadd_pd(a_re, b, cross) : _mm256_fmaddsub_pd(a_re, b, cross);
}

cplx weighted_product_sum(const double* w, const cplx* a, const cplx* b, std::size_t n,
                          bool conjugate_a) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d prod =
        complex_mul(_mm256_loadu_pd(as_doubles(a + i)), _mm256_loadu_pd(as_doubles(b + i)),
                    conjugate_a);
    acc = _mm256_fmadd_pd(duplicate_pairs(w + i), prod, acc);
  }
  cplx total = horizontal_complex_sum(acc);
  if (i < n) total += scalar_table().weighted_product_sum(w + i, a + i, b + i, n - i, conjugate_a);
  return total;
}

void schrodinger_residual(const cplx* laplacian, const cplx* potential, const cplx* psi, cplx* out,
                          std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vpsi = complex_mul(_mm256_loadu_pd(as_doubles(potential + i)),
                                     _mm256_loadu_pd(as_doubles(psi + i)), false);
    _mm256_storeu_pd(as_doubles(out + i),
                     _mm256_sub_pd(vpsi, _mm256_loadu_pd(as_doubles(laplacian + i))));
  }
  if (i < n)
    scalar_table().schrodinger_residual(laplacian + i, potential + i, psi + i, out + i, n - i);
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{Isa::avx2, d2_accumulate, weighted_sum, weighted_product_sum,
                                 schrodinger_residual};
  return table;
}

}  // namespace rexosc::numerics::kernels::detail

#pragma once

// Data-parallel inner loops shared by the residual, quadrature and overlap code.
//
// Every kernel has a scalar reference implementation plus optional AVX2+FMA
// (x86-64) and NEON (aarch64) variants. The variant is chosen once at start-up
// from the host CPU; REXOSC_SIMD=scalar|avx2|neon overrides the choice.
// Complex arrays are interleaved (re, im) doubles, i.e. std::complex<double>.

#include <complex>
#include <cstddef>

namespace rexosc::numerics::kernels {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2, neon };

/// Eighth-order central second-difference weights, offsets 0..4 (symmetric).
inline constexpr double kD2Weights[5] = {-205.0 / 72.0, 8.0 / 5.0, -1.0 / 5.0, 8.0 / 315.0,
                                         -1.0 / 560.0};
inline constexpr int kStencilHalfWidth = 4;

struct KernelTable {
  Isa isa;
  // out[j] += inv_h2 * sum_k w_|k| * center[j + k*stride], k = -4..4, j in [0, count)
  void (*d2_accumulate)(const cplx* center, std::ptrdiff_t stride, std::size_t count,
                        double inv_h2, cplx* out);
  // sum_i w[i] * a[i]
  cplx (*weighted_sum)(const double* w, const cplx* a, std::size_t n);
  // sum_i w[i] * a[i] * b[i]   (or conj(a[i]) * b[i] when conjugate_a)
  cplx (*weighted_product_sum)(const double* w, const cplx* a, const cplx* b, std::size_t n,
                               bool conjugate_a);
  // out[i] = -laplacian[i] + potential[i] * psi[i]
  void (*schrodinger_residual)(const cplx* laplacian, const cplx* potential, const cplx* psi,
                               cplx* out, std::size_t n);
};

const KernelTable& scalar_table();

/// Table for `isa`, or nullptr when the variant was not compiled in or the
/// host CPU cannot run it.
const KernelTable* table_for(Isa isa);

/// Best variant the host supports, honoring REXOSC_SIMD.
Isa detect_isa();

/// Kernels used by the rest of the library.
const KernelTable& active();

/// Force a variant (tests, benchmarks). Throws DomainError if unavailable.
void select(Isa isa);

const char* name(Isa isa);

}  // namespace rexosc::numerics::kernels

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "kernels_internal.hpp"
#include "rexosc/errors.hpp"

namespace rexosc::numerics::kernels {
namespace {

bool host_supports(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(REXOSC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::neon:
#if defined(REXOSC_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{table_for(detect_isa())};
  return table;
}

}  // namespace

const KernelTable* table_for(Isa isa) {
  if (!host_supports(isa)) return nullptr;
  switch (isa) {
    case Isa::scalar:
      return &scalar_table();
#if defined(REXOSC_HAVE_AVX2)
    case Isa::avx2:
      return &detail::avx2_table();
#endif
#if defined(REXOSC_HAVE_NEON)
    case Isa::neon:
      return &detail::neon_table();
#endif
    default:
      return nullptr;
  }
}

Isa detect_isa() {
  if (const char* forced = std::getenv("REXOSC_SIMD")) {
    const std::string_view v(forced);
    if (v == "scalar") return Isa::scalar;
    if (v == "avx2" && host_supports(Isa::avx2)) return Isa::avx2;
    if (v == "neon" && host_supports(Isa::neon)) return Isa::neon;
  }
  if (host_supports(Isa::avx2)) return Isa::avx2;
  if (host_supports(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

void select(Isa isa) {
  const KernelTable* t = table_for(isa);
  if (t == nullptr) throw DomainError(std::string("kernel variant unavailable: ") + name(isa));
  current().store(t, std::memory_order_release);
}

const char* name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

}  // namespace rexosc::numerics::kernels

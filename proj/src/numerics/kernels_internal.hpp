#pragma once

#include "rexosc/numerics/kernels.hpp"

namespace rexosc::numerics::kernels::detail {

// Defined only when the matching translation unit is compiled in.
const KernelTable& avx2_table();
const KernelTable& neon_table();

}  // namespace rexosc::numerics::kernels::detail

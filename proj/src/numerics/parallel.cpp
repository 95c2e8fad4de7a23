#include "rexosc/numerics/parallel.hpp"

#include <cstdlib>
#include <string>

namespace rexosc::numerics {

std::size_t thread_cap() {
  std::size_t cap = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("REXOSC_THREADS")) {
    try {
      const long requested = std::stol(env);
      if (requested >= 1) cap = std::min(cap, static_cast<std::size_t>(requested));
    } catch (const std::exception&) {
      // unparsable value: keep the hardware default
    }
  }
  return cap;
}

}  // namespace rexosc::numerics

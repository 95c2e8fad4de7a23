#include "rexosc/transform/coupling.hpp"

#include <string>

#include "rexosc/errors.hpp"

namespace rexosc::transform {

std::string_view to_string(Flavor f) { return f == Flavor::real ? "real" : "imaginary"; }

Flavor parse_flavor(std::string_view text) {
  if (text == "real" || text == "r") return Flavor::real;
  if (text == "imaginary" || text == "imag" || text == "i") return Flavor::imaginary;
  throw DomainError("unknown coupling flavor '" + std::string(text) + "' (expected real or imaginary)");
}

cplx principal_sqrt(cplx z) {
  if (z.imag() == 0.0) z = cplx(z.real(), 0.0);
  return std::sqrt(z);
}

}  // namespace rexosc::transform

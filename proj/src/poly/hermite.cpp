#include "rexosc/poly/hermite.hpp"

#include <string>

#include "rexosc/errors.hpp"

namespace rexosc::poly {
namespace {

void check_index(int n, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + ": index must be non-negative");
  if (n > kMaxHermiteIndex)
    throw OverflowError(std::string(what) + ": index " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxHermiteIndex));
}

// Integer recurrence on doubles; every intermediate is an exact integer below 2^53 up to n = 30
// for the leading terms, which is what the guard protects.
std::vector<double> hermite_coefficients(int n) {
  std::vector<double> prev{1.0};
  if (n == 0) return prev;
  std::vector<double> cur{0.0, 2.0};
  for (int k = 1; k < n; ++k) {
    std::vector<double> next(k + 2, 0.0);
    for (int j = 0; j <= k; ++j) next[j + 1] += 2.0 * cur[j];
    for (int j = 0; j <= k - 1; ++j) next[j] -= 2.0 * k * prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

Polynomial hermite(int n) {
  check_index(n, "hermite");
  auto h = hermite_coefficients(n);
  return Polynomial(std::vector<cplx>(h.begin(), h.end()));
}

Polynomial pseudo_hermite(int m) {
  check_index(m, "pseudo_hermite");
  // (-i)^m H_m(ix) has coefficient h_k i^(k-m); only k with k = m (mod 2) survive and
  // i^(k-m) = (-1)^((m-k)/2).
  auto h = hermite_coefficients(m);
  std::vector<cplx> c(h.size(), cplx{});
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (h[k] == 0.0) continue;
    const int half = (m - static_cast<int>(k)) / 2;
    c[k] = (half % 2 == 0) ? h[k] : -h[k];
  }
  return Polynomial(std::move(c));
}

Polynomial exceptional_hermite(int m, int index) {
  check_index(m, "exceptional_hermite");
  if (index < 0) throw DomainError("exceptional_hermite: index must be non-negative");
  if (index == 0) return Polynomial::constant(1.0);
  const int n = index - 1;
  check_index(index, "exceptional_hermite");
  const Polynomial seed = pseudo_hermite(m);
  return seed * hermite(n + 1) + hermite(n) * derivative(seed);
}

}  // namespace rexosc::poly

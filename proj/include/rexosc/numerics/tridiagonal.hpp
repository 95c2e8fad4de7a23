#pragma once

#include <cstddef>
#include <vector>

namespace rexosc::numerics {

/// Real symmetric tridiagonal matrix; off_diagonal[i] couples rows i and i+1.
class TridiagonalMatrix {
 public:
  TridiagonalMatrix(std::vector<double> diagonal, std::vector<double> off_diagonal);

  std::size_t size() const noexcept { return diagonal_.size(); }
  const std::vector<double>& diagonal() const noexcept { return diagonal_; }
  const std::vector<double>& off_diagonal() const noexcept { return off_diagonal_; }

 private:
  std::vector<double> diagonal_;
  std::vector<double> off_diagonal_;
};

/// The `k` smallest eigenvalues in ascending order (implicit-shift QL).
/// Throws NumericalFailure if an eigenvalue fails to converge in 60 sweeps.
std::vector<double> lowest_eigenvalues(const TridiagonalMatrix& matrix, std::size_t k);

}  // namespace rexosc::numerics

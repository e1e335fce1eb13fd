#pragma once

#include <vector>

#include "qca/matcore.hpp"

namespace qca {

/// Hermitian, positive semidefinite, unit-trace matrix.
class DensityMatrix {
 public:
  /// Validates Hermitian (1e-9), eigenvalues >= -1e-10, trace 1 (1e-9).
  /// The stored matrix is the Hermitian part of the input.
  explicit DensityMatrix(const ComplexMatrix& m);

  /// |psi><psi|
  static DensityMatrix pure(const StateVector& psi);
  /// I / n
  static DensityMatrix maximally_mixed(int n);
  /// diag(p_0, ..., p_{n-1}); the weights must already sum to 1.
  static DensityMatrix diagonal(const std::vector<double>& weights);

  [[nodiscard]] int size() const { return static_cast<int>(m_.rows()); }
  [[nodiscard]] const ComplexMatrix& matrix() const { return m_; }
  /// Ascending eigenvalues.
  [[nodiscard]] RealVector eigenvalues() const;

 private:
  ComplexMatrix m_;
};

/// Sizes of eigenvalue clusters of D (ascending eigenvalue order).
/// Throws ConditioningError if two eigenvalues are neither clearly equal
/// nor clearly separated.
std::vector<int> eigenvalue_multiplicities(const DensityMatrix& d, const Tolerances& tol = {});

}  // namespace qca

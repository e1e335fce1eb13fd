#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qca/errors.hpp"

namespace qca {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Numerical thresholds shared by all decision procedures.
///
/// Every integer dimension the library reports goes through the rank rule
/// controlled by `rank_rel`. The defaults are tuned for n <= 16.
struct Tolerances {
  /// sigma counts toward rank iff sigma > max(rows, cols) * scale * rank_rel,
  /// where scale is the larger of sigma_max and the caller's reference scale.
  double rank_rel = 1e-9;
  /// A "skew-Hermitian" input is accepted iff |X + X*| <= skew_accept * (1 + |X|).
  double skew_accept = 1e-8;
  /// Closure keeps a bracket iff its residual exceeds closure_accept * (1 + |bracket|).
  double closure_accept = 1e-9;
  /// Eigenvalues closer than this are one cluster.
  double eig_cluster = 1e-8;
  /// Gaps in (eig_cluster, eig_refuse] are refused as ill-conditioned.
  double eig_refuse = 1e-6;
};

/// Complex state on the unit sphere of C^n.
class StateVector {
 public:
  /// Throws ValidationError unless |amplitudes| = 1 within 1e-10.
  explicit StateVector(ComplexVector amplitudes);

  /// Rescales a nonzero vector onto the sphere.
  static StateVector normalized(const ComplexVector& v);
  /// Computational basis vector e_k (0-based).
  static StateVector basis(int n, int k);

  [[nodiscard]] int size() const { return static_cast<int>(amps_.size()); }
  [[nodiscard]] const ComplexVector& amplitudes() const { return amps_; }

 private:
  ComplexVector amps_;
};

/// XY - YX.
ComplexMatrix bracket(const ComplexMatrix& x, const ComplexMatrix& y);

/// Re tr(X* Y).
double hs_inner(const ComplexMatrix& x, const ComplexMatrix& y);

/// (X - X*) / 2.
ComplexMatrix skew_project(const ComplexMatrix& x);

/// |X + X*|_F; zero iff X is skew-Hermitian.
double skew_defect(const ComplexMatrix& x);

bool is_skew_hermitian(const ComplexMatrix& x, const Tolerances& tol = {});

/// Accepts X within tolerance and returns skew_project(X); throws ValidationError otherwise.
ComplexMatrix validated_skew(const ComplexMatrix& x, const Tolerances& tol = {},
                             const char* what = "matrix");

void require_square(const ComplexMatrix& x, const char* what);
void require_same_square(const ComplexMatrix& x, const ComplexMatrix& y);

/// Flattens a matrix to (Re entries; Im entries), column-major, length 2*rows*cols.
/// hs_inner(X, Y) equals the dot product of the two coordinate vectors.
RealVector real_coords(const ComplexMatrix& x);
/// Inverse of real_coords for an n x n matrix.
ComplexMatrix from_real_coords(const RealVector& v, int n);

/// Rank of the columns of `columns` under the shared threshold rule.
/// `reference_scale` guards against counting pure roundoff when every
/// column is numerically zero; pass the natural magnitude of the inputs.
int numerical_rank(const RealMatrix& columns, double reference_scale,
                   const Tolerances& tol = {});

/// Dimension of the real span of `vectors`.
int numerical_rank(std::span<const ComplexMatrix> vectors, const Tolerances& tol = {});

/// exp(S) for skew-Hermitian S via the eigendecomposition of the Hermitian -iS.
ComplexMatrix expm_skew(const ComplexMatrix& s, const Tolerances& tol = {});

/// Haar-distributed unitary from QR of a complex Ginibre matrix; deterministic per seed.
ComplexMatrix haar_random_unitary(int n, std::uint64_t seed);

/// |U* U - I|_F.
double unitarity_defect(const ComplexMatrix& u);

}  // namespace qca

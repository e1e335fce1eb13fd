#include "qca/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace qca {

StateVector::StateVector(ComplexVector amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() == 0) {
    throw ValidationError("state vector must have at least one amplitude");
  }
  if (!amps_.allFinite()) {
    throw ValidationError("state vector has non-finite amplitudes");
  }
  const double norm = amps_.norm();
  if (std::abs(norm * norm - 1.0) > 1e-10) {
    std::ostringstream msg;
    msg << "state vector is not normalized (|psi|^2 = " << norm * norm << ")";
    throw ValidationError(msg.str());
  }
}

StateVector StateVector::normalized(const ComplexVector& v) {
  const double norm = v.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw ValidationError("cannot normalize a zero or non-finite vector");
  }
  return StateVector(v / norm);
}

StateVector StateVector::basis(int n, int k) {
  if (n < 1 || k < 0 || k >= n) {
    throw PreconditionError("basis index out of range");
  }
  ComplexVector e = ComplexVector::Zero(n);
  e(k) = 1.0;
  return StateVector(std::move(e));
}

void require_square(const ComplexMatrix& x, const char* what) {
  if (x.rows() != x.cols() || x.rows() == 0) {
    std::ostringstream msg;
    msg << what << " must be a nonempty square matrix, got " << x.rows() << "x" << x.cols();
    throw ShapeError(msg.str());
  }
}

void require_same_square(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_square(x, "left operand");
  require_square(y, "right operand");
  if (x.rows() != y.rows()) {
    std::ostringstream msg;
    msg << "dimension mismatch: " << x.rows() << " vs " << y.rows();
    throw ShapeError(msg.str());
  }
}

ComplexMatrix bracket(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_square(x, y);
  ComplexMatrix r = x * y;
  r.noalias() -= y * x;
  return r;
}

double hs_inner(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_square(x, y);
  // Re tr(X* Y) = sum Re(conj(x_jk) y_jk)
  return (x.array().conjugate() * y.array()).real().sum();
}

ComplexMatrix skew_project(const ComplexMatrix& x) {
  require_square(x, "matrix");
  return 0.5 * (x - x.adjoint());
}

double skew_defect(const ComplexMatrix& x) {
  require_square(x, "matrix");
  return (x + x.adjoint()).norm();
}

bool is_skew_hermitian(const ComplexMatrix& x, const Tolerances& tol) {
  return x.allFinite() && skew_defect(x) <= tol.skew_accept * (1.0 + x.norm());
}

ComplexMatrix validated_skew(const ComplexMatrix& x, const Tolerances& tol, const char* what) {
  require_square(x, what);
  if (!x.allFinite()) {
    throw ValidationError(std::string(what) + " has non-finite entries");
  }
  if (!is_skew_hermitian(x, tol)) {
    std::ostringstream msg;
    msg << what << " is not skew-Hermitian (|X + X*| = " << skew_defect(x) << ")";
    throw ValidationError(msg.str());
  }
  return skew_project(x);
}

RealVector real_coords(const ComplexMatrix& x) {
  const Eigen::Index m = x.size();
  RealVector v(2 * m);
  v.head(m) = x.real().reshaped();
  v.tail(m) = x.imag().reshaped();
  return v;
}

ComplexMatrix from_real_coords(const RealVector& v, int n) {
  const Eigen::Index m = static_cast<Eigen::Index>(n) * n;
  if (v.size() != 2 * m) {
    throw ShapeError("coordinate vector length does not match 2n^2");
  }
  ComplexMatrix x(n, n);
  x.real() = v.head(m).reshaped(n, n);
  x.imag() = v.tail(m).reshaped(n, n);
  return x;
}

int numerical_rank(const RealMatrix& columns, double reference_scale, const Tolerances& tol) {
  if (columns.cols() == 0 || columns.rows() == 0) {
    return 0;
  }
  Eigen::JacobiSVD<RealMatrix> svd(columns);
  const auto& sv = svd.singularValues();
  const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
  const double scale = std::max(sigma_max, reference_scale);
  const double dim = static_cast<double>(std::max(columns.rows(), columns.cols()));
  const double threshold = dim * scale * tol.rank_rel;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > threshold) {
      ++rank;
    }
  }
  return rank;
}

int numerical_rank(std::span<const ComplexMatrix> vectors, const Tolerances& tol) {
  if (vectors.empty()) {
    throw PreconditionError("numerical_rank needs a nonempty list");
  }
  const auto rows = vectors.front().rows();
  const auto cols = vectors.front().cols();
  RealMatrix stacked(2 * rows * cols, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k].rows() != rows || vectors[k].cols() != cols) {
      throw ShapeError("numerical_rank: mismatched matrix dimensions");
    }
    stacked.col(static_cast<Eigen::Index>(k)) = real_coords(vectors[k]);
  }
  // Every column norm is <= sigma_max, so the pure relative rule applies.
  return numerical_rank(stacked, 0.0, tol);
}

ComplexMatrix expm_skew(const ComplexMatrix& s, const Tolerances& tol) {
  const ComplexMatrix skew = validated_skew(s, tol, "exponent");
  const Complex i{0.0, 1.0};
  // -iS is Hermitian: -iS = V diag(w) V*, so S = V diag(i w) V*.
  const ComplexMatrix h = -i * skew;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (h + h.adjoint()));
  if (es.info() != Eigen::Success) {
    throw ConditioningError("eigendecomposition failed in expm_skew");
  }
  const ComplexVector phases = (i * es.eigenvalues().cast<Complex>()).array().exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

ComplexMatrix haar_random_unitary(int n, std::uint64_t seed) {
  if (n < 1) {
    throw PreconditionError("haar_random_unitary needs n >= 1");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix z(n, n);
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      z(r, c) = Complex(re, im) / std::sqrt(2.0);
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase of each column so that diag(R) is positive real.
  for (int k = 0; k < n; ++k) {
    const double mag = std::abs(r(k, k));
    const Complex ph = mag > 0.0 ? r(k, k) / mag : Complex(1.0, 0.0);
    q.col(k) *= ph;
  }
  return q;
}

double unitarity_defect(const ComplexMatrix& u) {
  require_square(u, "matrix");
  return (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).norm();
}

}  // namespace qca

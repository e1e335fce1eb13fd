#include "qca/density.hpp"

#include <cmath>
#include <sstream>

namespace qca {

DensityMatrix::DensityMatrix(const ComplexMatrix& m) {
  require_square(m, "density matrix");
  if (!m.allFinite()) {
    throw ValidationError("density matrix has non-finite entries");
  }
  const double herm_defect = (m - m.adjoint()).norm();
  if (herm_defect > 1e-9) {
    std::ostringstream msg;
    msg << "density matrix is not Hermitian (|D - D*| = " << herm_defect << ")";
    throw ValidationError(msg.str());
  }
  m_ = 0.5 * (m + m.adjoint());
  const double tr = m_.trace().real();
  if (std::abs(tr - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << "density matrix trace is " << tr << ", expected 1";
    throw ValidationError(msg.str());
  }
  const RealVector ev = eigenvalues();
  if (ev(0) < -1e-10) {
    std::ostringstream msg;
    msg << "density matrix has negative eigenvalue " << ev(0);
    throw ValidationError(msg.str());
  }
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  const ComplexVector& a = psi.amplitudes();
  return DensityMatrix(a * a.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int n) {
  if (n < 1) {
    throw PreconditionError("dimension must be positive");
  }
  return DensityMatrix(ComplexMatrix::Identity(n, n) / static_cast<double>(n));
}

DensityMatrix DensityMatrix::diagonal(const std::vector<double>& weights) {
  if (weights.empty()) {
    throw PreconditionError("diagonal density needs at least one weight");
  }
  const auto n = static_cast<Eigen::Index>(weights.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    m(k, k) = weights[static_cast<std::size_t>(k)];
  }
  return DensityMatrix(m);
}

RealVector DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m_, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

std::vector<int> eigenvalue_multiplicities(const DensityMatrix& d, const Tolerances& tol) {
  const RealVector ev = d.eigenvalues();
  std::vector<int> mult{1};
  for (Eigen::Index k = 1; k < ev.size(); ++k) {
    const double gap = ev(k) - ev(k - 1);
    if (gap <= tol.eig_cluster) {
      ++mult.back();
    } else if (gap <= tol.eig_refuse) {
      std::ostringstream msg;
      msg << "eigenvalues " << ev(k - 1) << " and " << ev(k)
          << " are nearly degenerate (gap " << gap << "); multiplicities are ill-defined";
      throw ConditioningError(msg.str());
    } else {
      mult.push_back(1);
    }
  }
  return mult;
}

}  // namespace qca

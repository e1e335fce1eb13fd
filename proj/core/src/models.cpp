#include "qca/models.hpp"

#include <cmath>
#include <sstream>

namespace qca {
namespace {

const Complex kI{0.0, 1.0};

ComplexMatrix embed_blocks(const ComplexMatrix& tl, const ComplexMatrix& tr,
                           const ComplexMatrix& bl, const ComplexMatrix& br) {
  const auto k = tl.rows();
  ComplexMatrix out(2 * k, 2 * k);
  out.topLeftCorner(k, k) = tl;
  out.topRightCorner(k, k) = tr;
  out.bottomLeftCorner(k, k) = bl;
  out.bottomRightCorner(k, k) = br;
  return out;
}

double require_param(const ModelSpec& spec, const std::string& name) {
  const auto it = spec.parameters.find(name);
  if (it == spec.parameters.end()) {
    throw ParameterError("model family '" + spec.family + "' requires parameter '" + name + "'");
  }
  return it->second;
}

double param_or(const ModelSpec& spec, const std::string& name, double fallback) {
  const auto it = spec.parameters.find(name);
  return it == spec.parameters.end() ? fallback : it->second;
}

SystemModel basis_system(const LieBasis& b, std::string label) {
  const int n = b.n();
  return SystemModel(ComplexMatrix::Zero(n, n), b.elements(), std::move(label));
}

}  // namespace

namespace pauli {
ComplexMatrix identity() { return ComplexMatrix::Identity(2, 2); }
ComplexMatrix x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}
ComplexMatrix y() {
  ComplexMatrix m(2, 2);
  m << 0.0, -kI, kI, 0.0;
  return m;
}
ComplexMatrix z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}
}  // namespace pauli

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

SystemModel single_spin(double omega, bool x_only) {
  std::vector<ComplexMatrix> controls{0.5 * kI * pauli::x()};
  if (!x_only) {
    controls.push_back(0.5 * kI * pauli::y());
  }
  std::ostringstream label;
  label << "single-spin omega=" << omega << (x_only ? " (x control only)" : "");
  return SystemModel(0.5 * omega * kI * pauli::z(), std::move(controls), label.str());
}

SystemModel two_spin(double coupling_j, double gamma1, double gamma2, Coupling coupling) {
  if (coupling_j == 0.0 || !std::isfinite(coupling_j)) {
    throw ParameterError("two-spin coupling J must be finite and nonzero");
  }
  if (!std::isfinite(gamma1) || !std::isfinite(gamma2)) {
    throw ParameterError("gyromagnetic factors must be finite");
  }
  const ComplexMatrix id = pauli::identity();
  const ComplexMatrix s[3] = {pauli::x(), pauli::y(), pauli::z()};

  ComplexMatrix h = kron(s[2], s[2]);
  if (coupling == Coupling::isotropic) {
    h += kron(s[0], s[0]) + kron(s[1], s[1]);
  }
  const ComplexMatrix drift = kI * (coupling_j / 4.0) * h;

  std::vector<ComplexMatrix> controls;
  for (const auto& sk : s) {
    controls.push_back(0.5 * kI * (gamma1 * kron(sk, id) + gamma2 * kron(id, sk)));
  }
  std::ostringstream label;
  label << "two-spin " << (coupling == Coupling::ising ? "ising" : "isotropic")
        << " J=" << coupling_j << " gamma1=" << gamma1 << " gamma2=" << gamma2;
  return SystemModel(drift, std::move(controls), label.str());
}

LieBasis example_sp2_basis() {
  const ComplexMatrix zero = ComplexMatrix::Zero(2, 2);
  std::vector<ComplexMatrix> gens;
  // L: diagonal, purely imaginary.
  for (int a = 0; a < 2; ++a) {
    ComplexMatrix l = ComplexMatrix::Zero(2, 2);
    l(a, a) = kI;
    gens.push_back(embed_blocks(l, zero, zero, -l));
  }
  // Z: zero diagonal, skew-Hermitian.
  for (const Complex z : {Complex(1.0, 0.0), kI}) {
    ComplexMatrix zm(2, 2);
    zm << 0.0, z, -std::conj(z), 0.0;
    gens.push_back(embed_blocks(zm, zero, zero, zm.transpose()));
  }
  // T: diagonal.
  for (int a = 0; a < 2; ++a) {
    for (const Complex t : {Complex(1.0, 0.0), kI}) {
      ComplexMatrix tm = ComplexMatrix::Zero(2, 2);
      tm(a, a) = t;
      gens.push_back(embed_blocks(zero, tm, -tm.conjugate(), zero));
    }
  }
  // C: zero diagonal, antisymmetric.
  for (const Complex c : {Complex(1.0, 0.0), kI}) {
    ComplexMatrix cm(2, 2);
    cm << 0.0, c, -c, 0.0;
    gens.push_back(embed_blocks(zero, cm, cm.conjugate(), zero));
  }
  return lie_closure(gens);
}

ComplexMatrix symplectic_j(int n) {
  if (n < 2 || n % 2 != 0) {
    throw ParameterError("symplectic J needs an even dimension");
  }
  const int k = n / 2;
  ComplexMatrix j = ComplexMatrix::Zero(n, n);
  j.topRightCorner(k, k).setIdentity();
  j.bottomLeftCorner(k, k) = -ComplexMatrix::Identity(k, k);
  return j;
}

LieBasis standard_sp_basis(int k) {
  if (k < 1) {
    throw ParameterError("sp(k) needs k >= 1");
  }
  const ComplexMatrix zero = ComplexMatrix::Zero(k, k);
  std::vector<ComplexMatrix> gens;
  // [[A, 0], [0, conj(A)]] with A in u(k).
  for (int a = 0; a < k; ++a) {
    ComplexMatrix d = ComplexMatrix::Zero(k, k);
    d(a, a) = kI;
    gens.push_back(embed_blocks(d, zero, zero, d.conjugate()));
    for (int b = a + 1; b < k; ++b) {
      ComplexMatrix r = ComplexMatrix::Zero(k, k);
      r(a, b) = 1.0;
      r(b, a) = -1.0;
      gens.push_back(embed_blocks(r, zero, zero, r.conjugate()));
      ComplexMatrix s = ComplexMatrix::Zero(k, k);
      s(a, b) = kI;
      s(b, a) = kI;
      gens.push_back(embed_blocks(s, zero, zero, s.conjugate()));
    }
  }
  // [[0, S], [-conj(S), 0]] with S complex symmetric.
  for (int a = 0; a < k; ++a) {
    for (int b = a; b < k; ++b) {
      for (const Complex c : {Complex(1.0, 0.0), kI}) {
        ComplexMatrix s = ComplexMatrix::Zero(k, k);
        s(a, b) = c;
        s(b, a) = c;
        gens.push_back(embed_blocks(zero, s, -s.conjugate(), zero));
      }
    }
  }
  return lie_closure(gens);
}

double symplectic_reality_defect(const ComplexMatrix& m, const ComplexMatrix& j) {
  return (m * j - j * m.conjugate()).norm();
}

OrbitPair example_orbit_pair(int n, const RealVector& v, std::uint64_t seed) {
  if (n <= 2 || n % 2 != 0) {
    throw ParameterError("orbit example needs an even dimension n > 2");
  }
  if (v.size() != n || std::abs(v.norm() - 1.0) > 1e-12) {
    throw ParameterError("orbit example needs a real unit vector of length n");
  }
  const int k = n / 2;
  RealVector w(n);
  w.head(k) = -v.tail(k);
  w.tail(k) = v.head(k);
  const ComplexVector vc = v.cast<Complex>();
  const ComplexVector wc = w.cast<Complex>();
  const ComplexMatrix d = 0.5 * (vc * vc.adjoint() + wc * wc.adjoint());
  const ComplexMatrix j = symplectic_j(n);

  for (int attempt = 0; attempt < 100; ++attempt) {
    const ComplexMatrix u = haar_random_unitary(n, seed + static_cast<std::uint64_t>(attempt));
    const ComplexVector v2 = u.col(0);
    const ComplexVector w2 = u.col(1);
    const ComplexMatrix dp = 0.5 * (v2 * v2.adjoint() + w2 * w2.adjoint());
    if (symplectic_reality_defect(dp, j) > 1e-3) {
      return OrbitPair{DensityMatrix(d), DensityMatrix(dp), j};
    }
  }
  throw ConditioningError("no witness D' found in 100 samples");
}

SystemModel build_model(const ModelSpec& spec) {
  if (spec.family == "single-spin") {
    return single_spin(require_param(spec, "omega"), param_or(spec, "x_only", 0.0) != 0.0);
  }
  if (spec.family == "two-spin") {
    const double j = require_param(spec, "J");
    const double g1 = require_param(spec, "gamma1");
    const double g2 = require_param(spec, "gamma2");
    return two_spin(j, g1, g2, spec.coupling);
  }
  if (spec.family == "example-sp2") {
    return basis_system(example_sp2_basis(), "example-sp2 (conjugate of sp(2))");
  }
  if (spec.family == "example-orbit") {
    return basis_system(standard_sp_basis(2), "example-orbit (standard sp(2))");
  }
  throw ParameterError("unknown model family '" + spec.family + "'");
}

}  // namespace qca

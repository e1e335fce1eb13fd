#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "qca/analysis.hpp"
#include "qca/density.hpp"
#include "qca/lie_engine.hpp"

namespace qca {

// Conventions: spin-1/2 operators are sigma/2 and a Hamiltonian H enters the
// system as the skew-Hermitian generator iH.

namespace pauli {
ComplexMatrix identity();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

/// Kronecker product a (x) b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// n = 2; A = i omega sigma_z / 2; controls i sigma_x / 2 and i sigma_y / 2
/// (only the first when x_only is set).
SystemModel single_spin(double omega, bool x_only = false);

enum class Coupling { ising, isotropic };

/// Two spin-1/2 particles with per-spin gyromagnetic factors.
/// A = iJ (s_z s_z) / 4 (ising) or iJ (s_x s_x + s_y s_y + s_z s_z) / 4 (isotropic);
/// B_k = i (gamma1 s_k (x) I + gamma2 I (x) s_k) / 2 for k = x, y, z.
SystemModel two_spin(double coupling_j, double gamma1, double gamma2,
                     Coupling coupling = Coupling::ising);

/// The 10-dimensional algebra of 4x4 matrices
///   [[L + Z, T + C], [-conj(T) + conj(C), -L + Z^T]]
/// with L diagonal imaginary, T diagonal, Z and C zero-diagonal (skew-Hermitian
/// and antisymmetric respectively). It is conjugate to sp(2).
LieBasis example_sp2_basis();

/// The standard compact symplectic algebra sp(k) = {X in u(2k) : XJ + JX^T = 0}.
LieBasis standard_sp_basis(int k);

/// J = [[0, I_k], [-I_k, 0]] for n = 2k.
ComplexMatrix symplectic_j(int n);

struct OrbitPair {
  DensityMatrix d;
  DensityMatrix d_prime;
  ComplexMatrix j;
};

/// D = (|v><v| + |w><w|) / 2 with w = (-v2; v1), which commutes with J, and a
/// rank-2 D' on the same spectrum with D'J != J conj(D'). Throws ParameterError
/// for odd n, n <= 2, or v not a real unit vector.
OrbitPair example_orbit_pair(int n, const RealVector& v, std::uint64_t seed = 7);

/// |M J - J conj(M)|_F
double symplectic_reality_defect(const ComplexMatrix& m, const ComplexMatrix& j);

/// Named model family plus real parameters, as addressed from the command line.
struct ModelSpec {
  std::string family;  // single-spin | two-spin | example-sp2 | example-orbit
  std::map<std::string, double> parameters;
  Coupling coupling = Coupling::ising;
};

/// Builds the system for a family. The two basis families are emitted as
/// drift-free systems whose controls are the algebra basis.
SystemModel build_model(const ModelSpec& spec);

}  // namespace qca

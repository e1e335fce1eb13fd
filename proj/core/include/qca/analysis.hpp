#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qca/density.hpp"
#include "qca/lie_engine.hpp"
#include "qca/matcore.hpp"

namespace qca {

/// Bilinear control system  dX/dt = (A + sum_i u_i B_i) X  on U(n).
class SystemModel {
 public:
  /// Validates shapes and skew-Hermiticity; stores the skew-projected matrices.
  SystemModel(ComplexMatrix drift, std::vector<ComplexMatrix> controls, std::string label = {},
              const Tolerances& tol = {});

  [[nodiscard]] int n() const { return static_cast<int>(drift_.rows()); }
  [[nodiscard]] int num_controls() const { return static_cast<int>(controls_.size()); }
  [[nodiscard]] const ComplexMatrix& drift() const { return drift_; }
  [[nodiscard]] const std::vector<ComplexMatrix>& controls() const { return controls_; }
  [[nodiscard]] const std::string& label() const { return label_; }
  /// {A, B_1, ..., B_m}
  [[nodiscard]] std::vector<ComplexMatrix> generators() const;

 private:
  ComplexMatrix drift_;
  std::vector<ComplexMatrix> controls_;
  std::string label_;
};

enum class OcFlavor { none, special_unitary, unitary };

enum class Classification {
  su_n,
  u_n,
  sp_conjugate,
  sp_conjugate_plus_scalar,
  not_transitive,
  /// Passes the transitivity test but matches no known transitive algebra.
  /// Only reachable through a numerical-rank failure.
  transitive_unclassified,
};

enum class SmallTimeObstruction { b_not_transitive, b_transitive, inconclusive };

/// Status of "B lies in no transitive proper subalgebra of L".
enum class HypothesisStatus { holds, fails, unverified };

struct OcVerdict {
  bool controllable = false;
  OcFlavor flavor = OcFlavor::none;
};

struct SmallTimeReport {
  SmallTimeObstruction label = SmallTimeObstruction::inconclusive;
  int dim_b = 0;
  HypothesisStatus hypothesis = HypothesisStatus::unverified;
  std::vector<std::string> diagnostics;
};

struct AnalysisReport {
  int n = 0;
  int dim_l = 0;
  int dim_b = 0;
  bool traceless = false;
  bool contains_scalar = false;
  OcVerdict oc;
  bool psc = false;
  bool esc = false;
  bool dmc = false;
  Classification classification = Classification::not_transitive;
  SmallTimeObstruction small_time_obstruction = SmallTimeObstruction::inconclusive;
  HypothesisStatus small_time_hypothesis = HypothesisStatus::unverified;
  std::vector<std::string> diagnostics;
};

std::string_view to_string(OcFlavor f);
std::string_view to_string(Classification c);
std::string_view to_string(SmallTimeObstruction s);
std::string_view to_string(HypothesisStatus h);

/// dim sp(k) = k(2k+1).
constexpr int sp_dimension(int k) { return k * (2 * k + 1); }

/// diag(1, 0, ..., 0), the reference state of the pure-state test.
DensityMatrix reference_pure_density(int n);

/// Operator controllability: L = u(n) or L = su(n).
OcVerdict test_oc(const LieBasis& l);

/// Pure-state controllability: dim L - dim(L intersect C_D) = 2n - 2 for D = diag(1,0,...,0).
bool test_psc(const LieBasis& l, const Tolerances& tol = {});

/// Equivalent-state controllability; identical to test_psc.
bool test_esc(const LieBasis& l, const Tolerances& tol = {});

/// Density-matrix controllability; identical to operator controllability.
bool test_dmc(const LieBasis& l);

/// Both sides of the orbit-dimension identity for a density matrix D.
struct OrbitDimensions {
  int full = 0;     // n^2 - dim C_D
  int reached = 0;  // dim L - dim(L intersect C_D)
  [[nodiscard]] bool equal() const { return full == reached; }
};

OrbitDimensions orbit_dimensions(const LieBasis& l, const DensityMatrix& d,
                                 const Tolerances& tol = {});

/// True iff the orbit of D under e^L is the full unitary orbit of D.
bool orbit_equality(const LieBasis& l, const DensityMatrix& d, const Tolerances& tol = {});

struct ClassifyResult {
  Classification label = Classification::not_transitive;
  std::vector<std::string> diagnostics;
};

ClassifyResult classify_detailed(const LieBasis& l, const Tolerances& tol = {});
Classification classify(const LieBasis& l, const Tolerances& tol = {});

/// R + iY  ->  [[R, -Y], [Y, R]].
RealMatrix realify(const ComplexMatrix& x);

/// (Re psi; Im psi).
RealVector realify_state(const StateVector& psi);
RealVector realify_state(const ComplexVector& psi);

/// Obstruction to state transfer in arbitrarily small time from the
/// drift-free algebra B = Lie{B_1, ..., B_m}.
SmallTimeReport small_time_report(const SystemModel& model, const Tolerances& tol = {});

/// Runs every decision procedure on Lie{A, B_1, ..., B_m}.
/// Throws ConditioningError if the verdicts break DMC = OC => PSC = ESC.
AnalysisReport analyze(const SystemModel& model, const Tolerances& tol = {});

}  // namespace qca

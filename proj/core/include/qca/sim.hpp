#pragma once

#include <cstdint>
#include <vector>

#include "qca/analysis.hpp"
#include "qca/matcore.hpp"

namespace qca {

/// One piecewise-constant stretch of control.
struct PulseSegment {
  double dt = 0.0;         // duration, > 0
  std::vector<double> u;   // one amplitude per control
};

struct PulseSequence {
  std::vector<PulseSegment> segments;

  /// Throws ValidationError on non-positive/non-finite durations or amplitudes,
  /// ShapeError when an amplitude count differs from num_controls.
  void validate(int num_controls) const;
};

/// X(T) for dX/dt = (A + sum u_i B_i) X, X(0) = I; later segments act on the left.
ComplexMatrix propagate_operator(const SystemModel& model, const PulseSequence& pulses);

/// X(T) psi0.
StateVector propagate_state(const SystemModel& model, const PulseSequence& pulses,
                            const StateVector& psi0);

struct ProbeOptions {
  double u_max = 10.0;  // amplitudes uniform in [-u_max, u_max]
  double t_max = 1.0;   // durations uniform in (0, t_max]
};

/// Random pulse sequence with the probe's sampling law; deterministic per (seed, index).
PulseSequence random_pulses(int num_controls, int segments, std::uint64_t seed,
                            std::uint64_t index, const ProbeOptions& opts = {});

/// Best |<target|psi>| over random pulse trials started from e_1.
/// Corroborative only: a low value does not refute pure-state controllability.
double random_reach_probe(const SystemModel& model, const StateVector& target, int trials,
                          int segments_per_trial, std::uint64_t seed,
                          const ProbeOptions& opts = {});

struct EquivalenceResult {
  bool match = false;
  double phase = 0.0;  // arg <target|psi_out>; 0 when there is no match
};

/// psi_out = e^{i phase} target up to 1e-9 in |<target|psi_out>|.
EquivalenceResult equivalent_state_check(const StateVector& psi_out, const StateVector& target);

}  // namespace qca

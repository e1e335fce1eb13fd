#include "qca/sim.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace qca {

void PulseSequence::validate(int num_controls) const {
  for (std::size_t s = 0; s < segments.size(); ++s) {
    const auto& seg = segments[s];
    if (!(seg.dt > 0.0) || !std::isfinite(seg.dt)) {
      std::ostringstream msg;
      msg << "segment " << s << ": duration must be positive and finite";
      throw ValidationError(msg.str());
    }
    if (static_cast<int>(seg.u.size()) != num_controls) {
      std::ostringstream msg;
      msg << "segment " << s << ": " << seg.u.size() << " amplitudes for " << num_controls
          << " controls";
      throw ShapeError(msg.str());
    }
    for (double a : seg.u) {
      if (!std::isfinite(a)) {
        std::ostringstream msg;
        msg << "segment " << s << ": non-finite amplitude";
        throw ValidationError(msg.str());
      }
    }
  }
}

ComplexMatrix propagate_operator(const SystemModel& model, const PulseSequence& pulses) {
  pulses.validate(model.num_controls());
  const int n = model.n();
  ComplexMatrix x = ComplexMatrix::Identity(n, n);
  for (const auto& seg : pulses.segments) {
    ComplexMatrix h = model.drift();
    for (int k = 0; k < model.num_controls(); ++k) {
      h += seg.u[static_cast<std::size_t>(k)] * model.controls()[static_cast<std::size_t>(k)];
    }
    x = expm_skew(h * seg.dt) * x;
  }
  return x;
}

StateVector propagate_state(const SystemModel& model, const PulseSequence& pulses,
                            const StateVector& psi0) {
  if (psi0.size() != model.n()) {
    throw ShapeError("initial state dimension does not match the system");
  }
  const ComplexVector out = propagate_operator(model, pulses) * psi0.amplitudes();
  // Unitary propagation preserves the norm to roundoff; renormalize the last bits.
  return StateVector::normalized(out);
}

PulseSequence random_pulses(int num_controls, int segments, std::uint64_t seed,
                            std::uint64_t index, const ProbeOptions& opts) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> amp(-opts.u_max, opts.u_max);
  std::uniform_real_distribution<double> dur(0.0, opts.t_max);
  PulseSequence p;
  p.segments.reserve(static_cast<std::size_t>(segments));
  for (int s = 0; s < segments; ++s) {
    PulseSegment seg;
    // uniform on [0, t_max) mapped onto (0, t_max]
    seg.dt = opts.t_max - dur(rng);
    seg.u.resize(static_cast<std::size_t>(num_controls));
    for (auto& a : seg.u) {
      a = amp(rng);
    }
    p.segments.push_back(std::move(seg));
  }
  return p;
}

double random_reach_probe(const SystemModel& model, const StateVector& target, int trials,
                          int segments_per_trial, std::uint64_t seed, const ProbeOptions& opts) {
  if (trials < 1) {
    throw PreconditionError("random_reach_probe needs at least one trial");
  }
  if (segments_per_trial < 0) {
    throw PreconditionError("segments_per_trial must be nonnegative");
  }
  if (target.size() != model.n()) {
    throw ShapeError("target dimension does not match the system");
  }
  const StateVector start = StateVector::basis(model.n(), 0);
  double best = 0.0;
  for (int t = 0; t < trials; ++t) {
    const PulseSequence p = random_pulses(model.num_controls(), segments_per_trial, seed,
                                          static_cast<std::uint64_t>(t), opts);
    const StateVector out = propagate_state(model, p, start);
    best = std::max(best, std::abs(target.amplitudes().dot(out.amplitudes())));
  }
  return std::min(best, 1.0);
}

EquivalenceResult equivalent_state_check(const StateVector& psi_out, const StateVector& target) {
  if (psi_out.size() != target.size()) {
    throw ShapeError("states have different dimensions");
  }
  const Complex c = target.amplitudes().dot(psi_out.amplitudes());
  if (std::abs(std::abs(c) - 1.0) <= 1e-9) {
    return {true, std::arg(c)};
  }
  return {false, 0.0};
}

}  // namespace qca

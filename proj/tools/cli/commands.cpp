#include "cli/commands.hpp"

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cli/io.hpp"
#include "qca/models.hpp"

namespace qca::cli {
namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

Tolerances tolerances_from_env() {
  Tolerances tol;
  if (const char* s = std::getenv("QCA_RANK_TOL"); s != nullptr && *s != '\0') {
    char* end = nullptr;
    const double v = std::strtod(s, &end);
    if (end == s || *end != '\0' || !(v > 0.0) || v >= 1.0) {
      throw SchemaError(std::string("QCA_RANK_TOL must be a number in (0, 1), got '") + s + "'");
    }
    tol.rank_rel = v;
  }
  return tol;
}

struct AnalyzeArgs {
  std::string system;
  std::string json_out;
  std::string density;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  const Tolerances tol = tolerances_from_env();
  const json doc = load_json_file(a.system);
  const SystemModel model = parse_system(doc, tol);
  const AnalysisReport report = analyze(model, tol);

  std::optional<OrbitSummary> orbit;
  if (!a.density.empty()) {
    const json dj = load_json_file(a.density);
    const DensityMatrix d = parse_density(dj);
    if (d.size() != model.n()) {
      throw SchemaError(a.density + ": density dimension " + std::to_string(d.size()) +
                        " does not match system dimension " + std::to_string(model.n()));
    }
    const LieBasis l = lie_closure(model.generators(), tol);
    orbit = OrbitSummary{canonical_digest(dj), orbit_dimensions(l, d, tol)};
  }

  out << "system: " << (model.label().empty() ? "(unlabelled)" : model.label())
      << " (n = " << model.n() << ", m = " << model.num_controls() << ")\n"
      << "dim L = " << report.dim_l << "\n"
      << "dim B = " << report.dim_b << "\n"
      << "traceless: " << yes_no(report.traceless) << "\n"
      << "contains iI: " << yes_no(report.contains_scalar) << "\n"
      << "OC:  " << yes_no(report.oc.controllable) << " (" << to_string(report.oc.flavor)
      << ")\n"
      << "PSC: " << yes_no(report.psc) << "\n"
      << "ESC: " << yes_no(report.esc) << "\n"
      << "DMC: " << yes_no(report.dmc) << "\n"
      << "classification: " << to_string(report.classification) << "\n"
      << "small-time obstruction: " << to_string(report.small_time_obstruction)
      << " (hypothesis " << to_string(report.small_time_hypothesis) << ")\n";
  if (orbit) {
    out << "orbit equality: " << yes_no(orbit->dims.equal())
        << " (n^2 - dim C_D = " << orbit->dims.full
        << ", dim L - dim(L n C_D) = " << orbit->dims.reached << ")\n";
  }
  out << "notes:\n";
  for (const auto& d : report.diagnostics) {
    out << "  - " << d << "\n";
  }

  if (!a.json_out.empty()) {
    const ordered_json rj = report_to_json(report, model.label(), canonical_digest(doc), orbit);
    write_text_file(a.json_out, rj.dump(2) + "\n");
  }
  return kOk;
}

struct ModelArgs {
  std::string family;
  std::optional<double> omega, coupling_j, gamma1, gamma2;
  std::string coupling = "ising";
  bool x_only = false;
  std::string out;
  std::string density_out;
};

int cmd_model(const ModelArgs& a, std::ostream& out) {
  ModelSpec spec;
  spec.family = a.family;
  if (a.omega) spec.parameters["omega"] = *a.omega;
  if (a.coupling_j) spec.parameters["J"] = *a.coupling_j;
  if (a.gamma1) spec.parameters["gamma1"] = *a.gamma1;
  if (a.gamma2) spec.parameters["gamma2"] = *a.gamma2;
  if (a.x_only) spec.parameters["x_only"] = 1.0;
  spec.coupling = a.coupling == "isotropic" ? Coupling::isotropic : Coupling::ising;

  const SystemModel model = build_model(spec);
  const std::string text = system_to_json(model).dump(2) + "\n";
  if (a.out.empty()) {
    out << text;
  } else {
    write_text_file(a.out, text);
    out << "wrote " << a.out << " (n = " << model.n() << ", " << model.num_controls()
        << " controls)\n";
  }
  if (!a.density_out.empty()) {
    if (a.family != "example-orbit") {
      throw ParameterError("--density-out is only meaningful for example-orbit");
    }
    RealVector v = RealVector::Zero(model.n());
    v(0) = 1.0;
    const OrbitPair pair = example_orbit_pair(model.n(), v);
    write_text_file(a.density_out, density_to_json(pair.d).dump(2) + "\n");
    out << "wrote " << a.density_out << "\n";
  }
  return kOk;
}

struct ClosureArgs {
  std::string system;
  std::string dump;
  bool controls_only = false;
};

int cmd_closure(const ClosureArgs& a, std::ostream& out) {
  const Tolerances tol = tolerances_from_env();
  const SystemModel model = parse_system(load_json_file(a.system), tol);
  const LieBasis b = lie_closure(model.controls(), tol);
  std::optional<LieBasis> l;
  if (!a.controls_only) {
    l = lie_closure(model.generators(), tol);
    out << "dim L = " << l->dim() << "\n";
  }
  out << "dim B = " << b.dim() << "\n";
  if (!a.dump.empty()) {
    const LieBasis& basis = l ? *l : b;
    if (basis.dim() == 0) {
      throw ConditioningError("closure is the zero algebra; nothing to dump");
    }
    const SystemModel dumped(ComplexMatrix::Zero(model.n(), model.n()), basis.elements(),
                             (l ? "closure basis of " : "control closure basis of ") +
                                 model.label());
    write_text_file(a.dump, system_to_json(dumped).dump(2) + "\n");
    out << "wrote " << basis.dim() << " basis matrices to " << a.dump << "\n";
  }
  return kOk;
}

struct SimulateArgs {
  std::string system;
  std::string pulses;
  std::string initial;
  std::string target;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
  const Tolerances tol = tolerances_from_env();
  const SystemModel model = parse_system(load_json_file(a.system), tol);
  const PulseSequence pulses = parse_pulses(load_json_file(a.pulses));
  try {
    pulses.validate(model.num_controls());
  } catch (const Error& e) {
    throw SchemaError(a.pulses + ": " + e.what());
  }
  const StateVector psi0 =
      a.initial.empty() ? StateVector::basis(model.n(), 0) : parse_state(load_json_file(a.initial));
  if (psi0.size() != model.n()) {
    throw SchemaError("initial state has dimension " + std::to_string(psi0.size()) +
                      ", system has " + std::to_string(model.n()));
  }
  const StateVector psi = propagate_state(model, pulses, psi0);
  const ComplexVector raw = propagate_operator(model, pulses) * psi0.amplitudes();

  out << std::setprecision(15);
  out << "segments: " << pulses.segments.size() << "\n";
  out << "final state:\n";
  for (Eigen::Index k = 0; k < psi.amplitudes().size(); ++k) {
    const Complex c = psi.amplitudes()(k);
    out << "  [" << k << "] " << c.real() << (c.imag() < 0 ? " - " : " + ") << std::abs(c.imag())
        << "i\n";
  }
  out << "norm = " << raw.norm() << "\n";
  if (!a.target.empty()) {
    const StateVector target = parse_state(load_json_file(a.target));
    if (target.size() != model.n()) {
      throw SchemaError("target state dimension does not match the system");
    }
    const double fidelity = std::abs(target.amplitudes().dot(psi.amplitudes()));
    const EquivalenceResult eq = equivalent_state_check(psi, target);
    out << "fidelity = " << fidelity << "\n";
    out << "equivalent up to phase: " << yes_no(eq.match) << ", phase = " << eq.phase << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Controllability analysis for finite-dimensional bilinear quantum systems", "qca"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version()));

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Decide OC, PSC, ESC and DMC for a system file");
  analyze_cmd->add_option("system", analyze_args.system, "System JSON file")->required();
  analyze_cmd->add_option("--json", analyze_args.json_out, "Write the report as JSON");
  analyze_cmd->add_option("--density", analyze_args.density,
                          "Density matrix JSON for the orbit-equality test");

  ModelArgs model_args;
  auto* model_cmd = app.add_subcommand("model", "Emit a builtin model as a system file");
  model_cmd->add_option("family", model_args.family,
                        "single-spin | two-spin | example-sp2 | example-orbit")
      ->required();
  model_cmd->add_option("--omega", model_args.omega, "Drift frequency (single-spin)");
  model_cmd->add_option("--J", model_args.coupling_j, "Coupling strength (two-spin)");
  model_cmd->add_option("--gamma1", model_args.gamma1, "Gyromagnetic factor of spin 1");
  model_cmd->add_option("--gamma2", model_args.gamma2, "Gyromagnetic factor of spin 2");
  model_cmd->add_option("--coupling", model_args.coupling, "ising | isotropic")
      ->check(CLI::IsMember({"ising", "isotropic"}));
  model_cmd->add_flag("--x-only", model_args.x_only, "Single-spin with the x control only");
  model_cmd->add_option("-o,--out", model_args.out, "Output file (stdout if omitted)");
  model_cmd->add_option("--density-out", model_args.density_out,
                        "example-orbit: also write the commuting density matrix D");

  ClosureArgs closure_args;
  auto* closure_cmd = app.add_subcommand("closure", "Compute dim L and dim B");
  closure_cmd->add_option("system", closure_args.system, "System JSON file")->required();
  closure_cmd->add_option("--dump", closure_args.dump, "Write the orthonormal basis as a system file");
  closure_cmd->add_flag("--controls-only", closure_args.controls_only,
                        "Close the control matrices only (the drift-free algebra B)");

  SimulateArgs sim_args;
  auto* sim_cmd = app.add_subcommand("simulate", "Propagate a state under piecewise-constant controls");
  sim_cmd->add_option("system", sim_args.system, "System JSON file")->required();
  sim_cmd->add_option("pulses", sim_args.pulses, "Pulse sequence JSON file")->required();
  sim_cmd->add_option("--initial", sim_args.initial, "Initial state JSON (default e_1)");
  sim_cmd->add_option("--target", sim_args.target, "Target state JSON");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("qca");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) {
    argv.push_back(s.c_str());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kSchema;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(analyze_args, out);
    if (model_cmd->parsed()) return cmd_model(model_args, out);
    if (closure_cmd->parsed()) return cmd_closure(closure_args, out);
    if (sim_cmd->parsed()) return cmd_simulate(sim_args, out);
  } catch (const ConditioningError& e) {
    err << "qca: numerical conditioning: " << e.what() << "\n";
    return kConditioning;
  } catch (const SchemaError& e) {
    err << "qca: schema: " << e.what() << "\n";
    return kSchema;
  } catch (const IoError& e) {
    err << "qca: io: " << e.what() << "\n";
    return kSchema;
  } catch (const Error& e) {
    err << "qca: " << e.what() << "\n";
    return kSchema;
  } catch (const std::exception& e) {
    err << "qca: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kSchema;
}

}  // namespace qca::cli

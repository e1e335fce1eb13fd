#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qca/analysis.hpp"
#include "qca/density.hpp"
#include "qca/sim.hpp"

namespace qca::cli {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

/// Input file does not match its schema. The message names the offending
/// field path (for example "controls[1][0][2]") or the line of a syntax error.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

json load_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// Array of rows, each entry an [re, im] pair.
ComplexMatrix parse_matrix(const json& j, const std::string& path);
json matrix_to_json(const ComplexMatrix& m);

/// {"n", "label", "drift", "controls", optional "hermitian"}. With "hermitian":
/// true the stored matrices are Hamiltonians and are multiplied by i on load.
SystemModel parse_system(const json& j, const Tolerances& tol = {});
json system_to_json(const SystemModel& model);

/// {"n" (optional), "matrix": Matrix}
DensityMatrix parse_density(const json& j);
json density_to_json(const DensityMatrix& d);

/// {"amplitudes": [[re, im], ...]}
StateVector parse_state(const json& j);
json state_to_json(const StateVector& psi);

/// {"segments": [{"dt": float, "u": [float, ...]}, ...]}
PulseSequence parse_pulses(const json& j);
json pulses_to_json(const PulseSequence& p);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);
/// Digest of the canonical (sorted-key, compact) serialization.
std::string canonical_digest(const json& j);

struct OrbitSummary {
  std::string density_sha256;
  OrbitDimensions dims;
};

/// Report document with deterministic key order.
ordered_json report_to_json(const AnalysisReport& report, const std::string& label,
                            const std::string& input_sha256,
                            const std::optional<OrbitSummary>& orbit = std::nullopt);

/// Version string embedded in reports.
std::string_view tool_version();

}  // namespace qca::cli

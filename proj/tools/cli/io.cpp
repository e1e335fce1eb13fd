#include "cli/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

namespace qca::cli {
namespace {

const Complex kI{0.0, 1.0};

[[noreturn]] void schema_fail(const std::string& path, const std::string& what) {
  throw SchemaError(path + ": " + what);
}

const json& require_field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) {
    schema_fail(path.empty() ? "<root>" : path, "expected an object");
  }
  const auto it = j.find(key);
  if (it == j.end()) {
    schema_fail(path.empty() ? key : path + "." + key, "missing required field");
  }
  return *it;
}

double number_at(const json& j, const std::string& path) {
  if (!j.is_number()) {
    schema_fail(path, "expected a number");
  }
  const double v = j.get<double>();
  if (!std::isfinite(v)) {
    schema_fail(path, "non-finite number");
  }
  return v;
}

int line_of_offset(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n'));
}

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

Complex parse_complex(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) {
    schema_fail(path, "expected an [re, im] pair");
  }
  return {number_at(j[0], path + "[0]"), number_at(j[1], path + "[1]")};
}

}  // namespace

std::string_view tool_version() { return "0.3.0"; }

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::ostringstream msg;
    msg << path.string() << ": line " << line_of_offset(text, e.byte) << ": invalid JSON ("
        << e.what() << ")";
    throw SchemaError(msg.str());
  }
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  out << text;
  if (!out) {
    throw IoError("write failed for " + path.string());
  }
}

ComplexMatrix parse_matrix(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) {
    schema_fail(path, "expected a nonempty array of rows");
  }
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) {
    schema_fail(path + "[0]", "expected a nonempty row array");
  }
  const std::size_t cols = j[0].size();
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rp = path + "[" + std::to_string(r) + "]";
    if (!j[r].is_array()) {
      schema_fail(rp, "expected a row array");
    }
    if (j[r].size() != cols) {
      std::ostringstream msg;
      msg << "row has " << j[r].size() << " entries, expected " << cols;
      schema_fail(rp, msg.str());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          parse_complex(j[r][c], rp + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(complex_to_json(m(r, c)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

SystemModel parse_system(const json& j, const Tolerances& tol) {
  const json& nj = require_field(j, "n", "");
  if (!nj.is_number_integer() || nj.get<long long>() < 1) {
    schema_fail("n", "expected a positive integer");
  }
  const auto n = static_cast<Eigen::Index>(nj.get<long long>());
  std::string label;
  if (const auto it = j.find("label"); it != j.end()) {
    if (!it->is_string()) {
      schema_fail("label", "expected a string");
    }
    label = it->get<std::string>();
  }
  bool hermitian = false;
  if (const auto it = j.find("hermitian"); it != j.end()) {
    if (!it->is_boolean()) {
      schema_fail("hermitian", "expected a boolean");
    }
    hermitian = it->get<bool>();
  }

  auto load = [&](const json& mj, const std::string& path) {
    ComplexMatrix m = parse_matrix(mj, path);
    if (m.rows() != n || m.cols() != n) {
      std::ostringstream msg;
      msg << "matrix is " << m.rows() << "x" << m.cols() << ", expected " << n << "x" << n;
      schema_fail(path, msg.str());
    }
    if (hermitian) {
      m *= kI;
    }
    if (!is_skew_hermitian(m, tol)) {
      std::ostringstream msg;
      msg << (hermitian ? "not Hermitian" : "not skew-Hermitian") << " (defect "
          << skew_defect(m) << ")";
      schema_fail(path, msg.str());
    }
    return m;
  };

  ComplexMatrix drift = load(require_field(j, "drift", ""), "drift");
  const json& cj = require_field(j, "controls", "");
  if (!cj.is_array() || cj.empty()) {
    schema_fail("controls", "expected a nonempty array of matrices");
  }
  std::vector<ComplexMatrix> controls;
  for (std::size_t k = 0; k < cj.size(); ++k) {
    controls.push_back(load(cj[k], "controls[" + std::to_string(k) + "]"));
  }
  return SystemModel(std::move(drift), std::move(controls), std::move(label), tol);
}

json system_to_json(const SystemModel& model) {
  json j;
  j["n"] = model.n();
  j["label"] = model.label();
  j["drift"] = matrix_to_json(model.drift());
  json controls = json::array();
  for (const auto& c : model.controls()) {
    controls.push_back(matrix_to_json(c));
  }
  j["controls"] = std::move(controls);
  return j;
}

DensityMatrix parse_density(const json& j) {
  const ComplexMatrix m = parse_matrix(require_field(j, "matrix", ""), "matrix");
  if (m.rows() != m.cols()) {
    schema_fail("matrix", "density matrix must be square");
  }
  if (const auto it = j.find("n"); it != j.end()) {
    if (!it->is_number_integer() || it->get<long long>() != m.rows()) {
      schema_fail("n", "does not match the matrix dimension");
    }
  }
  try {
    return DensityMatrix(m);
  } catch (const ValidationError& e) {
    schema_fail("matrix", e.what());
  }
}

json density_to_json(const DensityMatrix& d) {
  json j;
  j["n"] = d.size();
  j["matrix"] = matrix_to_json(d.matrix());
  return j;
}

StateVector parse_state(const json& j) {
  const json& aj = require_field(j, "amplitudes", "");
  if (!aj.is_array() || aj.empty()) {
    schema_fail("amplitudes", "expected a nonempty array of [re, im] pairs");
  }
  ComplexVector v(static_cast<Eigen::Index>(aj.size()));
  for (std::size_t k = 0; k < aj.size(); ++k) {
    v(static_cast<Eigen::Index>(k)) = parse_complex(aj[k], "amplitudes[" + std::to_string(k) + "]");
  }
  try {
    return StateVector(std::move(v));
  } catch (const ValidationError& e) {
    schema_fail("amplitudes", e.what());
  }
}

json state_to_json(const StateVector& psi) {
  json a = json::array();
  for (Eigen::Index k = 0; k < psi.amplitudes().size(); ++k) {
    a.push_back(complex_to_json(psi.amplitudes()(k)));
  }
  return json{{"amplitudes", std::move(a)}};
}

PulseSequence parse_pulses(const json& j) {
  const json& sj = require_field(j, "segments", "");
  if (!sj.is_array()) {
    schema_fail("segments", "expected an array");
  }
  PulseSequence p;
  for (std::size_t s = 0; s < sj.size(); ++s) {
    const std::string sp = "segments[" + std::to_string(s) + "]";
    PulseSegment seg;
    seg.dt = number_at(require_field(sj[s], "dt", sp), sp + ".dt");
    if (!(seg.dt > 0.0)) {
      schema_fail(sp + ".dt", "duration must be positive");
    }
    const json& uj = require_field(sj[s], "u", sp);
    if (!uj.is_array()) {
      schema_fail(sp + ".u", "expected an array of amplitudes");
    }
    for (std::size_t k = 0; k < uj.size(); ++k) {
      seg.u.push_back(number_at(uj[k], sp + ".u[" + std::to_string(k) + "]"));
    }
    p.segments.push_back(std::move(seg));
  }
  return p;
}

json pulses_to_json(const PulseSequence& p) {
  json segs = json::array();
  for (const auto& s : p.segments) {
    segs.push_back(json{{"dt", s.dt}, {"u", s.u}});
  }
  return json{{"segments", std::move(segs)}};
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw IoError("SHA-256 computation failed");
  }
  std::ostringstream hex;
  hex << std::hex << std::setfill('0');
  for (unsigned int k = 0; k < len; ++k) {
    hex << std::setw(2) << static_cast<int>(digest[k]);
  }
  return hex.str();
}

std::string canonical_digest(const json& j) { return sha256_hex(j.dump()); }

ordered_json report_to_json(const AnalysisReport& r, const std::string& label,
                            const std::string& input_sha256,
                            const std::optional<OrbitSummary>& orbit) {
  ordered_json j;
  j["tool"] = "qca";
  j["version"] = std::string(tool_version());
  j["input_sha256"] = input_sha256;
  j["label"] = label;
  j["n"] = r.n;
  j["dim_L"] = r.dim_l;
  j["dim_B"] = r.dim_b;
  j["traceless"] = r.traceless;
  j["contains_scalar"] = r.contains_scalar;
  j["oc"] = ordered_json{{"controllable", r.oc.controllable},
                         {"flavor", std::string(to_string(r.oc.flavor))}};
  j["psc"] = r.psc;
  j["esc"] = r.esc;
  j["dmc"] = r.dmc;
  j["classification"] = std::string(to_string(r.classification));
  j["small_time_obstruction"] = std::string(to_string(r.small_time_obstruction));
  j["small_time_hypothesis"] = std::string(to_string(r.small_time_hypothesis));
  if (orbit) {
    j["density"] = ordered_json{{"input_sha256", orbit->density_sha256},
                                {"orbit_equality", orbit->dims.equal()},
                                {"full_orbit_dim", orbit->dims.full},
                                {"reached_orbit_dim", orbit->dims.reached}};
  }
  j["diagnostics"] = r.diagnostics;
  return j;
}

}  // namespace qca::cli

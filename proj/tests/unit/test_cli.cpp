#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "cli/commands.hpp"
#include "cli/io.hpp"
#include "qca/models.hpp"

namespace qca::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qca_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    unsetenv("QCA_RANK_TOL");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name) << text;
  }

  std::string read(const std::string& name) const {
    std::ifstream in(dir_ / name);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  int call(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return run(args, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, TwoSpinModelAnalyzes) {
  ASSERT_EQ(call({"model", "two-spin", "--coupling", "ising", "--J", "1", "--gamma1", "1",
                  "--gamma2", "1.1", "-o", path("ts.json")}),
            kOk);
  ASSERT_EQ(call({"analyze", path("ts.json"), "--json", path("r.json")}), kOk) << err_.str();
  EXPECT_NE(out_.str().find("dim L = 15"), std::string::npos);
  EXPECT_NE(out_.str().find("dim B = 6"), std::string::npos);
  const json r = json::parse(read("r.json"));
  EXPECT_EQ(r["dim_L"], 15);
  EXPECT_EQ(r["dim_B"], 6);
  EXPECT_EQ(r["oc"]["flavor"], "special-unitary");
  EXPECT_EQ(r["small_time_obstruction"], "B-not-transitive");
  EXPECT_EQ(r["input_sha256"], canonical_digest(load_json_file(path("ts.json"))));
}

TEST_F(CliTest, ReportIsByteDeterministic) {
  ASSERT_EQ(call({"model", "example-sp2", "-o", path("sp.json")}), kOk);
  ASSERT_EQ(call({"analyze", path("sp.json"), "--json", path("a.json")}), kOk);
  ASSERT_EQ(call({"analyze", path("sp.json"), "--json", path("b.json")}), kOk);
  EXPECT_EQ(read("a.json"), read("b.json"));
  const json r = json::parse(read("a.json"));
  EXPECT_EQ(r["psc"], true);
  EXPECT_EQ(r["oc"]["controllable"], false);
  EXPECT_EQ(r["classification"], "sp-conjugate");
}

TEST_F(CliTest, ReportKeyOrderIsFixed) {
  ASSERT_EQ(call({"model", "single-spin", "--omega", "1", "-o", path("s.json")}), kOk);
  ASSERT_EQ(call({"analyze", path("s.json"), "--json", path("r.json")}), kOk);
  const std::string text = read("r.json");
  EXPECT_LT(text.find("\"tool\""), text.find("\"dim_L\""));
  EXPECT_LT(text.find("\"dim_L\""), text.find("\"psc\""));
  EXPECT_LT(text.find("\"psc\""), text.find("\"diagnostics\""));
}

TEST_F(CliTest, MalformedRowIsSchemaError) {
  write("bad.json", R"({"n": 2, "label": "bad",
    "drift": [[[0,0],[0,0]], [[0,0]]],
    "controls": [[[[0,1],[0,0]], [[0,0],[0,-1]]]]})");
  EXPECT_EQ(call({"analyze", path("bad.json")}), kSchema);
  EXPECT_NE(err_.str().find("drift[1]"), std::string::npos) << err_.str();
}

TEST_F(CliTest, SyntaxErrorReportsLine) {
  write("bad.json", "{\n  \"n\": 2,\n  \"drift\": [[\n}");
  EXPECT_EQ(call({"analyze", path("bad.json")}), kSchema);
  EXPECT_NE(err_.str().find("line"), std::string::npos) << err_.str();
}

TEST_F(CliTest, NonSkewIsSchemaError) {
  write("h.json", R"({"n": 2, "drift": [[[1,0],[0,0]], [[0,0],[-1,0]]],
    "controls": [[[[0,0],[1,0]], [[1,0],[0,0]]]]})");
  EXPECT_EQ(call({"analyze", path("h.json")}), kSchema);
  EXPECT_NE(err_.str().find("drift"), std::string::npos);
}

TEST_F(CliTest, HermitianFlagMultipliesByI) {
  // H = sz/2 drift, sx/2 control: i times them is the single-spin system.
  write("h.json", R"({"n": 2, "hermitian": true, "label": "ham",
    "drift": [[[0.5,0],[0,0]], [[0,0],[-0.5,0]]],
    "controls": [[[[0,0],[0.5,0]], [[0.5,0],[0,0]]]]})");
  ASSERT_EQ(call({"closure", path("h.json")}), kOk) << err_.str();
  EXPECT_NE(out_.str().find("dim L = 3"), std::string::npos);
}

TEST_F(CliTest, MissingFileIsExitTwo) {
  EXPECT_EQ(call({"analyze", path("nope.json")}), kSchema);
}

TEST_F(CliTest, ModelErrors) {
  EXPECT_EQ(call({"model", "two-spin", "--J", "1"}), kSchema);
  EXPECT_EQ(call({"model", "dipolar"}), kSchema);
  EXPECT_EQ(call({"model", "two-spin", "--J", "0", "--gamma1", "1", "--gamma2", "1"}), kSchema);
  EXPECT_EQ(call({"model", "two-spin", "--coupling", "dipolar"}), kSchema);
}

TEST_F(CliTest, ModelOutputs) {
  ASSERT_EQ(call({"model", "single-spin", "--omega", "1"}), kOk);
  const json s = json::parse(out_.str());
  EXPECT_EQ(s["n"], 2);
  EXPECT_EQ(s["controls"].size(), 2u);

  ASSERT_EQ(call({"model", "example-sp2"}), kOk);
  EXPECT_EQ(json::parse(out_.str())["controls"].size(), 10u);
}

TEST_F(CliTest, ModelRoundTripsThroughAnalyze) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"model", "single-spin", "--omega", "0.5"},
        std::vector<std::string>{"model", "two-spin", "--coupling", "isotropic", "--J", "2",
                                 "--gamma1", "1", "--gamma2", "3"},
        std::vector<std::string>{"model", "example-orbit"}}) {
    auto a = args;
    a.push_back("-o");
    a.push_back(path("m.json"));
    ASSERT_EQ(call(a), kOk);
    ASSERT_EQ(call({"analyze", path("m.json")}), kOk) << err_.str();
    EXPECT_TRUE(err_.str().empty());
  }
}

TEST_F(CliTest, ClosureCommand) {
  ASSERT_EQ(call({"model", "single-spin", "--omega", "1", "-o", path("s.json")}), kOk);
  ASSERT_EQ(call({"closure", path("s.json")}), kOk);
  EXPECT_NE(out_.str().find("dim L = 3"), std::string::npos);

  ASSERT_EQ(call({"model", "two-spin", "--J", "1", "--gamma1", "1", "--gamma2", "1.1", "-o",
                  path("t.json")}),
            kOk);
  ASSERT_EQ(call({"closure", path("t.json"), "--controls-only"}), kOk);
  EXPECT_NE(out_.str().find("dim B = 6"), std::string::npos);
  EXPECT_EQ(out_.str().find("dim L"), std::string::npos);

  ASSERT_EQ(call({"closure", path("t.json"), "--dump", path("basis.json")}), kOk);
  EXPECT_EQ(json::parse(read("basis.json"))["controls"].size(), 15u);
  ASSERT_EQ(call({"closure", path("basis.json")}), kOk);
  EXPECT_NE(out_.str().find("dim L = 15"), std::string::npos);
}

TEST_F(CliTest, DensityOrbitEquality) {
  ASSERT_EQ(call({"model", "example-orbit", "-o", path("eo.json"), "--density-out",
                  path("rho.json")}),
            kOk);
  ASSERT_EQ(call({"analyze", path("eo.json"), "--density", path("rho.json"), "--json",
                  path("r.json")}),
            kOk);
  EXPECT_NE(out_.str().find("orbit equality: no"), std::string::npos);
  const json r = json::parse(read("r.json"));
  EXPECT_EQ(r["density"]["orbit_equality"], false);
  EXPECT_EQ(r["density"]["full_orbit_dim"], 8);
}

TEST_F(CliTest, NearDegenerateDensityIsConditioningRefusal) {
  ASSERT_EQ(call({"model", "single-spin", "--omega", "1", "-o", path("s.json")}), kOk);
  write("rho.json", R"({"matrix": [[[0.50000005,0],[0,0]], [[0,0],[0.49999995,0]]]})");
  EXPECT_EQ(call({"analyze", path("s.json"), "--density", path("rho.json")}), kConditioning);
}

TEST_F(CliTest, DensityDimensionMismatch) {
  ASSERT_EQ(call({"model", "single-spin", "--omega", "1", "-o", path("s.json")}), kOk);
  write("rho.json", R"({"matrix": [[[1,0],[0,0],[0,0]], [[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0]]]})");
  EXPECT_EQ(call({"analyze", path("s.json"), "--density", path("rho.json")}), kSchema);
}

TEST_F(CliTest, VerdictsDoNotAffectExitCode) {
  write("d.json", R"({"n": 2, "drift": [[[0,0],[0,0]], [[0,0],[0,0]]],
    "controls": [[[[0,1],[0,0]], [[0,0],[0,-1]]]]})");
  EXPECT_EQ(call({"analyze", path("d.json")}), kOk);
  EXPECT_NE(out_.str().find("PSC: no"), std::string::npos);
}

TEST_F(CliTest, SimulateZeroSegmentsEchoesInitial) {
  ASSERT_EQ(call({"model", "single-spin", "--omega", "1", "-o", path("s.json")}), kOk);
  write("p.json", R"({"segments": []})");
  write("psi.json", R"({"amplitudes": [[0.6, 0], [0, 0.8]]})");
  ASSERT_EQ(call({"simulate", path("s.json"), path("p.json"), "--initial", path("psi.json")}), kOk)
      << err_.str();
  EXPECT_NE(out_.str().find("[0] 0.6 + 0i"), std::string::npos) << out_.str();
  EXPECT_NE(out_.str().find("[1] 0 + 0.8i"), std::string::npos) << out_.str();
  EXPECT_NE(out_.str().find("norm = 1\n"), std::string::npos) << out_.str();
}

TEST_F(CliTest, SimulatePiPulse) {
  ASSERT_EQ(call({"model", "single-spin", "--omega", "0", "-o", path("s.json")}), kOk);
  PulseSequence p;
  p.segments.push_back({1.0, {std::numbers::pi, 0.0}});
  write("p.json", pulses_to_json(p).dump());
  write("e2.json", R"({"amplitudes": [[0, 0], [1, 0]]})");
  ASSERT_EQ(call({"simulate", path("s.json"), path("p.json"), "--target", path("e2.json")}), kOk);
  const std::string text = out_.str();
  const auto pos = text.find("fidelity = ");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_NEAR(std::stod(text.substr(pos + 11)), 1.0, 1e-9);
  EXPECT_NE(text.find("equivalent up to phase: yes"), std::string::npos);
  const auto npos = text.find("norm = ");
  EXPECT_NEAR(std::stod(text.substr(npos + 7)), 1.0, 1e-10);
}

TEST_F(CliTest, SimulateDimensionErrors) {
  ASSERT_EQ(call({"model", "single-spin", "--omega", "1", "-o", path("s.json")}), kOk);
  write("p.json", R"({"segments": [{"dt": 0.1, "u": [1.0]}]})");
  EXPECT_EQ(call({"simulate", path("s.json"), path("p.json")}), kSchema);
  write("p.json", R"({"segments": [{"dt": -0.1, "u": [1.0, 0.0]}]})");
  EXPECT_EQ(call({"simulate", path("s.json"), path("p.json")}), kSchema);
  write("p.json", R"({"segments": []})");
  write("psi.json", R"({"amplitudes": [[1, 0], [0, 0], [0, 0]]})");
  EXPECT_EQ(call({"simulate", path("s.json"), path("p.json"), "--initial", path("psi.json")}),
            kSchema);
}

TEST_F(CliTest, RankToleranceOverride) {
  ASSERT_EQ(call({"model", "single-spin", "--omega", "1", "-o", path("s.json")}), kOk);
  setenv("QCA_RANK_TOL", "1e-7", 1);
  EXPECT_EQ(call({"closure", path("s.json")}), kOk);
  setenv("QCA_RANK_TOL", "banana", 1);
  EXPECT_EQ(call({"closure", path("s.json")}), kSchema);
  unsetenv("QCA_RANK_TOL");
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(call({}), kSchema);
  EXPECT_EQ(call({"frobnicate"}), kSchema);
}

TEST(Io, Sha256KnownVector) {
  EXPECT_EQ(sha256_hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Io, MatrixRoundTrip) {
  const ComplexMatrix m = haar_random_unitary(3, 5);
  EXPECT_EQ(parse_matrix(matrix_to_json(m), "m"), m);
}

TEST(Io, SystemRoundTrip) {
  const SystemModel m = two_spin(1.0, 1.0, 1.1);
  const SystemModel back = parse_system(system_to_json(m));
  EXPECT_EQ(back.drift(), m.drift());
  ASSERT_EQ(back.num_controls(), 3);
  EXPECT_EQ(back.controls()[2], m.controls()[2]);
  EXPECT_EQ(back.label(), m.label());
}

TEST(Io, SchemaPaths) {
  try {
    parse_pulses(json::parse(R"({"segments": [{"dt": 1.0, "u": [1, "x"]}]})"));
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_NE(std::string(e.what()).find("segments[0].u[1]"), std::string::npos);
  }
  try {
    parse_system(json::parse(R"({"n": 2, "drift": [[[0,0],[0,0]],[[0,0],[0,0]]]})"));
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_NE(std::string(e.what()).find("controls"), std::string::npos);
  }
}

}  // namespace
}  // namespace qca::cli

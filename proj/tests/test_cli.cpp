#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "uavwpt/io/csv.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(UAVWPT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// Value in the first data row under `column`.
double cell(const std::string& csv, const std::string& column) {
  const auto nl = csv.find('\n');
  const auto header = uavwpt::io::split(std::string_view(csv).substr(0, nl), ',');
  const auto row_end = csv.find('\n', nl + 1);
  const auto row = uavwpt::io::split(std::string_view(csv).substr(nl + 1, row_end - nl - 1), ',');
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == column) return uavwpt::io::parse_double(row.at(i));
  }
  throw std::runtime_error("no column " + column);
}

const std::string kData = UAVWPT_DATA_DIR;

}  // namespace

TEST(Cli, CouplingAtFiftyMillimetres) {
  const auto r = run("coupling --tx default-uav --rx d100w4 --dz-mm 50");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NEAR(cell(r.out, "k"), 0.111, 0.0005);
}

TEST(Cli, BreakevenAgainstFiveYearReplacement) {
  const auto r = run("gwp breakeven --a uav-low --b replace-5yr");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NEAR(cell(r.out, "breakeven_years"), 3.33, 0.005);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("--no-such-flag").exit_code, 2);
  EXPECT_EQ(run("coupling --dz-mm 50 --no-such-flag").exit_code, 2);
  EXPECT_EQ(run("frobnicate").exit_code, 2);
  EXPECT_EQ(run("").exit_code, 2);
  EXPECT_EQ(run("coupling --rx no-such-coil --dz-mm 50").exit_code, 2);
  EXPECT_EQ(run("mission --dz-mm 60").exit_code, 2);
}

TEST(Cli, DomainErrorsExitOne) {
  EXPECT_EQ(run("mission --hover-w 10 --dz-mm 120").exit_code, 1);
  EXPECT_EQ(run("mission --hover-w 10 --rate-c 20").exit_code, 1);
  EXPECT_EQ(run("link optimal --k 1.5").exit_code, 1);
  EXPECT_EQ(run("ingest " + kData + "/config/example_config.json").exit_code, 1);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run("--help").exit_code, 0); }

TEST(Cli, OutputIsDeterministic) {
  for (const char* args : {"coupling --dz-mm 1 50 100 150 200", "coupling --dz-mm 50 --dx-mm 0 20 --segments 90",
                           "gwp curves --json", "link detuning --k 0.2"}) {
    const auto a = run(args);
    const auto b = run(args);
    ASSERT_EQ(a.exit_code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(Cli, CsvCellsCarryFullPrecision) {
  const auto r = run("inductance --coil default-uav");
  ASSERT_EQ(r.exit_code, 0);
  const std::string v = r.out.substr(r.out.rfind(',') + 1);
  EXPECT_GE(v.size(), 16u);
}

TEST(Cli, JsonOutput) {
  const auto r = run("--json gwp inventory");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.front(), '{');
  EXPECT_NE(r.out.find("\"total\""), std::string::npos);
}

TEST(Cli, IngestComparesFixtures) {
  const auto r = run("ingest " + kData + "/fixtures/openair_dz100.s2p --dz-mm 100 --compare-tx default-uav");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NEAR(cell(r.out, "k_measured"), 0.042, 1e-12);
  EXPECT_NEAR(cell(r.out, "abs_dev"), 0.002, 0.0005);
}

TEST(Cli, ConfigSuppliesCircuitAndFlagsOverride) {
  const std::string cfg = "--config " + kData + "/config/example_config.json ";
  const auto base = run(cfg + "link optimal --circuit bench");
  ASSERT_EQ(base.exit_code, 0);
  EXPECT_NEAR(cell(base.out, "k"), 0.044, 1e-15);
  const auto over = run(cfg + "link optimal --circuit bench --k 0.01");
  ASSERT_EQ(over.exit_code, 0);
  EXPECT_NEAR(cell(over.out, "k"), 0.01, 1e-15);
  EXPECT_EQ(run(cfg + "coupling --tx tx-thin --rx rx-60mm --dz-mm 50").exit_code, 0);
  EXPECT_EQ(run(cfg + "gwp breakeven --a uav-quarterly --b replace-3yr").exit_code, 0);
}

TEST(Cli, TuneSnapsToE12) {
  const auto r = run("tune --x-ohm 84 --e12");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NEAR(cell(r.out, "C_pF"), 279.45, 0.01);
  EXPECT_NEAR(cell(r.out, "C_e12_pF"), 270.0, 1e-9);
}

TEST(Cli, MissionLabelsHoverAsInput) {
  const auto r = run("mission --hover-w 100 --dz-mm 50 --rate-c 10");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NEAR(cell(r.out, "charge_time_min"), 6.0, 0.0);
  EXPECT_NEAR(cell(r.out, "hover_energy_Wh"), 10.0, 1e-12);
}

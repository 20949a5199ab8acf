#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "subprocess.hpp"

using testutil::report_value;
using testutil::run_cli;

namespace {

// Frozen reference values, computed offline at 50-digit precision.
constexpr double kAlpha = 1.1996786402577338;
constexpr double kThetaStar = 0.98551473786231546;
constexpr double kL03 = 0.57352244812057281;
constexpr double kL45 = 1.1477935746963190;
constexpr double kDL45 = 0.53283997535355202;
constexpr double kL03V2G98 = 0.23409079515125421;

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

double field_value(const std::string& line, size_t index) {
  std::istringstream in(line);
  std::string field;
  for (size_t i = 0; i <= index; ++i)
    if (!std::getline(in, field, ',')) return std::nan("");
  return field.empty() ? std::nan("") : std::strtod(field.c_str(), nullptr);
}

}  // namespace

TEST_CASE("optimal reports the fixed point and the angle in both units") {
  const auto res = run_cli("optimal");
  REQUIRE(res.exit_code == 0);
  CHECK(std::fabs(report_value(res.output, "alpha") - kAlpha) < 1e-9);
  CHECK(std::fabs(report_value(res.output, "theta_rad") - kThetaStar) < 1e-9);
  CHECK(std::fabs(report_value(res.output, "theta_deg") - 56.465835127452348) < 1e-6);
  CHECK(std::fabs(report_value(res.output, "arc_length_max") - kAlpha) < 1e-9);
  CHECK(report_value(res.output, "gap_percent") > 4.5);
}

TEST_CASE("arclength prints a single number") {
  const auto res = run_cli("arclength --theta 0.3");
  REQUIRE(res.exit_code == 0);
  CHECK(std::fabs(std::strtod(res.output.c_str(), nullptr) - kL03) < 1e-12);
  CHECK(lines_of(res.output).size() == 1);
  CHECK(res.output.back() == '\n');
}

TEST_CASE("the degrees flag converts angle inputs") {
  const auto res = run_cli("--degrees arclength --theta 45");
  REQUIRE(res.exit_code == 0);
  CHECK(std::fabs(std::strtod(res.output.c_str(), nullptr) - kL45) < 1e-12);

  // Global flags may trail the subcommand.
  const auto trailing = run_cli("arclength --theta 45 --degrees");
  REQUIRE(trailing.exit_code == 0);
  CHECK(trailing.output == res.output);

  const auto vertical = run_cli("--degrees arclength --theta 90");
  REQUIRE(vertical.exit_code == 0);
  CHECK(std::fabs(std::strtod(vertical.output.c_str(), nullptr) - 1.0) < 1e-10);
}

TEST_CASE("launch parameters scale the arc length") {
  const auto res = run_cli("--v 2 --g 9.8 arclength --theta 0.3");
  REQUIRE(res.exit_code == 0);
  CHECK(std::fabs(std::strtod(res.output.c_str(), nullptr) - kL03V2G98) < 1e-12);
}

TEST_CASE("domain errors exit with code 1 and explain themselves") {
  for (const char* bad : {"arclength --theta 0", "arclength --theta -0.5",
                          "arclength --theta 1.7", "--v 0 arclength --theta 1",
                          "--g -1 arclength --theta 1"}) {
    const auto res = run_cli(bad);
    CHECK(res.exit_code == 1);
    CHECK(res.output.find("error:") != std::string::npos);
  }
}

TEST_CASE("parse errors exit with code 1 and help with 0") {
  CHECK(run_cli("arclength").exit_code == 1);   // missing --theta
  CHECK(run_cli("frobnicate").exit_code == 1);  // unknown subcommand
  CHECK(run_cli("").exit_code == 1);            // subcommand required
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("sweep --help").exit_code == 0);
}

TEST_CASE("sweep emits a header and one row per step") {
  const auto res = run_cli("sweep --min 0.2 --max 1.4 --steps 7");
  REQUIRE(res.exit_code == 0);
  const auto lines = lines_of(res.output);
  REQUIRE(lines.size() == 8);
  CHECK(lines[0] == "theta,arc_length,arc_length_derivative");
  CHECK(field_value(lines[1], 0) == 0.2);
  CHECK(field_value(lines[7], 0) == 1.4);
}

TEST_CASE("sweep covers the vertical endpoint with an empty derivative field") {
  const auto res = run_cli("sweep --min 1.0 --max 1.5707963267948966 --steps 3");
  REQUIRE(res.exit_code == 0);
  const auto lines = lines_of(res.output);
  REQUIRE(lines.size() == 4);
  CHECK(lines[3].back() == ',');
  CHECK(std::fabs(field_value(lines[3], 1) - 1.0) < 1e-10);
}

TEST_CASE("sweep in degrees converts input and the theta column") {
  const auto res = run_cli("--degrees sweep --min 30 --max 60 --steps 3");
  REQUIRE(res.exit_code == 0);
  const auto lines = lines_of(res.output);
  REQUIRE(lines.size() == 4);
  CHECK(std::fabs(field_value(lines[1], 0) - 30.0) < 1e-12);
  CHECK(std::fabs(field_value(lines[2], 0) - 45.0) < 1e-12);
  CHECK(std::fabs(field_value(lines[3], 0) - 60.0) < 1e-12);
  // Values stay in natural units; the derivative stays per radian.
  CHECK(std::fabs(field_value(lines[2], 1) - kL45) < 1e-12);
  CHECK(std::fabs(field_value(lines[2], 2) - kDL45) < 1e-12);
}

TEST_CASE("sweep argument validation exits with code 1") {
  CHECK(run_cli("sweep --min 1.0 --max 0.5 --steps 10").exit_code == 1);
  CHECK(run_cli("sweep --min 0.1 --max 1.0 --steps 1").exit_code == 1);
  CHECK(run_cli("sweep --min 0 --max 1.0 --steps 10").exit_code == 1);
}

TEST_CASE("trajectory emits samples for one angle") {
  const auto res = run_cli("trajectory --theta 0.9 --samples 11");
  REQUIRE(res.exit_code == 0);
  const auto lines = lines_of(res.output);
  REQUIRE(lines.size() == 12);
  CHECK(lines[0] == "theta,t,x,y");
  CHECK(field_value(lines[1], 1) == 0.0);
  CHECK(field_value(lines[1], 2) == 0.0);
  CHECK(field_value(lines[1], 3) == 0.0);
  CHECK(field_value(lines[11], 3) < 1e-13);
}

TEST_CASE("trajectory without an angle emits the five-trajectory family") {
  const auto res = run_cli("trajectory --samples 21");
  REQUIRE(res.exit_code == 0);
  const auto lines = lines_of(res.output);
  REQUIRE(lines.size() == 1 + 5 * 21);
  // Third block of 21 rows carries the optimal angle.
  CHECK(std::fabs(field_value(lines[1 + 2 * 21], 0) - kThetaStar) < 1e-9);
}

TEST_CASE("trajectory defaults to 101 samples") {
  const auto res = run_cli("trajectory --theta 1.0");
  REQUIRE(res.exit_code == 0);
  CHECK(lines_of(res.output).size() == 102);
}

TEST_CASE("the out flag writes a file instead of stdout") {
  const char* path = "cli_out_test.csv";
  std::remove(path);
  const auto res = run_cli(std::string("sweep --min 0.3 --max 1.2 --steps 5 --out ") + path);
  REQUIRE(res.exit_code == 0);
  CHECK(res.output.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  CHECK(lines_of(buf.str()).size() == 6);
  std::remove(path);

  const auto bad = run_cli("sweep --min 0.3 --max 1.2 --steps 5 --out /nonexistent_dir/x.csv");
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("error:") != std::string::npos);
}

TEST_CASE("identical invocations produce byte-identical output") {
  const std::string cmd = "sweep --min 0.2 --max 1.5707963267948966 --steps 50";
  const auto first = run_cli(cmd);
  const auto second = run_cli(cmd);
  REQUIRE(first.exit_code == 0);
  CHECK(first.output == second.output);
}

TEST_CASE("verify runs the cross-check suite and passes") {
  const auto res = run_cli("verify");
  REQUIRE(res.exit_code == 0);
  CHECK(res.output.find("verification passed") != std::string::npos);
  CHECK(res.output.find("FAIL") == std::string::npos);
}

#include <gtest/gtest.h>

#include <sstream>

#include "diskdiam/cli.hpp"
#include "diskdiam/errors.hpp"
#include "diskdiam/io.hpp"

using namespace diskdiam;

namespace {

const std::string kSpecs = DISKDIAM_SPECS_DIR;
const std::string kData = DISKDIAM_TEST_DATA_DIR;

cli::RunConfig config(std::string sub, std::string spec) {
  cli::RunConfig c;
  c.subcommand = std::move(sub);
  c.inline_spec = std::move(spec);
  c.timestamp = false;
  return c;
}

const char* kLft = R"({"kind": "extremal-lft", "params": {"a": [0, 0], "b": [0.5, 0], "c": [1, 0]}})";
const char* kSquare = R"({"kind": "polynomial", "params": {"coefficients": [[0, 0], [0, 0], [1, 0]]}})";

}  // namespace

TEST(Spec, ParsesEveryKind) {
  EXPECT_EQ(parse_function_spec(kSquare).order(), 2u);
  const AnalyticFunction lft = parse_function_spec(kLft);
  EXPECT_EQ(lft.provenance(), Provenance::ExtremalLft);
  EXPECT_NE(lft.closed_form(), nullptr);
  const AnalyticFunction t = parse_function_spec(
      R"({"kind": "polynomial", "params": {"coefficients": [[0, 0], [1, 0]]}, "truncation": 8})");
  EXPECT_EQ(t.order(), 8u);
}

TEST(Spec, ErrorsCarryPosition) {
  try {
    parse_function_spec("{\"kind\": \"polynomial\",\n  \"params\": {\"coefficients\": [[0, 0], [1, 0]],}}");
    FAIL() << "expected SpecError";
  } catch (const SpecError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_function_spec(R"({"kind": "spline", "params": {}})"), SpecError);
  EXPECT_THROW(parse_function_spec(R"({"kind": "moebius", "params": {"xi": [1.5, 0], "eta": [1, 0]}})"),
               ArgumentError);
  EXPECT_THROW(parse_function_spec(R"({"kind": "polynomial", "params": {"coefficients": "x"}})"), SpecError);
}

TEST(Json, ReportShape) {
  const BoundReport r = make_report("x", 1.0, 2.0, 1e-9, 1e-9);
  const Json j = to_json(r);
  for (const char* key : {"name", "lhs", "rhs", "slack", "equality", "witness", "tolerances", "verdict"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(format_double(0.1), "0.1");
}

TEST(Cli, DiameterCsvOnSquare) {
  cli::RunConfig c = config("diameter", kSquare);
  c.format = "csv";
  c.r_grid = "0.1:0.9:17";
  const cli::RunResult res = cli::run(c);
  EXPECT_EQ(res.exit_code, cli::kExitOk) << res.diagnostics;
  std::istringstream in(res.output);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "r,ratio_lower,ratio_upper");
  int rows = 0;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string r, lo, hi;
    std::getline(fields, r, ',');
    std::getline(fields, lo, ',');
    std::getline(fields, hi, ',');
    // D_r / r = 2r for z^2.
    EXPECT_LE(std::stod(lo), 2.0 * std::stod(r) + 1e-12);
    EXPECT_GE(std::stod(hi), 2.0 * std::stod(r) - 1e-12);
    ++rows;
  }
  EXPECT_EQ(rows, 17);
}

TEST(Cli, GrowthEqualityOnLft) {
  cli::RunConfig c = config("bounds", kLft);
  c.checks = {"growth"};
  c.z = {"0.8"};
  const cli::RunResult res = cli::run(c);
  ASSERT_EQ(res.exit_code, cli::kExitOk) << res.diagnostics;
  const Json j = parse_json_text(res.output);
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["name"], "growth");
  EXPECT_EQ(j[0]["equality"], true);
  EXPECT_EQ(j[0]["verdict"], "pass");
}

TEST(Cli, VerifyAllIsByteIdenticalWithoutTimestamp) {
  cli::RunConfig c = config("verify-all", "");
  c.input = kSpecs + "/quadratic.json";
  const cli::RunResult a = cli::run(c);
  const cli::RunResult b = cli::run(c);
  EXPECT_EQ(a.exit_code, cli::kExitOk) << a.diagnostics;
  EXPECT_EQ(a.output, b.output);
  EXPECT_EQ(a.output.find("timestamp"), std::string::npos);
  c.timestamp = true;
  EXPECT_NE(cli::run(c).output.find("timestamp"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  cli::RunConfig bad = config("verify-all", "");
  bad.input = kData + "/malformed.json";
  const cli::RunResult m = cli::run(bad);
  EXPECT_EQ(m.exit_code, cli::kExitUsage);
  EXPECT_NE(m.diagnostics.find("line 2, column 44"), std::string::npos) << m.diagnostics;

  cli::RunConfig corrupt = config("verify-all", "");
  corrupt.input = kData + "/corrupted_moebius.json";
  const cli::RunResult k = cli::run(corrupt);
  EXPECT_EQ(k.exit_code, cli::kExitCheckFailed);
  const Json j = parse_json_text(k.output);
  EXPECT_EQ(j["verdict"], "fail");
  bool poukka = false;
  for (const auto& name : j["failing"]) poukka = poukka || name == "poukka";
  EXPECT_TRUE(poukka);

  cli::RunConfig missing = config("verify-all", "");
  missing.input = kData + "/does_not_exist.json";
  EXPECT_EQ(cli::run(missing).exit_code, cli::kExitUsage);

  cli::RunConfig tol = config("bounds", kSquare);
  tol.tol = {"bogus=1"};
  EXPECT_EQ(cli::run(tol).exit_code, cli::kExitUsage);
  tol.tol = {"quadrature_n=1000"};
  EXPECT_EQ(cli::run(tol).exit_code, cli::kExitUsage);

  cli::RunConfig sub = config("frobnicate", kSquare);
  EXPECT_EQ(cli::run(sub).exit_code, cli::kExitUsage);
}

TEST(Cli, MainEntryParsesArgv) {
  std::string spec = kLft;
  std::vector<std::string> args = {"diskdiam", "bounds", "--spec", spec, "--check", "growth",
                                   "--z", "0.8", "--no-timestamp"};
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  EXPECT_EQ(cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err), cli::kExitOk);
  EXPECT_NE(out.str().find("\"growth\""), std::string::npos);

  std::vector<std::string> bad = {"diskdiam", "bounds", "--nope"};
  std::vector<char*> bargv;
  for (auto& a : bad) bargv.push_back(a.data());
  std::ostringstream o2, e2;
  EXPECT_EQ(cli::main_entry(static_cast<int>(bargv.size()), bargv.data(), o2, e2), cli::kExitUsage);
}

// Copyright 2026 The tunehorizon Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "th/cli/commands.hpp"

#include <cstdlib>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "temp_dir.hpp"
#include "th/cli/report_io.hpp"

namespace th::cli {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// Scoped environment variable.
class EnvVar {
 public:
  EnvVar(const char* name, const char* value) : name_(name) { ::setenv(name, value, 1); }
  ~EnvVar() { ::unsetenv(name_); }

 private:
  const char* name_;
};

TEST_CASE("estimate on the two-point log") {
  test::TempDir dir;
  const auto log = dir.write("a.csv", "1,0.2\n2,0.6\n").string();
  const auto r = cli({"estimate", "--input", log, "--threshold", "0.01", "--json"});
  CHECK(r.code == exit_code::kContinue);
  const auto report = parse_report_json(r.out);
  CHECK(report.s_k == Catch::Approx(0.05).margin(1e-15));
  CHECK(report.verdict == Verdict::kContinue);

  const auto table = cli({"estimate", "--input", log, "--threshold", "0.01"});
  CHECK(table.code == 0);
  CHECK(table.out.find("estimated gain s_k  0.05") != std::string::npos);
}

TEST_CASE("estimate on a constant log with zero threshold") {
  test::TempDir dir;
  const auto log = dir.write("c.csv", "1,0.4\n2,0.4\n3,0.4\n").string();
  const auto r = cli({"estimate", "--input", log, "--threshold", "0", "--json"});
  CHECK(r.code == exit_code::kContinue);
  CHECK(r.out.find("\"s_k\":0,") != std::string::npos);
}

TEST_CASE("estimate stops on a long uniform run") {
  test::TempDir dir;
  std::mt19937_64 gen(51);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::string text;
  for (int i = 1; i <= 1024; ++i) text += std::to_string(i) + "," + format_g17(u(gen)) + "\n";
  const auto log = dir.write("u.csv", text).string();
  CHECK(cli({"estimate", "--input", log, "--threshold", "0.5"}).code == exit_code::kStop);
}

TEST_CASE("estimate exit codes for bad input") {
  test::TempDir dir;
  const auto one = dir.write("one.csv", "1,0.5\n").string();
  const auto bad = dir.write("bad.csv", "1,0.2\n2,0.6\n3,1.7\n").string();
  const auto broken = dir.write("broken.csv", "1,0.2\n2,x\n").string();
  const auto loss = dir.write("loss.csv", "1,3.0\n2,2.0\n3,2.5\n").string();
  CHECK(cli({"estimate", "--input", one}).code == exit_code::kUsage);
  const auto domain = cli({"estimate", "--input", bad});
  CHECK(domain.code == exit_code::kDataError);
  CHECK(domain.err.find("line 3") != std::string::npos);
  CHECK(cli({"estimate", "--input", broken}).code == exit_code::kDataError);
  CHECK(cli({"estimate", "--input", (dir.path() / "nope.csv").string()}).code ==
        exit_code::kNoInput);
  CHECK(cli({"estimate"}).code == exit_code::kUsage);
  CHECK(cli({"estimate", "--input", one, "--format", "xml"}).code == exit_code::kUsage);
  CHECK(cli({"estimate", "--input", loss}).code == exit_code::kDataError);
  CHECK(cli({"estimate", "--input", loss, "--min", "2", "--max", "4"}).code !=
        exit_code::kDataError);
  CHECK(cli({"estimate", "--input", loss, "--min", "2"}).code == exit_code::kUsage);
  CHECK(cli({"estimate", "--input", loss, "--min", "2", "--max", "4", "--threshold", "-1"}).code ==
        exit_code::kUsage);
  CHECK(cli({"estimate", "--input", loss, "--min", "2", "--max", "4", "--alpha", "2"}).code ==
        exit_code::kUsage);
}

TEST_CASE("curve output") {
  test::TempDir dir;
  const auto log = dir.write("a.csv", "1,0.2\n2,0.6\n").string();
  const auto out = (dir.path() / "curve.csv").string();
  REQUIRE(cli({"curve", "--input", log, "--out", out}).code == 0);
  const std::string first = test::read_file(out);
  CHECK(first == "k,s_k,lb,ub,error_bound,best_so_far\n"
                 "2,0.05,0,0.781084648936,3.53223006755,0.6\n");
  REQUIRE(cli({"curve", "--input", log, "--out", out}).code == 0);
  CHECK(test::read_file(out) == first);

  const auto flat = dir.write("flat.csv", "1,0.3\n2,0.3\n3,0.3\n4,0.3\n5,0.3\n").string();
  const auto r = cli({"curve", "--input", flat});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(line.substr(line.find(',') + 1, 2) == "0,");
  }
  CHECK(rows == 4);

  CHECK(cli({"curve", "--input", log, "--out", (dir.path() / "no/such/dir.csv").string()}).code ==
        exit_code::kCannotCreate);
}

TEST_CASE("simulate error-bound example") {
  const std::vector<std::string> args = {"simulate", "--experiment", "error-bound", "--dist",
                                         "uniform",  "--k",          "256",         "--trials",
                                         "2000",     "--seed",       "7",           "--json"};
  const auto r = cli(args);
  CHECK(r.code == 0);
  const auto at = r.out.find("\"violation_rate\":");
  REQUIRE(at != std::string::npos);
  CHECK(std::stod(r.out.substr(at + 17)) <= 1.0 / 16.0);
  CHECK(cli(args).out == r.out);
}

TEST_CASE("simulate usage errors") {
  CHECK(cli({"simulate", "--trials", "0"}).code == exit_code::kUsage);
  CHECK(cli({"simulate", "--experiment", "nope"}).code == exit_code::kUsage);
  CHECK(cli({"simulate", "--dist", "beta:-1,2"}).code == exit_code::kUsage);
  CHECK(cli({"simulate", "--k", "1"}).code == exit_code::kUsage);
  CHECK(cli({"simulate", "--experiment", "discrepancy", "--trials", "100"}).code ==
        exit_code::kUsage);
  EnvVar zero("TH_TRIALS", "0");
  CHECK(cli({"simulate"}).code == exit_code::kUsage);
}

TEST_CASE("simulate takes flags over environment over defaults") {
  const std::vector<std::string> base = {"simulate", "--k", "32", "--trials", "50", "--json"};
  const auto with = [&](std::vector<std::string> extra) {
    auto args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    return cli(args).out;
  };
  const std::string seed1 = with({});
  const std::string seed5 = with({"--seed", "5"});
  CHECK(seed1 != seed5);
  {
    EnvVar env("TH_SEED", "5");
    CHECK(with({}) == seed5);
    CHECK(with({"--seed", "1"}) == seed1);
  }
  {
    EnvVar env("TH_TRIALS", "40");
    CHECK(cli({"simulate", "--k", "32", "--json"}).out.find("\"trials\":40,") !=
          std::string::npos);
  }
}

TEST_CASE("simulate runs every experiment") {
  for (const char* x : {"dkw-coverage", "bracketing"}) {
    const auto r = cli({"simulate", "--experiment", x, "--trials", "200", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out.find(std::string("\"experiment\":\"") + x + "\"") != std::string::npos);
  }
  const auto d = cli({"simulate", "--experiment", "discrepancy", "--trials", "10000"});
  CHECK(d.code == 0);
  const auto m = cli({"simulate", "--experiment", "mae", "--trials", "10000", "--best", "2",
                      "--json"});
  CHECK(m.code == 0);
  CHECK(m.out.find("\"passed\":true") != std::string::npos);
  const auto c = cli({"simulate", "--experiment", "mae", "--trials", "10000", "--coupled",
                      "--json"});
  CHECK(c.code == 0);
  CHECK(c.out.find("\"passed\":null") != std::string::npos);
}

TEST_CASE("verify runs a single named criterion") {
  const auto r = cli({"verify", "--only", "closed-form"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS   1  closed-form") != std::string::npos);
  CHECK(r.out.find("1/1 criteria passed") != std::string::npos);

  const auto g = cli({"verify", "--only", "gamma-ratio"});
  CHECK(g.out.find("gamma-ratio") != std::string::npos);
  CHECK(g.out.find("closed-form") == std::string::npos);
  CHECK(g.out.find("/1 criteria passed") != std::string::npos);

  CHECK(cli({"verify", "--only", "nope"}).code == exit_code::kUsage);
}

TEST_CASE("verify catches a sign error in the sigma slope") {
  VerifyOptions opt;
  opt.only = {"gaussian-identity"};
  std::ostringstream out;
  std::ostringstream err;
  REQUIRE(cmd_verify(opt, out, err) == 0);

  opt.hooks.gradient = [](const GaussianParams& p) {
    auto g = improvement_gradient(p);
    g.d_sigma = -g.d_sigma;
    return g;
  };
  out.str("");
  CHECK(cmd_verify(opt, out, err) == exit_code::kAssertionFailed);
  CHECK(out.str().find("FAIL") != std::string::npos);
}

TEST_CASE("convexity criterion accepts a curvature with the printed sign change") {
  VerifyOptions opt;
  opt.only = {"convexity"};
  opt.hooks.curvature = [](const GaussianParams& p) {
    auto c = improvement_hessian_diag(p);
    c.d2_sigma = printed_sigma_curvature(p);
    return c;
  };
  std::ostringstream out;
  std::ostringstream err;
  CHECK(cmd_verify(opt, out, err) == 0);
}

TEST_CASE("help and missing verb") {
  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({}).code == exit_code::kUsage);
  CHECK(cli({"frobnicate"}).code == exit_code::kUsage);
}

}  // namespace
}  // namespace th::cli

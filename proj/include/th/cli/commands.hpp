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


// The four verbs.  Each command writes to the given streams and returns the
// process exit code, so tests can drive them without spawning a process.

#ifndef TH_CLI_COMMANDS_HPP_
#define TH_CLI_COMMANDS_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "th/cli/accuracy_log.hpp"
#include "th/cli/verify.hpp"
#include "th/gain_estimator.hpp"

namespace th::cli {

namespace exit_code {
inline constexpr int kContinue = 0;
inline constexpr int kOk = 0;
inline constexpr int kStop = 10;
inline constexpr int kInconclusive = 11;
inline constexpr int kAssertionFailed = 20;
inline constexpr int kUsage = 64;
inline constexpr int kDataError = 65;
inline constexpr int kNoInput = 66;
inline constexpr int kCannotCreate = 73;
}  // namespace exit_code

int verdict_exit_code(Verdict v);

struct InputOptions {
  std::filesystem::path input;
  LogFormat format = LogFormat::kAuto;
  std::optional<double> min;  // --min and --max come together
  std::optional<double> max;
};

struct EstimateOptions {
  InputOptions in;
  double threshold = 0.001;
  std::optional<double> alpha;
  bool json = false;
};

struct CurveOptions {
  InputOptions in;
  std::optional<std::filesystem::path> out;  // stdout when absent
  unsigned threads = 1;
};

// Unset fields take the experiment's default.
struct SimulateOptions {
  std::string experiment = "error-bound";
  std::string dist = "uniform";
  std::optional<std::size_t> k;
  std::optional<std::size_t> n;
  std::optional<std::size_t> trials;
  std::uint64_t seed = 1;
  std::optional<double> alpha;
  double mu = 0.0;
  double sigma = 1.0;
  double best = 0.0;
  bool coupled = false;
  unsigned threads = 1;
  bool json = false;
};

struct VerifyOptions {
  std::vector<std::string> only;
  VerifyHooks hooks;
};

int cmd_estimate(const EstimateOptions& opt, std::ostream& out, std::ostream& err);
int cmd_curve(const CurveOptions& opt, std::ostream& out, std::ostream& err);
int cmd_simulate(const SimulateOptions& opt, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);

// Full command-line front end; args excludes the program name.  self is the
// running executable, handed to the determinism check of `verify`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::optional<std::filesystem::path> self = std::nullopt);

}  // namespace th::cli

#endif  // TH_CLI_COMMANDS_HPP_

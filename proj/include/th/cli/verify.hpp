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


// The acceptance suite.  Each criterion runs at desk scale, checks its own
// runtime budget and returns a one-line detail with the numbers it judged.

#ifndef TH_CLI_VERIFY_HPP_
#define TH_CLI_VERIFY_HPP_

#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "th/gaussian_bounds.hpp"

namespace th::cli {

// Seams for mutation checks: the suite must notice a broken formula.
struct VerifyHooks {
  std::function<ImprovementGradient(const GaussianParams&)> gradient = improvement_gradient;
  std::function<ImprovementCurvature(const GaussianParams&)> curvature = improvement_hessian_diag;
  unsigned threads = 1;
  // When set, the determinism criterion also runs this executable twice.
  std::optional<std::filesystem::path> cli_path;
};

struct CriterionOutcome {
  bool passed = false;
  std::string detail;
};

struct CriterionResult {
  std::string_view name;
  bool passed = false;
  bool over_budget = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::string detail;
};

struct Criterion {
  int number;
  std::string_view name;
  std::string_view summary;
  double budget_seconds;
  CriterionOutcome (*run)(const VerifyHooks&);
};

std::span<const Criterion> criteria();

const Criterion* find_criterion(std::string_view name);

// Runs one criterion; an exception or a blown budget counts as a failure.
CriterionResult run_criterion(const Criterion& c, const VerifyHooks& hooks);

}  // namespace th::cli

#endif  // TH_CLI_VERIFY_HPP_

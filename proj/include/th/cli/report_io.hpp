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


// Rendering of estimate, curve and simulation reports.
//
// JSON numbers are printed with %.17g so every double survives a round trip
// bit for bit; non-finite values become null.

#ifndef TH_CLI_REPORT_IO_HPP_
#define TH_CLI_REPORT_IO_HPP_

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "th/gain_estimator.hpp"
#include "th/sim_harness.hpp"

namespace th::cli {

std::string format_g17(double v);

// Builds a single-line JSON object with keys in insertion order.
class JsonObject {
 public:
  JsonObject& number(std::string_view key, double v);
  JsonObject& integer(std::string_view key, std::uint64_t v);
  JsonObject& string(std::string_view key, std::string_view v);
  JsonObject& boolean(std::string_view key, bool v);
  JsonObject& null(std::string_view key);

  std::string str() const { return body_.empty() ? "{}" : "{" + body_ + "}"; }

 private:
  void key(std::string_view k);

  std::string body_;
};

std::string render_report_json(const EstimateReport& r);

// Inverse of render_report_json.  Throws std::runtime_error on a missing or
// mistyped field or an unknown verdict.
EstimateReport parse_report_json(std::string_view text);

void render_report_table(std::ostream& out, const EstimateReport& r, double threshold);

// Header `k,s_k,lb,ub,error_bound,best_so_far`, 12 significant digits.
void render_curve_csv(std::ostream& out, std::span<const CurvePoint> curve);

std::string render_json(const SimulationReport& r, std::string_view distribution);
std::string render_json(const CoverageReport& r);
std::string render_json(const BracketingReport& r, std::string_view distribution);
std::string render_json(const DiscrepancyReport& r);
std::string render_json(const MaeReport& r);

void render_table(std::ostream& out, const SimulationReport& r, std::string_view distribution);
void render_table(std::ostream& out, const CoverageReport& r);
void render_table(std::ostream& out, const BracketingReport& r, std::string_view distribution);
void render_table(std::ostream& out, const DiscrepancyReport& r);
void render_table(std::ostream& out, const MaeReport& r);

}  // namespace th::cli

#endif  // TH_CLI_REPORT_IO_HPP_

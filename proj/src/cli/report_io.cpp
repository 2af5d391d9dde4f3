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


#include "th/cli/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>
#include <vector>

#include <json.hpp>

namespace th::cli {
namespace {

std::string format_sig(double v, int digits) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

// Two-column label/value listing.
class Table {
 public:
  Table& row(std::string label, std::string value) {
    width_ = std::max(width_, label.size());
    rows_.emplace_back(std::move(label), std::move(value));
    return *this;
  }
  Table& num(std::string label, double v) { return row(std::move(label), format_sig(v, 6)); }
  Table& count(std::string label, std::uint64_t v) {
    return row(std::move(label), std::to_string(v));
  }

  void print(std::ostream& out) const {
    for (const auto& [label, value] : rows_) {
      out << label << std::string(width_ - label.size() + 2, ' ') << value << '\n';
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
  std::size_t width_ = 0;
};

std::string pass_word(bool passed) { return passed ? "PASS" : "FAIL"; }

std::string seconds(const Elapsed& e) { return format_sig(e.count(), 3) + " s"; }

}  // namespace

std::string format_g17(double v) { return format_sig(v, 17); }

void JsonObject::key(std::string_view k) {
  if (!body_.empty()) body_ += ',';
  body_ += '"';
  body_ += escape(k);
  body_ += "\":";
}

JsonObject& JsonObject::number(std::string_view k, double v) {
  key(k);
  body_ += std::isfinite(v) ? format_g17(v) : "null";
  return *this;
}

JsonObject& JsonObject::integer(std::string_view k, std::uint64_t v) {
  key(k);
  body_ += std::to_string(v);
  return *this;
}

JsonObject& JsonObject::string(std::string_view k, std::string_view v) {
  key(k);
  body_ += '"';
  body_ += escape(v);
  body_ += '"';
  return *this;
}

JsonObject& JsonObject::boolean(std::string_view k, bool v) {
  key(k);
  body_ += v ? "true" : "false";
  return *this;
}

JsonObject& JsonObject::null(std::string_view k) {
  key(k);
  body_ += "null";
  return *this;
}

std::string render_report_json(const EstimateReport& r) {
  return JsonObject()
      .integer("k", r.k)
      .number("s_k", r.s_k)
      .number("alpha", r.alpha)
      .number("epsilon", r.epsilon)
      .number("lb", r.lb)
      .number("ub", r.ub)
      .number("error_bound", r.error_bound)
      .number("confidence", r.confidence)
      .number("best_so_far", r.best_so_far)
      .string("verdict", to_string(r.verdict))
      .str();
}

EstimateReport parse_report_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("invalid report JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::runtime_error("report JSON must be an object");
  const auto field = [&](const char* name) -> const nlohmann::json& {
    const auto it = doc.find(name);
    if (it == doc.end()) throw std::runtime_error(std::string("report lacks \"") + name + "\"");
    return *it;
  };
  const auto real = [&](const char* name) {
    const auto& v = field(name);
    if (!v.is_number()) throw std::runtime_error(std::string("\"") + name + "\" is not a number");
    return v.get<double>();
  };

  EstimateReport r;
  const auto& k = field("k");
  if (!k.is_number_unsigned()) throw std::runtime_error("\"k\" is not a non-negative integer");
  r.k = k.get<std::size_t>();
  r.s_k = real("s_k");
  r.alpha = real("alpha");
  r.epsilon = real("epsilon");
  r.lb = real("lb");
  r.ub = real("ub");
  r.error_bound = real("error_bound");
  r.confidence = real("confidence");
  r.best_so_far = real("best_so_far");
  const auto& verdict = field("verdict");
  const auto parsed = verdict.is_string() ? parse_verdict(verdict.get<std::string>()) : std::nullopt;
  if (!parsed) throw std::runtime_error("\"verdict\" is not continue, stop or inconclusive");
  r.verdict = *parsed;
  return r;
}

void render_report_table(std::ostream& out, const EstimateReport& r, double threshold) {
  Table t;
  t.count("iterations (k)", r.k)
      .num("best so far", r.best_so_far)
      .num("estimated gain s_k", r.s_k)
      .row("confidence band", "[" + format_sig(r.lb, 6) + ", " + format_sig(r.ub, 6) + "]")
      .num("band alpha", r.alpha)
      .num("band epsilon", r.epsilon)
      .row("error bound", format_sig(r.error_bound, 6) +
                              (r.bound_vacuous() ? " (vacuous: >= 1)" : ""))
      .num("bound confidence", r.confidence)
      .num("stop threshold", threshold)
      .row("verdict", std::string(to_string(r.verdict)));
  t.print(out);
}

void render_curve_csv(std::ostream& out, std::span<const CurvePoint> curve) {
  out << "k,s_k,lb,ub,error_bound,best_so_far\n";
  for (const auto& p : curve) {
    out << p.k << ',' << format_sig(p.s_k, 12) << ',' << format_sig(p.lb, 12) << ','
        << format_sig(p.ub, 12) << ',' << format_sig(p.error_bound, 12) << ','
        << format_sig(p.best_so_far, 12) << '\n';
  }
}

std::string render_json(const SimulationReport& r, std::string_view distribution) {
  return JsonObject()
      .string("experiment", "error-bound")
      .string("distribution", distribution)
      .integer("k", r.k)
      .integer("trials", r.trials)
      .number("true_gain", r.true_gain)
      .integer("violations", r.violations)
      .number("violation_rate", r.violation_rate)
      .number("mean_abs_error", r.mean_abs_error)
      .number("max_abs_error", r.max_abs_error)
      .number("bound", r.bound)
      .number("allowed_rate", r.allowed_rate)
      .number("rate_limit", r.rate_limit)
      .boolean("passed", r.passed)
      .str();
}

std::string render_json(const CoverageReport& r) {
  return JsonObject()
      .string("experiment", "dkw-coverage")
      .integer("n", r.n)
      .number("alpha", r.alpha)
      .number("epsilon", r.epsilon)
      .integer("trials", r.trials)
      .integer("violations", r.violations)
      .number("frequency", r.frequency)
      .number("limit", r.limit)
      .boolean("passed", r.passed)
      .str();
}

std::string render_json(const BracketingReport& r, std::string_view distribution) {
  return JsonObject()
      .string("experiment", "bracketing")
      .string("distribution", distribution)
      .integer("k", r.k)
      .number("alpha", r.alpha)
      .number("epsilon", r.epsilon)
      .number("true_gain", r.true_gain)
      .integer("trials", r.trials)
      .integer("covered", r.covered)
      .number("coverage", r.coverage)
      .number("limit", r.limit)
      .boolean("passed", r.passed)
      .str();
}

std::string render_json(const DiscrepancyReport& r) {
  return JsonObject()
      .string("experiment", "discrepancy")
      .number("sigma", r.sigma)
      .integer("n", r.n)
      .integer("trials", r.trials)
      .integer("mu_conditioned", r.mu_conditioned)
      .number("mu_gap_mean", r.mu_gap_mean)
      .number("mu_gap_stderr", r.mu_gap_stderr)
      .number("mu_gap_expected", r.mu_gap_expected)
      .number("mu_gap_printed", r.mu_gap_printed)
      .integer("sigma_conditioned", r.sigma_conditioned)
      .number("sigma_gap_mean", r.sigma_gap_mean)
      .number("sigma_gap_stderr", r.sigma_gap_stderr)
      .number("sigma_gap_bound", r.sigma_gap_bound)
      .number("sigma_gap_floor", r.sigma_gap_floor)
      .boolean("mu_matches", r.mu_matches)
      .boolean("sigma_above_bound", r.sigma_above_bound)
      .boolean("passed", r.passed)
      .str();
}

std::string render_json(const MaeReport& r) {
  JsonObject o;
  o.string("experiment", "mae")
      .number("mu", r.params.mu())
      .number("sigma", r.params.sigma())
      .number("alpha", r.params.alpha())
      .integer("n", r.n)
      .integer("trials", r.trials)
      .string("mode", r.mode == ThresholdMode::kFixed ? "fixed" : "coupled")
      .number("empirical_mae", r.empirical_mae)
      .number("stderr_mae", r.stderr_mae)
      .number("err_ma_general", r.bounds.err_ma_general);
  if (r.bounds.err_ma_tail) {
    o.number("err_ma_tail", *r.bounds.err_ma_tail);
  } else {
    o.null("err_ma_tail");
  }
  o.number("mu_gap_expected", r.bounds.mu_gap_expected)
      .number("sigma_gap_lower", r.bounds.sigma_gap_lower);
  if (r.passed) {
    o.boolean("passed", *r.passed);
  } else {
    o.null("passed");
  }
  return o.str();
}

void render_table(std::ostream& out, const SimulationReport& r, std::string_view distribution) {
  Table()
      .row("experiment", "error-bound")
      .row("distribution", std::string(distribution))
      .count("k", r.k)
      .count("trials", r.trials)
      .num("true gain", r.true_gain)
      .num("error bound", r.bound)
      .count("violations", r.violations)
      .num("violation rate", r.violation_rate)
      .num("rate limit", r.rate_limit)
      .num("mean |S_k - truth|", r.mean_abs_error)
      .num("max |S_k - truth|", r.max_abs_error)
      .row("elapsed", seconds(r.elapsed))
      .row("result", pass_word(r.passed))
      .print(out);
}

void render_table(std::ostream& out, const CoverageReport& r) {
  Table()
      .row("experiment", "dkw-coverage")
      .count("n", r.n)
      .num("alpha", r.alpha)
      .num("epsilon", r.epsilon)
      .count("trials", r.trials)
      .count("violations", r.violations)
      .num("frequency", r.frequency)
      .num("limit", r.limit)
      .row("elapsed", seconds(r.elapsed))
      .row("result", pass_word(r.passed))
      .print(out);
}

void render_table(std::ostream& out, const BracketingReport& r, std::string_view distribution) {
  Table()
      .row("experiment", "bracketing")
      .row("distribution", std::string(distribution))
      .count("k", r.k)
      .num("alpha", r.alpha)
      .num("epsilon", r.epsilon)
      .num("true gain", r.true_gain)
      .count("trials", r.trials)
      .count("covered", r.covered)
      .num("coverage", r.coverage)
      .num("limit", r.limit)
      .row("elapsed", seconds(r.elapsed))
      .row("result", pass_word(r.passed))
      .print(out);
}

void render_table(std::ostream& out, const DiscrepancyReport& r) {
  Table()
      .row("experiment", "discrepancy")
      .num("sigma", r.sigma)
      .count("n", r.n)
      .count("trials", r.trials)
      .count("mu_hat > mu", r.mu_conditioned)
      .row("E[mu_hat - mu | >]", format_sig(r.mu_gap_mean, 6) + " +- " +
                                     format_sig(r.mu_gap_stderr, 2))
      .num("  sqrt(2/pi) s/sqrt(n)", r.mu_gap_expected)
      .num("  sqrt(2/pi) s^2/n", r.mu_gap_printed)
      .count("sigma_hat > sigma", r.sigma_conditioned)
      .row("E[s_hat - s | >]", format_sig(r.sigma_gap_mean, 6) + " +- " +
                                   format_sig(r.sigma_gap_stderr, 2))
      .num("  lower bound", r.sigma_gap_bound)
      .num("  s / (e^1.5 n)", r.sigma_gap_floor)
      .row("elapsed", seconds(r.elapsed))
      .row("result", pass_word(r.passed))
      .print(out);
}

void render_table(std::ostream& out, const MaeReport& r) {
  Table t;
  t.row("experiment", "mae")
      .num("mu", r.params.mu())
      .num("sigma", r.params.sigma())
      .num("alpha", r.params.alpha())
      .count("n", r.n)
      .count("trials", r.trials)
      .row("mode", r.mode == ThresholdMode::kFixed ? "fixed" : "coupled")
      .row("empirical MAE", format_sig(r.empirical_mae, 6) + " +- " +
                                format_sig(r.stderr_mae, 2))
      .num("general bound", r.bounds.err_ma_general)
      .row("tail bound", r.bounds.err_ma_tail ? format_sig(*r.bounds.err_ma_tail, 6)
                                              : std::string("n/a (z < sqrt(1.5))"))
      .row("elapsed", seconds(r.elapsed))
      .row("result", r.passed ? pass_word(*r.passed) : std::string("reported only"));
  t.print(out);
}

}  // namespace th::cli

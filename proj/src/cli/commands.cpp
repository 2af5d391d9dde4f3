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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "th/cli/report_io.hpp"
#include "th/ecdf.hpp"
#include "th/gain_estimator.hpp"
#include "th/sim_harness.hpp"

namespace th::cli {
namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::optional<Normalization> normalization(const InputOptions& in) {
  if (in.min.has_value() != in.max.has_value()) {
    throw UsageError("--min and --max must be given together");
  }
  if (!in.min) return std::nullopt;
  if (!(std::isfinite(*in.min) && std::isfinite(*in.max) && *in.max > *in.min)) {
    throw UsageError("normalization needs finite --min < --max");
  }
  return Normalization{*in.min, *in.max};
}

int ingest_exit_code(const IngestError& e) {
  return e.kind() == IngestError::Kind::kIo ? exit_code::kNoInput : exit_code::kDataError;
}

// Loads the log and insists on at least two entries.
std::vector<double> load_run(const InputOptions& in) {
  if (in.input.empty()) throw UsageError("--input is required");
  const AccuracyLog log = ingest(in.input, in.format, normalization(in));
  if (log.entries.size() < 2) {
    throw UsageError("the log has " + std::to_string(log.entries.size()) +
                     " entries; at least 2 are needed");
  }
  return log.accuracies();
}

// Shared error mapping for the log-driven verbs.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const IngestError& e) {
    err << "error: " << e.what() << '\n';
    return ingest_exit_code(e);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kDataError;
  }
}

int pass_exit(bool passed) { return passed ? exit_code::kOk : exit_code::kAssertionFailed; }

}  // namespace

int verdict_exit_code(Verdict v) {
  switch (v) {
    case Verdict::kContinue: return exit_code::kContinue;
    case Verdict::kStop: return exit_code::kStop;
    case Verdict::kInconclusive: return exit_code::kInconclusive;
  }
  return exit_code::kInconclusive;
}

int cmd_estimate(const EstimateOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!(std::isfinite(opt.threshold) && opt.threshold >= 0.0)) {
      throw UsageError("--threshold must be a finite value >= 0");
    }
    const auto sample = SortedSample::from_unsorted(load_run(opt.in));
    const EstimateReport report = estimate_report(sample, opt.threshold, opt.alpha);
    if (opt.json) {
      out << render_report_json(report) << '\n';
    } else {
      render_report_table(out, report, opt.threshold);
    }
    return verdict_exit_code(report.verdict);
  });
}

int cmd_curve(const CurveOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto run = load_run(opt.in);
    const auto curve = gain_curve(run, std::max(1u, opt.threads));
    if (!opt.out) {
      render_curve_csv(out, curve);
      return exit_code::kOk;
    }
    std::ostringstream csv;
    render_curve_csv(csv, curve);
    std::ofstream file(*opt.out, std::ios::binary | std::ios::trunc);
    if (file) file << csv.str();
    if (file) file.close();
    if (!file) {
      err << "error: cannot write '" << opt.out->string() << "'\n";
      return exit_code::kCannotCreate;
    }
    return exit_code::kOk;
  });
}

int cmd_simulate(const SimulateOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    if (opt.trials && *opt.trials == 0) throw UsageError("--trials must be positive");
    const unsigned threads = std::max(1u, opt.threads);
    const auto& x = opt.experiment;
    if (x == "error-bound" || x == "bracketing") {
      SimulationSpec spec;
      spec.distribution = AccuracyDistribution::parse(opt.dist);
      spec.k = opt.k.value_or(x == "error-bound" ? 256 : 64);
      spec.trials = opt.trials.value_or(2000);
      spec.seed = opt.seed;
      spec.threads = threads;
      const std::string name = spec.distribution.name();
      if (x == "error-bound") {
        const auto r = estimator_error_experiment(spec);
        if (opt.json) {
          out << render_json(r, name) << '\n';
        } else {
          render_table(out, r, name);
        }
        return pass_exit(r.passed);
      }
      const auto r = bracketing_experiment(spec, opt.alpha.value_or(0.05));
      if (opt.json) {
        out << render_json(r, name) << '\n';
      } else {
        render_table(out, r, name);
      }
      return pass_exit(r.passed);
    }
    if (x == "dkw-coverage") {
      const auto r = dkw_coverage_experiment(opt.n.value_or(200), opt.alpha.value_or(0.1),
                                             opt.trials.value_or(5000), opt.seed, threads);
      if (opt.json) {
        out << render_json(r) << '\n';
      } else {
        render_table(out, r);
      }
      return pass_exit(r.passed);
    }
    if (x == "discrepancy") {
      const auto r = mu_sigma_discrepancy_experiment(opt.sigma, opt.n.value_or(10),
                                                     opt.trials.value_or(100'000), opt.seed,
                                                     threads);
      if (opt.json) {
        out << render_json(r) << '\n';
      } else {
        render_table(out, r);
      }
      return pass_exit(r.passed);
    }
    if (x == "mae") {
      const GaussianParams p(opt.mu, opt.sigma, opt.best);
      const auto r = plug_in_mae_experiment(
          p, opt.n.value_or(10), opt.trials.value_or(100'000), opt.seed, threads,
          opt.coupled ? ThresholdMode::kCoupled : ThresholdMode::kFixed);
      if (opt.json) {
        out << render_json(r) << '\n';
      } else {
        render_table(out, r);
      }
      return pass_exit(r.passed.value_or(true));
    }
    throw UsageError("unknown experiment '" + x +
                     "' (expected error-bound, dkw-coverage, bracketing, discrepancy or mae)");
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kAssertionFailed;
  }
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  std::vector<const Criterion*> selected;
  if (opt.only.empty()) {
    for (const auto& c : criteria()) selected.push_back(&c);
  } else {
    for (const auto& name : opt.only) {
      const Criterion* c = find_criterion(name);
      if (c == nullptr) {
        err << "error: unknown criterion '" << name << "'; known:";
        for (const auto& k : criteria()) err << ' ' << k.name;
        err << '\n';
        return exit_code::kUsage;
      }
      selected.push_back(c);
    }
  }

  std::size_t failures = 0;
  for (const Criterion* c : selected) {
    const CriterionResult r = run_criterion(*c, opt.hooks);
    if (!r.passed) ++failures;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%6.2fs / %3.0fs", r.seconds, r.budget_seconds);
    out << (r.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << c->number << "  "
        << std::left << std::setw(18) << c->name << std::right << timing << "  " << r.detail
        << (r.over_budget ? " [over budget]" : "") << '\n';
    out.flush();
  }
  out << (selected.size() - failures) << '/' << selected.size() << " criteria passed\n";
  return failures == 0 ? exit_code::kOk : exit_code::kAssertionFailed;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::optional<std::filesystem::path> self) {
  CLI::App app{"Estimate the expected gain of one more random-search iteration", "tunehorizon"};
  app.require_subcommand(1);

  std::string format_text = "auto";
  const auto add_input = [&](CLI::App* sub, InputOptions& in, double& lo, double& hi) {
    sub->add_option("--input", in.input, "Accuracy log (CSV or JSON)")->required();
    sub->add_option("--format", format_text, "csv, json or auto (default: auto)")
        ->check(CLI::IsMember({"csv", "json", "auto"}));
    return std::pair{sub->add_option("--min", lo, "Raw value mapped to accuracy 0"),
                     sub->add_option("--max", hi, "Raw value mapped to accuracy 1")};
  };

  EstimateOptions est;
  double est_alpha = 0.0, est_lo = 0.0, est_hi = 0.0;
  auto* estimate = app.add_subcommand("estimate", "Estimate the gain of the next iteration");
  const auto [est_min, est_max] = add_input(estimate, est.in, est_lo, est_hi);
  estimate->add_option("--threshold", est.threshold, "Stop threshold on the gain (default 0.001)");
  auto* est_alpha_opt =
      estimate->add_option("--alpha", est_alpha, "Band alpha (default 1/sqrt(2k))");
  estimate->add_flag("--json", est.json, "Emit the JSON report");

  CurveOptions curve_opt;
  double cur_lo = 0.0, cur_hi = 0.0;
  auto* curve = app.add_subcommand("curve", "Write the gain curve of every prefix as CSV");
  const auto [cur_min, cur_max] = add_input(curve, curve_opt.in, cur_lo, cur_hi);
  std::string out_path;
  auto* cur_out = curve->add_option("--out", out_path, "Output CSV path (default: stdout)");
  curve->add_option("--threads", curve_opt.threads, "Worker threads")
      ->check(CLI::PositiveNumber);

  SimulateOptions sim;
  std::size_t sim_k = 0, sim_n = 0, sim_trials = 0;
  double sim_alpha = 0.0;
  auto* simulate = app.add_subcommand("simulate", "Run a Monte Carlo experiment");
  simulate->add_option("--experiment", sim.experiment,
                       "error-bound, dkw-coverage, bracketing, discrepancy or mae");
  simulate->add_option("--dist", sim.dist, "uniform, beta:A,B or truncnormal:MU,SIGMA");
  auto* sim_k_opt = simulate->add_option("--k", sim_k, "Sample size k")->check(
      CLI::Range(std::size_t{2}, std::size_t{1} << 30));
  auto* sim_n_opt = simulate->add_option("--n", sim_n, "Sample size n (dkw-coverage, "
                                                       "discrepancy, mae)")
                        ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 30));
  auto* sim_trials_opt = simulate->add_option("--trials", sim_trials, "Trials (env TH_TRIALS)")
                             ->envname("TH_TRIALS");
  simulate->add_option("--seed", sim.seed, "Seed (env TH_SEED, default 1)")->envname("TH_SEED");
  auto* sim_alpha_opt = simulate->add_option("--alpha", sim_alpha, "Confidence level alpha");
  simulate->add_option("--mu", sim.mu, "Gaussian mean (mae)");
  simulate->add_option("--sigma", sim.sigma, "Gaussian standard deviation (discrepancy, mae)");
  simulate->add_option("--best", sim.best, "Threshold accuracy alpha of I (mae)");
  simulate->add_flag("--coupled", sim.coupled, "mae: threshold = sample maximum, no assertion");
  simulate->add_option("--threads", sim.threads, "Worker threads")->check(CLI::PositiveNumber);
  simulate->add_flag("--json", sim.json, "Emit JSON");

  VerifyOptions ver;
  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--only", ver.only, "Run only the named criterion (repeatable)");
  verify->add_option("--threads", ver.hooks.threads, "Worker threads")
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_code::kUsage;
  }

  const auto format = parse_log_format(format_text).value_or(LogFormat::kAuto);
  if (estimate->parsed()) {
    est.in.format = format;
    if (est_min->count() > 0) est.in.min = est_lo;
    if (est_max->count() > 0) est.in.max = est_hi;
    if (est_alpha_opt->count() > 0) est.alpha = est_alpha;
    return cmd_estimate(est, out, err);
  }
  if (curve->parsed()) {
    curve_opt.in.format = format;
    if (cur_min->count() > 0) curve_opt.in.min = cur_lo;
    if (cur_max->count() > 0) curve_opt.in.max = cur_hi;
    if (cur_out->count() > 0) curve_opt.out = out_path;
    return cmd_curve(curve_opt, out, err);
  }
  if (simulate->parsed()) {
    if (sim_k_opt->count() > 0) sim.k = sim_k;
    if (sim_n_opt->count() > 0) sim.n = sim_n;
    if (sim_trials_opt->count() > 0) sim.trials = sim_trials;
    if (sim_alpha_opt->count() > 0) sim.alpha = sim_alpha;
    return cmd_simulate(sim, out, err);
  }
  ver.hooks.cli_path = std::move(self);
  return cmd_verify(ver, out, err);
}

}  // namespace th::cli

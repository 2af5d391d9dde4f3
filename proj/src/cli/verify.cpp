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


#include "th/cli/verify.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "th/cli/commands.hpp"
#include "th/distributions.hpp"
#include "th/ecdf.hpp"
#include "th/gain_estimator.hpp"
#include "th/rng.hpp"
#include "th/sim_harness.hpp"

namespace th::cli {
namespace {

template <typename... Args>
std::string fmt(const char* pattern, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

const std::array<AccuracyDistribution, 4>& mixed_distributions() {
  static const std::array<AccuracyDistribution, 4> dists = {
      AccuracyDistribution(Uniform01{}), AccuracyDistribution(BetaParams{2.0, 5.0}),
      AccuracyDistribution(BetaParams{0.5, 0.5}),
      AccuracyDistribution(TruncNormalParams{0.8, 0.1})};
  return dists;
}

// n draws from a randomly chosen distribution; every fourth sample is rounded
// to two decimals so ties show up.
SortedSample mixed_sample(StreamRng& rng, std::size_t n) {
  const auto& dist = mixed_distributions()[rng() % mixed_distributions().size()];
  const bool coarse = rng() % 4 == 0;
  std::vector<double> v(n);
  for (auto& x : v) {
    x = dist.sample(rng);
    if (coarse) x = std::round(x * 100.0) / 100.0;
  }
  return SortedSample::from_unsorted(std::move(v));
}

CriterionOutcome closed_form(const VerifyHooks&) {
  StreamRng rng(101, 0);
  double worst = 0.0;
  std::size_t worst_n = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng() % 512;
    const SortedSample s = mixed_sample(rng, n);
    const double d =
        std::abs(expected_gain_closed_form(s) - expected_gain_integral(build_ecdf(s), n));
    if (d > worst) {
      worst = d;
      worst_n = n;
    }
  }
  return {worst <= 1e-10,
          fmt("max |closed form - integral| = %.3g (n = %zu) over 1000 samples, tol 1e-10", worst,
              worst_n)};
}

CriterionOutcome uniform_truth(const VerifyHooks&) {
  const AccuracyDistribution uniform;
  double worst = 0.0;
  std::size_t worst_k = 1;
  for (std::size_t k = 1; k <= 64; ++k) {
    const double exact = 1.0 / (static_cast<double>(k + 1) * static_cast<double>(k + 2));
    const double d = std::abs(true_expected_gain(uniform, k) - exact);
    if (d > worst) {
      worst = d;
      worst_k = k;
    }
  }
  return {worst <= 1e-9,
          fmt("max |quadrature - 1/((k+1)(k+2))| = %.3g at k = %zu, tol 1e-9", worst, worst_k)};
}

CriterionOutcome error_bound_check(const VerifyHooks& hooks) {
  const std::array<AccuracyDistribution, 3> dists = {AccuracyDistribution(Uniform01{}),
                                                     AccuracyDistribution(BetaParams{2.0, 5.0}),
                                                     AccuracyDistribution(TruncNormalParams{0.6, 0.15})};
  bool ok = true;
  double worst_rate = 0.0;
  double worst_err = 0.0;
  std::uint64_t seed = 300;
  for (const std::size_t k : {64u, 256u, 1024u}) {
    for (const auto& d : dists) {
      SimulationSpec spec;
      spec.distribution = d;
      spec.k = k;
      spec.trials = 2000;
      spec.seed = ++seed;
      spec.threads = hooks.threads;
      const auto r = estimator_error_experiment(spec);
      ok = ok && r.passed;
      worst_rate = std::max(worst_rate, r.violation_rate);
      worst_err = std::max(worst_err, r.max_abs_error);
    }
  }
  return {ok, fmt("9 configurations x 2000 trials: max violation rate %.3g, max |S_k - truth| "
                  "%.3g",
                  worst_rate, worst_err)};
}

CriterionOutcome dkw_coverage(const VerifyHooks& hooks) {
  const auto r = dkw_coverage_experiment(200, 0.1, 5000, 401, hooks.threads);
  return {r.passed, fmt("violation frequency %.4f <= %.4f (eps = %.4f)", r.frequency, r.limit,
                        r.epsilon)};
}

CriterionOutcome bracketing(const VerifyHooks& hooks) {
  SimulationSpec spec;
  spec.k = 64;
  spec.trials = 2000;
  spec.seed = 501;
  spec.threads = hooks.threads;
  const auto r = bracketing_experiment(spec, 0.05);
  return {r.passed, fmt("coverage %.4f >= %.4f", r.coverage, r.limit)};
}

CriterionOutcome band_width(const VerifyHooks&) {
  StreamRng rng(601, 0);
  double worst_margin = 1.0;
  std::size_t cases = 0;
  std::size_t violations = 0;
  for (int i = 0; i < 3000; ++i) {
    const std::size_t k = 2 + rng() % 399;
    const double eps = std::sqrt(0.1 / static_cast<double>(k)) * (1.0 - rng.uniform01());
    const SortedSample s = mixed_sample(rng, k);
    const auto ci = confidence_integrals(build_ecdf(s), k, eps);
    const double kd = static_cast<double>(k);
    const double limit = (2.0 + 2.0 / std::exp(1.0)) * eps + kd * eps * eps;
    const double margin = limit - (ci.ub - ci.lb);
    worst_margin = std::min(worst_margin, margin);
    if (margin < 0.0) ++violations;
    ++cases;
  }
  return {violations == 0,
          fmt("%zu/%zu instances exceed (2 + 2/e) eps + k eps^2; smallest margin %.3g", violations,
              cases, worst_margin)};
}

CriterionOutcome gaussian_identity(const VerifyHooks& hooks) {
  // Monte Carlo against the closed form.
  std::size_t idx = 0;
  double worst_z = 0.0;
  bool ok = true;
  for (const double z : {-2.0, 0.0, 2.0}) {
    for (const double sigma : {0.5, 1.0, 2.0}) {
      const GaussianParams p(0.0, sigma, z * sigma);
      StreamRng rng(701, idx++);
      std::normal_distribution<double> normal(0.0, sigma);
      constexpr int kDraws = 1'000'000;
      double sum = 0.0;
      double sum_sq = 0.0;
      for (int i = 0; i < kDraws; ++i) {
        const double g = std::max(normal(rng) - p.alpha(), 0.0);
        sum += g;
        sum_sq += g * g;
      }
      const double mean = sum / kDraws;
      const double se = std::sqrt((sum_sq / kDraws - mean * mean) / (kDraws - 1));
      const double zscore = std::abs(mean - expected_improvement(p)) / se;
      worst_z = std::max(worst_z, zscore);
      ok = ok && zscore <= 4.0;
    }
  }

  // Central differences against the analytic gradient.
  constexpr double kH = 1e-5;
  const double mu = 0.3;
  const double sigma = 1.5;
  double worst_rel = 0.0;
  for (int i = 0; i <= 32; ++i) {
    const double z = -4.0 + 0.25 * i;
    const double alpha = mu + z * sigma;
    const auto ei = [&](double m, double s) {
      return expected_improvement(GaussianParams(m, s, alpha));
    };
    const double fd_mu = (ei(mu + kH, sigma) - ei(mu - kH, sigma)) / (2.0 * kH);
    const double fd_sigma = (ei(mu, sigma + kH) - ei(mu, sigma - kH)) / (2.0 * kH);
    const auto g = hooks.gradient(GaussianParams(mu, sigma, alpha));
    worst_rel = std::max({worst_rel, std::abs(g.d_mu - fd_mu) / std::abs(fd_mu),
                          std::abs(g.d_sigma - fd_sigma) / std::abs(fd_sigma)});
  }
  ok = ok && worst_rel <= 1e-6;
  return {ok, fmt("Monte Carlo max deviation %.2f SE (<= 4); gradient max relative error %.3g "
                  "(<= 1e-6)",
                  worst_z, worst_rel)};
}

CriterionOutcome convexity(const VerifyHooks& hooks) {
  bool ok = true;
  double inner_max = -INFINITY;
  double outer_min = INFINITY;
  for (const double sigma : {0.5, 1.0, 2.0}) {
    for (const double sign : {-1.0, 1.0}) {
      const double inner = hooks.curvature(GaussianParams(0.0, sigma, sign * 1.0 * sigma)).d2_sigma;
      const double outer = hooks.curvature(GaussianParams(0.0, sigma, sign * 1.5 * sigma)).d2_sigma;
      ok = ok && inner < 0.0 && outer > 0.0;
      inner_max = std::max(inner_max, inner);
      outer_min = std::min(outer_min, outer);
    }
  }
  const GaussianParams unit(0.0, 1.0, 1.0);
  return {ok, fmt("d2I/dsigma2: max at |z| = 1 is %.4g (want < 0), min at |z| = 1.5 is %.4g "
                  "(want > 0); the printed (2z^2-3) z^2 phi/sigma form gives %.4g at z = 1",
                  inner_max, outer_min, printed_sigma_curvature(unit))};
}

CriterionOutcome gamma_ratio(const VerifyHooks&) {
  StreamRng rng(901, 0);
  const auto draw = [&] { return 20.0 * (1.0 - rng.uniform01()); };
  std::size_t failures = 0;
  std::size_t failures_s_ge_1 = 0;
  double worst_s = 0.0;
  for (int i = 0; i < 10'000; ++i) {
    const double s = draw();
    const double x = draw();
    const double y = draw();
    if (!gamma_ratio_inequality_check(s, x, y).holds) {
      ++failures;
      if (s >= 1.0) ++failures_s_ge_1;
      worst_s = std::max(worst_s, s);
    }
  }
  double worst_eq = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto c = gamma_ratio_inequality_check(1.0, draw(), draw());
    worst_eq = std::max(worst_eq, std::abs(c.ratio - c.floor) / c.floor);
  }
  const bool ok = failures == 0 && worst_eq <= 1e-12;
  return {ok, fmt("%zu/10000 draws violate the inequality (%zu with s >= 1, largest failing s "
                  "%.3g); s = 1 max relative gap %.3g (<= 1e-12)",
                  failures, failures_s_ge_1, worst_s, worst_eq)};
}

CriterionOutcome mean_gap(const VerifyHooks& hooks) {
  bool ok = true;
  std::string detail;
  std::uint64_t seed = 1000;
  for (const auto& [sigma, n] : {std::pair{1.0, 10u}, std::pair{2.0, 4u}, std::pair{1.0, 100u}}) {
    const auto r = mu_sigma_discrepancy_experiment(sigma, n, 100'000, ++seed, hooks.threads);
    const double dev = (r.mu_gap_mean - r.mu_gap_expected) / r.mu_gap_stderr;
    ok = ok && r.mu_matches;
    detail += fmt("(%g,%u): %+.2f SE", sigma, n, dev);
    if (n == 100) {
      const double printed_dev = std::abs(r.mu_gap_mean - r.mu_gap_printed) / r.mu_gap_stderr;
      ok = ok && printed_dev > 10.0;
      detail += fmt(", printed form off by %.0f SE", printed_dev);
    } else {
      detail += "; ";
    }
  }
  return {ok, detail};
}

CriterionOutcome sigma_gap(const VerifyHooks& hooks) {
  bool ok = true;
  std::string detail;
  std::uint64_t seed = 1100;
  for (const std::size_t n : {5u, 20u, 100u}) {
    const auto r = mu_sigma_discrepancy_experiment(1.0, n, 100'000, ++seed, hooks.threads);
    ok = ok && r.sigma_gap_mean >= r.sigma_gap_floor;
    detail += fmt("%sn=%zu: %.4g >= %.4g", detail.empty() ? "" : "; ", n, r.sigma_gap_mean,
                  r.sigma_gap_floor);
  }
  return {ok, detail};
}

CriterionOutcome err_ma(const VerifyHooks& hooks) {
  bool ok = true;
  std::string detail;
  std::uint64_t seed = 1200;
  for (const double alpha : {0.0, 2.0}) {
    const auto r =
        plug_in_mae_experiment(GaussianParams(0.0, 1.0, alpha), 10, 100'000, ++seed, hooks.threads);
    ok = ok && r.passed.value_or(false);
    detail += fmt("%salpha=%g: MAE %.4g vs general %.4g", detail.empty() ? "" : "; ", alpha,
                  r.empirical_mae, r.bounds.err_ma_general);
    if (r.bounds.err_ma_tail) detail += fmt(", tail %.4g", *r.bounds.err_ma_tail);
  }
  return {ok, detail};
}

// Runs the executable and captures stdout; returns false on a nonzero exit.
bool run_process(const std::string& command, std::string& output) {
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return false;
  std::array<char, 4096> buf;
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), got);
  const int status = pclose(pipe);
  return status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0;
}

bool same_curve(const std::vector<CurvePoint>& a, const std::vector<CurvePoint>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double x[] = {a[i].s_k, a[i].lb, a[i].ub, a[i].error_bound, a[i].best_so_far};
    const double y[] = {b[i].s_k, b[i].lb, b[i].ub, b[i].error_bound, b[i].best_so_far};
    if (a[i].k != b[i].k || std::memcmp(x, y, sizeof x) != 0) return false;
  }
  return true;
}

CriterionOutcome determinism(const VerifyHooks& hooks) {
  const auto simulate = [](SimulateOptions opt, unsigned threads) {
    opt.json = true;
    opt.threads = threads;
    std::ostringstream out;
    std::ostringstream err;
    const int code = cmd_simulate(opt, out, err);
    return std::to_string(code) + ":" + out.str();
  };

  SimulateOptions base;
  base.experiment = "error-bound";
  base.k = 64;
  base.trials = 1000;
  base.seed = 7;
  const bool repeat_ok = simulate(base, 1) == simulate(base, 1);

  std::vector<SimulateOptions> runs;
  runs.push_back(base);
  SimulateOptions beta = base;
  beta.dist = "beta:2,5";
  runs.push_back(beta);
  SimulateOptions dkw;
  dkw.experiment = "dkw-coverage";
  dkw.trials = 1000;
  runs.push_back(dkw);
  SimulateOptions bracket;
  bracket.experiment = "bracketing";
  bracket.trials = 1000;
  runs.push_back(bracket);
  SimulateOptions disc;
  disc.experiment = "discrepancy";
  disc.trials = 20'000;
  runs.push_back(disc);
  SimulateOptions mae;
  mae.experiment = "mae";
  mae.trials = 20'000;
  runs.push_back(mae);
  std::size_t parallel_mismatch = 0;
  for (const auto& opt : runs) {
    if (simulate(opt, 1) != simulate(opt, 4)) ++parallel_mismatch;
  }

  StreamRng rng(1300, 0);
  std::vector<double> run(3000);
  for (auto& x : run) x = rng.uniform01();
  const bool curve_ok = same_curve(gain_curve(run, 1), gain_curve(run, 4));

  bool cli_ok = true;
  std::string cli_note;
  if (hooks.cli_path) {
    const std::string cmd = "'" + hooks.cli_path->string() +
                            "' simulate --experiment error-bound --k 64 --trials 500 --seed 7 "
                            "--json 2>/dev/null";
    std::string first;
    std::string second;
    cli_ok = run_process(cmd, first) && run_process(cmd, second) && !first.empty() &&
             first == second;
    cli_note = fmt("; two CLI runs byte-identical: %s", cli_ok ? "yes" : "no");
  }
  return {repeat_ok && parallel_mismatch == 0 && curve_ok && cli_ok,
          fmt("repeat identical: %s; threads 1 vs 4: %zu/%zu experiments differ; gain curve "
              "identical: %s",
              repeat_ok ? "yes" : "no", parallel_mismatch, runs.size(), curve_ok ? "yes" : "no") +
              cli_note};
}

constexpr std::array kCriteria = {
    Criterion{1, "closed-form", "closed form equals the step integral", 5, closed_form},
    Criterion{2, "uniform-truth", "quadrature truth matches 1/((k+1)(k+2))", 10, uniform_truth},
    Criterion{3, "error-bound", "high-probability error bound holds", 120, error_bound_check},
    Criterion{4, "dkw-coverage", "DKW band coverage", 30, dkw_coverage},
    Criterion{5, "bracketing", "true gain lies in [lb, ub]", 30, bracketing},
    Criterion{6, "band-width", "ub - lb width envelope", 10, band_width},
    Criterion{7, "gaussian-identity", "expected improvement and its gradient", 30,
              gaussian_identity},
    Criterion{8, "convexity", "sigma-curvature sign flip at sqrt(3/2)", 1, convexity},
    Criterion{9, "gamma-ratio", "incomplete gamma ratio inequality", 10, gamma_ratio},
    Criterion{10, "mean-gap", "conditional mean gap of mu_hat", 30, mean_gap},
    Criterion{11, "sigma-gap", "conditional gap of sigma_hat", 30, sigma_gap},
    Criterion{12, "err-ma", "plug-in MAE lower bounds", 30, err_ma},
    Criterion{13, "determinism", "seeded, thread-count independent output", 60, determinism},
};

}  // namespace

std::span<const Criterion> criteria() { return kCriteria; }

const Criterion* find_criterion(std::string_view name) {
  for (const auto& c : kCriteria) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

CriterionResult run_criterion(const Criterion& c, const VerifyHooks& hooks) {
  CriterionResult r;
  r.name = c.name;
  r.budget_seconds = c.budget_seconds;
  const auto start = std::chrono::steady_clock::now();
  try {
    CriterionOutcome o = c.run(hooks);
    r.passed = o.passed;
    r.detail = std::move(o.detail);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.over_budget = r.seconds > c.budget_seconds;
  if (r.over_budget) r.passed = false;
  return r;
}

}  // namespace th::cli

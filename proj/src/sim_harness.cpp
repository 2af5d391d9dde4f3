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

#include "th/sim_harness.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "th/ecdf.hpp"
#include "th/gain_estimator.hpp"
#include "th/parallel.hpp"

namespace th {
namespace {

using Clock = std::chrono::steady_clock;

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      carry_ += (sum_ - t) + v;
    } else {
      carry_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

double simpson(const AccuracyDistribution& dist, std::size_t k, std::size_t intervals) {
  if (intervals % 2 != 0) ++intervals;
  const double dk = static_cast<double>(k);
  const double h = 1.0 / static_cast<double>(intervals);
  const auto g = [&](double t) {
    const double f = dist.cdf(t);
    return std::pow(f, dk) * (1.0 - f);
  };
  CompensatedSum sum;
  sum.add(g(0.0));
  sum.add(g(1.0));
  for (std::size_t i = 1; i < intervals; ++i) {
    sum.add((i % 2 == 1 ? 4.0 : 2.0) * g(static_cast<double>(i) * h));
  }
  return sum.value() * h / 3.0;
}

std::vector<double> draw_sorted(const AccuracyDistribution& dist, std::size_t k, StreamRng& rng) {
  std::vector<double> xs(k);
  for (double& x : xs) x = dist.sample(rng);
  std::sort(xs.begin(), xs.end());
  return xs;
}

struct MeanAndError {
  double mean;
  double std_error;
  std::size_t count;
};

MeanAndError mean_and_stderr(const std::vector<double>& values) {
  CompensatedSum sum;
  for (double v : values) sum.add(v);
  const double n = static_cast<double>(values.size());
  const double mean = values.empty() ? 0.0 : sum.value() / n;
  CompensatedSum sq;
  for (double v : values) sq.add((v - mean) * (v - mean));
  const double var = values.size() > 1 ? sq.value() / (n - 1.0) : 0.0;
  return {mean, values.empty() ? 0.0 : std::sqrt(var / n), values.size()};
}

void check_trials(std::size_t trials) {
  if (trials == 0) throw std::invalid_argument("trials must be >= 1");
}

struct GaussianDraw {
  double mean;
  double sd;  // sqrt of the Bessel-corrected variance
  double max;
};

GaussianDraw draw_gaussian(double mu, double sigma, std::size_t n, StreamRng& rng) {
  std::normal_distribution<double> normal(mu, sigma);
  std::vector<double> xs(n);
  for (double& x : xs) x = normal(rng);
  double sum = 0.0;
  for (double x : xs) sum += x;
  const double mean = sum / static_cast<double>(n);
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / static_cast<double>(n - 1)), *std::max_element(xs.begin(), xs.end())};
}

}  // namespace

void SimulationSpec::validate() const {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  if (probe_grid < 2) throw std::invalid_argument("probe grid must hold at least 2 intervals");
}

double true_expected_gain(const AccuracyDistribution& dist, std::size_t k,
                          std::size_t probe_grid) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  if (probe_grid < 2) throw std::invalid_argument("probe grid must hold at least 2 intervals");
  return simpson(dist, k, probe_grid);
}

QuadratureCheck true_expected_gain_convergence(const AccuracyDistribution& dist, std::size_t k,
                                               std::size_t probe_grid) {
  const double fine = true_expected_gain(dist, k, probe_grid);
  const double coarse = true_expected_gain(dist, k, std::max<std::size_t>(2, probe_grid / 2));
  return {fine, coarse, std::abs(fine - coarse)};
}

SimulationReport estimator_error_experiment(const SimulationSpec& spec, bool keep_per_trial) {
  spec.validate();
  const auto start = Clock::now();

  SimulationReport r;
  r.k = spec.k;
  r.trials = spec.trials;
  r.true_gain = true_expected_gain(spec.distribution, spec.k, spec.probe_grid);
  r.bound = error_bound(spec.k).bound;
  r.allowed_rate = 1.0 / std::sqrt(static_cast<double>(spec.k));
  r.rate_limit =
      r.allowed_rate + 3.0 * std::sqrt(r.allowed_rate / static_cast<double>(spec.trials));

  const auto errors = map_indexed<double>(spec.trials, spec.threads, [&](std::size_t i) {
    StreamRng rng(spec.seed, i);
    const SortedSample sample(draw_sorted(spec.distribution, spec.k, rng));
    return expected_gain_closed_form(sample) - r.true_gain;
  });

  CompensatedSum abs_sum;
  for (double e : errors) {
    const double a = std::abs(e);
    abs_sum.add(a);
    r.max_abs_error = std::max(r.max_abs_error, a);
    if (a > r.bound) ++r.violations;
  }
  const double trials = static_cast<double>(spec.trials);
  r.mean_abs_error = abs_sum.value() / trials;
  r.violation_rate = static_cast<double>(r.violations) / trials;
  r.passed = r.violation_rate <= r.rate_limit;
  if (keep_per_trial) r.per_trial_errors = errors;
  r.elapsed = Clock::now() - start;
  return r;
}

CoverageReport dkw_coverage_experiment(std::size_t n, double alpha, std::size_t trials,
                                       std::uint64_t seed, unsigned threads) {
  check_trials(trials);
  const auto start = Clock::now();
  CoverageReport r;
  r.n = n;
  r.alpha = alpha;
  r.epsilon = dkw_epsilon(n, alpha);
  r.trials = trials;
  const AccuracyDistribution uniform;
  const auto hits = map_indexed<char>(trials, threads, [&](std::size_t i) -> char {
    StreamRng rng(seed, i);
    const StepCdf cdf = build_ecdf(SortedSample(draw_sorted(uniform, n, rng)));
    return sup_distance(cdf, [](double x) { return x; }) > r.epsilon ? 1 : 0;
  });
  for (char h : hits) r.violations += static_cast<std::size_t>(h);
  const double t = static_cast<double>(trials);
  r.frequency = static_cast<double>(r.violations) / t;
  r.limit = alpha + 3.0 * std::sqrt(alpha * (1.0 - alpha) / t);
  r.passed = r.frequency <= r.limit;
  r.elapsed = Clock::now() - start;
  return r;
}

BracketingReport bracketing_experiment(const SimulationSpec& spec, double alpha,
                                       std::optional<double> epsilon_override) {
  spec.validate();
  const auto start = Clock::now();
  BracketingReport r;
  r.k = spec.k;
  r.alpha = alpha;
  r.epsilon = epsilon_override ? *epsilon_override : dkw_epsilon(spec.k, alpha);
  r.trials = spec.trials;
  r.true_gain = true_expected_gain(spec.distribution, spec.k, spec.probe_grid);
  const auto inside = map_indexed<char>(spec.trials, spec.threads, [&](std::size_t i) -> char {
    StreamRng rng(spec.seed, i);
    const StepCdf cdf = build_ecdf(SortedSample(draw_sorted(spec.distribution, spec.k, rng)));
    const auto band = confidence_integrals(cdf, spec.k, r.epsilon);
    return band.lb <= r.true_gain && r.true_gain <= band.ub ? 1 : 0;
  });
  for (char c : inside) r.covered += static_cast<std::size_t>(c);
  const double t = static_cast<double>(spec.trials);
  r.coverage = static_cast<double>(r.covered) / t;
  r.limit = 1.0 - alpha - 3.0 * std::sqrt(alpha * (1.0 - alpha) / t);
  r.passed = r.coverage >= r.limit;
  r.elapsed = Clock::now() - start;
  return r;
}

DiscrepancyReport mu_sigma_discrepancy_experiment(double sigma, std::size_t n,
                                                  std::size_t trials, std::uint64_t seed,
                                                  unsigned threads) {
  if (n < 2) throw std::invalid_argument("discrepancy experiment needs n >= 2");
  if (trials < 10'000) throw std::invalid_argument("discrepancy experiment needs >= 10^4 trials");
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be > 0");
  const auto start = Clock::now();

  const auto draws = map_indexed<GaussianDraw>(trials, threads, [&](std::size_t i) {
    StreamRng rng(seed, i);
    return draw_gaussian(0.0, sigma, n, rng);
  });
  std::vector<double> mu_gaps;
  std::vector<double> sigma_gaps;
  for (const auto& d : draws) {
    if (d.mean > 0.0) mu_gaps.push_back(d.mean);
    if (d.sd > sigma) sigma_gaps.push_back(d.sd - sigma);
  }
  if (mu_gaps.size() < 100 || sigma_gaps.size() < 100) {
    throw std::runtime_error("fewer than 100 trials satisfied a conditioning event");
  }

  DiscrepancyReport r;
  r.sigma = sigma;
  r.n = n;
  r.trials = trials;
  const auto mu = mean_and_stderr(mu_gaps);
  const auto sd = mean_and_stderr(sigma_gaps);
  r.mu_conditioned = mu.count;
  r.mu_gap_mean = mu.mean;
  r.mu_gap_stderr = mu.std_error;
  r.mu_gap_expected = mu_gap_conditional_mean(sigma, n);
  r.mu_gap_printed = mu_gap_as_printed(sigma, n);
  r.sigma_conditioned = sd.count;
  r.sigma_gap_mean = sd.mean;
  r.sigma_gap_stderr = sd.std_error;
  const auto bound = sigma_gap_lower_bound(sigma, n);
  r.sigma_gap_bound = bound.bound;
  r.sigma_gap_floor = bound.floor;
  r.mu_matches = std::abs(r.mu_gap_mean - r.mu_gap_expected) <= 3.0 * r.mu_gap_stderr;
  r.sigma_above_bound = r.sigma_gap_mean >= r.sigma_gap_bound;
  r.passed = r.mu_matches && r.sigma_above_bound;
  r.elapsed = Clock::now() - start;
  return r;
}

MaeReport plug_in_mae_experiment(const GaussianParams& p, std::size_t n, std::size_t trials,
                                 std::uint64_t seed, unsigned threads, ThresholdMode mode) {
  if (n < 2) throw std::invalid_argument("plug-in experiment needs n >= 2");
  check_trials(trials);
  const auto start = Clock::now();

  const auto errors = map_indexed<double>(trials, threads, [&](std::size_t i) {
    StreamRng rng(seed, i);
    const auto d = draw_gaussian(p.mu(), p.sigma(), n, rng);
    const double alpha = mode == ThresholdMode::kCoupled ? d.max : p.alpha();
    const double truth = expected_improvement(GaussianParams(p.mu(), p.sigma(), alpha));
    const double plug_in = expected_improvement(GaussianParams(d.mean, d.sd, alpha));
    return std::abs(truth - plug_in);
  });

  MaeReport r;
  r.params = p;
  r.n = n;
  r.trials = trials;
  r.mode = mode;
  const auto stats = mean_and_stderr(errors);
  r.empirical_mae = stats.mean;
  r.stderr_mae = stats.std_error;
  r.bounds = err_ma_lower_bounds(p, n);
  if (mode == ThresholdMode::kFixed) {
    const double slack = 3.0 * r.stderr_mae;
    bool ok = r.empirical_mae >= r.bounds.err_ma_general - slack;
    if (r.bounds.err_ma_tail) ok = ok && r.empirical_mae >= *r.bounds.err_ma_tail - slack;
    r.passed = ok;
  }
  r.elapsed = Clock::now() - start;
  return r;
}

}  // namespace th

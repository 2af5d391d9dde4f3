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

// Monte Carlo and quadrature experiments for the estimator and the Gaussian
// lower-bound results.
//
// Every trial draws from its own StreamRng(seed, trial_index) stream and
// writes into an index-ordered buffer that is reduced sequentially, so a
// report is bitwise identical for any thread count.  Assertions are one-sided
// with a 3-standard-error allowance, and each report carries the raw numbers
// next to the verdict.

#ifndef TH_SIM_HARNESS_HPP_
#define TH_SIM_HARNESS_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "th/distributions.hpp"
#include "th/gaussian_bounds.hpp"

namespace th {

struct SimulationSpec {
  AccuracyDistribution distribution;
  std::size_t k = 256;
  std::size_t trials = 2000;
  std::uint64_t seed = 1;
  std::size_t probe_grid = 1'000'000;
  unsigned threads = 1;

  // Throws std::invalid_argument unless trials >= 1, k >= 2 and probe_grid >= 2.
  void validate() const;
};

using Elapsed = std::chrono::duration<double>;

// int_0^1 F(t)^k (1 - F(t)) dt by composite Simpson on probe_grid intervals
// (rounded up to even).
double true_expected_gain(const AccuracyDistribution& dist, std::size_t k,
                          std::size_t probe_grid = 1'000'000);

struct QuadratureCheck {
  double value;          // on probe_grid intervals
  double coarse_value;   // on probe_grid / 2 intervals
  double doubling_delta;  // |value - coarse_value|
};

QuadratureCheck true_expected_gain_convergence(const AccuracyDistribution& dist, std::size_t k,
                                               std::size_t probe_grid = 1'000'000);

struct SimulationReport {
  std::size_t k = 0;
  std::size_t trials = 0;
  double true_gain = 0.0;
  std::size_t violations = 0;
  double violation_rate = 0.0;
  double mean_abs_error = 0.0;
  double max_abs_error = 0.0;
  double bound = 0.0;         // 6 sqrt(ln k / k)
  double allowed_rate = 0.0;  // 1 / sqrt(k)
  double rate_limit = 0.0;    // allowed_rate + 3 sqrt(allowed_rate / trials)
  bool passed = false;
  std::vector<double> per_trial_errors;  // S_k - truth, filled on request
  Elapsed elapsed{};
};

// Each trial draws k accuracies and compares the closed-form S_k with the
// quadrature truth.  Passes when violation_rate <= rate_limit.
SimulationReport estimator_error_experiment(const SimulationSpec& spec,
                                            bool keep_per_trial = false);

struct CoverageReport {
  std::size_t n = 0;
  double alpha = 0.0;
  double epsilon = 0.0;
  std::size_t trials = 0;
  std::size_t violations = 0;
  double frequency = 0.0;
  double limit = 0.0;  // alpha + 3 sqrt(alpha (1 - alpha) / trials)
  bool passed = false;
  Elapsed elapsed{};
};

// Frequency of sup_x |F_n(x) - x| > dkw_epsilon(n, alpha) over Uniform(0, 1)
// samples.
CoverageReport dkw_coverage_experiment(std::size_t n, double alpha, std::size_t trials,
                                       std::uint64_t seed, unsigned threads = 1);

struct BracketingReport {
  std::size_t k = 0;
  double alpha = 0.0;
  double epsilon = 0.0;
  double true_gain = 0.0;
  std::size_t trials = 0;
  std::size_t covered = 0;
  double coverage = 0.0;
  double limit = 0.0;  // 1 - alpha - 3 sqrt(alpha (1 - alpha) / trials)
  bool passed = false;
  Elapsed elapsed{};
};

// Frequency of lb <= truth <= ub with eps = dkw_epsilon(k, alpha), or
// epsilon_override when given.
BracketingReport bracketing_experiment(const SimulationSpec& spec, double alpha,
                                       std::optional<double> epsilon_override = std::nullopt);

struct DiscrepancyReport {
  double sigma = 0.0;
  std::size_t n = 0;
  std::size_t trials = 0;
  std::size_t mu_conditioned = 0;
  double mu_gap_mean = 0.0;
  double mu_gap_stderr = 0.0;
  double mu_gap_expected = 0.0;  // sqrt(2/pi) sigma / sqrt(n)
  double mu_gap_printed = 0.0;   // sqrt(2/pi) sigma^2 / n
  std::size_t sigma_conditioned = 0;
  double sigma_gap_mean = 0.0;
  double sigma_gap_stderr = 0.0;
  double sigma_gap_bound = 0.0;  // gamma = 1/n
  double sigma_gap_floor = 0.0;  // sigma / (e^{3/2} n)
  bool mu_matches = false;       // |mean - expected| <= 3 stderr
  bool sigma_above_bound = false;
  bool passed = false;
  Elapsed elapsed{};
};

// Gaussian samples of size n; sigma_hat is the square root of the Bessel-
// corrected variance.  Throws std::invalid_argument for n < 2 or
// trials < 10^4, and std::runtime_error if fewer than 100 trials survive
// either conditioning event.
DiscrepancyReport mu_sigma_discrepancy_experiment(double sigma, std::size_t n,
                                                  std::size_t trials, std::uint64_t seed,
                                                  unsigned threads = 1);

enum class ThresholdMode {
  kFixed,    // alpha taken from the parameters for every trial
  kCoupled,  // alpha = max of the trial's sample; reported without assertion
};

struct MaeReport {
  GaussianParams params{0.0, 1.0, 0.0};
  std::size_t n = 0;
  std::size_t trials = 0;
  ThresholdMode mode = ThresholdMode::kFixed;
  double empirical_mae = 0.0;
  double stderr_mae = 0.0;
  DiscrepancyBounds bounds;
  std::optional<bool> passed;  // absent in coupled mode
  Elapsed elapsed{};
};

// Mean of |I(mu, sigma, alpha) - I(mu_hat, sigma_hat, alpha)| against the
// printed err_ma lower bounds.
MaeReport plug_in_mae_experiment(const GaussianParams& p, std::size_t n, std::size_t trials,
                                 std::uint64_t seed, unsigned threads = 1,
                                 ThresholdMode mode = ThresholdMode::kFixed);

}  // namespace th

#endif  // TH_SIM_HARNESS_HPP_

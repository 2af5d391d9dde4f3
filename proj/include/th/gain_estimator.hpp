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

// Expected gain of one more random-search iteration.
//
// With k i.i.d. accuracies drawn from F on [0, 1], the running maximum Y_k has
// CDF F^k, so the expected improvement from one more draw is
//
//   Delta_{k+1} = E[Y_{k+1} - Y_k] = int_0^1 F(t)^k (1 - F(t)) dt.
//
// Replacing F by the empirical CDF gives the estimate S_k.  Under the DKW event
// the truth lies between the LB/UB integrals below, and the total error is at
// most 6 sqrt(ln k / k) with probability at least 1 - 1/sqrt(k) when the band
// is built with alpha = 1/sqrt(2k).

#ifndef TH_GAIN_ESTIMATOR_HPP_
#define TH_GAIN_ESTIMATOR_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "th/ecdf.hpp"

namespace th {

// S_n = sum_{j=1}^{n} ((j/n)^n - (j/n)^{n+1}) (X_{j+1} - X_j), X_{n+1} = 1.
double expected_gain_closed_form(const SortedSample& sample);

// int_0^1 F^k (1 - F) dt, summed exactly over the step partition.
double expected_gain_integral(const StepCdf& cdf, std::size_t k);

struct ConfidenceIntegrals {
  double lb;
  double ub;
};

// LB = int max(F - eps, 0)^k * max(1 - eps - F, 0)
// UB = int min(F + eps, 1)^k * (1 + eps - F)
// Both integrands are clamped so LB >= 0; ub is reported raw (it may exceed
// the [0, 1] headroom for large eps).
ConfidenceIntegrals confidence_integrals(const StepCdf& cdf, std::size_t k, double epsilon);

struct ErrorBound {
  double bound;       // 6 sqrt(ln k / k), returned even when >= 1
  double alpha;       // 1 / sqrt(2k)
  double confidence;  // 1 - 1 / sqrt(k)
};

// Throws std::invalid_argument for k < 2.
ErrorBound error_bound(std::size_t k);

enum class Verdict { kContinue, kStop, kInconclusive };

std::string_view to_string(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view text);

// Rules are applied in order:
//   Stop          when min(ub, 1 - best_so_far) < threshold
//   Continue      when s_k >= threshold
//   Inconclusive  otherwise
// 1 - best_so_far caps the realized gain of the next draw.  s_k estimates the
// unconditional gain and can exceed that cap for small, spread-out samples, so
// Stop takes precedence.
Verdict decide(double s_k, double ub, double best_so_far, double threshold);

struct EstimateReport {
  std::size_t k = 0;
  double s_k = 0.0;
  double alpha = 0.0;
  double epsilon = 0.0;
  double lb = 0.0;
  double ub = 0.0;
  double error_bound = 0.0;
  double confidence = 0.0;
  double best_so_far = 0.0;
  Verdict verdict = Verdict::kInconclusive;

  // The high-probability bound says nothing when it is at least the full
  // [0, 1] range of a gain.
  bool bound_vacuous() const { return error_bound >= 1.0; }
};

// Assembles every estimator quantity for the k = sample.size() observations.
// alpha_override replaces the default alpha = 1/sqrt(2k) used for the DKW
// radius; the error bound and confidence keep their default-alpha values.
EstimateReport estimate_report(const SortedSample& sample, double stop_threshold,
                               std::optional<double> alpha_override = std::nullopt);

struct CurvePoint {
  std::size_t k;
  double s_k;
  double lb;
  double ub;
  double error_bound;
  double best_so_far;
};

// Estimates over every prefix of a run given in arrival order, k = 2..n.
// Prefixes may be evaluated on several threads; the output does not depend on
// the thread count.
std::vector<CurvePoint> gain_curve(std::span<const double> run, unsigned threads = 1);

}  // namespace th

#endif  // TH_GAIN_ESTIMATOR_HPP_

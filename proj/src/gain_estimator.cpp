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

#include "th/gain_estimator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "th/parallel.hpp"

namespace th {

double expected_gain_closed_form(const SortedSample& sample) {
  const auto x = sample.values();
  const std::size_t n = x.size();
  const double dn = static_cast<double>(n);
  double total = 0.0;
  for (std::size_t j = 1; j <= n; ++j) {
    const double next = j < n ? x[j] : 1.0;
    const double gap = next - x[j - 1];
    if (gap == 0.0) continue;
    const double p = static_cast<double>(j) / dn;
    total += (std::pow(p, dn) - std::pow(p, dn + 1.0)) * gap;
  }
  return total;
}

double expected_gain_integral(const StepCdf& cdf, std::size_t k) {
  if (k == 0) throw std::invalid_argument("gain integral needs k >= 1");
  const double dk = static_cast<double>(k);
  return cdf.integrate_unit([dk](double f) { return std::pow(f, dk) * (1.0 - f); });
}

ConfidenceIntegrals confidence_integrals(const StepCdf& cdf, std::size_t k, double epsilon) {
  if (k == 0) throw std::invalid_argument("confidence integrals need k >= 1");
  if (!(epsilon >= 0.0)) throw std::invalid_argument("band radius must be >= 0");
  const double dk = static_cast<double>(k);
  const double lb = cdf.integrate_unit([&](double f) {
    const double low = std::max(f - epsilon, 0.0);
    return std::pow(low, dk) * std::max(1.0 - epsilon - f, 0.0);
  });
  const double ub = cdf.integrate_unit([&](double f) {
    const double high = std::min(f + epsilon, 1.0);
    return std::pow(high, dk) * (1.0 + epsilon - f);
  });
  return {std::max(lb, 0.0), ub};
}

ErrorBound error_bound(std::size_t k) {
  if (k < 2) throw std::invalid_argument("error bound needs k >= 2");
  const double dk = static_cast<double>(k);
  return ErrorBound{6.0 * std::sqrt(std::log(dk) / dk), 1.0 / std::sqrt(2.0 * dk),
                    1.0 - 1.0 / std::sqrt(dk)};
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kContinue:
      return "continue";
    case Verdict::kStop:
      return "stop";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

std::optional<Verdict> parse_verdict(std::string_view text) {
  if (text == "continue") return Verdict::kContinue;
  if (text == "stop") return Verdict::kStop;
  if (text == "inconclusive") return Verdict::kInconclusive;
  return std::nullopt;
}

Verdict decide(double s_k, double ub, double best_so_far, double threshold) {
  if (std::min(ub, 1.0 - best_so_far) < threshold) return Verdict::kStop;
  if (s_k >= threshold) return Verdict::kContinue;
  return Verdict::kInconclusive;
}

EstimateReport estimate_report(const SortedSample& sample, double stop_threshold,
                               std::optional<double> alpha_override) {
  const std::size_t k = sample.size();
  if (k < 2) throw std::invalid_argument("an estimate needs at least 2 observations");
  if (!(stop_threshold >= 0.0)) throw std::invalid_argument("stop threshold must be >= 0");

  const ErrorBound eb = error_bound(k);
  EstimateReport r;
  r.k = k;
  r.alpha = alpha_override.value_or(eb.alpha);
  r.epsilon = dkw_epsilon(k, r.alpha);
  r.s_k = expected_gain_closed_form(sample);
  const auto band = confidence_integrals(build_ecdf(sample), k, r.epsilon);
  r.lb = band.lb;
  r.ub = band.ub;
  r.error_bound = eb.bound;
  r.confidence = eb.confidence;
  r.best_so_far = sample.max();
  r.verdict = decide(r.s_k, r.ub, r.best_so_far, stop_threshold);
  return r;
}

std::vector<CurvePoint> gain_curve(std::span<const double> run, unsigned threads) {
  if (run.size() < 2) throw std::invalid_argument("a gain curve needs at least 2 observations");
  const std::size_t rows = run.size() - 1;  // prefixes of length 2..n
  std::vector<CurvePoint> out(rows);
  parallel_chunks(rows, threads, [&](std::size_t begin, std::size_t end) {
    // Sort the first prefix of the chunk once, then insert one value per row.
    std::vector<double> sorted(run.begin(), run.begin() + static_cast<std::ptrdiff_t>(begin + 2));
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t row = begin; row < end; ++row) {
      if (row > begin) {
        const double v = run[row + 1];
        sorted.insert(std::upper_bound(sorted.begin(), sorted.end(), v), v);
      }
      const EstimateReport r = estimate_report(SortedSample(sorted), 0.0);
      out[row] = CurvePoint{r.k, r.s_k, r.lb, r.ub, r.error_bound, r.best_so_far};
    }
  });
  return out;
}

}  // namespace th

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

#include "th/ecdf.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace th {

SortedSample::SortedSample(std::vector<double> ascending)
    : values_(std::move(ascending)) {
  if (values_.empty()) {
    throw std::invalid_argument("sample must hold at least one accuracy");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::domain_error("accuracy " + std::to_string(v) + " at position " +
                              std::to_string(i) + " lies outside [0, 1]");
    }
    if (i > 0 && v < values_[i - 1]) {
      throw std::invalid_argument("sample is not sorted ascending at position " +
                                  std::to_string(i));
    }
  }
}

SortedSample SortedSample::from_unsorted(std::vector<double> values) {
  // NaN would poison the sort; let the constructor report it instead.
  if (std::none_of(values.begin(), values.end(), [](double v) { return std::isnan(v); })) {
    std::sort(values.begin(), values.end());
  }
  return SortedSample(std::move(values));
}

StepCdf::StepCdf(double base_level, std::vector<double> breakpoints,
                 std::vector<double> levels, std::size_t sample_size)
    : base_level_(base_level),
      breakpoints_(std::move(breakpoints)),
      levels_(std::move(levels)),
      sample_size_(sample_size) {
  if (breakpoints_.size() != levels_.size()) {
    throw std::invalid_argument("step function needs one level per breakpoint");
  }
  if (!(base_level_ >= 0.0 && base_level_ <= 1.0)) {
    throw std::domain_error("step function level outside [0, 1]");
  }
  double prev_level = base_level_;
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (i > 0 && !(breakpoints_[i] > breakpoints_[i - 1])) {
      throw std::invalid_argument("breakpoints must be strictly increasing");
    }
    if (!(levels_[i] >= prev_level && levels_[i] <= 1.0)) {
      throw std::domain_error("step function levels must be non-decreasing in [0, 1]");
    }
    prev_level = levels_[i];
  }
}

double StepCdf::operator()(double x) const {
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  if (it == breakpoints_.begin()) return base_level_;
  return levels_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

double StepCdf::left_limit(double x) const {
  const auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
  if (it == breakpoints_.begin()) return base_level_;
  return levels_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

StepCdf build_ecdf(const SortedSample& sample) {
  const auto values = sample.values();
  const std::size_t n = values.size();
  const double dn = static_cast<double>(n);

  std::vector<double> breakpoints;
  std::vector<double> levels;
  for (std::size_t i = 0; i < n; ++i) {
    // Duplicates collapse onto the last occurrence: one jump of height
    // multiplicity / n.
    if (i + 1 < n && values[i + 1] == values[i]) continue;
    breakpoints.push_back(values[i]);
    levels.push_back(static_cast<double>(i + 1) / dn);
  }
  return StepCdf(0.0, std::move(breakpoints), std::move(levels), n);
}

double eval_ecdf(const StepCdf& cdf, double x) { return cdf(x); }

double dkw_epsilon(std::size_t n, double alpha) {
  if (n == 0) throw std::invalid_argument("DKW radius needs n >= 1");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("DKW confidence parameter must lie in (0, 1)");
  }
  return std::sqrt(std::log(2.0 / alpha) / (2.0 * static_cast<double>(n)));
}

Band dkw_band(const StepCdf& cdf, double epsilon) {
  if (!(epsilon >= 0.0)) throw std::invalid_argument("band radius must be >= 0");
  const auto shift = [&](double delta) {
    const auto clamp01 = [](double v) { return std::clamp(v, 0.0, 1.0); };
    std::vector<double> levels(cdf.levels().begin(), cdf.levels().end());
    for (double& l : levels) l = clamp01(l + delta);
    const auto bps = cdf.breakpoints();
    return StepCdf(clamp01(cdf.base_level() + delta),
                   std::vector<double>(bps.begin(), bps.end()), std::move(levels));
  };
  return Band{shift(-epsilon), shift(epsilon)};
}

}  // namespace th

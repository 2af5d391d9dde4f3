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

#ifndef TH_ECDF_HPP_
#define TH_ECDF_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace th {

// Accuracy observations on the unit interval, held in ascending order.
//
// Construction validates the domain contract: at least one value, every value
// finite and inside [0, 1], non-decreasing order.  Invalid input throws
// std::invalid_argument (empty, unsorted) or std::domain_error (out of range).
class SortedSample {
 public:
  explicit SortedSample(std::vector<double> ascending);

  // Sorts first, then validates.
  static SortedSample from_unsorted(std::vector<double> values);

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double min() const { return values_.front(); }
  double max() const { return values_.back(); }

 private:
  std::vector<double> values_;
};

// A right-continuous, non-decreasing step function with values in [0, 1].
//
//   F(x) = base_level                  for x <  breakpoints[0]
//   F(x) = levels[i]                   for breakpoints[i] <= x < breakpoints[i+1]
//   F(x) = levels.back()               for x >= breakpoints.back()
//
// An empirical CDF has base_level 0 and a final level of exactly 1.  Confidence
// band edges share the ECDF's breakpoints but carry shifted levels.
class StepCdf {
 public:
  StepCdf(double base_level, std::vector<double> breakpoints,
          std::vector<double> levels, std::size_t sample_size = 0);

  double operator()(double x) const;

  // F(x-): the level strictly before x.
  double left_limit(double x) const;

  double base_level() const { return base_level_; }
  std::span<const double> breakpoints() const { return breakpoints_; }
  std::span<const double> levels() const { return levels_; }

  // Number of observations the function was built from; 0 for derived
  // functions such as band edges.
  std::size_t sample_size() const { return sample_size_; }

  // Exact integral of g(F(t)) over t in [0, 1].  The integrand is piecewise
  // constant, so this is a finite sum over the step partition clipped to the
  // unit interval.
  template <class Fn>
  double integrate_unit(Fn&& g) const;

 private:
  double base_level_;
  std::vector<double> breakpoints_;
  std::vector<double> levels_;
  std::size_t sample_size_;
};

StepCdf build_ecdf(const SortedSample& sample);

double eval_ecdf(const StepCdf& cdf, double x);

// DKW radius sqrt(ln(2/alpha) / (2n)) with Massart's constant.
double dkw_epsilon(std::size_t n, double alpha);

struct Band {
  StepCdf lower;
  StepCdf upper;
};

// Pointwise band [max(F - eps, 0), min(F + eps, 1)].
Band dkw_band(const StepCdf& cdf, double epsilon);

// sup_x |F(x) - true_cdf(x)| for a continuous true_cdf.  Exact for a step
// function against a continuous CDF: the supremum is attained at a breakpoint,
// either at the jump or just before it.
template <class Cdf>
double sup_distance(const StepCdf& cdf, Cdf&& true_cdf) {
  double worst = 0.0;
  double before = cdf.base_level();
  const auto bps = cdf.breakpoints();
  const auto lvls = cdf.levels();
  for (std::size_t i = 0; i < bps.size(); ++i) {
    const double truth = true_cdf(bps[i]);
    worst = std::max({worst, std::abs(lvls[i] - truth), std::abs(before - truth)});
    before = lvls[i];
  }
  return worst;
}

template <class Fn>
double StepCdf::integrate_unit(Fn&& g) const {
  double total = 0.0;
  double lo = 0.0;
  double level = base_level_;
  for (std::size_t i = 0; i <= breakpoints_.size(); ++i) {
    const double hi = i < breakpoints_.size() ? std::min(breakpoints_[i], 1.0) : 1.0;
    if (hi > lo) {
      total += g(level) * (hi - lo);
      lo = hi;
    }
    if (i < levels_.size()) level = levels_[i];
  }
  return total;
}

}  // namespace th

#endif  // TH_ECDF_HPP_

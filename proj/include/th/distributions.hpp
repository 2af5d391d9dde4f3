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

#ifndef TH_DISTRIBUTIONS_HPP_
#define TH_DISTRIBUTIONS_HPP_

#include <random>
#include <string>
#include <string_view>
#include <variant>

#include "th/rng.hpp"
#include "th/special_functions.hpp"

namespace th {

struct Uniform01 {};

struct BetaParams {
  double a;
  double b;
};

// N(mu, sigma) conditioned on [0, 1].
struct TruncNormalParams {
  double mu;
  double sigma;
};

// Accuracy distributions on [0, 1] with closed-form CDFs.
class AccuracyDistribution {
 public:
  using Params = std::variant<Uniform01, BetaParams, TruncNormalParams>;

  AccuracyDistribution() : AccuracyDistribution(Uniform01{}) {}
  explicit AccuracyDistribution(Params params);

  // "uniform", "beta:A,B" or "truncnormal:MU,SIGMA".
  static AccuracyDistribution parse(std::string_view text);

  double cdf(double x) const;

  template <class Rng>
  double sample(Rng& rng) const;

  // Canonical text form accepted by parse().
  std::string name() const;

  const Params& params() const { return params_; }

 private:
  Params params_;
  // Truncated-normal normalisation: Phi(-mu/sigma) and Phi((1-mu)/sigma) - Phi(-mu/sigma).
  double lower_mass_ = 0.0;
  double interval_mass_ = 1.0;
};

template <class Rng>
double AccuracyDistribution::sample(Rng& rng) const {
  if (std::holds_alternative<Uniform01>(params_)) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  }
  if (const auto* beta = std::get_if<BetaParams>(&params_)) {
    std::gamma_distribution<double> ga(beta->a, 1.0);
    std::gamma_distribution<double> gb(beta->b, 1.0);
    const double x = ga(rng);
    const double y = gb(rng);
    return x / (x + y);
  }
  const auto& tn = std::get<TruncNormalParams>(params_);
  std::normal_distribution<double> normal(tn.mu, tn.sigma);
  for (;;) {
    const double v = normal(rng);
    if (v >= 0.0 && v <= 1.0) return v;
  }
}

}  // namespace th

#endif  // TH_DISTRIBUTIONS_HPP_

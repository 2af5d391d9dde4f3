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

#include "th/distributions.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace th {
namespace {

std::string shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_number(std::string_view text, std::string_view what) {
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw std::invalid_argument("cannot parse " + std::string(what) + " '" + std::string(text) +
                                "'");
  }
  return v;
}

std::pair<double, double> parse_pair(std::string_view args, std::string_view what) {
  const auto comma = args.find(',');
  if (comma == std::string_view::npos) {
    throw std::invalid_argument(std::string(what) + " needs two comma-separated parameters");
  }
  return {parse_number(args.substr(0, comma), what), parse_number(args.substr(comma + 1), what)};
}

}  // namespace

AccuracyDistribution::AccuracyDistribution(Params params) : params_(std::move(params)) {
  if (const auto* beta = std::get_if<BetaParams>(&params_)) {
    if (!(beta->a > 0.0 && beta->b > 0.0) || !std::isfinite(beta->a) || !std::isfinite(beta->b)) {
      throw std::invalid_argument("beta parameters must be positive");
    }
  } else if (const auto* tn = std::get_if<TruncNormalParams>(&params_)) {
    if (!(tn->sigma > 0.0) || !std::isfinite(tn->sigma) || !std::isfinite(tn->mu)) {
      throw std::invalid_argument("truncated normal needs finite mu and sigma > 0");
    }
    lower_mass_ = normal_cdf((0.0 - tn->mu) / tn->sigma);
    interval_mass_ = normal_cdf((1.0 - tn->mu) / tn->sigma) - lower_mass_;
    // The rejection sampler needs a usable acceptance rate.
    if (!(interval_mass_ >= 1e-4)) {
      throw std::invalid_argument("truncated normal puts less than 1e-4 mass on [0, 1]");
    }
  }
}

AccuracyDistribution AccuracyDistribution::parse(std::string_view text) {
  if (text == "uniform") return AccuracyDistribution(Uniform01{});
  const auto colon = text.find(':');
  const auto kind = text.substr(0, colon);
  const auto args = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (kind == "beta") {
    const auto [a, b] = parse_pair(args, "beta");
    return AccuracyDistribution(BetaParams{a, b});
  }
  if (kind == "truncnormal") {
    const auto [mu, sigma] = parse_pair(args, "truncnormal");
    return AccuracyDistribution(TruncNormalParams{mu, sigma});
  }
  throw std::invalid_argument("unknown distribution '" + std::string(text) +
                              "' (expected uniform, beta:A,B or truncnormal:MU,SIGMA)");
}

double AccuracyDistribution::cdf(double x) const {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  if (std::holds_alternative<Uniform01>(params_)) return x;
  if (const auto* beta = std::get_if<BetaParams>(&params_)) {
    return regularized_beta(beta->a, beta->b, x);
  }
  const auto& tn = std::get<TruncNormalParams>(params_);
  const double v = (normal_cdf((x - tn.mu) / tn.sigma) - lower_mass_) / interval_mass_;
  return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
}

std::string AccuracyDistribution::name() const {
  if (std::holds_alternative<Uniform01>(params_)) return "uniform";
  if (const auto* beta = std::get_if<BetaParams>(&params_)) {
    return "beta:" + shortest(beta->a) + "," + shortest(beta->b);
  }
  const auto& tn = std::get<TruncNormalParams>(params_);
  return "truncnormal:" + shortest(tn.mu) + "," + shortest(tn.sigma);
}

}  // namespace th

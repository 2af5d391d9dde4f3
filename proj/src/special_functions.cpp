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

#include "th/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace th {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr int kMaxIterations = 100000;

void check_gamma_args(double s, double x) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw std::invalid_argument("incomplete gamma needs shape s > 0");
  }
  if (!(x >= 0.0)) throw std::invalid_argument("incomplete gamma needs x >= 0");
}

// sum_{n>=0} x^n / (s (s+1) ... (s+n)); P(s, x) = that * x^s e^-x / Gamma(s).
double gamma_series(double s, double x) {
  double term = 1.0 / s;
  double sum = term;
  for (int n = 1; n < kMaxIterations; ++n) {
    term *= x / (s + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEps) return sum;
  }
  throw std::runtime_error("incomplete gamma series did not converge");
}

// Modified Lentz evaluation of the continued fraction for Gamma(s, x) e^x x^-s.
double gamma_continued_fraction(double s, double x) {
  double b = x + 1.0 - s;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) return h;
  }
  throw std::runtime_error("incomplete gamma continued fraction did not converge");
}

double log_prefactor(double s, double x) { return -x + s * std::log(x) - std::lgamma(s); }

double beta_continued_fraction(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m < kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) return h;
  }
  throw std::runtime_error("incomplete beta continued fraction did not converge");
}

}  // namespace

double normal_pdf(double z) {
  return std::exp(-0.5 * z * z) * (std::numbers::inv_sqrtpi / std::numbers::sqrt2);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double normal_sf(double z) { return 0.5 * std::erfc(z / std::numbers::sqrt2); }

NormalValues normal_pdf_cdf(double z) { return {normal_pdf(z), normal_cdf(z)}; }

double regularized_gamma_upper(double s, double x) {
  check_gamma_args(s, x);
  if (x == 0.0) return 1.0;
  if (x < s + 1.0) {
    const double p = gamma_series(s, x) * std::exp(log_prefactor(s, x));
    return std::clamp(1.0 - p, 0.0, 1.0);
  }
  return std::clamp(gamma_continued_fraction(s, x) * std::exp(log_prefactor(s, x)), 0.0, 1.0);
}

double regularized_gamma_lower(double s, double x) {
  check_gamma_args(s, x);
  if (x == 0.0) return 0.0;
  if (x < s + 1.0) {
    return std::clamp(gamma_series(s, x) * std::exp(log_prefactor(s, x)), 0.0, 1.0);
  }
  return std::clamp(1.0 - gamma_continued_fraction(s, x) * std::exp(log_prefactor(s, x)), 0.0,
                    1.0);
}

double log_upper_incomplete_gamma(double s, double x) {
  check_gamma_args(s, x);
  if (x >= s + 1.0) {
    return -x + s * std::log(x) + std::log(gamma_continued_fraction(s, x));
  }
  return std::log(regularized_gamma_upper(s, x)) + std::lgamma(s);
}

double chi_squared_cdf(double nu, double x) {
  if (!(nu > 0.0)) throw std::invalid_argument("chi-square needs nu > 0");
  if (x <= 0.0) return 0.0;
  return regularized_gamma_lower(0.5 * nu, 0.5 * x);
}

double regularized_beta(double a, double b, double x) {
  if (!(a > 0.0 && b > 0.0)) throw std::invalid_argument("incomplete beta needs a, b > 0");
  if (!(x > 0.0)) return 0.0;
  if (!(x < 1.0)) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return std::exp(log_front) * beta_continued_fraction(a, b, x) / a;
  }
  return 1.0 - std::exp(log_front) * beta_continued_fraction(b, a, 1.0 - x) / b;
}

}  // namespace th

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

#include "th/gaussian_bounds.hpp"

#include <cmath>
#include <numbers>

namespace th {

GaussianParams::GaussianParams(double mu, double sigma, double alpha)
    : mu_(mu), sigma_(sigma), alpha_(alpha) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("Gaussian sigma must be a finite positive number");
  }
  if (!std::isfinite(z())) throw std::invalid_argument("standardized threshold is not finite");
}

double inverse_mills_conditional_mean(const GaussianParams& p) {
  const double z = p.z();
  if (z > kMaxConditionalZ) {
    throw TailUnderflowError("1 - Phi(z) underflows for z > 37");
  }
  return p.mu() + p.sigma() * normal_pdf(z) / normal_sf(z);
}

double expected_improvement(const GaussianParams& p) {
  const double z = p.z();
  if (z > kMaxConditionalZ) return 0.0;
  // sigma (phi(z) - z (1 - Phi(z))), clamped against rounding in the far tail.
  const double value = (p.mu() - p.alpha()) * normal_sf(z) + p.sigma() * normal_pdf(z);
  return value > 0.0 ? value : 0.0;
}

ImprovementGradient improvement_gradient(const GaussianParams& p) {
  const double z = p.z();
  return {normal_sf(z), normal_pdf(z)};
}

ImprovementCurvature improvement_hessian_diag(const GaussianParams& p) {
  const double z = p.z();
  const double phi = normal_pdf(z);
  const double d2_sigma = z * z * phi / p.sigma();
  return {phi / p.sigma(), d2_sigma, d2_sigma >= 0.0};
}

double printed_sigma_slope(const GaussianParams& p) {
  const double z = p.z();
  return (2.0 * z * z + 1.0) * normal_pdf(z);
}

double printed_sigma_curvature(const GaussianParams& p) {
  const double z = p.z();
  return (2.0 * z * z - 3.0) * normal_pdf(z) * z * z / p.sigma();
}

bool in_printed_convexity_region(const GaussianParams& p) {
  return std::abs(p.z()) >= kPrintedConvexityZ;
}

double mu_gap_conditional_mean(double sigma, std::size_t n) {
  if (n == 0) throw std::invalid_argument("mean gap needs n >= 1");
  return std::sqrt(2.0 / std::numbers::pi) * sigma / std::sqrt(static_cast<double>(n));
}

double mu_gap_as_printed(double sigma, std::size_t n) {
  if (n == 0) throw std::invalid_argument("mean gap needs n >= 1");
  return std::sqrt(2.0 / std::numbers::pi) * sigma * sigma / static_cast<double>(n);
}

SigmaGapBound sigma_gap_lower_bound(double sigma, std::size_t n, std::optional<double> gamma) {
  if (n < 2) throw std::invalid_argument("standard deviation gap needs n >= 2");
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be > 0");
  const double dn = static_cast<double>(n);
  const double g = gamma.value_or(1.0 / dn);
  if (!(g > 0.0)) throw std::invalid_argument("gamma must be > 0");
  const double bound = sigma * g * std::exp(-(g + 0.5 * g * g) * (dn - 1.0));
  const double floor = sigma / (std::exp(1.5) * dn);
  return {bound, floor, g};
}

double chi_scaled_cdf(std::size_t n, double x) {
  if (n < 2) throw std::invalid_argument("scaled chi needs n >= 2");
  if (!(x >= 0.0)) throw std::invalid_argument("scaled chi needs x >= 0");
  const double dof = static_cast<double>(n - 1);
  return chi_squared_cdf(dof, dof * x * x);
}

GammaRatioCheck gamma_ratio_inequality_check(double s, double x, double y) {
  if (!(s > 0.0 && x > 0.0 && y > 0.0)) {
    throw std::invalid_argument("gamma ratio check needs s, x, y > 0");
  }
  const double log_base = log_upper_incomplete_gamma(s, x);
  if (log_base < std::log(1e-290)) {
    throw TailUnderflowError("Gamma(s, x) below 1e-290");
  }
  const double ratio = std::exp(log_upper_incomplete_gamma(s, x + y) - log_base);
  const double floor = std::exp(-y);
  return {ratio, floor, ratio >= floor * (1.0 - 1e-9)};
}

DiscrepancyBounds err_ma_lower_bounds(const GaussianParams& p, std::size_t n) {
  if (n < 2) throw std::invalid_argument("err_ma bounds need n >= 2");
  const double dn = static_cast<double>(n);
  const double z = p.z();
  const double sigma = p.sigma();
  const double density = normal_pdf(z) / sigma;  // f_X(alpha)

  DiscrepancyBounds out;
  out.n = n;
  out.err_ma_general =
      sigma * sigma / (2.0 * std::sqrt(2.0 * std::numbers::pi) * dn) * normal_sf(z);
  if (z >= kPrintedConvexityZ) {
    out.err_ma_tail = sigma / (2.0 * std::exp(1.5) * dn) * z * z * density;
  }
  out.mu_gap_expected = mu_gap_conditional_mean(sigma, n);
  out.sigma_gap_lower = sigma_gap_lower_bound(sigma, n).bound;
  return out;
}

}  // namespace th

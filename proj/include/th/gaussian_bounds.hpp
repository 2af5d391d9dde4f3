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

// Lower-bound machinery for Gaussian accuracies X ~ N(mu, sigma).
//
// The expected improvement over a threshold alpha is
//
//   I(mu, sigma, alpha) = E[(X - alpha) 1{X >= alpha}]
//                       = (mu - alpha) (1 - Phi(z)) + sigma phi(z),
//   z = (alpha - mu) / sigma.
//
// Everything here is evaluated in the standardized variable z.  sigma is the
// standard deviation, never the variance.
//
// Three printed results from the source derivation do not survive a numeric
// check and are exposed separately (printed_*) so they can be compared with
// the exact quantities:
//   * d I / d sigma is phi(z), not (2 z^2 + 1) phi(z);
//   * d^2 I / d sigma^2 is z^2 phi(z) / sigma >= 0, so I is convex in sigma
//     everywhere, not only for |z| >= sqrt(3/2);
//   * E[mu_hat - mu | mu_hat > mu] is sqrt(2/pi) sigma / sqrt(n), not
//     sqrt(2/pi) sigma^2 / n.

#ifndef TH_GAUSSIAN_BOUNDS_HPP_
#define TH_GAUSSIAN_BOUNDS_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "th/special_functions.hpp"

namespace th {

// Thrown when 1 - Phi(z) is too small to divide by in double precision.
class TailUnderflowError : public std::range_error {
 public:
  using std::range_error::range_error;
};

// Standardized z beyond which conditional means are refused.
inline constexpr double kMaxConditionalZ = 37.0;

// sqrt(3/2): boundary of the convexity region claimed in print.
inline constexpr double kPrintedConvexityZ = 1.2247448713915890491;

class GaussianParams {
 public:
  // Throws std::invalid_argument unless sigma > 0 and z is finite.
  GaussianParams(double mu, double sigma, double alpha);

  double mu() const { return mu_; }
  double sigma() const { return sigma_; }
  double alpha() const { return alpha_; }
  double z() const { return (alpha_ - mu_) / sigma_; }

 private:
  double mu_;
  double sigma_;
  double alpha_;
};

// E[X | X > alpha] = mu + sigma phi(z) / (1 - Phi(z)).
// Throws TailUnderflowError for z > kMaxConditionalZ.
double inverse_mills_conditional_mean(const GaussianParams& p);

// I(mu, sigma, alpha) >= 0.  Returns 0 beyond z = kMaxConditionalZ, where the
// value underflows.
double expected_improvement(const GaussianParams& p);

struct ImprovementGradient {
  double d_mu;     // 1 - Phi(z)
  double d_sigma;  // phi(z)
};

ImprovementGradient improvement_gradient(const GaussianParams& p);

struct ImprovementCurvature {
  double d2_mu;     // phi(z) / sigma
  double d2_sigma;  // z^2 phi(z) / sigma
  bool sigma_convex;
};

ImprovementCurvature improvement_hessian_diag(const GaussianParams& p);

// The printed slope (2 z^2 + 1) phi(z) and the printed curvature
// (2 z^2 - 3) z^2 phi(z) / sigma derived from it.
double printed_sigma_slope(const GaussianParams& p);
double printed_sigma_curvature(const GaussianParams& p);

// |z| >= sqrt(3/2), the region where the printed curvature is non-negative.
bool in_printed_convexity_region(const GaussianParams& p);

// E[mu_hat - mu | mu_hat > mu] = sqrt(2/pi) sigma / sqrt(n), from
// mu_hat - mu ~ N(0, sigma / sqrt(n)).
double mu_gap_conditional_mean(double sigma, std::size_t n);

// sqrt(2/pi) sigma^2 / n, as printed.
double mu_gap_as_printed(double sigma, std::size_t n);

struct SigmaGapBound {
  double bound;  // sigma gamma exp(-(gamma + gamma^2 / 2)(n - 1))
  double floor;  // sigma / (e^{3/2} n); bound >= floor when gamma = 1/n
  double gamma;
};

// Lower bound on E[sigma_hat - sigma | sigma_hat > sigma] for the Bessel-
// corrected sample standard deviation.  gamma defaults to 1/n.
// Throws std::invalid_argument for n < 2, sigma <= 0 or gamma <= 0.
SigmaGapBound sigma_gap_lower_bound(double sigma, std::size_t n,
                                    std::optional<double> gamma = std::nullopt);

// CDF of sqrt(chi^2_{n-1} / (n - 1)) at x: F_{chi^2_{n-1}}((n - 1) x^2).
double chi_scaled_cdf(std::size_t n, double x);

struct GammaRatioCheck {
  double ratio;  // Gamma(s, x + y) / Gamma(s, x)
  double floor;  // e^{-y}
  bool holds;    // ratio >= floor (1 - 1e-9)
};

// Throws std::invalid_argument for non-positive arguments and
// TailUnderflowError when Gamma(s, x) < 1e-290.
GammaRatioCheck gamma_ratio_inequality_check(double s, double x, double y);

struct DiscrepancyBounds {
  std::size_t n = 0;
  double err_ma_general = 0.0;             // sigma^2 / (2 sqrt(2 pi) n) (1 - F_X(alpha))
  std::optional<double> err_ma_tail;       // sigma / (2 e^{3/2} n) z^2 f_X(alpha)
  double mu_gap_expected = 0.0;
  double sigma_gap_lower = 0.0;
};

// err_ma_tail is present only when alpha >= mu + sqrt(3/2) sigma.
// f_X(alpha) = phi(z) / sigma throughout.  Throws for n < 2.
DiscrepancyBounds err_ma_lower_bounds(const GaussianParams& p, std::size_t n);

}  // namespace th

#endif  // TH_GAUSSIAN_BOUNDS_HPP_

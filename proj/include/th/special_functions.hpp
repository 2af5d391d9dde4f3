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

#ifndef TH_SPECIAL_FUNCTIONS_HPP_
#define TH_SPECIAL_FUNCTIONS_HPP_

namespace th {

struct NormalValues {
  double pdf;
  double cdf;
};

// Standard normal density and distribution function at z.
NormalValues normal_pdf_cdf(double z);

double normal_pdf(double z);
double normal_cdf(double z);

// 1 - Phi(z), computed without cancellation in the upper tail.
double normal_sf(double z);

// Regularized upper incomplete gamma Q(s, x) = Gamma(s, x) / Gamma(s).
// Series for x < s + 1, Lentz continued fraction otherwise.
// Throws std::invalid_argument for s <= 0 or x < 0.
double regularized_gamma_upper(double s, double x);

// P(s, x) = 1 - Q(s, x), evaluated on whichever side is accurate.
double regularized_gamma_lower(double s, double x);

// ln Gamma(s, x), for ratios of tiny incomplete gammas.
double log_upper_incomplete_gamma(double s, double x);

// F of a chi-square with nu degrees of freedom.
double chi_squared_cdf(double nu, double x);

// Regularized incomplete beta I_x(a, b), the Beta(a, b) distribution function.
// Throws std::invalid_argument for a <= 0 or b <= 0; x is clamped to [0, 1].
double regularized_beta(double a, double b, double x);

}  // namespace th

#endif  // TH_SPECIAL_FUNCTIONS_HPP_

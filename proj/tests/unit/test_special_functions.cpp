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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace th {
namespace {

TEST_CASE("normal density and CDF against quadrature") {
  for (double z = -8.0; z <= 8.0; z += 0.37) {
    CHECK_THAT(normal_pdf(z), WithinRel(oracle::phi(z), 1e-14));
    CHECK_THAT(normal_cdf(z), WithinAbs(oracle::big_phi(z), 1e-14));
    CHECK_THAT(normal_sf(z), WithinRel(normal_cdf(-z), 1e-14));
    const auto both = normal_pdf_cdf(z);
    CHECK(both.pdf == normal_pdf(z));
    CHECK(both.cdf == normal_cdf(z));
  }
  // Deep tail keeps relative accuracy.
  CHECK_THAT(normal_sf(10.0), WithinRel(oracle::integrate(oracle::phi, 10.0, 40.0, 1e-13), 1e-10));
}

TEST_CASE("upper incomplete gamma against quadrature") {
  for (const double s : {0.3, 0.5, 1.0, 2.5, 7.0, 15.0}) {
    for (const double x : {0.05, 0.5, 1.0, 3.0, 8.0, 19.0}) {
      const double truth = oracle::upper_gamma(s, x) / std::tgamma(s);
      CHECK_THAT(regularized_gamma_upper(s, x), WithinRel(truth, 1e-9));
      CHECK_THAT(regularized_gamma_lower(s, x) + regularized_gamma_upper(s, x),
                 WithinAbs(1.0, 1e-14));
      CHECK_THAT(log_upper_incomplete_gamma(s, x),
                 WithinAbs(std::log(oracle::upper_gamma(s, x)), 1e-9));
    }
  }
}

TEST_CASE("incomplete gamma special cases") {
  for (double x = 0.0; x < 30.0; x += 1.3) {
    CHECK_THAT(regularized_gamma_upper(1.0, x), WithinRel(std::exp(-x), 1e-13));
  }
  CHECK(regularized_gamma_upper(2.0, 0.0) == 1.0);
  // Far tail: the log form stays finite where the value underflows.
  CHECK_THAT(log_upper_incomplete_gamma(1.0, 900.0), WithinRel(-900.0, 1e-13));
  CHECK_THROWS_AS(regularized_gamma_upper(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(regularized_gamma_upper(1.0, -1.0), std::invalid_argument);
}

TEST_CASE("chi-squared CDF") {
  // nu = 2 is exponential with mean 2.
  for (double x = 0.0; x < 20.0; x += 0.9) {
    CHECK_THAT(chi_squared_cdf(2.0, x), WithinAbs(1.0 - std::exp(-x / 2.0), 1e-14));
  }
  // nu = 1: P(Z^2 <= x) = 2 Phi(sqrt x) - 1.
  for (double x = 0.1; x < 10.0; x += 0.7) {
    CHECK_THAT(chi_squared_cdf(1.0, x), WithinAbs(2.0 * oracle::big_phi(std::sqrt(x)) - 1.0, 1e-13));
  }
}

TEST_CASE("regularized incomplete beta against quadrature") {
  for (const double a : {1.0, 2.0, 3.5, 10.0}) {
    for (const double b : {1.0, 1.5, 5.0}) {
      for (const double x : {0.01, 0.2, 0.5, 0.77, 0.99}) {
        CHECK_THAT(regularized_beta(a, b, x), WithinAbs(oracle::regularized_beta(a, b, x), 1e-12));
      }
    }
  }
  // Arcsine law: I_x(1/2, 1/2) = (2 / pi) asin(sqrt x).
  for (double x = 0.05; x < 1.0; x += 0.1) {
    CHECK_THAT(regularized_beta(0.5, 0.5, x),
               WithinAbs(2.0 / std::numbers::pi * std::asin(std::sqrt(x)), 1e-13));
  }
  CHECK(regularized_beta(2.0, 3.0, 0.0) == 0.0);
  CHECK(regularized_beta(2.0, 3.0, 1.0) == 1.0);
  // Symmetry I_x(a, b) = 1 - I_{1-x}(b, a).
  CHECK_THAT(regularized_beta(2.5, 4.0, 0.3), WithinAbs(1.0 - regularized_beta(4.0, 2.5, 0.7), 1e-14));
}

}  // namespace
}  // namespace th

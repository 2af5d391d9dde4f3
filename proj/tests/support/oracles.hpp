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


// Independent reference computations for the tests.  None of these call the
// library's numerical routines; they trade speed for obviousness.

#ifndef TH_TESTS_SUPPORT_ORACLES_HPP_
#define TH_TESTS_SUPPORT_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace th::oracle {

namespace detail {

inline double simpson(double a, double fa, double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive(const std::function<double(double)>& f, double a, double fa, double b,
                       double fb, double m, double fm, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(a, fa, m, fm, flm);
  const double right = simpson(m, fm, b, fb, frm);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         adaptive(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Composite Simpson with 64 panels; fixes the scale of a relative tolerance.
inline double rough(const std::function<double(double)>& f, double a, double b) {
  constexpr int kPanels = 64;
  const double h = (b - a) / kPanels;
  double sum = f(a) + f(b);
  for (int i = 1; i < kPanels; ++i) sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

// Adaptive Simpson on each piece between sorted cut points, to a tolerance
// relative to the whole integral.  Cuts at kinks or every few scale lengths
// stop the recursion from stepping over a narrow bump.
inline double integrate_pieces(const std::function<double(double)>& f, std::vector<double> cuts,
                               double rel_tol = 1e-13) {
  std::sort(cuts.begin(), cuts.end());
  double scale = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] > cuts[i]) scale += std::abs(rough(f, cuts[i], cuts[i + 1]));
  }
  const double tol = std::max(rel_tol * scale, 1e-300);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i];
    const double b = cuts[i + 1];
    if (!(b > a)) continue;
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(m);
    total += detail::adaptive(f, a, fa, b, fb, m, fm, detail::simpson(a, fa, b, fb, fm), tol, 30);
  }
  return total;
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-13) {
  return integrate_pieces(f, {a, b}, rel_tol);
}

// Cut points every `step` from a to b.
inline std::vector<double> grid(double a, double b, double step) {
  std::vector<double> cuts = {a, b};
  for (double c = a + step; c < b; c += step) cuts.push_back(c);
  return cuts;
}

// Fraction of values <= x by direct counting.
inline double count_cdf(const std::vector<double>& values, double x) {
  std::size_t c = 0;
  for (const double v : values) c += v <= x ? 1 : 0;
  return static_cast<double>(c) / static_cast<double>(values.size());
}

// int_0^1 g(F_n(t)) dt for the empirical CDF of values, evaluating F_n by
// counting at the midpoint of every gap between distinct sample points.
inline double step_integral(const std::vector<double>& values,
                            const std::function<double(double)>& g) {
  std::vector<double> cuts = values;
  cuts.push_back(0.0);
  cuts.push_back(1.0);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    total += g(count_cdf(values, mid)) * (cuts[i + 1] - cuts[i]);
  }
  return total;
}

inline double phi(double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi); }

// Phi(z) as the integral of the density, split at 0 for accuracy.
inline double big_phi(double z) {
  if (z < -12.0) return 0.0;
  const double tail = integrate(phi, std::min(z, 0.0), 0.0, 1e-14);
  return z <= 0.0 ? 0.5 - tail : 0.5 + integrate(phi, 0.0, z, 1e-14);
}

// E[(X - alpha)^+] for X ~ N(mu, sigma^2) by quadrature over alpha .. mu + 40 sigma.
inline double expected_improvement(double mu, double sigma, double alpha) {
  const double hi = std::max(alpha, mu) + 40.0 * sigma;
  return integrate_pieces([&](double x) { return (x - alpha) * phi((x - mu) / sigma) / sigma; },
                          grid(alpha, hi, 0.25 * sigma), 1e-14);
}

// Gamma(s, x) = int_x^inf t^{s-1} e^{-t} dt, truncated where the integrand is
// negligible.  The integrand is scaled by e^x so the tolerance is relative.
// x > 0 keeps clear of the singularity at 0 for s < 1.
inline double upper_gamma(double s, double x) {
  const double hi = x + 80.0 + 4.0 * s;
  const double scaled = integrate_pieces(
      [&](double t) { return std::pow(t, s - 1.0) * std::exp(x - t); },
      grid(x, hi, std::min(1.0, std::max(x, 0.05))), 1e-14);
  return scaled * std::exp(-x);
}

// I_x(a, b) for a, b >= 1 (no endpoint singularities).
inline double regularized_beta(double a, double b, double x) {
  const auto density = [&](double t) { return std::pow(t, a - 1.0) * std::pow(1.0 - t, b - 1.0); };
  return integrate(density, 0.0, x, 1e-15) / integrate(density, 0.0, 1.0, 1e-14);
}

inline double central_difference(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Five-point stencil, O(h^4) truncation error.
inline double five_point_difference(const std::function<double(double)>& f, double x, double h) {
  return (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h);
}

// Monte Carlo estimate of E[max(X_1..X_{k+1}) - max(X_1..X_k)] for uniform X.
inline double uniform_gain_monte_carlo(std::size_t k, std::size_t runs, unsigned seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double total = 0.0;
  for (std::size_t r = 0; r < runs; ++r) {
    double best = 0.0;
    for (std::size_t i = 0; i < k; ++i) best = std::max(best, u(gen));
    total += std::max(u(gen) - best, 0.0);
  }
  return total / static_cast<double>(runs);
}

}  // namespace th::oracle

#endif  // TH_TESTS_SUPPORT_ORACLES_HPP_

// Copyright 2026 The firsthit authors
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

// Test-only oracles, deliberately independent of the library code paths
// they are used to check.

#ifndef FIRSTHIT_TESTS_ORACLES_HPP
#define FIRSTHIT_TESTS_ORACLES_HPP

#include <cmath>
#include <functional>

namespace oracle {

// Gaussian density, written out locally.
inline double gauss_pdf(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::acos(-1.0));
}

// Normal CDF by composite Simpson integration of the density from 0 to |x|.
// Step chosen so the quadrature error is far below 1e-13.
inline double norm_cdf_quadrature(double x) {
    const double ax = std::fabs(x);
    if (ax > 12.0) return x > 0.0 ? 1.0 : 0.0;
    const int n = 4000;  // even
    const double h = ax / n;
    double sum = gauss_pdf(0.0) + gauss_pdf(ax);
    for (int i = 1; i < n; ++i) {
        sum += gauss_pdf(i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    const double integral = sum * h / 3.0;
    return x >= 0.0 ? 0.5 + integral : 0.5 - integral;
}

// Central finite difference.
inline double central_diff(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

// First-passage probability of a lower barrier for geometric Brownian motion,
// written out independently of the library:
//   P(min S <= B before T), dS/S = drift dt + vol dW.
inline double gbm_hit_probability(double spot, double barrier, double vol, double drift,
                                  double ttm) {
    const double b = std::log(barrier / spot);
    const double m = drift - 0.5 * vol * vol;
    const double s = vol * std::sqrt(ttm);
    auto N = [](double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); };
    return N((b - m * ttm) / s) + std::exp(2.0 * m * b / (vol * vol)) * N((b + m * ttm) / s);
}

}  // namespace oracle

#endif  // FIRSTHIT_TESTS_ORACLES_HPP

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

#ifndef FIRSTHIT_MC_HPP
#define FIRSTHIT_MC_HPP

#include <cstdint>
#include <vector>

#include "market.hpp"

namespace fht {

struct McConfig {
    long n_paths = 100000;       // >= 1000
    int steps_per_year = 250;    // >= 50
    std::uint64_t seed = 0;
    bool bridge = true;          // Brownian-bridge hit correction within steps
    int hist_cells = 50;         // cells of the hit-time histogram over [0, T]
    int n_threads = 0;           // 0 = hardware concurrency

    void validate() const;
};

struct McResult {
    double hit_probability = 0.0;
    double standard_error = 0.0;
    std::vector<double> hit_time_histogram;  // per-cell mass, sums to hit_probability
    double hist_dt = 0.0;                    // cell width
    long n_paths = 0;
};

// First-passage Monte Carlo for flat-vol geometric Brownian motion with the
// drift implied by the rate curve and dividend model. Paths are seeded
// individually from (seed, path index) and per-path results enter integer
// accumulators, so the outcome is bitwise independent of the thread count.
//
// With bridge on, each step applies the analytic within-step crossing
// probability exp(-2 ln(S_i/B) ln(S_{i+1}/B) / (vol^2 dt)) when both
// endpoints sit above the barrier, making the estimator unbiased under
// continuous monitoring. barrier >= spot reports an immediate certain hit;
// vol == 0 degenerates to a deterministic path check.
McResult mc_first_passage(double spot, double barrier, double vol,
                          const DiscountCurve& rates, const DividendModel& dividends,
                          double ttm, const McConfig& cfg);

}  // namespace fht

#endif  // FIRSTHIT_MC_HPP

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "errors.hpp"
#include "mc.hpp"
#include "solver.hpp"

using namespace fht;

namespace {

const DiscountCurve kZeroRates = DiscountCurve::flat(0.0);
const DividendModel kNoDividends = ProportionalDividends::none();

McConfig quick(long paths, std::uint64_t seed, bool bridge = true) {
    McConfig c;
    c.n_paths = paths;
    c.steps_per_year = 50;
    c.seed = seed;
    c.bridge = bridge;
    c.hist_cells = 25;
    c.n_threads = 1;
    return c;
}

}  // namespace

TEST_CASE("agreement with the closed form, zero rates") {
    const McResult r =
        mc_first_passage(100.0, 90.0, 0.2, kZeroRates, kNoDividends, 1.0, quick(200000, 42));
    const double exact = first_passage_probability(100.0, 90.0, 0.2, 0.0, 1.0);
    CHECK(r.standard_error > 0.0);
    CHECK(std::fabs(r.hit_probability - exact) < 3.0 * r.standard_error);
}

TEST_CASE("agreement with the closed form, zero log-drift market") {
    // rate = vol^2/2 makes the hitting probability exactly 2 N(b / (vol sqrt(T)))
    const DiscountCurve r2 = DiscountCurve::flat(0.02);
    const McResult r =
        mc_first_passage(100.0, 90.0, 0.2, r2, kNoDividends, 1.0, quick(200000, 7));
    CHECK(std::fabs(r.hit_probability - 0.59833069227087177) < 3.0 * r.standard_error);
}

TEST_CASE("trivial cases") {
    // barrier at or above spot: certain immediate hit
    const McResult hit =
        mc_first_passage(100.0, 100.0, 0.2, kZeroRates, kNoDividends, 1.0, quick(1000, 1));
    CHECK(hit.hit_probability == 1.0);
    CHECK(hit.standard_error == 0.0);
    CHECK(hit.hit_time_histogram[0] == 1.0);

    // tiny vol, far barrier: no hits
    const McResult none =
        mc_first_passage(100.0, 50.0, 0.01, kZeroRates, kNoDividends, 0.5, quick(2000, 1));
    CHECK(none.hit_probability == 0.0);
    CHECK(none.standard_error == 0.0);
}

TEST_CASE("degenerate vol walks a deterministic path") {
    // upward drift, never reaches the barrier
    const DiscountCurve r5 = DiscountCurve::flat(0.05);
    const McResult up =
        mc_first_passage(100.0, 90.0, 0.0, r5, kNoDividends, 1.0, quick(1000, 3));
    CHECK(up.hit_probability == 0.0);

    // a cash dividend knocks the spot through the barrier
    const DividendModel big_div = CashDividends{{{0.5, 20.0}}};
    const McResult down =
        mc_first_passage(100.0, 85.0, 0.0, kZeroRates, big_div, 1.0, quick(1000, 3));
    CHECK(down.hit_probability == 1.0);
    CHECK(down.standard_error == 0.0);
}

TEST_CASE("bridge never reports fewer hits than discrete monitoring") {
    for (std::uint64_t seed : {1ULL, 9ULL, 123ULL}) {
        const McResult on =
            mc_first_passage(100.0, 88.0, 0.25, kZeroRates, kNoDividends, 1.0,
                             quick(20000, seed, true));
        const McResult off =
            mc_first_passage(100.0, 88.0, 0.25, kZeroRates, kNoDividends, 1.0,
                             quick(20000, seed, false));
        CHECK(on.hit_probability >= off.hit_probability);
    }
}

TEST_CASE("3-sigma agreement holds across seeds and parameters") {
    int within = 0, total = 0;
    for (std::uint64_t seed : {2ULL, 5ULL, 17ULL, 23ULL, 71ULL}) {
        for (double vol : {0.15, 0.35}) {
            for (double barrier : {80.0, 92.0}) {
                const McResult r = mc_first_passage(100.0, barrier, vol, kZeroRates,
                                                    kNoDividends, 0.75, quick(20000, seed));
                const double exact =
                    first_passage_probability(100.0, barrier, vol, 0.0, 0.75);
                within += std::fabs(r.hit_probability - exact) <= 3.0 * r.standard_error;
                ++total;
            }
        }
    }
    CHECK(total == 20);
    CHECK(within >= 19);
}

TEST_CASE("histogram sums to the hit probability") {
    const McResult r =
        mc_first_passage(100.0, 92.0, 0.3, kZeroRates, kNoDividends, 1.0, quick(50000, 11));
    const double sum =
        std::accumulate(r.hit_time_histogram.begin(), r.hit_time_histogram.end(), 0.0);
    CHECK(std::fabs(sum - r.hit_probability) < 1e-12);
}

TEST_CASE("bitwise determinism across thread counts and reruns") {
    McConfig base = quick(30000, 99);
    base.hist_cells = 20;

    McConfig threaded = base;
    threaded.n_threads = 4;
    McConfig more = base;
    more.n_threads = 3;

    const McResult a = mc_first_passage(100.0, 90.0, 0.2, kZeroRates, kNoDividends, 1.0, base);
    const McResult b =
        mc_first_passage(100.0, 90.0, 0.2, kZeroRates, kNoDividends, 1.0, threaded);
    const McResult c = mc_first_passage(100.0, 90.0, 0.2, kZeroRates, kNoDividends, 1.0, more);
    const McResult d = mc_first_passage(100.0, 90.0, 0.2, kZeroRates, kNoDividends, 1.0, base);

    CHECK(a.hit_probability == b.hit_probability);
    CHECK(a.hit_probability == c.hit_probability);
    CHECK(a.hit_probability == d.hit_probability);
    CHECK(a.hit_time_histogram == b.hit_time_histogram);
    CHECK(a.hit_time_histogram == c.hit_time_histogram);

    // a different seed moves the estimate
    McConfig other = base;
    other.seed = 100;
    const McResult e = mc_first_passage(100.0, 90.0, 0.2, kZeroRates, kNoDividends, 1.0, other);
    CHECK(e.hit_probability != a.hit_probability);
}

TEST_CASE("histogram matches the solver density cell by cell under flat vol") {
    const double S = 100.0, B = 90.0, vol = 0.2, T = 1.0;

    MarketState m;
    m.spot = S;
    m.discount = kZeroRates;
    m.surface.model = ParametricSkewSurface{TermCurve::flat(vol), TermCurve::flat(0.0), 0.01};
    const HittingDensity den =
        solve_density(m, ForwardSkewSpec{}, {B, T, PayoutTiming::AtMaturity, 1.0},
                      {500, NegativityPolicy::Error, 1e-6});

    McConfig cfg = quick(200000, 42);
    cfg.hist_cells = 50;  // one MC step per histogram cell
    const McResult r = mc_first_passage(S, B, vol, kZeroRates, kNoDividends, T, cfg);

    // aggregate the solver mass onto the histogram cells (500 = 10 per cell)
    for (int c = 0; c < cfg.hist_cells; ++c) {
        double solver_mass = 0.0;
        for (int j = 0; j < 10; ++j) solver_mass += den.rho[c * 10 + j] * den.dt;
        const double mc_mass = r.hit_time_histogram[c];
        const double p_ref =
            std::max({mc_mass, solver_mass, 1.0 / static_cast<double>(cfg.n_paths)});
        const double cell_se = std::sqrt(p_ref * (1.0 - p_ref) / cfg.n_paths);
        CHECK(std::fabs(mc_mass - solver_mass) <= 4.0 * cell_se);
    }
}

TEST_CASE("dividend drift is honored") {
    // proportional yield raises the hitting probability of a lower barrier
    const DividendModel q4 = ProportionalDividends::flat_yield(0.04);
    const McResult with_div =
        mc_first_passage(100.0, 90.0, 0.2, kZeroRates, q4, 1.0, quick(100000, 5));
    const McResult without =
        mc_first_passage(100.0, 90.0, 0.2, kZeroRates, kNoDividends, 1.0, quick(100000, 5));
    CHECK(with_div.hit_probability > without.hit_probability);

    // drifted closed form agrees (drift = -q for proportional dividends)
    const double exact = first_passage_probability(100.0, 90.0, 0.2, -0.04, 1.0);
    CHECK(std::fabs(with_div.hit_probability - exact) < 3.0 * with_div.standard_error);
}

TEST_CASE("config validation") {
    McConfig c = quick(500, 1);
    CHECK_THROWS_AS(c.validate(), DomainError);
    c = quick(2000, 1);
    c.steps_per_year = 10;
    CHECK_THROWS_AS(c.validate(), DomainError);
    c = quick(2000, 1);
    CHECK_THROWS_AS(
        mc_first_passage(100.0, 90.0, -0.1, kZeroRates, kNoDividends, 1.0, c), DomainError);
}

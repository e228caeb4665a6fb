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

#include "black_scholes.hpp"
#include "errors.hpp"
#include "oracles.hpp"
#include "solver.hpp"

using namespace fht;

namespace {

MarketState flat_market(double spot, double atm, double skew = 0.0, double rate = 0.0) {
    MarketState m;
    m.spot = spot;
    m.discount = DiscountCurve::flat(rate);
    m.surface.model = ParametricSkewSurface{TermCurve::flat(atm), TermCurve::flat(skew), 0.01};
    return m;
}

HittingDensity solve_flat(double spot, double barrier, double vol, double T, int steps,
                          double rate = 0.0) {
    const MarketState m = flat_market(spot, vol, 0.0, rate);
    return solve_density(m, ForwardSkewSpec{}, {barrier, T, PayoutTiming::AtMaturity, 1.0},
                         {steps, NegativityPolicy::Error, 1e-6});
}

}  // namespace

TEST_CASE("closed-form first passage probability") {
    // martingale spot (zero rates): frozen value, cross-checked by MC elsewhere
    CHECK(first_passage_probability(100.0, 90.0, 0.2, 0.0, 1.0) ==
          doctest::Approx(0.6296441493382624).epsilon(1e-13));
    // zero log-drift: drift = vol^2/2 collapses to 2 N(ln(B/S) / (vol sqrt(T)))
    CHECK(first_passage_probability(100.0, 90.0, 0.2, 0.02, 1.0) ==
          doctest::Approx(0.59833069227087177).epsilon(1e-13));
    CHECK(first_passage_probability(100.0, 90.0, 0.2, 0.02, 1.0) ==
          doctest::Approx(2.0 * norm_cdf(std::log(0.9) / 0.2)).epsilon(1e-13));
    // barrier at spot: immediate hit
    CHECK(first_passage_probability(100.0, 99.999999, 0.2, 0.0, 1.0) ==
          doctest::Approx(1.0).epsilon(1e-6));
    // no time to diffuse
    CHECK(first_passage_probability(100.0, 90.0, 0.2, 0.0, 1e-12) < 1e-12);
    // unreachable
    CHECK(first_passage_probability(100.0, 50.0, 0.01, 0.0, 0.5) < 1e-10);
    // strong downward drift reaches the barrier almost surely (log-space path)
    CHECK(first_passage_probability(100.0, 95.0, 0.002, -0.1, 1.0) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(first_passage_probability(100.0, 100.0, 0.2, 0.0, 1.0), DomainError);
}

TEST_CASE("flat-vol solve matches the reflection oracle") {
    const double exact = oracle::gbm_hit_probability(100.0, 90.0, 0.2, 0.0, 1.0);
    const HittingDensity d = solve_flat(100.0, 90.0, 0.2, 1.0, 500);
    CHECK(d.clamp_events == 0);
    CHECK(std::fabs(d.cumulative() - exact) < 7e-3);
    CHECK(std::fabs(d.cumulative() - exact) < 5e-4);  // actual accuracy is much tighter

    // cumulative curve is nondecreasing and capped
    const auto c = d.cumulative_curve();
    for (size_t i = 1; i < c.size(); ++i) CHECK(c[i] >= c[i - 1]);
    CHECK(c.back() <= 1.0 + 1e-8);
}

TEST_CASE("zero log-drift market: unwind value is exactly one half") {
    // with rate = vol^2/2 the at-barrier digital equals 1/2 and the recursion
    // telescopes; the solve reproduces 2 N(b/s) to machine precision
    const double vol = 0.2, r = 0.5 * vol * vol;
    const HittingDensity d = solve_flat(100.0, 90.0, vol, 1.0, 500, r);
    const double exact = first_passage_probability(100.0, 90.0, vol, r, 1.0);
    CHECK(std::fabs(d.cumulative() - exact) < 1e-12);
    CHECK(d.cumulative() == doctest::Approx(0.59833069227087177).epsilon(1e-12));
}

TEST_CASE("first-order convergence in the step count") {
    const double exact = oracle::gbm_hit_probability(100.0, 90.0, 0.2, 0.0, 1.0);
    const double e250 = std::fabs(solve_flat(100.0, 90.0, 0.2, 1.0, 250).cumulative() - exact);
    const double e500 = std::fabs(solve_flat(100.0, 90.0, 0.2, 1.0, 500).cumulative() - exact);
    const double e1000 =
        std::fabs(solve_flat(100.0, 90.0, 0.2, 1.0, 1000).cumulative() - exact);
    CHECK(e250 / e500 >= 1.8);
    CHECK(e500 / e1000 >= 1.8);
}

TEST_CASE("unreachable barrier") {
    const HittingDensity d = solve_flat(100.0, 50.0, 0.01, 0.5, 200);
    CHECK(d.cumulative() < 1e-10);
    CHECK(d.clamp_events == 0);
}

TEST_CASE("deeper barrier prices lower") {
    double prev = 1.0;
    for (double barrier : {95.0, 90.0, 80.0, 70.0}) {
        const double c = solve_flat(100.0, barrier, 0.25, 1.0, 300).cumulative();
        CHECK(c < prev);
        prev = c;
    }
}

TEST_CASE("steeper forward skew raises the cumulative curve pointwise") {
    const MarketState m = flat_market(100.0, 0.2, -0.1);
    const BarrierContract contract{90.0, 1.0, PayoutTiming::AtMaturity, 1.0};
    const SolverConfig cfg{300, NegativityPolicy::Error, 1e-6};

    ForwardSkewSpec base;
    ForwardSkewSpec steep;
    steep.skew_factor = 2.0;

    const auto c1 = solve_density(m, base, contract, cfg).cumulative_curve();
    const auto c2 = solve_density(m, steep, contract, cfg).cumulative_curve();
    for (size_t i = 0; i < c1.size(); ++i) {
        CHECK(c2[i] >= c1[i] - 1e-12 * std::max(1.0, c1[i]));
    }
    CHECK(c2.back() > c1.back());
}

TEST_CASE("pricing from the density") {
    const HittingDensity d = solve_flat(100.0, 90.0, 0.2, 1.0, 400);
    const BarrierContract at_mat{90.0, 1.0, PayoutTiming::AtMaturity, 1.0};
    const BarrierContract at_hit{90.0, 1.0, PayoutTiming::AtHit, 1.0};

    // zero rates: both timings collapse to the hitting probability
    const DiscountCurve unit;
    CHECK(american_digital_price(d, at_mat, unit) == doctest::Approx(d.cumulative()));
    CHECK(american_digital_price(d, at_hit, unit) == doctest::Approx(d.cumulative()));

    // constant df to maturity scales the at-maturity price linearly
    const DiscountCurve df97({{1.0, 0.97}});
    CHECK(american_digital_price(d, at_mat, df97) ==
          doctest::Approx(0.97 * d.cumulative()).epsilon(1e-14));

    // at-hit discounting with positive rates is worth more than at-maturity
    const DiscountCurve r5 = DiscountCurve::flat(0.05, 2.0);
    CHECK(american_digital_price(d, at_hit, r5) > american_digital_price(d, at_mat, r5));

    // empty density prices to zero
    HittingDensity zero;
    zero.dt = 0.0025;
    zero.rho.assign(400, 0.0);
    CHECK(american_digital_price(zero, at_mat, unit) == 0.0);
}

TEST_CASE("negativity policy") {
    // steeply decreasing ATM term structure makes today's digital fall with
    // maturity, which no nonnegative hitting density can reproduce
    MarketState m;
    m.spot = 100.0;
    m.discount = DiscountCurve::flat(0.0);
    m.surface.model = ParametricSkewSurface{
        TermCurve({{0.1, 0.4}, {1.0, 0.1}}), TermCurve::flat(0.0), 0.01};

    const BarrierContract contract{90.0, 1.0, PayoutTiming::AtMaturity, 1.0};

    CHECK_THROWS_AS(
        solve_density(m, ForwardSkewSpec{}, contract, {50, NegativityPolicy::Error, 1e-6}),
        NumericalError);

    const HittingDensity d =
        solve_density(m, ForwardSkewSpec{}, contract, {50, NegativityPolicy::ClampToZero, 1e-6});
    CHECK(d.clamp_events > 0);
    for (double r : d.rho) CHECK(r >= 0.0);
}

TEST_CASE("kernel floor guards a vanishing unwind value") {
    // an elevated floor trips on a perfectly ordinary at-the-money kernel
    const MarketState m = flat_market(100.0, 0.2);
    const BarrierContract contract{90.0, 1.0, PayoutTiming::AtMaturity, 1.0};
    CHECK_THROWS_AS(solve_density(m, ForwardSkewSpec{}, contract,
                                  {100, NegativityPolicy::Error, 0.52}),
                    NumericalError);
    CHECK_NOTHROW(solve_density(m, ForwardSkewSpec{}, contract,
                                {100, NegativityPolicy::Error, 0.45}));
}

TEST_CASE("input validation") {
    const MarketState m = flat_market(100.0, 0.2);
    const SolverConfig cfg;
    CHECK_THROWS_AS(
        solve_density(m, ForwardSkewSpec{}, {110.0, 1.0, PayoutTiming::AtHit, 1.0}, cfg),
        DomainError);
    CHECK_THROWS_AS(
        solve_density(m, ForwardSkewSpec{}, {90.0, -1.0, PayoutTiming::AtHit, 1.0}, cfg),
        DomainError);
    CHECK_THROWS_AS(solve_density(m, ForwardSkewSpec{}, {90.0, 1.0, PayoutTiming::AtHit, 1.0},
                                  {1, NegativityPolicy::Error, 1e-6}),
                    DomainError);
}

TEST_CASE("solve through an explicit condition table is deterministic") {
    MarketState m = flat_market(100.0, 0.3, -0.12);
    const BarrierContract contract{75.0, 0.75, PayoutTiming::AtMaturity, 1.0};
    const SolverConfig cfg{200, NegativityPolicy::Error, 1e-6};

    ForwardSkewSpec table_spec;
    table_spec.source = materialize_conditions(ForwardSkewSpec{}, m, 75.0, 200, 0.75 / 200);

    const double p1 = solve_density(m, table_spec, contract, cfg).cumulative();
    const double p2 = solve_density(m, table_spec, contract, cfg).cumulative();
    CHECK(p1 == p2);

    // identical to the derived spec it was sampled from (nodes hit exactly)
    const double p0 = solve_density(m, ForwardSkewSpec{}, contract, cfg).cumulative();
    CHECK(p1 == p0);
}

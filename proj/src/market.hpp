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

#ifndef FIRSTHIT_MARKET_HPP
#define FIRSTHIT_MARKET_HPP

#include <variant>
#include <vector>

#include "curves.hpp"

namespace fht {

// ---------------------------------------------------------------- dividends

// Continuous proportional yield, stored as the accrual factor exp(-int q dt)
// so the forward algebra mirrors discounting.
struct ProportionalDividends {
    DiscountCurve accrual;  // unit curve means no dividends

    static ProportionalDividends none();
    static ProportionalDividends flat_yield(double q, double horizon = 100.0);
};

// Discrete cash amounts, spot-independent.
struct CashDividends {
    std::vector<CurveNode> payments;  // (time, amount >= 0), strictly increasing times
    void validate() const;
};

using DividendModel = std::variant<ProportionalDividends, CashDividends>;

// ----------------------------------------------------------------- surfaces

// vol(K, T) = max(atm_vol(T) + skew(T) * ln(K / F0(T)), vol_floor).
// skew is per unit log-strike. Slope reports 0 wherever the floor binds.
struct ParametricSkewSurface {
    TermCurve atm_vol;
    TermCurve skew;
    double vol_floor = 0.01;
};

// Tabulated vols, bilinear in (lnK, T), flat extrapolation outside the grid.
// Slope by central difference with step 1e-3 in lnK.
struct StrikeGridSurface {
    std::vector<double> strikes;                  // increasing
    std::vector<double> maturities;               // increasing
    std::vector<std::vector<double>> vols;        // vols[i_maturity][j_strike]
    double vol_floor = 0.01;

    void validate() const;
    double value(double strike, double ttm) const;  // raw interpolation, unfloored
};

struct VolSurface {
    std::variant<ParametricSkewSurface, StrikeGridSurface> model =
        ParametricSkewSurface{};

    // Stress overlays, applied at query time. vol_shift moves the level at
    // every strike with slopes unchanged; slope_scale scales the reported
    // slope with levels unchanged. Neutral by default.
    double vol_shift = 0.0;
    double slope_scale = 1.0;

    double vol_floor() const;
};

// -------------------------------------------------------------------- state

struct MarketState {
    double spot = 0.0;
    DiscountCurve discount;
    DividendModel dividends = ProportionalDividends::none();
    VolSurface surface;

    void validate() const;
};

// Forward price seen at time t with the spot then at spot_at_t.
// Proportional: spot * growth folding the rate and yield curves.
// Cash: (spot - PV of dividends paid in (t, T]) grown at the rate curve;
// throws if the escrowed spot is not positive.
double forward(const MarketState& m, double spot_at_t, double t, double ttm);

// Today's forward, forward(m, m.spot, 0, T).
double forward0(const MarketState& m, double ttm);

struct SkewPoint {
    double vol = 0.0;
    double slope = 0.0;  // per unit log-strike
};

// Implied vol and smile slope of today's surface at (strike, T), floor and
// stress overlays applied.
SkewPoint surface_point(const MarketState& m, double strike, double ttm);
double spot_vol(const MarketState& m, double strike, double ttm);
double spot_slope(const MarketState& m, double strike, double ttm);

// ------------------------------------------------- forward skew conditions

// Conditions the hedge unwind sees when the barrier is hit: the residual
// option's at-the-money vol and smile slope as functions of hit time and
// remaining maturity.

// Source the conditions from today's surface at the same remaining maturity.
struct FromSpotSurface {};

// Explicit table over (hit_time, remaining maturity); bilinear interpolation,
// flat extrapolation at the edges. Slopes stored per unit log-strike.
struct ConditionTable {
    std::vector<double> hit_times;
    std::vector<double> remaining;
    std::vector<std::vector<double>> vol;    // vol[i_hit][j_rem]
    std::vector<std::vector<double>> slope;

    void validate() const;
};

struct ForwardSkewSpec {
    std::variant<FromSpotSurface, ConditionTable> source = FromSpotSurface{};
    double vol_factor = 1.0;
    double skew_factor = 1.0;
    double vol_shift = 0.0;  // additive vol

    void validate() const;
};

// sigma_hat / kappa_hat at (hit time tau, remaining maturity rem) for a
// barrier at `barrier`:
//   vol   = max(vol_factor * source_vol + vol_shift, vol_floor)
//   slope = skew_factor * source_slope
// Throws if the shifted vol is not positive before flooring.
SkewPoint barrier_conditions(const ForwardSkewSpec& spec, const MarketState& m,
                             double barrier, double tau, double rem);

// Sample the spec on the solver grid (hit times k*dt for k < n_steps,
// remaining maturities j*dt for j = 1..n_steps). The returned table holds the
// fully resolved conditions; pair it with neutral factors.
ConditionTable materialize_conditions(const ForwardSkewSpec& spec, const MarketState& m,
                                      double barrier, int n_steps, double dt);

}  // namespace fht

#endif  // FIRSTHIT_MARKET_HPP

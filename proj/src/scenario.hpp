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

#ifndef FIRSTHIT_SCENARIO_HPP
#define FIRSTHIT_SCENARIO_HPP

#include <optional>
#include <string>
#include <vector>

#include "solver.hpp"

namespace fht {

// A named composition of stress bumps. Spot-side bumps move the digitals the
// solver matches against today (the level at the barrier and the slope the
// pricing sees there, each in isolation); forward-side bumps move the unwind
// conditions. The two sides are decoupled: before a bumped solve the forward
// conditions are frozen from the unbumped inputs, then bumped on their own.
struct StressBump {
    std::string name;
    double spot_skew_mult = 1.0;     // scales today's smile slope, levels fixed
    double barrier_vol_shift = 0.0;  // shifts today's vol level, slope fixed
    double fwd_skew_mult = 1.0;      // scales kappa_hat
    double fwd_vol_mult = 1.0;       // scales sigma_hat
    double fwd_vol_shift = 0.0;      // shifts sigma_hat
    double barrier_shift = 0.0;      // fraction of spot added to the barrier
    std::optional<DividendModel> dividend_swap;

    bool is_neutral() const;
    // composition in application order (this, then other)
    StressBump compose(const StressBump& other) const;
};

struct ScenarioBase {
    MarketState market;
    ForwardSkewSpec fwd_spec;
    BarrierContract contract;
    SolverConfig solver;
};

// Solve under a bump. Neutral bumps take the direct path; anything else
// freezes the forward conditions from the unbumped market first.
HittingDensity solve_with_bump(const ScenarioBase& base, const StressBump& bump);

// ------------------------------------------------------------------ sweeps

enum class SweepAxis {
    SpotSkewFactor,
    FwdSkewFactor,
    FwdVolFactor,
    BarrierVolShift,
    BarrierShift,
};

const char* to_string(SweepAxis axis);

struct SweepSpec {
    SweepAxis axis = SweepAxis::SpotSkewFactor;
    std::vector<double> values;
};

struct SweepRow {
    double axis_value = 0.0;
    double price = 0.0;                // per unit notional, contract timing
    std::vector<double> cumulative;    // full C(T_n) curve
    std::string error;                 // nonempty if this value failed
};

// One solve per axis value, in the listed order.
std::vector<SweepRow> run_sweep(const ScenarioBase& base, const SweepSpec& spec);

// --------------------------------------------------------------------- EDS

struct EdsTrade {
    double notional = 1.0;
    double barrier_fraction = 0.0;  // barrier as a fraction of spot, in (0, 1)
    double maturity = 0.0;
    PayoutTiming payout = PayoutTiming::AtHit;

    BarrierContract contract(double spot) const;
};

struct EdsQuote {
    double price_bp = 0.0;  // 1e4 * price per unit notional
    double price_currency = 0.0;
    HittingDensity density;
};

EdsQuote price_eds(const EdsTrade& trade, const MarketState& market,
                   const ForwardSkewSpec& fwd_spec, const SolverConfig& solver);

// ------------------------------------------------------------------ ladder

enum class LadderMode { Cumulative, FromBase };

struct LadderRow {
    std::string name;
    double price_bp = 0.0;
    std::string error;
};

// Base price first, then one row per rung. Cumulative mode applies each
// rung on top of the previous ones; FromBase applies each rung alone.
std::vector<LadderRow> run_ladder(const EdsTrade& trade, const MarketState& market,
                                  const ForwardSkewSpec& fwd_spec, const SolverConfig& solver,
                                  const std::vector<StressBump>& rungs, LadderMode mode);

}  // namespace fht

#endif  // FIRSTHIT_SCENARIO_HPP

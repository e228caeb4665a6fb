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

#include "scenario.hpp"

#include <cmath>

#include "errors.hpp"

namespace fht {

bool StressBump::is_neutral() const {
    return spot_skew_mult == 1.0 && barrier_vol_shift == 0.0 && fwd_skew_mult == 1.0 &&
           fwd_vol_mult == 1.0 && fwd_vol_shift == 0.0 && barrier_shift == 0.0 &&
           !dividend_swap.has_value();
}

StressBump StressBump::compose(const StressBump& other) const {
    StressBump out = *this;
    out.name = other.name;
    out.spot_skew_mult *= other.spot_skew_mult;
    out.barrier_vol_shift += other.barrier_vol_shift;
    out.fwd_skew_mult *= other.fwd_skew_mult;
    out.fwd_vol_mult *= other.fwd_vol_mult;
    out.fwd_vol_shift += other.fwd_vol_shift;
    out.barrier_shift += other.barrier_shift;
    if (other.dividend_swap.has_value()) out.dividend_swap = other.dividend_swap;
    return out;
}

HittingDensity solve_with_bump(const ScenarioBase& base, const StressBump& bump) {
    if (bump.is_neutral()) {
        return solve_density(base.market, base.fwd_spec, base.contract, base.solver);
    }

    // the bumped barrier determines where every condition is evaluated
    BarrierContract contract = base.contract;
    contract.barrier += bump.barrier_shift * base.market.spot;
    contract.validate(base.market.spot);

    // dividend swaps act on real forwards, both today's and at the hit time
    MarketState market = base.market;
    if (bump.dividend_swap.has_value()) market.dividends = *bump.dividend_swap;

    // freeze the unwind conditions from the unbumped surface, then apply the
    // forward-side bumps to the frozen table
    const double dt = contract.maturity / base.solver.n_steps;
    ForwardSkewSpec frozen;
    frozen.source = materialize_conditions(base.fwd_spec, market, contract.barrier,
                                           base.solver.n_steps, dt);
    frozen.vol_factor = bump.fwd_vol_mult;
    frozen.skew_factor = bump.fwd_skew_mult;
    frozen.vol_shift = bump.fwd_vol_shift;

    // spot-side bumps only reshape what today's surface reports
    market.surface.slope_scale *= bump.spot_skew_mult;
    market.surface.vol_shift += bump.barrier_vol_shift;

    return solve_density(market, frozen, contract, base.solver);
}

const char* to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::SpotSkewFactor: return "spot_skew_factor";
        case SweepAxis::FwdSkewFactor: return "fwd_skew_factor";
        case SweepAxis::FwdVolFactor: return "fwd_vol_factor";
        case SweepAxis::BarrierVolShift: return "barrier_vol_shift";
        case SweepAxis::BarrierShift: return "barrier_shift";
    }
    return "?";
}

namespace {

StressBump axis_bump(SweepAxis axis, double value) {
    StressBump b;
    switch (axis) {
        case SweepAxis::SpotSkewFactor: b.spot_skew_mult = value; break;
        case SweepAxis::FwdSkewFactor: b.fwd_skew_mult = value; break;
        case SweepAxis::FwdVolFactor: b.fwd_vol_mult = value; break;
        case SweepAxis::BarrierVolShift: b.barrier_vol_shift = value; break;
        case SweepAxis::BarrierShift: b.barrier_shift = value; break;
    }
    return b;
}

bool is_factor_axis(SweepAxis axis) {
    return axis == SweepAxis::SpotSkewFactor || axis == SweepAxis::FwdSkewFactor ||
           axis == SweepAxis::FwdVolFactor;
}

}  // namespace

std::vector<SweepRow> run_sweep(const ScenarioBase& base, const SweepSpec& spec) {
    if (spec.values.empty()) throw DomainError("sweep: values must be nonempty");
    if (is_factor_axis(spec.axis)) {
        for (double v : spec.values) {
            if (!(v >= 0.0)) throw DomainError("sweep: factors must be nonnegative");
        }
    }
    std::vector<SweepRow> rows;
    rows.reserve(spec.values.size());
    for (double v : spec.values) {
        SweepRow row;
        row.axis_value = v;
        try {
            const HittingDensity d = solve_with_bump(base, axis_bump(spec.axis, v));
            row.price = american_digital_price(d, base.contract, base.market.discount);
            row.cumulative = d.cumulative_curve();
        } catch (const Error& e) {
            row.error = std::string(to_string(spec.axis)) + "=" + std::to_string(v) + ": " +
                        e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

BarrierContract EdsTrade::contract(double spot) const {
    if (!(barrier_fraction > 0.0 && barrier_fraction < 1.0)) {
        throw DomainError("eds: barrier_fraction must lie strictly in (0, 1)");
    }
    if (!(notional > 0.0)) throw DomainError("eds: notional must be positive");
    return {barrier_fraction * spot, maturity, payout, notional};
}

EdsQuote price_eds(const EdsTrade& trade, const MarketState& market,
                   const ForwardSkewSpec& fwd_spec, const SolverConfig& solver) {
    const BarrierContract contract = trade.contract(market.spot);
    EdsQuote q;
    q.density = solve_density(market, fwd_spec, contract, solver);
    const double unit = american_digital_price(q.density, contract, market.discount);
    q.price_bp = 1e4 * unit;
    q.price_currency = trade.notional * unit;
    return q;
}

std::vector<LadderRow> run_ladder(const EdsTrade& trade, const MarketState& market,
                                  const ForwardSkewSpec& fwd_spec, const SolverConfig& solver,
                                  const std::vector<StressBump>& rungs, LadderMode mode) {
    const ScenarioBase base{market, fwd_spec, trade.contract(market.spot), solver};

    std::vector<LadderRow> rows;
    rows.reserve(rungs.size() + 1);

    auto price_rung = [&](const std::string& name, const StressBump& bump) {
        LadderRow row;
        row.name = name;
        try {
            const HittingDensity d = solve_with_bump(base, bump);
            BarrierContract c = base.contract;
            c.barrier += bump.barrier_shift * market.spot;
            row.price_bp = 1e4 * american_digital_price(d, c, market.discount);
        } catch (const Error& e) {
            row.error = name + ": " + e.what();
        }
        rows.push_back(std::move(row));
    };

    price_rung("base", StressBump{});
    StressBump accumulated;
    for (const StressBump& rung : rungs) {
        if (mode == LadderMode::Cumulative) {
            accumulated = accumulated.compose(rung);
            price_rung(rung.name, accumulated);
        } else {
            price_rung(rung.name, rung);
        }
    }
    return rows;
}

}  // namespace fht

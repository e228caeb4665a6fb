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

#include "market.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "errors.hpp"

namespace fht {

// ---------------------------------------------------------------- dividends

ProportionalDividends ProportionalDividends::none() { return {DiscountCurve()}; }

ProportionalDividends ProportionalDividends::flat_yield(double q, double horizon) {
    return {DiscountCurve::flat(q, horizon)};
}

void CashDividends::validate() const {
    double prev = 0.0;
    for (const auto& p : payments) {
        if (!(p.t > prev)) throw DomainError("cash dividends: times must be strictly increasing");
        if (!(p.value >= 0.0)) throw DomainError("cash dividends: amounts must be nonnegative");
        prev = p.t;
    }
}

// ----------------------------------------------------------------- surfaces

void StrikeGridSurface::validate() const {
    if (strikes.size() < 2 || maturities.empty()) {
        throw DomainError("strike grid: need at least two strikes and one maturity");
    }
    if (!std::is_sorted(strikes.begin(), strikes.end()) ||
        std::adjacent_find(strikes.begin(), strikes.end()) != strikes.end()) {
        throw DomainError("strike grid: strikes must be strictly increasing");
    }
    if (!std::is_sorted(maturities.begin(), maturities.end()) ||
        std::adjacent_find(maturities.begin(), maturities.end()) != maturities.end()) {
        throw DomainError("strike grid: maturities must be strictly increasing");
    }
    for (double k : strikes) {
        if (!(k > 0.0)) throw DomainError("strike grid: strikes must be positive");
    }
    for (double t : maturities) {
        if (!(t > 0.0)) throw DomainError("strike grid: maturities must be positive");
    }
    if (vols.size() != maturities.size()) {
        throw DomainError("strike grid: one vol row per maturity required");
    }
    for (const auto& row : vols) {
        if (row.size() != strikes.size()) {
            throw DomainError("strike grid: vol row length must match strikes");
        }
        for (double v : row) {
            if (!(v > 0.0)) throw DomainError("strike grid: vols must be positive");
        }
    }
    if (!(vol_floor > 0.0)) throw DomainError("strike grid: vol_floor must be positive");
}

namespace {

// index of the segment [xs[i], xs[i+1]] containing x, clamped to the grid
size_t segment(const std::vector<double>& xs, double x) {
    if (x <= xs.front()) return 0;
    if (x >= xs.back()) return xs.size() - 2;
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    return static_cast<size_t>(it - xs.begin()) - 1;
}

double clamped_weight(const std::vector<double>& xs, size_t i, double x) {
    const double w = (x - xs[i]) / (xs[i + 1] - xs[i]);
    return std::clamp(w, 0.0, 1.0);  // flat extrapolation
}

}  // namespace

double StrikeGridSurface::value(double strike, double ttm) const {
    // interpolation is linear in lnK; strike ordering matches lnK ordering
    const size_t j = segment(strikes, strike);
    const double l0 = std::log(strikes[j]);
    const double l1 = std::log(strikes[j + 1]);
    const double wk = std::clamp((std::log(strike) - l0) / (l1 - l0), 0.0, 1.0);
    if (maturities.size() == 1) {
        return (1.0 - wk) * vols[0][j] + wk * vols[0][j + 1];
    }
    const size_t i = segment(maturities, ttm);
    const double wt = clamped_weight(maturities, i, ttm);
    const double lo = (1.0 - wk) * vols[i][j] + wk * vols[i][j + 1];
    const double hi = (1.0 - wk) * vols[i + 1][j] + wk * vols[i + 1][j + 1];
    return (1.0 - wt) * lo + wt * hi;
}

double VolSurface::vol_floor() const {
    return std::visit([](const auto& s) { return s.vol_floor; }, model);
}

// -------------------------------------------------------------------- state

void MarketState::validate() const {
    if (!(spot > 0.0)) throw DomainError("market: spot must be positive");
    if (const auto* cash = std::get_if<CashDividends>(&dividends)) cash->validate();
    if (const auto* grid = std::get_if<StrikeGridSurface>(&surface.model)) grid->validate();
    if (const auto* par = std::get_if<ParametricSkewSurface>(&surface.model)) {
        if (!(par->vol_floor > 0.0)) throw DomainError("market: vol_floor must be positive");
    }
    if (!(surface.slope_scale >= 0.0)) {
        throw DomainError("market: surface slope_scale must be nonnegative");
    }
}

double forward(const MarketState& m, double spot_at_t, double t, double ttm) {
    if (!(spot_at_t > 0.0)) throw DomainError("forward: spot must be positive");
    if (!(ttm >= t) || t < 0.0) throw DomainError("forward: need 0 <= t <= T");
    const double rate_growth = m.discount.discount(t) / m.discount.discount(ttm);
    if (const auto* prop = std::get_if<ProportionalDividends>(&m.dividends)) {
        const double yield_growth =
            prop->accrual.discount(ttm) / prop->accrual.discount(t);
        return spot_at_t * rate_growth * yield_growth;
    }
    const auto& cash = std::get<CashDividends>(m.dividends);
    double pv = 0.0;  // value at t of dividends paid in (t, ttm]
    for (const auto& p : cash.payments) {
        if (p.t > t && p.t <= ttm) {
            pv += p.value * m.discount.discount(p.t) / m.discount.discount(t);
        }
    }
    const double escrowed = spot_at_t - pv;
    if (!(escrowed > 0.0)) {
        std::ostringstream os;
        os << "negative forward: dividends (pv " << pv << ") exceed spot " << spot_at_t
           << " at t=" << t;
        throw NumericalError(os.str());
    }
    return escrowed * rate_growth;
}

double forward0(const MarketState& m, double ttm) { return forward(m, m.spot, 0.0, ttm); }

SkewPoint surface_point(const MarketState& m, double strike, double ttm) {
    if (!(strike > 0.0)) throw DomainError("surface: strike must be positive");
    if (!(ttm > 0.0)) throw DomainError("surface: maturity must be positive");
    const double floor = m.surface.vol_floor();

    double raw_vol, raw_slope;
    bool floored;
    if (const auto* par = std::get_if<ParametricSkewSurface>(&m.surface.model)) {
        const double k = par->skew(ttm);
        raw_vol = par->atm_vol(ttm) + k * std::log(strike / forward0(m, ttm));
        raw_slope = k;
        floored = raw_vol < floor;
    } else {
        const auto& grid = std::get<StrikeGridSurface>(m.surface.model);
        raw_vol = grid.value(strike, ttm);
        constexpr double h = 1e-3;  // in lnK
        raw_slope = (grid.value(strike * std::exp(h), ttm) -
                     grid.value(strike * std::exp(-h), ttm)) /
                    (2.0 * h);
        floored = raw_vol < floor;
    }
    double vol = std::max(raw_vol, floor) + m.surface.vol_shift;
    vol = std::max(vol, floor);
    const double slope = (floored ? 0.0 : raw_slope) * m.surface.slope_scale;
    return {vol, slope};
}

double spot_vol(const MarketState& m, double strike, double ttm) {
    return surface_point(m, strike, ttm).vol;
}

double spot_slope(const MarketState& m, double strike, double ttm) {
    return surface_point(m, strike, ttm).slope;
}

// ------------------------------------------------- forward skew conditions

void ConditionTable::validate() const {
    if (hit_times.empty() || remaining.empty()) {
        throw DomainError("condition table: empty axis");
    }
    if (!std::is_sorted(hit_times.begin(), hit_times.end()) ||
        std::adjacent_find(hit_times.begin(), hit_times.end()) != hit_times.end()) {
        throw DomainError("condition table: hit times must be strictly increasing");
    }
    if (!std::is_sorted(remaining.begin(), remaining.end()) ||
        std::adjacent_find(remaining.begin(), remaining.end()) != remaining.end()) {
        throw DomainError("condition table: remaining maturities must be strictly increasing");
    }
    for (double r : remaining) {
        if (!(r > 0.0)) throw DomainError("condition table: remaining maturities must be positive");
    }
    if (hit_times.front() < 0.0) {
        throw DomainError("condition table: hit times must be nonnegative");
    }
    auto check = [&](const std::vector<std::vector<double>>& mat, const char* name) {
        if (mat.size() != hit_times.size()) {
            throw DomainError(std::string("condition table: ") + name +
                              " needs one row per hit time");
        }
        for (const auto& row : mat) {
            if (row.size() != remaining.size()) {
                throw DomainError(std::string("condition table: ") + name +
                                  " row length must match remaining maturities");
            }
        }
    };
    check(vol, "vol");
    check(slope, "slope");
}

void ForwardSkewSpec::validate() const {
    if (!(vol_factor >= 0.0)) throw DomainError("forward skew: vol_factor must be >= 0");
    if (!(skew_factor >= 0.0)) throw DomainError("forward skew: skew_factor must be >= 0");
    if (const auto* tab = std::get_if<ConditionTable>(&source)) tab->validate();
}

namespace {

// 1-d linear interpolation with flat extrapolation; exact at nodes.
struct Interp1 {
    const std::vector<double>& xs;
    size_t i;
    double w;
    Interp1(const std::vector<double>& xs_, double x) : xs(xs_) {
        if (xs.size() == 1) {
            i = 0;
            w = 0.0;
            return;
        }
        i = segment(xs, x);
        w = clamped_weight(xs, i, x);
    }
    double at(const std::vector<double>& ys) const {
        if (xs.size() == 1) return ys[0];
        return (1.0 - w) * ys[i] + w * ys[i + 1];
    }
};

SkewPoint table_point(const ConditionTable& tab, double tau, double rem) {
    const Interp1 it(tab.hit_times, tau);
    auto along_rem = [&](const std::vector<std::vector<double>>& mat) {
        const Interp1 ir(tab.remaining, rem);
        if (tab.hit_times.size() == 1) return ir.at(mat[0]);
        const double lo = ir.at(mat[it.i]);
        const double hi = ir.at(mat[it.i + 1]);
        return (1.0 - it.w) * lo + it.w * hi;
    };
    return {along_rem(tab.vol), along_rem(tab.slope)};
}

}  // namespace

SkewPoint barrier_conditions(const ForwardSkewSpec& spec, const MarketState& m,
                             double barrier, double tau, double rem) {
    if (!(rem > 0.0) || tau < 0.0) {
        throw DomainError("barrier conditions: need tau >= 0 and rem > 0");
    }
    SkewPoint src;
    if (std::holds_alternative<FromSpotSurface>(spec.source)) {
        src = surface_point(m, barrier, rem);
    } else {
        src = table_point(std::get<ConditionTable>(spec.source), tau, rem);
    }
    const double raw = spec.vol_factor * src.vol + spec.vol_shift;
    if (!(raw > 0.0)) {
        std::ostringstream os;
        os << "forward skew: shifted vol " << raw << " not positive at tau=" << tau
           << " rem=" << rem;
        throw DomainError(os.str());
    }
    return {std::max(raw, m.surface.vol_floor()), spec.skew_factor * src.slope};
}

ConditionTable materialize_conditions(const ForwardSkewSpec& spec, const MarketState& m,
                                      double barrier, int n_steps, double dt) {
    if (n_steps < 1 || !(dt > 0.0)) {
        throw DomainError("materialize: need n_steps >= 1 and dt > 0");
    }
    ConditionTable tab;
    tab.hit_times.resize(n_steps);
    tab.remaining.resize(n_steps);
    for (int k = 0; k < n_steps; ++k) tab.hit_times[k] = k * dt;
    for (int j = 0; j < n_steps; ++j) tab.remaining[j] = (j + 1) * dt;
    tab.vol.assign(n_steps, std::vector<double>(n_steps));
    tab.slope.assign(n_steps, std::vector<double>(n_steps));
    // conditions sourced from today's surface depend on rem only
    const bool by_rem_only = std::holds_alternative<FromSpotSurface>(spec.source);
    for (int k = 0; k < n_steps; ++k) {
        if (by_rem_only && k > 0) {
            tab.vol[k] = tab.vol[0];
            tab.slope[k] = tab.slope[0];
            continue;
        }
        for (int j = 0; j < n_steps; ++j) {
            const SkewPoint p =
                barrier_conditions(spec, m, barrier, tab.hit_times[k], tab.remaining[j]);
            tab.vol[k][j] = p.vol;
            tab.slope[k][j] = p.slope;
        }
    }
    return tab;
}

}  // namespace fht

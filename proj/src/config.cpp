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

#include "config.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "black_scholes.hpp"
#include "errors.hpp"

namespace fht {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ConfigError(where + ": " + what);
}

const NJson& member(const NJson& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(where, std::string("missing required key '") + key + "'");
    return *it;
}

void check_object(const NJson& obj, const std::string& where) {
    if (!obj.is_object()) fail(where, "expected an object");
}

void check_keys(const NJson& obj, const std::set<std::string>& allowed,
                const std::string& where) {
    check_object(obj, where);
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (allowed.find(key) == allowed.end()) {
            fail(where, "unknown key '" + key + "'");
        }
    }
}

double as_num(const NJson& v, const std::string& where) {
    if (!v.is_number()) fail(where, "expected a number");
    return v.get<double>();
}

double num_at(const NJson& obj, const char* key, const std::string& where) {
    return as_num(member(obj, key, where), where + "." + key);
}

double num_or(const NJson& obj, const char* key, double def, const std::string& where) {
    auto it = obj.find(key);
    return it == obj.end() ? def : as_num(*it, where + "." + key);
}

long int_or(const NJson& obj, const char* key, long def, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) return def;
    if (!it->is_number_integer()) fail(where + "." + key, "expected an integer");
    return it->get<long>();
}

bool bool_or(const NJson& obj, const char* key, bool def, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) return def;
    if (!it->is_boolean()) fail(where + "." + key, "expected a boolean");
    return it->get<bool>();
}

std::string str_at(const NJson& obj, const char* key, const std::string& where) {
    const auto& v = member(obj, key, where);
    if (!v.is_string()) fail(where + "." + key, "expected a string");
    return v.get<std::string>();
}

std::string str_or(const NJson& obj, const char* key, const std::string& def,
                   const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) return def;
    if (!it->is_string()) fail(where + "." + key, "expected a string");
    return it->get<std::string>();
}

std::vector<double> num_list(const NJson& v, const std::string& where) {
    if (!v.is_array() || v.empty()) fail(where, "expected a nonempty array of numbers");
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back(as_num(e, where));
    return out;
}

// [[t, v], ...]
std::vector<CurveNode> pair_list(const NJson& v, const std::string& where) {
    if (!v.is_array() || v.empty()) fail(where, "expected a nonempty array of [t, value] pairs");
    std::vector<CurveNode> out;
    out.reserve(v.size());
    for (const auto& e : v) {
        if (!e.is_array() || e.size() != 2) fail(where, "expected [t, value] pairs");
        out.push_back({as_num(e[0], where), as_num(e[1], where)});
    }
    return out;
}

std::vector<std::vector<double>> matrix(const NJson& v, const std::string& where) {
    if (!v.is_array() || v.empty()) fail(where, "expected a nonempty array of rows");
    std::vector<std::vector<double>> out;
    out.reserve(v.size());
    for (const auto& row : v) out.push_back(num_list(row, where));
    return out;
}

SkewUnit parse_unit(const std::string& s, const std::string& where) {
    if (s == "per_log_strike") return SkewUnit::PerLogStrike;
    if (s == "per_strike") return SkewUnit::PerStrike;
    if (s == "per_moneyness") return SkewUnit::PerMoneyness;
    fail(where, "unknown slope unit '" + s +
                    "' (expected per_log_strike, per_strike or per_moneyness)");
}

DiscountCurve parse_discount(const NJson& j, const std::string& where) {
    const std::string type = str_at(j, "type", where);
    if (type == "flat") {
        check_keys(j, {"type", "rate", "horizon"}, where);
        return DiscountCurve::flat(num_at(j, "rate", where),
                                   num_or(j, "horizon", 100.0, where));
    }
    if (type == "nodes") {
        check_keys(j, {"type", "nodes"}, where);
        return DiscountCurve(pair_list(member(j, "nodes", where), where + ".nodes"));
    }
    fail(where, "unknown discount type '" + type + "'");
}

DividendModel parse_dividends(const NJson& j, const std::string& where) {
    const std::string type = str_at(j, "type", where);
    if (type == "none") {
        check_keys(j, {"type"}, where);
        return ProportionalDividends::none();
    }
    if (type == "proportional") {
        check_keys(j, {"type", "yield", "horizon", "factors"}, where);
        if (j.contains("factors")) {
            return ProportionalDividends{
                DiscountCurve(pair_list(j["factors"], where + ".factors"))};
        }
        return ProportionalDividends::flat_yield(num_at(j, "yield", where),
                                                 num_or(j, "horizon", 100.0, where));
    }
    if (type == "cash") {
        check_keys(j, {"type", "payments"}, where);
        CashDividends cash{pair_list(member(j, "payments", where), where + ".payments")};
        cash.validate();
        return cash;
    }
    fail(where, "unknown dividend type '" + type + "'");
}

TermCurve parse_term(const NJson& v, const std::string& where) {
    if (v.is_number()) return TermCurve::flat(v.get<double>());
    return TermCurve(pair_list(v, where));
}

// The slope declaration: {"unit": ..., "value": number | [[t, v], ...]}
struct SlopeDecl {
    SkewUnit unit = SkewUnit::PerLogStrike;
    std::vector<CurveNode> nodes;  // value as nodes; flat value becomes one node at t=1
};

SlopeDecl parse_slope_decl(const NJson& j, const std::string& where) {
    check_keys(j, {"unit", "value"}, where);
    SlopeDecl d;
    d.unit = parse_unit(str_at(j, "unit", where), where + ".unit");
    const auto& v = member(j, "value", where);
    if (v.is_number()) {
        d.nodes = {{1.0, v.get<double>()}};
    } else {
        d.nodes = pair_list(v, where + ".value");
    }
    return d;
}

SolverConfig parse_solver(const NJson& j, const std::string& where) {
    check_keys(j, {"steps", "negativity", "kernel_floor"}, where);
    SolverConfig cfg;
    cfg.n_steps = static_cast<int>(int_or(j, "steps", 500, where));
    const std::string neg = str_or(j, "negativity", "error", where);
    if (neg == "error") {
        cfg.negativity = NegativityPolicy::Error;
    } else if (neg == "clamp") {
        cfg.negativity = NegativityPolicy::ClampToZero;
    } else {
        fail(where + ".negativity", "expected 'error' or 'clamp'");
    }
    cfg.kernel_floor = num_or(j, "kernel_floor", 1e-6, where);
    cfg.validate();
    return cfg;
}

PayoutTiming parse_payout(const std::string& s, const std::string& where) {
    if (s == "at_hit") return PayoutTiming::AtHit;
    if (s == "at_maturity") return PayoutTiming::AtMaturity;
    fail(where, "expected 'at_hit' or 'at_maturity'");
}

McConfig parse_mc(const NJson& j, const std::string& where) {
    check_keys(j, {"paths", "steps_per_year", "seed", "bridge", "hist_cells", "threads"},
               where);
    McConfig mc;
    mc.n_paths = int_or(j, "paths", 1000000, where);
    mc.steps_per_year = static_cast<int>(int_or(j, "steps_per_year", 50, where));
    mc.seed = static_cast<std::uint64_t>(int_or(j, "seed", 42, where));
    mc.bridge = bool_or(j, "bridge", true, where);
    mc.hist_cells = static_cast<int>(int_or(j, "hist_cells", 50, where));
    mc.n_threads = static_cast<int>(int_or(j, "threads", 0, where));
    mc.validate();
    return mc;
}

StressBump parse_bump(const NJson& j, const std::string& where) {
    check_keys(j,
               {"name", "spot_skew_mult", "barrier_vol_shift", "fwd_skew_mult",
                "fwd_vol_mult", "fwd_vol_shift", "barrier_shift", "dividend_swap"},
               where);
    StressBump b;
    b.name = str_at(j, "name", where);
    b.spot_skew_mult = num_or(j, "spot_skew_mult", 1.0, where);
    b.barrier_vol_shift = num_or(j, "barrier_vol_shift", 0.0, where);
    b.fwd_skew_mult = num_or(j, "fwd_skew_mult", 1.0, where);
    b.fwd_vol_mult = num_or(j, "fwd_vol_mult", 1.0, where);
    b.fwd_vol_shift = num_or(j, "fwd_vol_shift", 0.0, where);
    b.barrier_shift = num_or(j, "barrier_shift", 0.0, where);
    if (j.contains("dividend_swap")) {
        b.dividend_swap = parse_dividends(j["dividend_swap"], where + ".dividend_swap");
    }
    if (!(b.spot_skew_mult >= 0.0) || !(b.fwd_skew_mult >= 0.0) || !(b.fwd_vol_mult >= 0.0)) {
        fail(where, "bump factors must be nonnegative");
    }
    return b;
}

SweepAxis parse_axis(const std::string& s, const std::string& where) {
    if (s == "spot_skew_factor") return SweepAxis::SpotSkewFactor;
    if (s == "fwd_skew_factor") return SweepAxis::FwdSkewFactor;
    if (s == "fwd_vol_factor") return SweepAxis::FwdVolFactor;
    if (s == "barrier_vol_shift") return SweepAxis::BarrierVolShift;
    if (s == "barrier_shift") return SweepAxis::BarrierShift;
    fail(where, "unknown sweep axis '" + s + "'");
}

}  // namespace

const MarketState& RunConfig::require_market() const {
    if (!market.has_value()) throw ConfigError("config: 'market' section is required");
    return *market;
}

BarrierContract RunConfig::require_contract() const {
    if (contract.has_value()) return *contract;
    if (eds.has_value()) return eds->trade.contract(require_market().spot);
    throw ConfigError("config: a 'contract' or 'eds.trade' section is required");
}

RunConfig parse_run_config(const std::string& config_text) {
    NJson root = NJson::parse(config_text, nullptr, false);
    if (root.is_discarded()) throw ConfigError("config: malformed JSON");
    check_keys(root,
               {"day_count", "market", "contract", "forward_skew", "solver", "sweep", "eds",
                "validate"},
               "config");

    RunConfig cfg;
    cfg.day_count = str_or(root, "day_count", "act365f", "config");
    if (cfg.day_count != "act365f" && cfg.day_count != "act365" && cfg.day_count != "act360") {
        fail("config.day_count", "unknown day count convention '" + cfg.day_count + "'");
    }

    if (root.contains("market")) {
        const NJson& jm = root["market"];
        check_keys(jm, {"spot", "discount", "dividends", "surface", "vol_shift", "slope_scale"},
                   "market");
        MarketState m;
        m.spot = num_at(jm, "spot", "market");
        if (!(m.spot > 0.0)) fail("market.spot", "must be positive");
        if (jm.contains("discount")) m.discount = parse_discount(jm["discount"], "market.discount");
        if (jm.contains("dividends")) {
            m.dividends = parse_dividends(jm["dividends"], "market.dividends");
        }

        const NJson& js = member(jm, "surface", "market");
        const std::string stype = str_at(js, "type", "market.surface");
        if (stype == "parametric_skew") {
            check_keys(js, {"type", "atm_vol", "skew", "vol_floor"}, "market.surface");
            ParametricSkewSurface par;
            par.atm_vol = parse_term(member(js, "atm_vol", "market.surface"),
                                     "market.surface.atm_vol");
            const SlopeDecl decl =
                parse_slope_decl(member(js, "skew", "market.surface"), "market.surface.skew");
            cfg.surface_slope_unit = str_at(js["skew"], "unit", "market.surface.skew");
            par.vol_floor = num_or(js, "vol_floor", 0.01, "market.surface");

            // convert declared units node by node at the forward of that tenor;
            // the forward needs curves, so the surface is resolved last
            MarketState anchor = m;  // surface not set yet; forward only uses curves
            std::vector<CurveNode> converted;
            converted.reserve(decl.nodes.size());
            for (const CurveNode& n : decl.nodes) {
                const double f0 = forward(anchor, m.spot, 0.0, n.t);
                converted.push_back(
                    {n.t, slope_to_log_strike(n.value, decl.unit, f0, m.spot)});
            }
            par.skew = TermCurve(std::move(converted));
            m.surface.model = std::move(par);
        } else if (stype == "strike_grid") {
            check_keys(js, {"type", "strikes", "maturities", "vols", "vol_floor"},
                       "market.surface");
            StrikeGridSurface grid;
            grid.strikes = num_list(member(js, "strikes", "market.surface"),
                                    "market.surface.strikes");
            grid.maturities = num_list(member(js, "maturities", "market.surface"),
                                       "market.surface.maturities");
            grid.vols = matrix(member(js, "vols", "market.surface"), "market.surface.vols");
            grid.vol_floor = num_or(js, "vol_floor", 0.01, "market.surface");
            grid.validate();
            m.surface.model = std::move(grid);
        } else {
            fail("market.surface.type", "unknown surface type '" + stype + "'");
        }
        m.surface.vol_shift = num_or(jm, "vol_shift", 0.0, "market");
        m.surface.slope_scale = num_or(jm, "slope_scale", 1.0, "market");
        m.validate();
        cfg.market = std::move(m);
    }

    if (root.contains("contract")) {
        const NJson& jc = root["contract"];
        check_keys(jc, {"barrier", "maturity", "payout", "notional"}, "contract");
        BarrierContract c;
        c.barrier = num_at(jc, "barrier", "contract");
        c.maturity = num_at(jc, "maturity", "contract");
        c.payout = parse_payout(str_or(jc, "payout", "at_maturity", "contract"),
                                "contract.payout");
        c.notional = num_or(jc, "notional", 1.0, "contract");
        cfg.contract = c;
    }

    if (root.contains("solver")) cfg.solver = parse_solver(root["solver"], "solver");

    if (root.contains("sweep")) {
        const NJson& jw = root["sweep"];
        check_keys(jw, {"axis", "values"}, "sweep");
        SweepSpec spec;
        spec.axis = parse_axis(str_at(jw, "axis", "sweep"), "sweep.axis");
        spec.values = num_list(member(jw, "values", "sweep"), "sweep.values");
        cfg.sweep = std::move(spec);
    }

    if (root.contains("eds")) {
        const NJson& je = root["eds"];
        check_keys(je, {"trade", "ladder"}, "eds");
        EdsSection eds;
        const NJson& jt = member(je, "trade", "eds");
        check_keys(jt, {"notional", "barrier_fraction", "maturity", "payout"}, "eds.trade");
        eds.trade.notional = num_or(jt, "notional", 1.0, "eds.trade");
        eds.trade.barrier_fraction = num_at(jt, "barrier_fraction", "eds.trade");
        eds.trade.maturity = num_at(jt, "maturity", "eds.trade");
        eds.trade.payout =
            parse_payout(str_or(jt, "payout", "at_hit", "eds.trade"), "eds.trade.payout");
        if (je.contains("ladder")) {
            const NJson& jl = je["ladder"];
            check_keys(jl, {"mode", "rungs"}, "eds.ladder");
            LadderSection ladder;
            const std::string mode = str_or(jl, "mode", "cumulative", "eds.ladder");
            if (mode == "cumulative") {
                ladder.mode = LadderMode::Cumulative;
            } else if (mode == "from_base") {
                ladder.mode = LadderMode::FromBase;
            } else {
                fail("eds.ladder.mode", "expected 'cumulative' or 'from_base'");
            }
            const NJson& jr = member(jl, "rungs", "eds.ladder");
            if (!jr.is_array()) fail("eds.ladder.rungs", "expected an array");
            int i = 0;
            for (const auto& r : jr) {
                ladder.rungs.push_back(
                    parse_bump(r, "eds.ladder.rungs[" + std::to_string(i++) + "]"));
            }
            eds.ladder = std::move(ladder);
        }
        cfg.eds = std::move(eds);
    }

    if (root.contains("forward_skew")) {
        const NJson& jf = root["forward_skew"];
        const std::string type = str_at(jf, "type", "forward_skew");
        ForwardSkewSpec spec;
        if (type == "derived_from_spot") {
            check_keys(jf, {"type", "vol_factor", "skew_factor", "vol_shift"}, "forward_skew");
        } else if (type == "explicit_table") {
            check_keys(jf,
                       {"type", "hit_times", "remaining", "vol", "slope", "vol_factor",
                        "skew_factor", "vol_shift"},
                       "forward_skew");
            ConditionTable tab;
            tab.hit_times =
                num_list(member(jf, "hit_times", "forward_skew"), "forward_skew.hit_times");
            tab.remaining =
                num_list(member(jf, "remaining", "forward_skew"), "forward_skew.remaining");
            tab.vol = matrix(member(jf, "vol", "forward_skew"), "forward_skew.vol");
            const NJson& jsl = member(jf, "slope", "forward_skew");
            check_keys(jsl, {"unit", "values"}, "forward_skew.slope");
            const SkewUnit unit =
                parse_unit(str_at(jsl, "unit", "forward_skew.slope"), "forward_skew.slope.unit");
            cfg.table_slope_unit = str_at(jsl, "unit", "forward_skew.slope");
            tab.slope = matrix(member(jsl, "values", "forward_skew.slope"),
                               "forward_skew.slope.values");
            if (unit != SkewUnit::PerLogStrike) {
                // the table is always evaluated at the barrier strike
                BarrierContract c;
                try {
                    RunConfig probe;
                    probe.market = cfg.market;
                    probe.contract = cfg.contract;
                    probe.eds = cfg.eds;
                    c = probe.require_contract();
                } catch (const ConfigError&) {
                    fail("forward_skew.slope",
                         "a non-canonical slope unit needs a contract or eds.trade to anchor "
                         "the conversion");
                }
                const double spot = cfg.require_market().spot;
                for (auto& row : tab.slope) {
                    for (double& s : row) {
                        s = slope_to_log_strike(s, unit, c.barrier, spot);
                    }
                }
            }
            tab.validate();
            spec.source = std::move(tab);
        } else {
            fail("forward_skew.type", "unknown forward skew type '" + type + "'");
        }
        spec.vol_factor = num_or(jf, "vol_factor", 1.0, "forward_skew");
        spec.skew_factor = num_or(jf, "skew_factor", 1.0, "forward_skew");
        spec.vol_shift = num_or(jf, "vol_shift", 0.0, "forward_skew");
        spec.validate();
        cfg.fwd_spec = std::move(spec);
    }

    if (root.contains("validate")) {
        const NJson& jv = root["validate"];
        check_keys(jv,
                   {"spot", "vols", "barrier_fractions", "maturities", "solver_tolerance",
                    "solver_steps", "mc"},
                   "validate");
        ValidateSection v;
        v.spot = num_or(jv, "spot", 100.0, "validate");
        if (jv.contains("vols")) v.vols = num_list(jv["vols"], "validate.vols");
        if (jv.contains("barrier_fractions")) {
            v.barrier_fractions = num_list(jv["barrier_fractions"], "validate.barrier_fractions");
        }
        if (jv.contains("maturities")) {
            v.maturities = num_list(jv["maturities"], "validate.maturities");
        }
        v.solver_tolerance = num_or(jv, "solver_tolerance", 0.005, "validate");
        v.solver_steps = static_cast<int>(int_or(jv, "solver_steps", 500, "validate"));
        if (jv.contains("mc")) {
            v.mc = parse_mc(jv["mc"], "validate.mc");
        } else {
            v.mc = parse_mc(NJson::object(), "validate.mc");
        }
        for (double f : v.barrier_fractions) {
            if (!(f > 0.0 && f < 1.0)) fail("validate.barrier_fractions", "must lie in (0, 1)");
        }
        cfg.validate = std::move(v);
    }

    return cfg;
}

std::string merge_overrides(const std::string& config_text, const std::string& overrides_text) {
    NJson base = NJson::parse(config_text, nullptr, false);
    if (base.is_discarded()) throw ConfigError("config: malformed JSON");
    if (overrides_text.empty()) return base.dump();
    NJson over = NJson::parse(overrides_text, nullptr, false);
    if (over.is_discarded()) throw ConfigError("overrides: malformed JSON");

    std::function<void(NJson&, const NJson&)> merge = [&](NJson& dst, const NJson& src) {
        for (const auto& [key, value] : src.items()) {
            if (value.is_object() && dst.contains(key) && dst[key].is_object()) {
                merge(dst[key], value);
            } else {
                dst[key] = value;
            }
        }
    };
    if (!over.is_object() || !base.is_object()) {
        throw ConfigError("overrides: both config and overrides must be JSON objects");
    }
    merge(base, over);
    return base.dump();
}

const char* to_string(PayoutTiming p) {
    return p == PayoutTiming::AtHit ? "at_hit" : "at_maturity";
}

const char* to_string(NegativityPolicy p) {
    return p == NegativityPolicy::Error ? "error" : "clamp";
}

const char* to_string(LadderMode m) {
    return m == LadderMode::Cumulative ? "cumulative" : "from_base";
}

namespace {

NJson pairs_json(const std::vector<CurveNode>& nodes) {
    NJson arr = NJson::array();
    for (const auto& n : nodes) arr.push_back(NJson::array({n.t, n.value}));
    return arr;
}

NJson dividends_json(const DividendModel& d) {
    NJson j;
    if (const auto* prop = std::get_if<ProportionalDividends>(&d)) {
        j["type"] = "proportional";
        j["factors"] = pairs_json(prop->accrual.nodes());
    } else {
        const auto& cash = std::get<CashDividends>(d);
        j["type"] = "cash";
        j["payments"] = pairs_json(cash.payments);
    }
    return j;
}

NJson market_json(const MarketState& m) {
    NJson j;
    j["spot"] = m.spot;
    j["discount"] = {{"type", "nodes"}, {"nodes", pairs_json(m.discount.nodes())}};
    j["dividends"] = dividends_json(m.dividends);
    NJson s;
    if (const auto* par = std::get_if<ParametricSkewSurface>(&m.surface.model)) {
        s["type"] = "parametric_skew";
        s["atm_vol"] = pairs_json(par->atm_vol.nodes());
        s["skew"] = {{"unit", "per_log_strike"}, {"value", pairs_json(par->skew.nodes())}};
        s["vol_floor"] = par->vol_floor;
    } else {
        const auto& grid = std::get<StrikeGridSurface>(m.surface.model);
        s["type"] = "strike_grid";
        s["strikes"] = grid.strikes;
        s["maturities"] = grid.maturities;
        s["vols"] = grid.vols;
        s["vol_floor"] = grid.vol_floor;
    }
    j["surface"] = std::move(s);
    j["vol_shift"] = m.surface.vol_shift;
    j["slope_scale"] = m.surface.slope_scale;
    return j;
}

NJson bump_json(const StressBump& b) {
    NJson j;
    j["name"] = b.name;
    j["spot_skew_mult"] = b.spot_skew_mult;
    j["barrier_vol_shift"] = b.barrier_vol_shift;
    j["fwd_skew_mult"] = b.fwd_skew_mult;
    j["fwd_vol_mult"] = b.fwd_vol_mult;
    j["fwd_vol_shift"] = b.fwd_vol_shift;
    j["barrier_shift"] = b.barrier_shift;
    if (b.dividend_swap.has_value()) j["dividend_swap"] = dividends_json(*b.dividend_swap);
    return j;
}

}  // namespace

NJson resolved_config(const RunConfig& cfg) {
    NJson j;
    j["day_count"] = cfg.day_count;
    if (cfg.market.has_value()) j["market"] = market_json(*cfg.market);
    if (cfg.contract.has_value()) {
        j["contract"] = {{"barrier", cfg.contract->barrier},
                         {"maturity", cfg.contract->maturity},
                         {"payout", to_string(cfg.contract->payout)},
                         {"notional", cfg.contract->notional}};
    }
    NJson f;
    if (const auto* tab = std::get_if<ConditionTable>(&cfg.fwd_spec.source)) {
        f["type"] = "explicit_table";
        f["hit_times"] = tab->hit_times;
        f["remaining"] = tab->remaining;
        f["vol"] = tab->vol;
        f["slope"] = {{"unit", "per_log_strike"}, {"values", tab->slope}};
    } else {
        f["type"] = "derived_from_spot";
    }
    f["vol_factor"] = cfg.fwd_spec.vol_factor;
    f["skew_factor"] = cfg.fwd_spec.skew_factor;
    f["vol_shift"] = cfg.fwd_spec.vol_shift;
    j["forward_skew"] = std::move(f);
    j["solver"] = {{"steps", cfg.solver.n_steps},
                   {"negativity", to_string(cfg.solver.negativity)},
                   {"kernel_floor", cfg.solver.kernel_floor}};
    if (cfg.sweep.has_value()) {
        j["sweep"] = {{"axis", to_string(cfg.sweep->axis)}, {"values", cfg.sweep->values}};
    }
    if (cfg.eds.has_value()) {
        NJson e;
        e["trade"] = {{"notional", cfg.eds->trade.notional},
                      {"barrier_fraction", cfg.eds->trade.barrier_fraction},
                      {"maturity", cfg.eds->trade.maturity},
                      {"payout", to_string(cfg.eds->trade.payout)}};
        if (cfg.eds->ladder.has_value()) {
            NJson rungs = NJson::array();
            for (const auto& r : cfg.eds->ladder->rungs) rungs.push_back(bump_json(r));
            e["ladder"] = {{"mode", to_string(cfg.eds->ladder->mode)}, {"rungs", rungs}};
        }
        j["eds"] = std::move(e);
    }
    if (cfg.validate.has_value()) {
        const auto& v = *cfg.validate;
        j["validate"] = {{"spot", v.spot},
                         {"vols", v.vols},
                         {"barrier_fractions", v.barrier_fractions},
                         {"maturities", v.maturities},
                         {"solver_tolerance", v.solver_tolerance},
                         {"solver_steps", v.solver_steps},
                         {"mc",
                          {{"paths", v.mc.n_paths},
                           {"steps_per_year", v.mc.steps_per_year},
                           {"seed", v.mc.seed},
                           {"bridge", v.mc.bridge},
                           {"hist_cells", v.mc.hist_cells},
                           {"threads", v.mc.n_threads}}}};
    }
    return j;
}

}  // namespace fht

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

#include "run.hpp"

#include <cmath>
#include <sstream>

#include "black_scholes.hpp"
#include "config.hpp"
#include "errors.hpp"
#include "textio.hpp"

namespace fht {

namespace {

NJson assumptions_json(const RunConfig& cfg) {
    NJson a;
    a["day_count"] = cfg.day_count;
    a["internal_slope_unit"] = "per_log_strike";
    a["declared_surface_slope_unit"] = cfg.surface_slope_unit;
    a["declared_table_slope_unit"] = cfg.table_slope_unit;
    a["discount_interpolation"] = "log-linear in the discount factor";
    a["surface_interpolation"] =
        "parametric: linear in lnK with term-linear coefficients; grid: bilinear in "
        "(lnK, T) with flat extrapolation";
    a["quadrature"] = "left-endpoint on a uniform grid";
    a["at_hit_discounting"] = "discount factor at each cell midpoint";
    return a;
}

std::string density_csv(const RunConfig& cfg, const HittingDensity& d,
                        const std::string& command) {
    std::ostringstream os;
    os << "# firsthit density export\n";
    os << "# command: " << command << "\n";
    os << "# clamp_events: " << d.clamp_events << "\n";
    os << "# assumptions: " << assumptions_json(cfg).dump() << "\n";
    os << "# config: " << resolved_config(cfg).dump() << "\n";
    os << "t,rho,cumulative\n";
    double cum = 0.0;
    for (size_t n = 0; n < d.rho.size(); ++n) {
        cum += d.rho[n] * d.dt;
        os << num(n * d.dt) << "," << num(d.rho[n]) << "," << num(cum) << "\n";
    }
    return os.str();
}

RunOutput run_solve(const RunConfig& cfg) {
    const MarketState& market = cfg.require_market();
    const BarrierContract contract = cfg.require_contract();
    const HittingDensity d = solve_density(market, cfg.fwd_spec, contract, cfg.solver);
    const double unit_price = american_digital_price(d, contract, market.discount);

    NJson summary;
    summary["command"] = "solve";
    summary["price"] = unit_price;
    summary["price_bp"] = 1e4 * unit_price;
    summary["price_currency"] = contract.notional * unit_price;
    summary["cumulative_hit_probability"] = d.cumulative();
    summary["clamp_events"] = d.clamp_events;
    summary["steps"] = cfg.solver.n_steps;
    summary["dt"] = d.dt;
    summary["assumptions"] = assumptions_json(cfg);
    summary["config"] = resolved_config(cfg);

    RunOutput out;
    out.summary_json = summary.dump(2) + "\n";
    out.files.push_back({"density.csv", density_csv(cfg, d, "solve")});
    out.files.push_back({"summary.json", out.summary_json});
    return out;
}

MarketState flat_reference_market(double spot, double vol) {
    MarketState m;
    m.spot = spot;
    m.discount = DiscountCurve::flat(0.0);
    m.surface.model =
        ParametricSkewSurface{TermCurve::flat(vol), TermCurve::flat(0.0), 1e-4};
    return m;
}

RunOutput run_validate(const RunConfig& cfg) {
    const ValidateSection v = cfg.validate.value_or(ValidateSection{});
    for (double vol : v.vols) {
        if (!(vol > 0.0)) throw ConfigError("validate.vols: vols must be positive");
    }
    for (double T : v.maturities) {
        if (!(T > 0.0)) throw ConfigError("validate.maturities: maturities must be positive");
    }

    std::ostringstream csv;
    csv << "vol,barrier_fraction,maturity,closed_form,solver,solver_abs_err,mc,mc_se,mc_z,"
           "hist_max_z,am_2eur_dev_pct,pass\n";
    std::ostringstream densities;
    densities << "case,t,solver_rho,solver_cumulative,mc_rho,mc_cumulative\n";

    NJson cases = NJson::array();
    bool all_pass = true;
    int case_index = 0;

    for (double vol : v.vols) {
        for (double bf : v.barrier_fractions) {
            for (double T : v.maturities) {
                const double spot = v.spot;
                const double barrier = bf * spot;

                const double closed = first_passage_probability(spot, barrier, vol, 0.0, T);

                const MarketState market = flat_reference_market(spot, vol);
                const BarrierContract contract{barrier, T, PayoutTiming::AtMaturity, 1.0};
                const HittingDensity den =
                    solve_density(market, ForwardSkewSpec{}, contract,
                                  {v.solver_steps, NegativityPolicy::Error, 1e-6});
                const double solver_c = den.cumulative();
                const double solver_err = std::fabs(solver_c - closed);

                McConfig mc_cfg = v.mc;
                const long n_mc_steps =
                    std::max<long>(1, std::lround(mc_cfg.steps_per_year * T));
                mc_cfg.hist_cells = static_cast<int>(n_mc_steps);
                if (v.solver_steps % mc_cfg.hist_cells != 0) {
                    throw ConfigError(
                        "validate: solver_steps must be a multiple of the per-case MC step "
                        "count so histogram cells align");
                }
                mc_cfg.seed = v.mc.seed + 1000003ULL * case_index;
                const McResult mc = mc_first_passage(spot, barrier, vol, market.discount,
                                                     market.dividends, T, mc_cfg);
                const double mc_z = mc.standard_error > 0.0
                                        ? std::fabs(mc.hit_probability - closed) /
                                              mc.standard_error
                                        : 0.0;

                // per-cell solver mass aggregated onto the MC histogram grid
                const int per_cell = v.solver_steps / mc_cfg.hist_cells;
                double hist_max_z = 0.0;
                double cum_solver = 0.0, cum_mc = 0.0;
                for (int c = 0; c < mc_cfg.hist_cells; ++c) {
                    double mass = 0.0;
                    for (int k = 0; k < per_cell; ++k) {
                        mass += den.rho[c * per_cell + k] * den.dt;
                    }
                    const double mc_mass = mc.hit_time_histogram[c];
                    // binomial error under the reference mass, floored at one path
                    const double p_ref = std::max(
                        {mc_mass, mass, 1.0 / static_cast<double>(mc_cfg.n_paths)});
                    const double se = std::sqrt(p_ref * (1.0 - p_ref) / mc_cfg.n_paths);
                    hist_max_z = std::max(hist_max_z, std::fabs(mc_mass - mass) / se);
                    cum_solver += mass;
                    cum_mc += mc_mass;
                    densities << case_index << "," << num(c * mc.hist_dt) << ","
                              << num(mass / mc.hist_dt) << "," << num(cum_solver) << ","
                              << num(mc_mass / mc.hist_dt) << "," << num(cum_mc) << "\n";
                }

                // report-only: the doubled European digital heuristic
                const double eur =
                    digital_put({spot, barrier, vol, T, 1.0});
                const double am2eur_dev = std::fabs(solver_c - 2.0 * eur) / solver_c * 100.0;

                const bool pass =
                    solver_err <= v.solver_tolerance && mc_z <= 3.0 && hist_max_z <= 4.0;
                all_pass = all_pass && pass;

                csv << num(vol) << "," << num(bf) << "," << num(T) << "," << num(closed)
                    << "," << num(solver_c) << "," << num(solver_err) << ","
                    << num(mc.hit_probability) << "," << num(mc.standard_error) << ","
                    << num(mc_z) << "," << num(hist_max_z) << "," << num(am2eur_dev) << ","
                    << (pass ? "yes" : "no") << "\n";

                NJson jc;
                jc["vol"] = vol;
                jc["barrier_fraction"] = bf;
                jc["maturity"] = T;
                jc["closed_form"] = closed;
                jc["solver"] = solver_c;
                jc["solver_abs_err"] = solver_err;
                jc["mc"] = mc.hit_probability;
                jc["mc_se"] = mc.standard_error;
                jc["mc_z"] = mc_z;
                jc["hist_max_z"] = hist_max_z;
                jc["am_2eur_dev_pct"] = am2eur_dev;
                jc["pass"] = pass;
                cases.push_back(std::move(jc));
                ++case_index;
            }
        }
    }

    NJson summary;
    summary["command"] = "validate";
    summary["all_pass"] = all_pass;
    summary["solver_tolerance"] = v.solver_tolerance;
    summary["mc_tolerance_se"] = 3.0;
    summary["hist_tolerance_se"] = 4.0;
    summary["cases"] = std::move(cases);
    summary["assumptions"] = assumptions_json(cfg);
    summary["config"] = resolved_config(cfg);

    RunOutput out;
    out.exit_code = all_pass ? 0 : 4;
    out.summary_json = summary.dump(2) + "\n";
    out.files.push_back({"validate.csv", csv.str()});
    out.files.push_back({"validate_densities.csv", densities.str()});
    out.files.push_back({"validate.json", out.summary_json});
    return out;
}

RunOutput run_sweep_cmd(const RunConfig& cfg) {
    if (!cfg.sweep.has_value()) throw ConfigError("config: 'sweep' section is required");
    const ScenarioBase base{cfg.require_market(), cfg.fwd_spec, cfg.require_contract(),
                            cfg.solver};
    const std::vector<SweepRow> rows = run_sweep(base, *cfg.sweep);

    std::ostringstream csv;
    csv << "axis,axis_value,price,price_bp,error\n";
    std::ostringstream curves;
    curves << "axis_value,t,cumulative\n";
    NJson jrows = NJson::array();
    bool any_error = false;
    const double dt = base.contract.maturity / base.solver.n_steps;
    for (const auto& r : rows) {
        any_error = any_error || !r.error.empty();
        csv << to_string(cfg.sweep->axis) << "," << num(r.axis_value) << ","
            << (r.error.empty() ? num(r.price) : "") << ","
            << (r.error.empty() ? num(1e4 * r.price) : "") << ",\"" << r.error << "\"\n";
        for (size_t n = 0; n < r.cumulative.size(); ++n) {
            curves << num(r.axis_value) << "," << num(n * dt) << "," << num(r.cumulative[n])
                   << "\n";
        }
        NJson jr;
        jr["axis_value"] = r.axis_value;
        if (r.error.empty()) {
            jr["price"] = r.price;
            jr["price_bp"] = 1e4 * r.price;
        } else {
            jr["error"] = r.error;
        }
        jrows.push_back(std::move(jr));
    }

    NJson summary;
    summary["command"] = "sweep";
    summary["axis"] = to_string(cfg.sweep->axis);
    summary["rows"] = std::move(jrows);
    summary["assumptions"] = assumptions_json(cfg);
    summary["config"] = resolved_config(cfg);

    RunOutput out;
    out.exit_code = any_error ? 3 : 0;
    out.summary_json = summary.dump(2) + "\n";
    out.files.push_back({"sweep.csv", csv.str()});
    out.files.push_back({"sweep_curves.csv", curves.str()});
    out.files.push_back({"sweep.json", out.summary_json});
    return out;
}

RunOutput run_eds(const RunConfig& cfg) {
    if (!cfg.eds.has_value()) throw ConfigError("config: 'eds' section is required");
    const MarketState& market = cfg.require_market();
    const EdsTrade& trade = cfg.eds->trade;

    const EdsQuote quote = price_eds(trade, market, cfg.fwd_spec, cfg.solver);

    std::vector<LadderRow> ladder;
    LadderMode mode = LadderMode::Cumulative;
    if (cfg.eds->ladder.has_value()) {
        mode = cfg.eds->ladder->mode;
        ladder = run_ladder(trade, market, cfg.fwd_spec, cfg.solver,
                            cfg.eds->ladder->rungs, mode);
    } else {
        ladder = run_ladder(trade, market, cfg.fwd_spec, cfg.solver, {}, mode);
    }

    std::ostringstream csv;
    csv << "rung,name,price_bp,error\n";
    NJson jrows = NJson::array();
    bool any_error = false;
    for (size_t i = 0; i < ladder.size(); ++i) {
        const auto& r = ladder[i];
        any_error = any_error || !r.error.empty();
        csv << i << "," << r.name << "," << (r.error.empty() ? num(r.price_bp) : "") << ",\""
            << r.error << "\"\n";
        NJson jr;
        jr["rung"] = i;
        jr["name"] = r.name;
        if (r.error.empty()) {
            jr["price_bp"] = r.price_bp;
        } else {
            jr["error"] = r.error;
        }
        jrows.push_back(std::move(jr));
    }

    NJson summary;
    summary["command"] = "eds";
    summary["base_price_bp"] = quote.price_bp;
    summary["base_price_currency"] = quote.price_currency;
    summary["notional"] = trade.notional;
    summary["barrier"] = trade.barrier_fraction * market.spot;
    summary["payout"] = to_string(trade.payout);
    summary["ladder_mode"] = to_string(mode);
    summary["ladder"] = std::move(jrows);
    summary["clamp_events"] = quote.density.clamp_events;
    summary["assumptions"] = assumptions_json(cfg);
    summary["config"] = resolved_config(cfg);

    RunOutput out;
    out.exit_code = any_error ? 3 : 0;
    out.summary_json = summary.dump(2) + "\n";
    out.files.push_back({"eds.csv", csv.str()});
    out.files.push_back({"density.csv", density_csv(cfg, quote.density, "eds")});
    out.files.push_back({"eds.json", out.summary_json});
    return out;
}

}  // namespace

RunOutput run_command(const std::string& command, const std::string& config_text,
                      const std::string& overrides_text) {
    const std::string merged = merge_overrides(config_text, overrides_text);
    const RunConfig cfg = parse_run_config(merged);
    if (command == "solve") return run_solve(cfg);
    if (command == "validate") return run_validate(cfg);
    if (command == "sweep") return run_sweep_cmd(cfg);
    if (command == "eds") return run_eds(cfg);
    throw ConfigError("unknown command '" + command +
                      "' (expected solve, validate, sweep or eds)");
}

}  // namespace fht

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

#ifndef FIRSTHIT_CONFIG_HPP
#define FIRSTHIT_CONFIG_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "mc.hpp"
#include "scenario.hpp"

namespace fht {

// insertion-ordered JSON keeps the resolved-config echo canonical
using NJson = nlohmann::ordered_json;

struct ValidateSection {
    double spot = 100.0;
    std::vector<double> vols{0.1, 0.2, 0.4};
    std::vector<double> barrier_fractions{0.7, 0.9};
    std::vector<double> maturities{0.5, 1.0};
    double solver_tolerance = 0.005;  // absolute, solver vs closed form
    int solver_steps = 500;
    McConfig mc{1000000, 50, 42, true, 50, 0};
};

struct LadderSection {
    LadderMode mode = LadderMode::Cumulative;
    std::vector<StressBump> rungs;
};

struct EdsSection {
    EdsTrade trade;
    std::optional<LadderSection> ladder;
};

// A fully parsed and normalized run configuration. Schema violations and
// unknown keys raise ConfigError before any computation starts.
struct RunConfig {
    std::string day_count = "act365f";  // declaration only; inputs are year fractions
    std::optional<MarketState> market;
    std::optional<BarrierContract> contract;
    ForwardSkewSpec fwd_spec;
    SolverConfig solver;
    std::optional<SweepSpec> sweep;
    std::optional<EdsSection> eds;
    std::optional<ValidateSection> validate;

    // units as declared in the input, echoed into metadata
    std::string surface_slope_unit = "per_log_strike";
    std::string table_slope_unit = "per_log_strike";

    const MarketState& require_market() const;
    // contract section, or the EDS trade turned into a contract
    BarrierContract require_contract() const;
};

RunConfig parse_run_config(const std::string& config_text);

// Deep object merge of `overrides` onto `config` (scalars and arrays replace,
// objects merge), both given as JSON text.
std::string merge_overrides(const std::string& config_text, const std::string& overrides_text);

// Canonical re-serialization of the parsed configuration: fixed key order,
// defaults made explicit, slopes in the canonical per-log-strike unit.
// Feeding the result back through parse_run_config reproduces the same run.
NJson resolved_config(const RunConfig& cfg);

// string forms used by both the parser and the emitters
const char* to_string(PayoutTiming p);
const char* to_string(NegativityPolicy p);
const char* to_string(LadderMode m);

}  // namespace fht

#endif  // FIRSTHIT_CONFIG_HPP

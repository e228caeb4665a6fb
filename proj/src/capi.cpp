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

#include "firsthit/firsthit.h"

#include <json.hpp>
#include <memory>
#include <string>

#include "black_scholes.hpp"
#include "errors.hpp"
#include "run.hpp"
#include "solver.hpp"

struct fht_result {
    fht::RunOutput output;
};

namespace {

thread_local std::string t_last_error = "{}";

void clear_error() { t_last_error = "{}"; }

void set_error(int code, const std::string& message) {
    nlohmann::json j;
    j["code"] = code;
    j["message"] = message;
    t_last_error = j.dump();
}

fht_status translate_current_exception() {
    try {
        throw;
    } catch (const fht::Error& e) {
        set_error(e.exit_code(), e.what());
        return static_cast<fht_status>(e.exit_code());
    } catch (const std::exception& e) {
        set_error(FHT_ERR_INTERNAL, e.what());
        return FHT_ERR_INTERNAL;
    } catch (...) {
        set_error(FHT_ERR_INTERNAL, "unknown error");
        return FHT_ERR_INTERNAL;
    }
}

fht_status usage_error(const std::string& message) {
    set_error(FHT_ERR_CONFIG, message);
    return FHT_ERR_CONFIG;
}

template <typename Fn>
fht_status scalar_call(double* out, Fn&& fn) {
    if (out == nullptr) return usage_error("output pointer must not be null");
    clear_error();
    try {
        *out = fn();
        return FHT_OK;
    } catch (...) {
        return translate_current_exception();
    }
}

}  // namespace

extern "C" {

const char* fht_version(void) { return "0.1.0"; }

fht_status fht_run(const char* command, const char* config_json, const char* overrides_json,
                   fht_result** out) {
    if (out == nullptr) return usage_error("result pointer must not be null");
    *out = nullptr;
    if (command == nullptr || config_json == nullptr) {
        return usage_error("command and config_json must not be null");
    }
    clear_error();
    try {
        auto result = std::make_unique<fht_result>();
        result->output = fht::run_command(command, config_json,
                                          overrides_json ? overrides_json : "");
        *out = result.release();
        return FHT_OK;
    } catch (...) {
        return translate_current_exception();
    }
}

void fht_result_free(fht_result* result) { delete result; }

int fht_result_exit_code(const fht_result* result) {
    return result == nullptr ? FHT_ERR_CONFIG : result->output.exit_code;
}

const char* fht_result_summary_json(const fht_result* result) {
    return result == nullptr ? "" : result->output.summary_json.c_str();
}

int fht_result_file_count(const fht_result* result) {
    return result == nullptr ? 0 : static_cast<int>(result->output.files.size());
}

const char* fht_result_file_name(const fht_result* result, int index) {
    if (result == nullptr || index < 0 ||
        index >= static_cast<int>(result->output.files.size())) {
        return nullptr;
    }
    return result->output.files[index].name.c_str();
}

const char* fht_result_file_content(const fht_result* result, int index) {
    if (result == nullptr || index < 0 ||
        index >= static_cast<int>(result->output.files.size())) {
        return nullptr;
    }
    return result->output.files[index].content.c_str();
}

const char* fht_last_error(void) { return t_last_error.c_str(); }

fht_status fht_norm_cdf(double x, double* out) {
    return scalar_call(out, [&] { return fht::norm_cdf(x); });
}

fht_status fht_bs_put(double forward, double strike, double vol, double ttm, double df,
                      double* out) {
    return scalar_call(out, [&] { return fht::bs_put({forward, strike, vol, ttm, df}); });
}

fht_status fht_bs_put_vega(double forward, double strike, double vol, double ttm, double df,
                           double* out) {
    return scalar_call(out,
                       [&] { return fht::bs_put_vega({forward, strike, vol, ttm, df}).value; });
}

fht_status fht_digital_put(double forward, double strike, double vol, double ttm, double df,
                           double* out) {
    return scalar_call(out, [&] { return fht::digital_put({forward, strike, vol, ttm, df}); });
}

fht_status fht_digital_put_skew(double forward, double strike, double vol, double ttm,
                                double df, double slope_log_strike, double* out) {
    return scalar_call(out, [&] {
        return fht::digital_put_skew({forward, strike, vol, ttm, df}, slope_log_strike);
    });
}

fht_status fht_first_passage_probability(double spot, double barrier, double vol, double drift,
                                         double ttm, double* out) {
    return scalar_call(
        out, [&] { return fht::first_passage_probability(spot, barrier, vol, drift, ttm); });
}

}  // extern "C"

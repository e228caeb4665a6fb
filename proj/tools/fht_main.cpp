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

// Command-line front end. Everything goes through the C API: the CLI reads
// the config file, merges flag overrides, runs the command and writes the
// returned artifacts into the output directory.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "firsthit/firsthit.h"

namespace {

constexpr int kExitConfig = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::fprintf(stderr, "{\"code\":%d,\"message\":\"cannot read config file %s\"}\n",
                     kExitConfig, path.c_str());
        std::exit(kExitConfig);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Flags {
    std::string config;
    std::string out_dir = ".";
    int steps = 0;
    long long seed = -1;
    bool clamp_density = false;
};

std::string overrides_json(const Flags& f) {
    std::ostringstream os;
    os << "{";
    bool solver = f.steps > 0 || f.clamp_density;
    if (solver) {
        os << "\"solver\":{";
        bool first = true;
        if (f.steps > 0) {
            os << "\"steps\":" << f.steps;
            first = false;
        }
        if (f.clamp_density) {
            if (!first) os << ",";
            os << "\"negativity\":\"clamp\"";
        }
        os << "}";
    }
    if (f.seed >= 0) {
        if (solver) os << ",";
        os << "\"validate\":{\"mc\":{\"seed\":" << f.seed << "}}";
    }
    os << "}";
    return os.str();
}

int run(const std::string& command, const Flags& flags) {
    const std::string config = read_file(flags.config);
    const std::string overrides = overrides_json(flags);

    fht_result* result = nullptr;
    const fht_status status = fht_run(command.c_str(), config.c_str(), overrides.c_str(),
                                      &result);
    if (status != FHT_OK) {
        std::fprintf(stderr, "%s\n", fht_last_error());
        return static_cast<int>(status);
    }

    std::error_code ec;
    std::filesystem::create_directories(flags.out_dir, ec);
    if (ec) {
        std::fprintf(stderr, "{\"code\":%d,\"message\":\"cannot create output dir %s\"}\n",
                     kExitConfig, flags.out_dir.c_str());
        fht_result_free(result);
        return kExitConfig;
    }

    for (int i = 0; i < fht_result_file_count(result); ++i) {
        const std::filesystem::path path =
            std::filesystem::path(flags.out_dir) / fht_result_file_name(result, i);
        std::ofstream out(path, std::ios::binary);
        out << fht_result_file_content(result, i);
        if (!out) {
            std::fprintf(stderr, "{\"code\":%d,\"message\":\"cannot write %s\"}\n",
                         kExitConfig, path.c_str());
            fht_result_free(result);
            return kExitConfig;
        }
    }

    std::cout << fht_result_summary_json(result);
    const int exit_code = fht_result_exit_code(result);
    fht_result_free(result);
    return exit_code;
}

void add_common(CLI::App* cmd, Flags& flags) {
    cmd->add_option("--config", flags.config, "JSON run configuration")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--out-dir", flags.out_dir, "directory for output artifacts");
    cmd->add_option("--steps", flags.steps, "override solver step count");
    cmd->add_option("--seed", flags.seed, "override Monte Carlo seed");
    cmd->add_flag("--clamp-density", flags.clamp_density,
                  "clamp negative densities to zero instead of failing");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"first-hitting-time densities and American digital pricing"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(fht_version()));

    Flags flags;
    CLI::App* solve = app.add_subcommand("solve", "solve the hitting density and price");
    CLI::App* validate =
        app.add_subcommand("validate", "flat-vol triangle: solver vs closed form vs MC");
    CLI::App* sweep = app.add_subcommand("sweep", "skew-sensitivity sweep");
    CLI::App* eds = app.add_subcommand("eds", "equity default swap pricing and stress ladder");
    for (CLI::App* cmd : {solve, validate, sweep, eds}) add_common(cmd, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        std::stringstream devnull;
        app.exit(e, devnull, devnull);
        std::fprintf(stderr, "{\"code\":%d,\"message\":\"%s\"}\n", kExitConfig, e.what());
        return kExitConfig;
    }

    return run(app.get_subcommands().front()->get_name(), flags);
}

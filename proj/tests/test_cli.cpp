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

// Drives the installed binary end to end through a shell, checking exit
// codes, artifacts on disk and byte-identical reruns.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct CliRun {
    int exit_code = -1;
    std::string stdout_text;
    std::string stderr_text;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

CliRun run_cli(const std::string& args, const fs::path& workdir) {
    const fs::path out = workdir / "stdout.txt";
    const fs::path err = workdir / "stderr.txt";
    const std::string cmd = std::string(FHT_CLI_PATH) + " " + args + " > " + out.string() +
                            " 2> " + err.string();
    const int raw = std::system(cmd.c_str());
    CliRun r;
    r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.stdout_text = slurp(out);
    r.stderr_text = slurp(err);
    return r;
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("fht_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

fs::path write_config(const fs::path& dir, const std::string& text) {
    const fs::path p = dir / "config.json";
    std::ofstream out(p);
    out << text;
    return p;
}

const char* kFlatConfig = R"({
  "market": {
    "spot": 100.0,
    "discount": {"type": "flat", "rate": 0.0},
    "dividends": {"type": "none"},
    "surface": {
      "type": "parametric_skew",
      "atm_vol": 0.2,
      "skew": {"unit": "per_log_strike", "value": 0.0},
      "vol_floor": 0.01
    }
  },
  "contract": {"barrier": 90.0, "maturity": 1.0, "payout": "at_maturity", "notional": 1.0},
  "solver": {"steps": 500}
})";

double summary_price(const std::string& json_text) {
    const std::string key = "\"price\": ";
    const auto pos = json_text.find(key);
    REQUIRE(pos != std::string::npos);
    return std::stod(json_text.substr(pos + key.size()));
}

}  // namespace

TEST_CASE("solve writes artifacts and prints the summary") {
    const fs::path dir = fresh_dir("solve");
    const fs::path cfg = write_config(dir, kFlatConfig);
    const CliRun r =
        run_cli("solve --config " + cfg.string() + " --out-dir " + (dir / "out").string(), dir);
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(dir / "out" / "density.csv"));
    CHECK(fs::exists(dir / "out" / "summary.json"));
    // flat-vol reference value: hitting probability ~ 0.6296 (reflection oracle)
    CHECK(summary_price(r.stdout_text) == doctest::Approx(0.6296441493382624).epsilon(5e-4));
}

TEST_CASE("zero-log-drift convention prices the doubled digital") {
    // rate = vol^2/2 = 2%: hitting probability 2 N(ln(0.9)/0.2) = 0.59833
    const std::string cfg_text = [] {
        std::string s = kFlatConfig;
        const auto pos = s.find("\"rate\": 0.0");
        REQUIRE(pos != std::string::npos);
        return s.replace(pos, 11, "\"rate\": 0.02");
    }();
    const fs::path dir = fresh_dir("logdrift");
    const fs::path cfg = write_config(dir, cfg_text);
    const CliRun r =
        run_cli("solve --config " + cfg.string() + " --out-dir " + (dir / "out").string(), dir);
    CHECK(r.exit_code == 0);
    // at-maturity payout discounts the hitting probability by df(T)
    const double df = std::exp(-0.02);
    CHECK(summary_price(r.stdout_text) ==
          doctest::Approx(df * 0.59833069227087177).epsilon(1e-9));
}

TEST_CASE("reruns are byte-identical") {
    const fs::path dir = fresh_dir("idempotent");
    const fs::path cfg = write_config(dir, kFlatConfig);
    REQUIRE(run_cli("solve --config " + cfg.string() + " --out-dir " + (dir / "a").string(),
                    dir).exit_code == 0);
    REQUIRE(run_cli("solve --config " + cfg.string() + " --out-dir " + (dir / "b").string(),
                    dir).exit_code == 0);
    CHECK(slurp(dir / "a" / "density.csv") == slurp(dir / "b" / "density.csv"));
    CHECK(slurp(dir / "a" / "summary.json") == slurp(dir / "b" / "summary.json"));
}

TEST_CASE("malformed config: exit 2, machine-readable stderr, no partial output") {
    const fs::path dir = fresh_dir("badcfg");
    const fs::path cfg = write_config(dir, "{oops");
    const CliRun r =
        run_cli("solve --config " + cfg.string() + " --out-dir " + (dir / "out").string(), dir);
    CHECK(r.exit_code == 2);
    CHECK(r.stderr_text.find("\"code\":2") != std::string::npos);
    CHECK_FALSE(fs::exists(dir / "out" / "density.csv"));
    CHECK_FALSE(fs::exists(dir / "out" / "summary.json"));
}

TEST_CASE("missing config file and unknown flags exit 2") {
    const fs::path dir = fresh_dir("missing");
    CHECK(run_cli("solve --config /nonexistent/x.json", dir).exit_code == 2);
    const fs::path cfg = write_config(dir, kFlatConfig);
    CHECK(run_cli("solve --config " + cfg.string() + " --frobnicate", dir).exit_code == 2);
    CHECK(run_cli("", dir).exit_code == 2);  // subcommand required
}

TEST_CASE("--steps doubling stays within the first-order convergence envelope") {
    const fs::path dir = fresh_dir("steps");
    const fs::path cfg = write_config(dir, kFlatConfig);
    auto price_at = [&](int steps) {
        const CliRun r = run_cli("solve --config " + cfg.string() + " --steps " +
                                     std::to_string(steps) + " --out-dir " +
                                     (dir / ("n" + std::to_string(steps))).string(),
                                 dir);
        REQUIRE(r.exit_code == 0);
        return summary_price(r.stdout_text);
    };
    const double p250 = price_at(250);
    const double p500 = price_at(500);
    const double p1000 = price_at(1000);
    // successive refinements shrink by roughly the first-order factor two
    CHECK(std::fabs(p1000 - p500) <= 0.75 * std::fabs(p500 - p250));
}

TEST_CASE("--clamp-density turns a numerical failure into a clamped run") {
    const char* inconsistent = R"({
      "market": {
        "spot": 100.0,
        "discount": {"type": "flat", "rate": 0.0},
        "dividends": {"type": "none"},
        "surface": {
          "type": "parametric_skew",
          "atm_vol": [[0.1, 0.4], [1.0, 0.1]],
          "skew": {"unit": "per_log_strike", "value": 0.0},
          "vol_floor": 0.01
        }
      },
      "contract": {"barrier": 90.0, "maturity": 1.0, "payout": "at_maturity"},
      "solver": {"steps": 50}
    })";
    const fs::path dir = fresh_dir("clamp");
    const fs::path cfg = write_config(dir, inconsistent);
    const CliRun fail =
        run_cli("solve --config " + cfg.string() + " --out-dir " + (dir / "f").string(), dir);
    CHECK(fail.exit_code == 3);
    CHECK(fail.stderr_text.find("\"code\":3") != std::string::npos);

    const CliRun ok = run_cli("solve --config " + cfg.string() + " --clamp-density --out-dir " +
                                  (dir / "ok").string(),
                              dir);
    CHECK(ok.exit_code == 0);
    CHECK(ok.stdout_text.find("\"clamp_events\": 0,") == std::string::npos);
}

TEST_CASE("validate: tiny grid passes, coarse solver breaches with exit 4") {
    const char* tiny = R"({
      "validate": {
        "spot": 100.0,
        "vols": [0.2],
        "barrier_fractions": [0.9],
        "maturities": [1.0],
        "solver_steps": 250,
        "mc": {"paths": 20000, "steps_per_year": 50, "seed": 11, "threads": 1}
      }
    })";
    const fs::path dir = fresh_dir("validate");
    const fs::path cfg = write_config(dir, tiny);
    const CliRun ok =
        run_cli("validate --config " + cfg.string() + " --out-dir " + (dir / "v").string(), dir);
    CHECK(ok.exit_code == 0);
    CHECK(fs::exists(dir / "v" / "validate.csv"));
    CHECK(fs::exists(dir / "v" / "validate_densities.csv"));

    const char* coarse = R"({
      "validate": {
        "spot": 100.0,
        "vols": [0.2],
        "barrier_fractions": [0.9],
        "maturities": [1.0],
        "solver_steps": 50,
        "solver_tolerance": 1e-6,
        "mc": {"paths": 20000, "steps_per_year": 50, "seed": 11, "threads": 1}
      }
    })";
    const fs::path cfg2 = write_config(fresh_dir("validate2"), coarse);
    const CliRun breach = run_cli("validate --config " + cfg2.string(), dir);
    CHECK(breach.exit_code == 4);
}

TEST_CASE("--seed override changes the Monte Carlo draw") {
    const char* tiny = R"({
      "validate": {
        "vols": [0.2], "barrier_fractions": [0.9], "maturities": [1.0],
        "solver_steps": 250,
        "mc": {"paths": 5000, "steps_per_year": 50, "threads": 1}
      }
    })";
    const fs::path dir = fresh_dir("seed");
    const fs::path cfg = write_config(dir, tiny);
    const CliRun a = run_cli("validate --config " + cfg.string() + " --seed 12 --out-dir " +
                                 (dir / "a").string(),
                             dir);
    const CliRun b = run_cli("validate --config " + cfg.string() + " --seed 13 --out-dir " +
                                 (dir / "b").string(),
                             dir);
    const CliRun a2 = run_cli("validate --config " + cfg.string() + " --seed 12 --out-dir " +
                                  (dir / "a2").string(),
                              dir);
    CHECK(slurp(dir / "a" / "validate.csv") != slurp(dir / "b" / "validate.csv"));
    CHECK(slurp(dir / "a" / "validate.csv") == slurp(dir / "a2" / "validate.csv"));
}

TEST_CASE("shipped demo configs run end to end") {
    const fs::path dir = fresh_dir("demos");
    const std::string cfgdir = FHT_CONFIG_DIR;

    const CliRun fig1 = run_cli("sweep --config " + cfgdir + "/fig1_sweep.json --out-dir " +
                                    (dir / "fig1").string(),
                                dir);
    CHECK(fig1.exit_code == 0);
    CHECK(fs::exists(dir / "fig1" / "sweep.csv"));
    CHECK(fs::exists(dir / "fig1" / "sweep_curves.csv"));

    const CliRun eds = run_cli("eds --config " + cfgdir + "/eds_demo.json --out-dir " +
                                   (dir / "eds").string(),
                               dir);
    CHECK(eds.exit_code == 0);
    CHECK(fs::exists(dir / "eds" / "eds.csv"));
    CHECK(fs::exists(dir / "eds" / "density.csv"));

    // ladder rows come out strictly increasing
    std::ifstream in(dir / "eds" / "eds.csv");
    std::string line;
    std::getline(in, line);  // header
    double prev = -1.0;
    int rows = 0;
    while (std::getline(in, line)) {
        const auto a = line.find(',');
        const auto b = line.find(',', a + 1);
        const auto c = line.find(',', b + 1);
        const double bp = std::stod(line.substr(b + 1, c - b - 1));
        CHECK(bp > prev);
        prev = bp;
        ++rows;
    }
    CHECK(rows == 4);
}

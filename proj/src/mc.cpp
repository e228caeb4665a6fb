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

#include "mc.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "black_scholes.hpp"
#include "errors.hpp"

namespace fht {

namespace {

// SplitMix64; each path owns two independent streams (normals / bridge
// uniforms) so toggling the bridge never perturbs the simulated endpoints.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t s) : state(s) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() {  // strictly inside (0, 1)
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }
};

std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

std::uint64_t stream_seed(std::uint64_t seed, long path, int stream) {
    return mix64(seed + 0x9e3779b97f4a7c15ULL *
                            (2ULL * static_cast<std::uint64_t>(path) + stream + 1ULL));
}

// one simulation segment on the (possibly dividend-augmented) grid
struct Segment {
    double dt = 0.0;
    double log_growth = 0.0;   // drift from rates and proportional yield
    double dividend = 0.0;     // cash amount paid at the segment end
    double sigma_sqrt_dt = 0.0;
    int cell = 0;              // histogram cell of the segment midpoint
};

// a bridge probability below the smallest representable uniform can never
// fire; exp(-38) is safely below 0.5 * 2^-53
constexpr double kBridgeLogCutoff = -38.0;

}  // namespace

void McConfig::validate() const {
    if (n_paths < 1000) throw DomainError("mc: n_paths must be at least 1000");
    if (steps_per_year < 50) throw DomainError("mc: steps_per_year must be at least 50");
    if (hist_cells < 1) throw DomainError("mc: hist_cells must be positive");
    if (n_threads < 0) throw DomainError("mc: n_threads must be nonnegative");
}

McResult mc_first_passage(double spot, double barrier, double vol,
                          const DiscountCurve& rates, const DividendModel& dividends,
                          double ttm, const McConfig& cfg) {
    cfg.validate();
    if (!(spot > 0.0) || !(barrier > 0.0)) throw DomainError("mc: spot and barrier must be positive");
    if (!(ttm > 0.0)) throw DomainError("mc: ttm must be positive");
    if (!(vol >= 0.0)) throw DomainError("mc: vol must be nonnegative");

    McResult res;
    res.n_paths = cfg.n_paths;
    res.hist_dt = ttm / cfg.hist_cells;
    res.hit_time_histogram.assign(cfg.hist_cells, 0.0);

    if (barrier >= spot) {  // already touched
        res.hit_probability = 1.0;
        res.standard_error = 0.0;
        res.hit_time_histogram[0] = 1.0;
        return res;
    }

    // build the segment grid: uniform steps plus cash dividend dates
    const long n_uniform = std::max<long>(1, std::lround(cfg.steps_per_year * ttm));
    std::vector<double> times;
    times.reserve(n_uniform + 8);
    for (long i = 1; i <= n_uniform; ++i) times.push_back(ttm * i / n_uniform);
    const auto* cash = std::get_if<CashDividends>(&dividends);
    if (cash != nullptr) {
        for (const auto& p : cash->payments) {
            if (p.t > 0.0 && p.t < ttm) times.push_back(p.t);
        }
        std::sort(times.begin(), times.end());
        times.erase(std::unique(times.begin(), times.end()), times.end());
    }

    MarketState growth_market;  // reuse the forward algebra for segment drifts
    growth_market.spot = 1.0;
    growth_market.discount = rates;
    growth_market.dividends =
        (cash != nullptr) ? DividendModel(ProportionalDividends::none()) : dividends;

    std::vector<Segment> segs(times.size());
    double t_prev = 0.0;
    for (size_t i = 0; i < times.size(); ++i) {
        Segment& s = segs[i];
        s.dt = times[i] - t_prev;
        s.log_growth = std::log(forward(growth_market, 1.0, t_prev, times[i]));
        s.sigma_sqrt_dt = vol * std::sqrt(s.dt);
        if (cash != nullptr) {
            for (const auto& p : cash->payments) {
                if (p.t == times[i]) s.dividend = p.value;
            }
        }
        const double mid = 0.5 * (t_prev + times[i]);
        s.cell = std::min<int>(cfg.hist_cells - 1, static_cast<int>(mid / res.hist_dt));
        t_prev = times[i];
    }

    const double lb = std::log(barrier);
    const double x0 = std::log(spot);
    const double drift_adj = -0.5 * vol * vol;
    const double inv_var = (vol > 0.0) ? 1.0 / (vol * vol) : 0.0;

    if (vol == 0.0) {  // deterministic path
        double x = x0;
        int hit_cell = -1;
        for (const Segment& s : segs) {
            x += s.log_growth;
            if (s.dividend > 0.0) {
                const double sp = std::exp(x) - s.dividend;
                if (!(sp > 0.0)) throw NumericalError("mc: cash dividend drives spot nonpositive");
                x = std::log(sp);
            }
            if (x <= lb) {
                hit_cell = s.cell;
                break;
            }
        }
        res.hit_probability = hit_cell >= 0 ? 1.0 : 0.0;
        res.standard_error = 0.0;
        if (hit_cell >= 0) res.hit_time_histogram[hit_cell] = 1.0;
        return res;
    }

    unsigned n_threads = cfg.n_threads > 0
                             ? static_cast<unsigned>(cfg.n_threads)
                             : std::max(1u, std::thread::hardware_concurrency());
    n_threads = std::min<unsigned>(n_threads, 64);

    struct Tally {
        long hits = 0;
        std::vector<long> cells;
    };
    std::vector<Tally> tallies(n_threads);

    auto worker = [&](unsigned tid, long begin, long end) {
        Tally& tally = tallies[tid];
        tally.cells.assign(cfg.hist_cells, 0);
        for (long p = begin; p < end; ++p) {
            SplitMix64 zs(stream_seed(cfg.seed, p, 0));
            SplitMix64 us(stream_seed(cfg.seed, p, 1));
            double x = x0;
            int hit_cell = -1;
            for (const Segment& s : segs) {
                const double x_prev = x;
                const double z = inverse_norm_cdf(zs.uniform());
                x += s.log_growth + drift_adj * s.dt + s.sigma_sqrt_dt * z;
                if (x <= lb) {
                    hit_cell = s.cell;
                    break;
                }
                if (cfg.bridge) {
                    const double log_p =
                        -2.0 * (x_prev - lb) * (x - lb) * inv_var / s.dt;
                    if (log_p >= kBridgeLogCutoff && us.uniform() < std::exp(log_p)) {
                        hit_cell = s.cell;
                        break;
                    }
                }
                if (s.dividend > 0.0) {
                    const double sp = std::exp(x) - s.dividend;
                    if (!(sp > 0.0)) {
                        throw NumericalError("mc: cash dividend drives spot nonpositive");
                    }
                    x = std::log(sp);
                    if (x <= lb) {
                        hit_cell = s.cell;
                        break;
                    }
                }
            }
            if (hit_cell >= 0) {
                ++tally.hits;
                ++tally.cells[hit_cell];
            }
        }
    };

    if (n_threads == 1) {
        worker(0, 0, cfg.n_paths);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(n_threads);
        const long chunk = (cfg.n_paths + n_threads - 1) / n_threads;
        for (unsigned t = 0; t < n_threads; ++t) {
            const long begin = t * chunk;
            const long end = std::min<long>(cfg.n_paths, begin + chunk);
            if (begin >= end) {
                tallies[t].cells.assign(cfg.hist_cells, 0);
                continue;
            }
            pool.emplace_back([&, t, begin, end] {
                try {
                    worker(t, begin, end);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    long hits = 0;
    std::vector<long> cells(cfg.hist_cells, 0);
    for (const Tally& t : tallies) {
        hits += t.hits;
        for (int c = 0; c < cfg.hist_cells; ++c) cells[c] += t.cells.empty() ? 0 : t.cells[c];
    }

    const double n = static_cast<double>(cfg.n_paths);
    res.hit_probability = hits / n;
    const double p = res.hit_probability;
    res.standard_error = (hits == 0 || hits == cfg.n_paths)
                             ? 0.0
                             : std::sqrt(p * (1.0 - p) / (n - 1.0));
    for (int c = 0; c < cfg.hist_cells; ++c) res.hit_time_histogram[c] = cells[c] / n;
    return res;
}

}  // namespace fht

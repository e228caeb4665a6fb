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

#include "solver.hpp"

#include <cmath>
#include <sstream>

#include "black_scholes.hpp"
#include "errors.hpp"

namespace fht {

namespace {

// Negative cell masses at or below this scale (relative to the digitals the
// recursion subtracts) are float cancellation, not model inconsistency, and
// are zeroed without counting as clamp events.
constexpr double kRoundoffMassTol = 1e-13;

}  // namespace

void BarrierContract::validate(double spot) const {
    if (!(barrier > 0.0)) throw DomainError("contract: barrier must be positive");
    if (!(barrier < spot)) throw DomainError("contract: barrier must be below spot");
    if (!(maturity > 0.0)) throw DomainError("contract: maturity must be positive");
    if (!(notional > 0.0)) throw DomainError("contract: notional must be positive");
}

void SolverConfig::validate() const {
    if (n_steps < 2) throw DomainError("solver: n_steps must be at least 2");
    if (!(kernel_floor > 0.0)) throw DomainError("solver: kernel_floor must be positive");
}

double HittingDensity::cumulative(size_t n) const {
    double s = 0.0;
    for (size_t k = 0; k <= n && k < rho.size(); ++k) s += rho[k];
    return dt * s;
}

double HittingDensity::cumulative() const {
    return rho.empty() ? 0.0 : cumulative(rho.size() - 1);
}

std::vector<double> HittingDensity::cumulative_curve() const {
    std::vector<double> c(rho.size());
    double s = 0.0;
    for (size_t k = 0; k < rho.size(); ++k) {
        s += rho[k];
        c[k] = dt * s;
    }
    return c;
}

HittingDensity solve_density(const MarketState& m, const ForwardSkewSpec& spec,
                             const BarrierContract& contract, const SolverConfig& config) {
    m.validate();
    spec.validate();
    contract.validate(m.spot);
    config.validate();

    const int n = config.n_steps;
    const double T = contract.maturity;
    const double dt = T / n;
    const double B = contract.barrier;

    // today's digitals at strike B for every grid maturity (undiscounted)
    std::vector<double> lhs(n);
    for (int i = 0; i < n; ++i) {
        const double ttm = (i + 1) * dt;
        const SkewPoint p = surface_point(m, B, ttm);
        lhs[i] = digital_put_skew({forward0(m, ttm), B, p.vol, ttm, 1.0}, p.slope);
    }

    // unwind conditions depend on tau only through an explicit table
    const bool by_rem_only = std::holds_alternative<FromSpotSurface>(spec.source);
    std::vector<SkewPoint> cond_by_rem;
    if (by_rem_only) {
        cond_by_rem.resize(n);
        for (int j = 0; j < n; ++j) {
            cond_by_rem[j] = barrier_conditions(spec, m, B, 0.0, (j + 1) * dt);
        }
    }
    auto kern = [&](int k, int n1) {
        // unwind digital for a hit at tau_k, residual maturity (n1 - k) * dt
        const double tau = k * dt;
        const double rem = (n1 - k) * dt;
        const SkewPoint c =
            by_rem_only ? cond_by_rem[n1 - k - 1] : barrier_conditions(spec, m, B, tau, rem);
        const double fwd = forward(m, B, tau, tau + rem);
        return digital_put_skew({fwd, B, c.vol, rem, 1.0}, c.slope);
    };

    HittingDensity out;
    out.dt = dt;
    out.rho.assign(n, 0.0);

    for (int step = 0; step < n; ++step) {
        double acc = 0.0;
        for (int k = 0; k < step; ++k) {
            acc += dt * out.rho[k] * kern(k, step + 1);
        }
        const double diag = kern(step, step + 1);
        if (diag < config.kernel_floor) {
            std::ostringstream os;
            os << "non-invertible kernel / arbitrage-violating forward skew: unwind value "
               << diag << " below floor " << config.kernel_floor << " at step " << step;
            throw NumericalError(os.str());
        }
        double value = (lhs[step] - acc) / (dt * diag);
        if (value < 0.0) {
            const double mass = -value * dt;
            if (mass <= kRoundoffMassTol * std::max(lhs[step], acc)) {
                value = 0.0;  // cancellation noise
            } else if (config.negativity == NegativityPolicy::ClampToZero) {
                value = 0.0;
                ++out.clamp_events;
            } else {
                std::ostringstream os;
                os << "negative hitting density " << value << " at step " << step
                   << " (t=" << step * dt << "): inconsistent skew/vol inputs";
                throw NumericalError(os.str());
            }
        }
        out.rho[step] = value;
    }

    const double total = out.cumulative();
    if (total > 1.0 + 1e-8) {
        std::ostringstream os;
        os << "integrity failure: cumulative hitting probability " << total << " exceeds 1";
        throw NumericalError(os.str());
    }
    return out;
}

double american_digital_price(const HittingDensity& density, const BarrierContract& contract,
                              const DiscountCurve& discount) {
    if (density.rho.empty()) return 0.0;
    const double total = density.cumulative();
    if (total > 1.0 + 1e-8) {
        throw NumericalError("integrity failure: cumulative hitting probability exceeds 1");
    }
    if (contract.payout == PayoutTiming::AtMaturity) {
        return discount.discount(contract.maturity) * total;
    }
    double price = 0.0;
    for (size_t k = 0; k < density.rho.size(); ++k) {
        price += density.rho[k] * discount.discount((k + 0.5) * density.dt);
    }
    return price * density.dt;
}

double first_passage_probability(double spot, double barrier, double vol, double drift,
                                 double ttm) {
    if (!(barrier < spot)) throw DomainError("first_passage: need barrier < spot");
    if (!(barrier > 0.0)) throw DomainError("first_passage: barrier must be positive");
    if (!(vol > 0.0)) throw DomainError("first_passage: vol must be positive");
    if (!(ttm > 0.0)) throw DomainError("first_passage: ttm must be positive");
    const double b = std::log(barrier / spot);
    const double mu = drift - 0.5 * vol * vol;
    const double s = vol * std::sqrt(ttm);
    const double term1 = norm_cdf((b - mu * ttm) / s);
    // reflected term in log space: exp(2 mu b / vol^2) can overflow while the
    // far-tail CDF underflows, yet their product stays finite
    const double e2 = 2.0 * mu * b / (vol * vol);
    const double z2 = (b + mu * ttm) / s;
    const double n2 = norm_cdf(z2);
    double term2;
    if (n2 > 0.0 && e2 < 700.0) {
        term2 = std::exp(e2) * n2;
    } else {
        const double ln_n2 = (z2 < -38.0)
                                 ? -0.5 * z2 * z2 - std::log(-z2 * std::sqrt(2.0 * M_PI))
                                 : std::log(n2);
        const double lt = e2 + ln_n2;
        term2 = (lt < -745.0) ? 0.0 : std::exp(lt);
    }
    return std::min(term1 + term2, 1.0);
}

}  // namespace fht

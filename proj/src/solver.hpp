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

#ifndef FIRSTHIT_SOLVER_HPP
#define FIRSTHIT_SOLVER_HPP

#include <vector>

#include "market.hpp"

namespace fht {

enum class PayoutTiming { AtHit, AtMaturity };

struct BarrierContract {
    double barrier = 0.0;
    double maturity = 0.0;
    PayoutTiming payout = PayoutTiming::AtMaturity;
    double notional = 1.0;

    void validate(double spot) const;  // barrier < spot, maturity > 0
};

enum class NegativityPolicy { Error, ClampToZero };

struct SolverConfig {
    int n_steps = 500;
    NegativityPolicy negativity = NegativityPolicy::Error;
    double kernel_floor = 1e-6;  // minimum admissible unwind value

    void validate() const;
};

// First-hitting-time density on a uniform grid: rho[n] is the density at
// T_n = n * dt, representing mass over [T_n, T_n + dt).
struct HittingDensity {
    double dt = 0.0;
    std::vector<double> rho;
    long clamp_events = 0;

    // dt * sum of rho up to and including cell n
    double cumulative(size_t n) const;
    double cumulative() const;  // total hitting probability
    std::vector<double> cumulative_curve() const;
};

// Solve the discretized first-kind integral equation for the hitting density.
//
// For each step the market digital at strike `barrier` and maturity T_{n+1}
// (today's surface, today's forward, undiscounted) is matched against the
// accumulated unwind values of earlier hits:
//
//   lhs(T_{n+1}) = sum_{k<n} dt * rho_k * kern(tau_k, T_{n+1})
//                + dt * rho_n * kern(tau_n, T_{n+1})
//
// kern(tau, T) is the undiscounted skew-corrected digital with forward
// forward(m, barrier, tau, T), strike = barrier, and vol/slope from the
// forward-skew spec at (tau, T - tau). Left-endpoint quadrature keeps the
// final term linear in rho_n, which the recursion divides out.
//
// Discounting is deliberately absent here; it re-enters in
// american_digital_price.
HittingDensity solve_density(const MarketState& m, const ForwardSkewSpec& spec,
                             const BarrierContract& contract, const SolverConfig& config);

// Price per unit notional from a solved density.
//   at-maturity: df(T) * dt * sum rho
//   at-hit:      dt * sum rho_n * df(T_n + dt/2)   (midpoint of each cell)
double american_digital_price(const HittingDensity& density, const BarrierContract& contract,
                              const DiscountCurve& discount);

// Closed-form first-passage probability of a lower barrier under flat-vol
// geometric Brownian motion with constant drift, by the reflection principle.
// Validation oracle for the solver and the Monte Carlo engine.
double first_passage_probability(double spot, double barrier, double vol, double drift,
                                 double ttm);

}  // namespace fht

#endif  // FIRSTHIT_SOLVER_HPP

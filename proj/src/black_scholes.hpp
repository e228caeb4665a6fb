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

#ifndef FIRSTHIT_BLACK_SCHOLES_HPP
#define FIRSTHIT_BLACK_SCHOLES_HPP

#include <string>

namespace fht {

// Standard normal CDF, absolute error below 1e-12 over the whole axis.
double norm_cdf(double x);

// Standard normal density.
double norm_pdf(double x);

// Inverse of norm_cdf for p in (0, 1). Used by the Monte Carlo sampler so
// every normal draw consumes exactly one uniform.
double inverse_norm_cdf(double p);

// Inputs of the undiscounted-forward Black formula plus a discount factor.
struct BsQuote {
    double forward = 0.0;  // forward price
    double strike = 0.0;
    double vol = 0.0;      // annualized Black volatility
    double ttm = 0.0;      // time to maturity, year fraction
    double df = 1.0;       // discount factor to maturity

    // forward > 0, strike > 0, vol >= 0, ttm >= 0, 0 < df <= 1
    void validate() const;
    // vol * sqrt(ttm) == 0: no diffusion left, price by intrinsic.
    bool degenerate() const;
    std::string describe() const;
};

struct D1D2 {
    double d1 = 0.0;
    double d2 = 0.0;
};

// d1/d2 of the Black formula. Throws DegenerateDiffusionError when
// vol * sqrt(ttm) == 0; callers branch to intrinsic value instead.
D1D2 d1_d2(double forward, double strike, double vol, double ttm);

// European put, df * (K N(-d2) - F N(-d1)); discounted intrinsic when degenerate.
double bs_put(const BsQuote& q);

struct Vega {
    double value = 0.0;
    bool degenerate = false;
};

// dPut/dvol = df * F * pdf(d1) * sqrt(ttm); zero with the degenerate flag
// set when vol * sqrt(ttm) == 0.
Vega bs_put_vega(const BsQuote& q);

// Digital put under strike-independent volatility: df * N(-d2).
// Degenerate limit is the step function df * 1{forward < strike}.
double digital_put(const BsQuote& q);

// Digital call counterpart, df * N(d2); digital_put + digital_call == df.
double digital_call(const BsQuote& q);

// Digital put consistent with a sloped implied-volatility curve:
//   df * N(-d2) + vega * dvol/dK,
// i.e. the strike derivative of the put price along the smile.
//
// The slope argument is expressed per unit log-strike (dvol/dlnK), the
// canonical unit used throughout this library; dvol/dK = slope / strike.
// Throws NumericalError when the result leaves [0, df].
double digital_put_skew(const BsQuote& q, double slope_log_strike);

// Declared unit of an externally supplied volatility slope.
enum class SkewUnit {
    PerLogStrike,  // dvol / dlnK
    PerStrike,     // dvol / dK
    PerMoneyness,  // dvol / d(K / spot)
};

// Convert a slope in `unit`, quoted at `strike`, into the canonical
// per-log-strike unit. `spot` is only used for PerMoneyness.
double slope_to_log_strike(double value, SkewUnit unit, double strike, double spot);

}  // namespace fht

#endif  // FIRSTHIT_BLACK_SCHOLES_HPP

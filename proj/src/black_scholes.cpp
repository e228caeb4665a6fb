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

#include "black_scholes.hpp"

#include <cmath>
#include <sstream>

#include "errors.hpp"

namespace fht {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kInvSqrt2Pi = 0.3989422804014327;
}  // namespace

double norm_cdf(double x) {
    // erfc keeps full relative accuracy in the left tail, where N(-d2) of a
    // deep-out-of-the-money digital lives.
    return 0.5 * std::erfc(-x / kSqrt2);
}

double norm_pdf(double x) {
    return kInvSqrt2Pi * std::exp(-0.5 * x * x);
}

double inverse_norm_cdf(double p) {
    // Wichura's AS 241 (PPND16), relative error ~1e-16.
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError("inverse_norm_cdf: p must lie strictly in (0, 1)");
    }
    const double q = p - 0.5;
    if (std::fabs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q *
               (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                     6.7265770927008700853e4) * r + 4.5921953931549871457e4) * r +
                   1.3731693765509461125e4) * r + 1.9715909503065514427e3) * r +
                 1.3314166789178437745e2) * r + 3.3871328727963666080e0) /
               (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                     3.9307895800092710610e4) * r + 2.1213794301586595867e4) * r +
                   5.3941960214247511077e3) * r + 6.8718700749205790830e2) * r +
                 4.2313330701600911252e1) * r + 1.0);
    }
    double r = (q < 0.0) ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double v;
    if (r <= 5.0) {
        r -= 1.6;
        v = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                  2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
                3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
              4.63033784615654529590e0) * r + 1.42343711074968357734e0) /
            (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                  1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
              2.05319162663775882187e0) * r + 1.0);
    } else {
        r -= 5.0;
        v = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                  1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
              5.46378491116411436990e0) * r + 6.65790464350110377720e0) /
            (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                  1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
              5.99832206555887937690e-1) * r + 1.0);
    }
    return (q < 0.0) ? -v : v;
}

void BsQuote::validate() const {
    if (!(forward > 0.0) || !(strike > 0.0) || !(vol >= 0.0) || !(ttm >= 0.0) ||
        !(df > 0.0 && df <= 1.0)) {
        throw DomainError("invalid quote: " + describe());
    }
}

bool BsQuote::degenerate() const {
    return vol * std::sqrt(ttm) == 0.0;
}

std::string BsQuote::describe() const {
    std::ostringstream os;
    os << "F=" << forward << " K=" << strike << " vol=" << vol << " ttm=" << ttm
       << " df=" << df;
    return os.str();
}

D1D2 d1_d2(double forward, double strike, double vol, double ttm) {
    if (!(forward > 0.0) || !(strike > 0.0)) {
        throw DomainError("d1_d2: forward and strike must be positive");
    }
    const double stdev = vol * std::sqrt(ttm);
    if (stdev == 0.0) {
        throw DegenerateDiffusionError("degenerate diffusion: vol*sqrt(ttm) == 0");
    }
    const double d1 = std::log(forward / strike) / stdev + 0.5 * stdev;
    return {d1, d1 - stdev};
}

double bs_put(const BsQuote& q) {
    q.validate();
    if (q.degenerate()) {
        return q.df * std::max(q.strike - q.forward, 0.0);
    }
    const auto d = d1_d2(q.forward, q.strike, q.vol, q.ttm);
    return q.df * (q.strike * norm_cdf(-d.d2) - q.forward * norm_cdf(-d.d1));
}

Vega bs_put_vega(const BsQuote& q) {
    q.validate();
    if (q.degenerate()) {
        return {0.0, true};
    }
    const auto d = d1_d2(q.forward, q.strike, q.vol, q.ttm);
    return {q.df * q.forward * norm_pdf(d.d1) * std::sqrt(q.ttm), false};
}

double digital_put(const BsQuote& q) {
    q.validate();
    if (q.degenerate()) {
        return q.forward < q.strike ? q.df : 0.0;
    }
    const auto d = d1_d2(q.forward, q.strike, q.vol, q.ttm);
    return q.df * norm_cdf(-d.d2);
}

double digital_call(const BsQuote& q) {
    q.validate();
    if (q.degenerate()) {
        return q.forward < q.strike ? 0.0 : q.df;
    }
    const auto d = d1_d2(q.forward, q.strike, q.vol, q.ttm);
    return q.df * norm_cdf(d.d2);
}

double digital_put_skew(const BsQuote& q, double slope_log_strike) {
    const double flat = digital_put(q);
    if (q.degenerate()) {
        return flat;  // vega vanishes with the diffusion
    }
    const Vega v = bs_put_vega(q);
    const double price = flat + v.value * slope_log_strike / q.strike;
    if (!(price >= 0.0) || price > q.df) {
        std::ostringstream os;
        os << "arbitrage-violating skew input: digital put " << price
           << " outside [0, " << q.df << "] at " << q.describe()
           << " slope/lnK=" << slope_log_strike;
        throw NumericalError(os.str());
    }
    return price;
}

double slope_to_log_strike(double value, SkewUnit unit, double strike, double spot) {
    switch (unit) {
        case SkewUnit::PerLogStrike:
            return value;
        case SkewUnit::PerStrike:
            if (!(strike > 0.0)) throw DomainError("slope conversion needs strike > 0");
            return value * strike;
        case SkewUnit::PerMoneyness:
            if (!(strike > 0.0) || !(spot > 0.0)) {
                throw DomainError("slope conversion needs strike > 0 and spot > 0");
            }
            return value * strike / spot;
    }
    throw DomainError("unknown skew unit");
}

}  // namespace fht

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

#include "curves.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "errors.hpp"

namespace fht {

namespace {

void check_strictly_increasing(const std::vector<CurveNode>& nodes, const char* what) {
    double prev = 0.0;
    for (const auto& n : nodes) {
        if (!(n.t > prev)) {
            std::ostringstream os;
            os << what << ": node times must be strictly increasing and positive (t=" << n.t
               << ")";
            throw DomainError(os.str());
        }
        prev = n.t;
    }
}

}  // namespace

DiscountCurve::DiscountCurve() : nodes_{{1e6, 1.0}} {}

DiscountCurve::DiscountCurve(std::vector<CurveNode> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.empty()) throw DomainError("discount curve needs at least one node");
    check_strictly_increasing(nodes_, "discount curve");
    for (const auto& n : nodes_) {
        if (!(n.value > 0.0)) throw DomainError("discount factors must be positive");
    }
}

DiscountCurve DiscountCurve::flat(double rate, double horizon) {
    if (!(horizon > 0.0)) throw DomainError("flat curve horizon must be positive");
    // log-linear interpolation from (0, 1) reproduces exp(-rate*t) exactly
    return DiscountCurve({{horizon, std::exp(-rate * horizon)}});
}

double DiscountCurve::discount(double t) const {
    if (t < 0.0) throw DomainError("discount: t must be nonnegative");
    if (t == 0.0) return 1.0;
    if (t > nodes_.back().t) {
        std::ostringstream os;
        os << "discount: t=" << t << " beyond curve horizon " << nodes_.back().t;
        throw DomainError(os.str());
    }
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), t,
                               [](const CurveNode& n, double x) { return n.t < x; });
    const double t1 = it->t, v1 = it->value;
    double t0 = 0.0, v0 = 1.0;
    if (it != nodes_.begin()) {
        const auto& p = *(it - 1);
        t0 = p.t;
        v0 = p.value;
    }
    if (t == t1) return v1;
    const double w = (t - t0) / (t1 - t0);
    return std::exp((1.0 - w) * std::log(v0) + w * std::log(v1));
}

double DiscountCurve::horizon() const { return nodes_.back().t; }

TermCurve::TermCurve() : nodes_{{1.0, 0.0}} {}

TermCurve::TermCurve(std::vector<CurveNode> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.empty()) throw DomainError("term curve needs at least one node");
    check_strictly_increasing(nodes_, "term curve");
}

TermCurve TermCurve::flat(double value) { return TermCurve({{1.0, value}}); }

double TermCurve::operator()(double t) const {
    if (!(t > 0.0)) throw DomainError("term curve: t must be positive");
    if (t <= nodes_.front().t) return nodes_.front().value;
    if (t >= nodes_.back().t) return nodes_.back().value;
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), t,
                               [](const CurveNode& n, double x) { return n.t < x; });
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    if (t == hi.t) return hi.value;
    const double w = (t - lo.t) / (hi.t - lo.t);
    return lo.value + w * (hi.value - lo.value);
}

}  // namespace fht

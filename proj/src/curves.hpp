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

#ifndef FIRSTHIT_CURVES_HPP
#define FIRSTHIT_CURVES_HPP

#include <vector>

namespace fht {

struct CurveNode {
    double t = 0.0;
    double value = 0.0;
};

// Discount factors, log-linear between nodes. The curve implicitly starts at
// (0, 1); node times must be strictly increasing and values positive.
// Queries beyond the last node throw: discounting is never extrapolated.
class DiscountCurve {
  public:
    DiscountCurve();  // unit curve with a long horizon (zero rates)
    explicit DiscountCurve(std::vector<CurveNode> nodes);

    // Constant continuously-compounded rate out to `horizon`.
    static DiscountCurve flat(double rate, double horizon = 100.0);

    double discount(double t) const;
    double horizon() const;
    const std::vector<CurveNode>& nodes() const { return nodes_; }

  private:
    std::vector<CurveNode> nodes_;
};

// Piecewise-linear term structure v(t) for t > 0 with flat extrapolation on
// both sides. Used for ATM volatilities and skew slopes.
class TermCurve {
  public:
    TermCurve();  // zero
    explicit TermCurve(std::vector<CurveNode> nodes);
    static TermCurve flat(double value);

    double operator()(double t) const;
    const std::vector<CurveNode>& nodes() const { return nodes_; }

  private:
    std::vector<CurveNode> nodes_;
};

}  // namespace fht

#endif  // FIRSTHIT_CURVES_HPP

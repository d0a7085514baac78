// Copyright 2026 The loancurve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy of
// the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations under
// the License.

#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "loancurve/types.hpp"

namespace loancurve {

struct RatePoint {
    double rate;
    double probability;
};

/// Finite distribution of per-period rates.
class RateDistribution {
public:
    /// Rates must be finite and >= 0, probabilities in (0, 1] summing to 1
    /// within 1e-12. Throws DomainError otherwise.
    explicit RateDistribution(std::vector<RatePoint> points);

    static RateDistribution equally_likely(std::span<const double> rates);

    std::span<const RatePoint> points() const noexcept { return points_; }
    double mean_rate() const noexcept { return mean_rate_; }

private:
    std::vector<RatePoint> points_;
    double mean_rate_ = 0.0;
};

enum class RegimeNote { AlwaysConvex, Concave, ConvexConcave, Mixed };

std::string_view to_string(RegimeNote note);

/// E[f(1 + R)] against f(1 + E[R]).
struct ScenarioReport {
    double expected_value;
    double value_at_mean;
    double jensen_gap;  // expected_value - value_at_mean
    RegimeNote regime_note;
};

/// Slack allowed on the sign of a Jensen gap that convexity fixes.
inline constexpr double kJensenSlack = 1e-14;

/// Expected payment. P is convex in x, so the gap is never negative.
ScenarioReport expected_payment(const RateDistribution& dist, int term);

/// Expected balance after k payments; requires 0 < k < n. In the concave
/// regime the gap is never positive. In the convex-concave regime its sign
/// depends on where the distribution sits relative to the inflection point
/// and is only reported.
ScenarioReport expected_balance(const RateDistribution& dist, LoanTerms terms);

}  // namespace loancurve

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

#include "loancurve/scenarios.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "loancurve/kernel.hpp"

namespace loancurve {

RateDistribution::RateDistribution(std::vector<RatePoint> points) : points_(std::move(points)) {
    if (points_.empty()) throw DomainError("rate distribution needs at least one point");
    double total = 0.0;
    double mean = 0.0;
    for (const auto& p : points_) {
        if (!std::isfinite(p.rate) || p.rate < 0.0) {
            throw DomainError("rates must be finite and >= 0, got " + std::to_string(p.rate));
        }
        if (!(p.probability > 0.0 && p.probability <= 1.0)) {
            throw DomainError("probabilities must lie in (0, 1], got " +
                              std::to_string(p.probability));
        }
        total += p.probability;
        mean += p.probability * p.rate;
    }
    if (std::fabs(total - 1.0) > 1e-12) {
        throw DomainError("probabilities must sum to 1, got " + std::to_string(total));
    }
    mean_rate_ = mean;
}

RateDistribution RateDistribution::equally_likely(std::span<const double> rates) {
    std::vector<RatePoint> points;
    points.reserve(rates.size());
    const double weight = rates.empty() ? 0.0 : 1.0 / static_cast<double>(rates.size());
    for (double r : rates) points.push_back({r, weight});
    return RateDistribution(std::move(points));
}

std::string_view to_string(RegimeNote note) {
    switch (note) {
        case RegimeNote::AlwaysConvex: return "always-convex";
        case RegimeNote::Concave: return "concave";
        case RegimeNote::ConvexConcave: return "convex-concave";
        case RegimeNote::Mixed: return "mixed";
    }
    return "?";
}

namespace {

template <typename Kernel>
ScenarioReport jensen(const RateDistribution& dist, Kernel&& f, RegimeNote note) {
    double expected = 0.0;
    for (const auto& p : dist.points()) expected += p.probability * f(GrowthFactor::from_rate(p.rate));
    const double at_mean = f(GrowthFactor::from_rate(dist.mean_rate()));
    return ScenarioReport{
        .expected_value = expected,
        .value_at_mean = at_mean,
        .jensen_gap = expected - at_mean,
        .regime_note = note,
    };
}

}  // namespace

ScenarioReport expected_payment(const RateDistribution& dist, int term) {
    if (term < 1) throw DomainError("term must be >= 1, got " + std::to_string(term));
    auto report = jensen(dist, [term](GrowthFactor x) { return periodic_payment(x, term); },
                         RegimeNote::AlwaysConvex);
    if (report.jensen_gap < -kJensenSlack) {
        throw std::logic_error("negative Jensen gap for the convex payment function");
    }
    return report;
}

ScenarioReport expected_balance(const RateDistribution& dist, LoanTerms terms) {
    if (!terms.interior()) {
        throw DomainError("expected balance needs 0 < stop < term; B is constant in x at stop=" +
                          std::to_string(terms.stop()));
    }
    const bool concave = terms.regime_indicator() >= 0;
    auto report = jensen(dist, [terms](GrowthFactor x) { return outstanding_balance(x, terms); },
                         concave ? RegimeNote::Concave : RegimeNote::ConvexConcave);
    if (concave && report.jensen_gap > kJensenSlack) {
        throw std::logic_error("positive Jensen gap for a concave balance function");
    }
    return report;
}

}  // namespace loancurve

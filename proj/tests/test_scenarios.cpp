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

#include <doctest.h>

#include <random>
#include <vector>

#include "loancurve/curvature.hpp"
#include "loancurve/kernel.hpp"
#include "loancurve/scenarios.hpp"
#include "oracles.hpp"

using namespace loancurve;

namespace {

RateDistribution random_distribution(std::mt19937_64& gen) {
    std::uniform_real_distribution<double> rate(0.0, 1.0);
    std::uniform_real_distribution<double> weight(0.05, 1.0);
    const int size = 2 + static_cast<int>(gen() % 4);
    std::vector<RatePoint> points;
    double total = 0.0;
    for (int i = 0; i < size; ++i) {
        points.push_back({rate(gen), weight(gen)});
        total += points.back().probability;
    }
    for (auto& p : points) p.probability /= total;
    return RateDistribution(std::move(points));
}

}  // namespace

TEST_CASE("distribution validation") {
    CHECK_THROWS_AS(RateDistribution({}), DomainError);
    CHECK_THROWS_AS(RateDistribution({{-0.01, 1.0}}), DomainError);
    CHECK_THROWS_AS(RateDistribution({{NAN, 1.0}}), DomainError);
    CHECK_THROWS_AS(RateDistribution({{0.01, 0.5}, {0.02, 0.4}}), DomainError);
    CHECK_THROWS_AS(RateDistribution({{0.01, 0.0}, {0.02, 1.0}}), DomainError);
    CHECK_THROWS_AS(RateDistribution({{0.01, 1.5}, {0.02, -0.5}}), DomainError);
    const auto d = RateDistribution({{0.03, 0.5}, {0.07, 0.5}});
    CHECK(d.mean_rate() == doctest::Approx(0.05).epsilon(1e-15));
    const std::vector<double> rates{0.01, 0.02, 0.06};
    CHECK(RateDistribution::equally_likely(rates).mean_rate() == doctest::Approx(0.03));
}

TEST_CASE("expected payment examples") {
    const auto spread = expected_payment(RateDistribution({{0.03, 0.5}, {0.07, 0.5}}), 12);
    CHECK(spread.jensen_gap > 0.0);
    CHECK(spread.regime_note == RegimeNote::AlwaysConvex);

    const auto point = expected_payment(RateDistribution({{0.05, 1.0}}), 12);
    CHECK(point.jensen_gap == 0.0);

    // (P(1, 2) + P(1.1, 2)) / 2 with P(x, 2) = x^2/(x+1)
    const auto two = expected_payment(RateDistribution({{0.0, 0.5}, {0.10, 0.5}}), 2);
    CHECK(two.expected_value == doctest::Approx((0.5 + 1.21 / 2.1) / 2).epsilon(1e-15));
    CHECK(two.value_at_mean == doctest::Approx(1.05 * 1.05 / 2.05).epsilon(1e-15));
    CHECK(two.jensen_gap == two.expected_value - two.value_at_mean);
}

TEST_CASE("expected balance examples") {
    const auto concave = expected_balance(RateDistribution({{0.03, 0.5}, {0.07, 0.5}}), LoanTerms(30, 5));
    CHECK(concave.jensen_gap <= 0.0);
    CHECK(concave.regime_note == RegimeNote::Concave);

    for (auto [n, k] : {std::pair{30, 5}, {10, 8}, {60, 59}}) {
        CHECK(expected_balance(RateDistribution({{0.05, 1.0}}), LoanTerms(n, k)).jensen_gap == 0.0);
    }

    const double x0 = *find_inflection(LoanTerms(10, 8)).inflection_x;
    REQUIRE(0.003 < x0 - 1.0);
    const auto convex = expected_balance(RateDistribution({{0.001, 0.5}, {0.003, 0.5}}), LoanTerms(10, 8));
    CHECK(convex.jensen_gap > 0.0);
    CHECK(convex.regime_note == RegimeNote::ConvexConcave);

    CHECK_THROWS_AS(expected_balance(RateDistribution({{0.05, 1.0}}), LoanTerms(10, 0)), DomainError);
    CHECK_THROWS_AS(expected_balance(RateDistribution({{0.05, 1.0}}), LoanTerms(10, 10)), DomainError);
    CHECK_THROWS_AS(expected_payment(RateDistribution({{0.05, 1.0}}), 0), DomainError);
}

TEST_CASE("Jensen directions over random distributions") {
    auto gen = oracle::rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto dist = random_distribution(gen);
        const int n = 1 + static_cast<int>(gen() % 360);
        REQUIRE(expected_payment(dist, n).jensen_gap >= -kJensenSlack);
        if (n < 2) continue;
        const int k = 1 + static_cast<int>(gen() % static_cast<unsigned>(n - 1));
        const LoanTerms t(n, k);
        const auto report = expected_balance(dist, t);
        if (t.regime_indicator() >= 0) REQUIRE(report.jensen_gap <= kJensenSlack);
    }
}

TEST_CASE("balance gap follows the side of the inflection point") {
    for (int n = 2; n <= 60; ++n) {
        for (int k = 1; k < n; ++k) {
            const LoanTerms t(n, k);
            if (t.regime_indicator() >= 0) continue;
            const double r0 = *find_inflection(t).inflection_x - 1.0;
            INFO("n=" << n << " k=" << k << " r0=" << r0);
            const auto below = expected_balance(RateDistribution({{0.2 * r0, 0.5}, {0.8 * r0, 0.5}}), t);
            REQUIRE(below.jensen_gap > 0.0);
            const auto above = expected_balance(RateDistribution({{1.2 * r0, 0.5}, {3.0 * r0, 0.5}}), t);
            REQUIRE(above.jensen_gap < 0.0);
        }
    }
}

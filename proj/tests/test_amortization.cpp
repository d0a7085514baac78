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

#include <cmath>

#include "loancurve/amortization.hpp"
#include "loancurve/kernel.hpp"
#include "oracles.hpp"

using namespace loancurve;

TEST_CASE("schedule at zero rate") {
    const auto s = build_schedule(1.0, GrowthFactor(1.0), 4);
    REQUIRE(s.rows.size() == 4);
    CHECK(s.payment == 0.25);
    const double expected[] = {0.75, 0.5, 0.25, 0.0};
    for (int i = 0; i < 4; ++i) {
        CHECK(s.rows[i].period == i + 1);
        CHECK(s.rows[i].interest == 0.0);
        CHECK(s.rows[i].principal_repaid == 0.25);
        CHECK(s.rows[i].remaining == doctest::Approx(expected[i]).epsilon(1e-15));
    }
}

TEST_CASE("single-period schedule") {
    const auto s = build_schedule(1.0, GrowthFactor(1.5), 1);
    REQUIRE(s.rows.size() == 1);
    CHECK(s.payment == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(s.rows[0].remaining == 0.0);
    CHECK(s.rows[0].interest == 0.5);
}

TEST_CASE("thirty-year monthly mortgage") {
    const double principal = 100000.0;
    const GrowthFactor x(1.005);
    const auto s = build_schedule(principal, x, 360);
    REQUIRE(s.rows.size() == 360);
    CHECK(s.payment == doctest::Approx(principal * periodic_payment(x, 360)).epsilon(1e-15));
    CHECK(s.payment == doctest::Approx(599.55052515275).epsilon(1e-12));
    const double expected = principal * outstanding_balance(x, LoanTerms(360, 300));
    CHECK(oracle::relative_error(s.rows[299].remaining, expected) <= 1e-10);
    CHECK(std::fabs(s.rows.back().remaining) <= 1e-9 * principal);

    double previous = principal;
    for (const auto& row : s.rows) {
        REQUIRE(row.remaining < previous);
        REQUIRE(row.interest == previous * x.rate());
        REQUIRE(row.principal_repaid == s.payment - row.interest);
        previous = row.remaining;
    }
}

TEST_CASE("recursive balance examples") {
    CHECK(recursive_balance(GrowthFactor(1.1), LoanTerms(3, 1)) ==
          doctest::Approx(1.1 - 0.40211480362537763).epsilon(1e-14));
    for (double x : {1.0, 1.07, 1.9}) {
        CHECK(recursive_balance(GrowthFactor(x), LoanTerms(17, 0)) == 1.0);
    }
    CHECK(std::fabs(recursive_balance(GrowthFactor(1.02), LoanTerms(24, 24))) <= 1e-10);
}

TEST_CASE("recursion and closed form agree") {
    for (double x : {1.0, 1.001, 1.01, 1.05, 1.1, 1.3, 2.0}) {
        for (int n : {1, 2, 12, 59, 360, 600}) {
            for (int k = 0; k <= n; ++k) {
                const double rec = recursive_balance(GrowthFactor(x), LoanTerms(n, k));
                const double closed = outstanding_balance(GrowthFactor(x), LoanTerms(n, k));
                REQUIRE(std::fabs(rec - closed) <= 1e-10 * std::max(1.0, std::fabs(closed)));
            }
        }
    }
}

TEST_CASE("schedules scale linearly in the principal") {
    const GrowthFactor x(1.0125);
    const auto unit = build_schedule(3.0, x, 48);
    const auto scaled = build_schedule(7.5 * 3.0, x, 48);
    CHECK(scaled.payment == doctest::Approx(7.5 * unit.payment).epsilon(1e-15));
    for (std::size_t i = 0; i < unit.rows.size(); ++i) {
        CHECK(scaled.rows[i].interest == doctest::Approx(7.5 * unit.rows[i].interest).epsilon(1e-14));
        CHECK(scaled.rows[i].principal_repaid ==
              doctest::Approx(7.5 * unit.rows[i].principal_repaid).epsilon(1e-14));
        CHECK(scaled.rows[i].remaining == doctest::Approx(7.5 * unit.rows[i].remaining).epsilon(1e-14));
    }
}

TEST_CASE("schedule input validation") {
    CHECK_THROWS_AS(build_schedule(0.0, GrowthFactor(1.01), 12), DomainError);
    CHECK_THROWS_AS(build_schedule(-5.0, GrowthFactor(1.01), 12), DomainError);
    CHECK_THROWS_AS(build_schedule(NAN, GrowthFactor(1.01), 12), DomainError);
    CHECK_THROWS_AS(build_schedule(1.0, GrowthFactor(1.01), 0), DomainError);
}

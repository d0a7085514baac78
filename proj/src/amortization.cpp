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

#include "loancurve/amortization.hpp"

#include <cmath>
#include <string>

#include "loancurve/kernel.hpp"

namespace loancurve {

namespace {

// b_t for t = 0..n, b_n = 0, b_{t-1} = (b_t + P) / x; b_0 is pinned to 1.
std::vector<double> balance_path(GrowthFactor x, int term) {
    const double payment = periodic_payment(x, term);
    const double growth = x.value();
    std::vector<double> path(static_cast<std::size_t>(term) + 1, 0.0);
    for (int t = term; t > 0; --t) {
        path[static_cast<std::size_t>(t) - 1] = (path[static_cast<std::size_t>(t)] + payment) / growth;
    }
    path.front() = 1.0;
    return path;
}

}  // namespace

double recursive_balance(GrowthFactor x, LoanTerms terms) {
    return balance_path(x, terms.term())[static_cast<std::size_t>(terms.stop())];
}

Schedule build_schedule(double principal, GrowthFactor x, int term) {
    if (!(principal > 0.0) || !std::isfinite(principal)) {
        throw DomainError("principal must be positive and finite");
    }
    const LoanTerms checked(term, 0);
    Schedule schedule{
        .principal = principal,
        .growth = x,
        .term = checked.term(),
        .payment = principal * periodic_payment(x, term),
        .rows = {},
    };
    const auto path = balance_path(x, term);
    schedule.rows.reserve(static_cast<std::size_t>(term));
    double previous = principal;
    for (int t = 1; t <= term; ++t) {
        const double remaining = principal * path[static_cast<std::size_t>(t)];
        const double interest = previous * x.rate();
        schedule.rows.push_back(ScheduleRow{
            .period = t,
            .interest = interest,
            .principal_repaid = schedule.payment - interest,
            .remaining = remaining,
        });
        previous = remaining;
    }
    return schedule;
}

}  // namespace loancurve

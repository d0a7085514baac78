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

#include <vector>

#include "loancurve/types.hpp"

namespace loancurve {

struct ScheduleRow {
    int period;               // 1-based
    double interest;          // remaining before this payment times r
    double principal_repaid;  // payment - interest
    double remaining;         // balance after this payment
};

/// Level-payment amortization schedule for an arbitrary principal.
struct Schedule {
    double principal;
    GrowthFactor growth;
    int term;
    double payment;
    std::vector<ScheduleRow> rows;
};

/// Balance after k payments from the period recursion
///   b_t = x b_{t-1} - P(x, n),  b_0 = 1,  b_n = 0.
///
/// The recursion is run from the terminal condition b_n = 0 downwards,
/// b_{t-1} = (b_t + P) / x. Forwards it multiplies the rounding error of P
/// by (x^k - 1)/(x - 1); backwards every step is a contraction. Shares no
/// code with outstanding_balance beyond P.
double recursive_balance(GrowthFactor x, LoanTerms terms);

/// Schedule for `principal` repaid over `term` periods. The remaining balance
/// follows recursive_balance scaled by the principal; the last row is 0.
Schedule build_schedule(double principal, GrowthFactor x, int term);

}  // namespace loancurve

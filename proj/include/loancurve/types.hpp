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

#include <cmath>
#include <string>

#include "loancurve/error.hpp"

namespace loancurve {

/// Per-period growth factor x = 1 + r. All kernel formulas are written in x.
class GrowthFactor {
public:
    explicit GrowthFactor(double x) : x_(x) {
        if (!std::isfinite(x) || x < 1.0) {
            throw DomainError("growth factor must be finite and >= 1, got " + std::to_string(x));
        }
    }

    static GrowthFactor from_rate(double rate) { return GrowthFactor(1.0 + rate); }

    double value() const noexcept { return x_; }
    double rate() const noexcept { return x_ - 1.0; }
    bool at_par() const noexcept { return x_ == 1.0; }

private:
    double x_;
};

/// Term n (number of payments) and stop time k, with 0 <= k <= n.
class LoanTerms {
public:
    LoanTerms(int term, int stop) : term_(term), stop_(stop) {
        if (term < 1) {
            throw DomainError("term must be >= 1, got " + std::to_string(term));
        }
        if (stop < 0 || stop > term) {
            throw DomainError("stop must lie in [0, term], got stop=" + std::to_string(stop) +
                              " term=" + std::to_string(term));
        }
    }

    int term() const noexcept { return term_; }
    int stop() const noexcept { return stop_; }

    /// True when 0 < k < n, i.e. the balance actually depends on x.
    bool interior() const noexcept { return stop_ > 0 && stop_ < term_; }

    /// n - 2k + 3; the balance is concave in x exactly when this is >= 0.
    long regime_indicator() const noexcept {
        return static_cast<long>(term_) - 2L * stop_ + 3L;
    }

private:
    int term_;
    int stop_;
};

}  // namespace loancurve

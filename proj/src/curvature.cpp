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

#include "loancurve/curvature.hpp"

#include <cmath>
#include <string>

#include "loancurve/kernel.hpp"

namespace loancurve {

namespace {

void require_interior(LoanTerms terms) {
    if (!terms.interior()) {
        throw DomainError("curvature needs 0 < stop < term; B is constant in x at stop=" +
                          std::to_string(terms.stop()));
    }
}

}  // namespace

std::string_view to_string(Regime regime) {
    return regime == Regime::Concave ? "concave" : "convex-concave";
}

CurvatureReport classify_regime(LoanTerms terms) {
    require_interior(terms);
    CurvatureReport report;
    report.regime = terms.regime_indicator() >= 0 ? Regime::Concave : Regime::ConvexConcave;
    return report;
}

CurvatureReport find_inflection(LoanTerms terms, double tol) {
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw DomainError("inflection tolerance must be positive and finite");
    }
    CurvatureReport report = classify_regime(terms);
    if (report.regime == Regime::Concave) {
        throw RegimeMismatch("no inflection point: n - 2k + 3 = " +
                             std::to_string(terms.regime_indicator()) +
                             " >= 0, so B is concave on x >= 1");
    }

    // B2 = (x-1)^m q(x) with the same sign as q for x > 1.
    const auto b2 = helper_polynomial(CascadeLevel::B2, terms);
    const auto sign_of_b2 = [&b2](double x) { return b2.cofactor_scaled(x); };

    double offset = std::ldexp(1.0, -20);
    int shrinks = 0;
    while (!(sign_of_b2(1.0 + offset) < 0.0)) {
        offset *= offset;
        if (++shrinks > 10 || 1.0 + offset == 1.0) {
            throw DomainError("B2 is not negative just above x = 1 for term=" +
                              std::to_string(terms.term()) +
                              " stop=" + std::to_string(terms.stop()));
        }
    }

    double lo = 1.0 + offset;
    double hi = lo;
    while (!(sign_of_b2(hi) > 0.0)) {
        lo = hi;
        offset *= 2.0;
        hi = 1.0 + offset;
        if (++report.bracket_doublings > kMaxBracketDoublings || !std::isfinite(hi)) {
            throw DomainError("could not bracket the root of B2");
        }
    }

    while (hi - lo > tol * lo) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;
        if (sign_of_b2(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    const double root = lo + 0.5 * (hi - lo);
    report.inflection_x = root;
    report.residual = std::fabs(b2.evaluate_scaled(root));
    return report;
}

CurvatureReport analyze_curvature(LoanTerms terms, double tol) {
    const auto report = classify_regime(terms);
    if (report.regime == Regime::Concave) return report;
    return find_inflection(terms, tol);
}

}  // namespace loancurve

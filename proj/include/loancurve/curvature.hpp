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

#include <optional>
#include <string_view>

#include "loancurve/types.hpp"

namespace loancurve {

enum class Regime { Concave, ConvexConcave };

/// "concave" or "convex-concave".
std::string_view to_string(Regime regime);

/// Curvature of x -> B(x, n, k) on x >= 1.
struct CurvatureReport {
    Regime regime = Regime::Concave;
    /// Where B switches from convex to concave; set iff regime is ConvexConcave
    /// and the report came from find_inflection.
    std::optional<double> inflection_x;
    /// |B2(x0)| x0^{-2n} at the returned root.
    double residual = 0.0;
    /// Doublings of the upper bracket needed to reach B2 > 0.
    int bracket_doublings = 0;
};

inline constexpr double kDefaultInflectionTol = 1e-12;
inline constexpr int kMaxBracketDoublings = 200;

/// Concave iff n - 2k + 3 >= 0, otherwise convex-concave.
/// Requires 0 < k < n; at the edges B is constant in x.
CurvatureReport classify_regime(LoanTerms terms);

/// Root of B2 on (1, inf) by bracketed bisection, to a bracket width of
/// tol * x0. Throws RegimeMismatch in the concave regime.
CurvatureReport find_inflection(LoanTerms terms, double tol = kDefaultInflectionTol);

/// classify_regime, followed by find_inflection when there is a root.
CurvatureReport analyze_curvature(LoanTerms terms, double tol = kDefaultInflectionTol);

}  // namespace loancurve

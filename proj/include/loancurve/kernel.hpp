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

#include <cstdint>
#include <string_view>

#include "loancurve/polynomial.hpp"
#include "loancurve/types.hpp"

namespace loancurve {

// Closed-form kernel for a unit loan repaid by n equal payments at growth
// factor x = 1 + r:
//
//   P(x, n)    = (x^{n+1} - x^n) / (x^n - 1)      periodic payment
//   B(x, n, k) = (x^n - x^k) / (x^n - 1)          balance after k payments
//
// together with their x-derivatives and the integer helper polynomials
// B1..B5, P1 whose signs decide monotonicity and curvature.
//
// Validity envelope: results are accurate to a few ulps times n for
// n <= 600 and 1 <= x <= 2. P and B stay finite for any n and x.

inline constexpr int kEnvelopeMaxTerm = 600;
inline constexpr double kEnvelopeMaxGrowth = 2.0;

/// x^m - 1 without cancellation near x = 1. x >= 1.
double powm1(double x, int m);

/// P(x, n). Returns 1/n at x = 1.
double periodic_payment(GrowthFactor x, int term);

/// B(x, n, k) in [0, 1]. Returns (n - k)/n at x = 1.
double outstanding_balance(GrowthFactor x, LoanTerms terms);

/// dB/dx = -x^{k-1} B1(x) / (x^n - 1)^2, strictly positive for 0 < k < n.
/// Zero when k is 0 or n. Throws DomainError at x = 1.
double balance_dx(GrowthFactor x, LoanTerms terms);

/// d2B/dx2 = -x^{k-2} B2(x) / (x^n - 1)^3; its sign is -sign(B2(x)).
/// Zero when k is 0 or n. Throws DomainError at x = 1.
double balance_dxx(GrowthFactor x, LoanTerms terms);

/// dP/dx = x^{n-1} P1(x) / (x^n - 1)^2 > 0. Throws DomainError at x = 1.
double payment_dx(GrowthFactor x, int term);

/// B2(x) = a x^{2n} + c x^{2n-k} + d x^n + e x^{n-k} + f.
struct B2Coefficients {
    std::int64_t a;
    std::int64_t c;
    std::int64_t d;
    std::int64_t e;
    std::int64_t f;

    std::int64_t sum() const noexcept { return a + c + d + e + f; }
};

B2Coefficients b2_coefficients(LoanTerms terms);

enum class CascadeLevel { B1, B2, B3, B4, B5, P1 };

/// Accepts "B1".."B5", "P1" (case-insensitive). Throws DomainError otherwise.
CascadeLevel parse_cascade_level(std::string_view name);
std::string_view to_string(CascadeLevel level);

/// The helper polynomial of the given level:
///
///   B1 = (k-n) x^n + n x^{n-k} - k
///   B2 = a x^{2n} + c x^{2n-k} + d x^n + e x^{n-k} + f
///   B3 = 2na x^{n+k} + (2n-k)c x^n + nd x^k + (n-k)e
///   B4 = 2(n+k)a x^n + (2n-k)c x^{n-k} + kd
///   B5 = 2n(n+k)a x^k + (n-k)(2n-k)c
///   P1 = x^{n+1} - (n+1) x + n
///
/// linked by B2' = x^{n-k-1} B3, B3' = n x^{k-1} B4, B4' = x^{n-k-1} B5.
/// The B levels require 0 < k < n; P1 ignores k.
IntPolynomial helper_polynomial(CascadeLevel level, LoanTerms terms);

/// Value of helper_polynomial(level, terms) at x. Throws DomainError when the
/// value is not representable (e.g. B2 at x = 2, n = 600).
double cascade_eval(CascadeLevel level, GrowthFactor x, LoanTerms terms);

}  // namespace loancurve

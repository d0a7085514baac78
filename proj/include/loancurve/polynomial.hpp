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
#include <span>
#include <vector>

namespace loancurve {

struct Monomial {
    std::int64_t coefficient;
    int power;
};

/// Sparse polynomial with 64-bit integer coefficients and non-negative
/// powers, evaluated for x >= 1.
///
/// On construction the polynomial is deflated by its root at x = 1:
/// p(x) = (x - 1)^m q(x) with q(1) != 0, all in exact integer arithmetic.
/// Evaluation goes through q, so values near x = 1 carry no cancellation,
/// and through x^-degree scaling, so large powers never overflow.
class IntPolynomial {
public:
    /// Merges equal powers and drops zero terms. Throws DomainError on
    /// negative powers or when the deflated coefficients leave int64 range.
    explicit IntPolynomial(std::vector<Monomial> terms);

    /// Terms in descending power order.
    std::span<const Monomial> terms() const noexcept { return terms_; }

    /// Degree; -1 for the zero polynomial.
    int degree() const noexcept { return degree_; }

    /// Exact p(1).
    std::int64_t value_at_one() const noexcept { return value_at_one_; }

    /// Multiplicity m of the root at x = 1 (0 when p(1) != 0).
    int root_multiplicity() const noexcept { return multiplicity_; }

    /// q(x) * x^-(degree - m), the deflated cofactor scaled to stay O(1).
    /// Same sign as p(x) for x > 1.
    double cofactor_scaled(double x) const;

    /// p(x) * x^-degree. Finite for every finite x >= 1.
    double evaluate_scaled(double x) const;

    /// p(x). Throws DomainError if the value overflows a double.
    double evaluate(double x) const;

private:
    std::vector<Monomial> terms_;
    std::vector<std::int64_t> cofactor_;  // ascending powers of q
    int degree_ = -1;
    int multiplicity_ = 0;
    std::int64_t value_at_one_ = 0;
};

}  // namespace loancurve

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
#include <limits>

#include "loancurve/error.hpp"
#include "loancurve/polynomial.hpp"

using loancurve::DomainError;
using loancurve::IntPolynomial;

TEST_CASE("deflation finds the multiplicity of the root at one") {
    // (x-1)^3 (x+2) = x^4 - x^3 - 3x^2 + 5x - 2
    const IntPolynomial p({{1, 4}, {-1, 3}, {-3, 2}, {5, 1}, {-2, 0}});
    CHECK(p.degree() == 4);
    CHECK(p.value_at_one() == 0);
    CHECK(p.root_multiplicity() == 3);
    for (double x : {1.0, 1.0 + 1e-9, 1.5, 3.0}) {
        const double direct = std::pow(x - 1.0, 3) * (x + 2.0);
        CHECK(p.evaluate(x) == doctest::Approx(direct).epsilon(1e-14));
        CHECK(p.evaluate_scaled(x) == doctest::Approx(direct / std::pow(x, 4)).epsilon(1e-14));
    }
}

TEST_CASE("like powers merge and zero terms drop") {
    const IntPolynomial p({{2, 3}, {-2, 3}, {4, 0}, {1, 0}});
    CHECK(p.degree() == 0);
    CHECK(p.value_at_one() == 5);
    CHECK(p.root_multiplicity() == 0);
    CHECK(p.evaluate(7.0) == 5.0);

    const IntPolynomial zero({{3, 2}, {-3, 2}});
    CHECK(zero.degree() == -1);
    CHECK(zero.evaluate(2.0) == 0.0);
    CHECK(zero.evaluate_scaled(2.0) == 0.0);
}

TEST_CASE("near one the deflated form keeps full relative accuracy") {
    // x^10 - 10x + 9 = (x-1)^2 (x^8 + 2x^7 + ... + 9)
    const IntPolynomial p({{1, 10}, {-10, 1}, {9, 0}});
    CHECK(p.root_multiplicity() == 2);
    const double d = 1e-7;
    const double leading = 45.0 * d * d;  // p''(1)/2 * d^2
    CHECK(p.evaluate(1.0 + d) == doctest::Approx(leading).epsilon(1e-5));
}

TEST_CASE("scaled evaluation survives degrees that overflow a double") {
    const IntPolynomial p({{3, 2000}, {-3, 0}});
    CHECK(std::isfinite(p.evaluate_scaled(2.0)));
    CHECK(p.evaluate_scaled(2.0) == doctest::Approx(3.0));
    CHECK_THROWS_AS(p.evaluate(2.0), DomainError);
}

TEST_CASE("invalid polynomials are rejected") {
    CHECK_THROWS_AS(IntPolynomial({{1, -1}}), DomainError);
    const auto big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(IntPolynomial({{big, 2}, {big, 2}}), DomainError);
}

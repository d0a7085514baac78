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

#include "loancurve/kernel.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <cmath>
#include <string>
#include <vector>

namespace loancurve {

namespace {

__extension__ typedef __int128 Wide;

std::int64_t narrow(Wide v) {
    if (v > static_cast<Wide>(INT64_MAX) || v < static_cast<Wide>(INT64_MIN)) {
        throw DomainError("helper polynomial coefficient exceeds the 64-bit range");
    }
    return static_cast<std::int64_t>(v);
}

int narrow_power(long p) {
    if (p < 0 || p > INT_MAX) throw DomainError("helper polynomial power out of range");
    return static_cast<int>(p);
}

void require_term(int term) {
    if (term < 1) throw DomainError("term must be >= 1, got " + std::to_string(term));
}

void require_off_par(GrowthFactor x, const char* what) {
    if (x.at_par()) {
        throw DomainError(std::string(what) +
                          " is undefined at x = 1; the factored form is 0/0 there");
    }
}

// sum_{j=0}^{n-1} x^-j, i.e. (x^n - 1) / ((x - 1) x^{n-1}). x > 1.
double geometric_sum_scaled(double x, int n) { return powm1(x, -n) / powm1(x, -1); }

// x^pre p(x) / (x^n - 1)^denom_power for x > 1, with p = (x-1)^m q deflated
// and x^n - 1 = (x - 1) x^{n-1} S. The (x - 1) factors cancel exactly.
double deflated_ratio(const IntPolynomial& p, int pre, int denom_power, double x, int n) {
    const int m = p.root_multiplicity();
    const long x_power = static_cast<long>(pre) + p.degree() - m -
                         static_cast<long>(denom_power) * (n - 1);
    double value = std::pow(x, static_cast<double>(x_power)) * p.cofactor_scaled(x) /
                   std::pow(geometric_sum_scaled(x, n), denom_power);
    if (m != denom_power) value *= std::pow(x - 1.0, m - denom_power);
    return value;
}

void require_interior(LoanTerms terms) {
    if (!terms.interior()) {
        throw DomainError("helper polynomials B1..B5 need 0 < stop < term, got stop=" +
                          std::to_string(terms.stop()) + " term=" + std::to_string(terms.term()));
    }
}

}  // namespace

double powm1(double x, int m) {
    if (m == 0 || x == 1.0) return 0.0;
    if (m == 1) return x - 1.0;
    if (m == -1) return (1.0 - x) / x;
    const double exponent = static_cast<double>(m) * std::log1p(x - 1.0);
    if (std::fabs(exponent) < 1.0) return std::expm1(exponent);
    return std::pow(x, m) - 1.0;
}

double periodic_payment(GrowthFactor x, int term) {
    require_term(term);
    if (x.at_par()) return 1.0 / term;
    const double r = x.rate();
    // x^n - 1 may overflow to inf for huge n; r is then the correct limit.
    return r + r / powm1(x.value(), term);
}

double outstanding_balance(GrowthFactor x, LoanTerms terms) {
    const int n = terms.term();
    const int k = terms.stop();
    if (k == 0) return 1.0;
    if (k == n) return 0.0;
    if (x.at_par()) return static_cast<double>(n - k) / n;
    // (x^n - x^k) / (x^n - 1) = (x^{k-n} - 1) / (x^{-n} - 1)
    return powm1(x.value(), k - n) / powm1(x.value(), -n);
}

double balance_dx(GrowthFactor x, LoanTerms terms) {
    require_off_par(x, "balance_dx");
    if (!terms.interior()) return 0.0;
    const auto b1 = helper_polynomial(CascadeLevel::B1, terms);
    return -deflated_ratio(b1, terms.stop() - 1, 2, x.value(), terms.term());
}

double balance_dxx(GrowthFactor x, LoanTerms terms) {
    require_off_par(x, "balance_dxx");
    if (!terms.interior()) return 0.0;
    const auto b2 = helper_polynomial(CascadeLevel::B2, terms);
    return -deflated_ratio(b2, terms.stop() - 2, 3, x.value(), terms.term());
}

double payment_dx(GrowthFactor x, int term) {
    require_term(term);
    require_off_par(x, "payment_dx");
    const auto p1 = helper_polynomial(CascadeLevel::P1, LoanTerms(term, 0));
    return deflated_ratio(p1, term - 1, 2, x.value(), term);
}

B2Coefficients b2_coefficients(LoanTerms terms) {
    const Wide n = terms.term();
    const Wide k = terms.stop();
    return B2Coefficients{
        .a = narrow((n - k) * (n - k + 1)),
        .c = narrow(-n * (n + 1)),
        .d = narrow(-2 * k * (k - 1) + 2 * k * n + n * (n - 1)),
        .e = narrow(-n * (n - 1)),
        .f = narrow(k * (k - 1)),
    };
}

CascadeLevel parse_cascade_level(std::string_view name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (auto level : {CascadeLevel::B1, CascadeLevel::B2, CascadeLevel::B3, CascadeLevel::B4,
                       CascadeLevel::B5, CascadeLevel::P1}) {
        if (upper == to_string(level)) return level;
    }
    throw DomainError("unknown helper polynomial '" + std::string(name) +
                      "' (expected B1, B2, B3, B4, B5 or P1)");
}

std::string_view to_string(CascadeLevel level) {
    switch (level) {
        case CascadeLevel::B1: return "B1";
        case CascadeLevel::B2: return "B2";
        case CascadeLevel::B3: return "B3";
        case CascadeLevel::B4: return "B4";
        case CascadeLevel::B5: return "B5";
        case CascadeLevel::P1: return "P1";
    }
    return "?";
}

IntPolynomial helper_polynomial(CascadeLevel level, LoanTerms terms) {
    const long n = terms.term();
    const long k = terms.stop();
    const Wide wn = n;
    const Wide wk = k;

    if (level == CascadeLevel::P1) {
        return IntPolynomial({
            {1, narrow_power(n + 1)},
            {narrow(-(wn + 1)), 1},
            {narrow(wn), 0},
        });
    }

    require_interior(terms);
    const auto co = b2_coefficients(terms);
    const Wide a = co.a;
    const Wide c = co.c;
    const Wide d = co.d;
    const Wide e = co.e;

    switch (level) {
        case CascadeLevel::B1:
            return IntPolynomial({
                {narrow(wk - wn), narrow_power(n)},
                {narrow(wn), narrow_power(n - k)},
                {narrow(-wk), 0},
            });
        case CascadeLevel::B2:
            return IntPolynomial({
                {co.a, narrow_power(2 * n)},
                {co.c, narrow_power(2 * n - k)},
                {co.d, narrow_power(n)},
                {co.e, narrow_power(n - k)},
                {co.f, 0},
            });
        case CascadeLevel::B3:
            return IntPolynomial({
                {narrow(2 * wn * a), narrow_power(n + k)},
                {narrow((2 * wn - wk) * c), narrow_power(n)},
                {narrow(wn * d), narrow_power(k)},
                {narrow((wn - wk) * e), 0},
            });
        case CascadeLevel::B4:
            return IntPolynomial({
                {narrow(2 * (wn + wk) * a), narrow_power(n)},
                {narrow((2 * wn - wk) * c), narrow_power(n - k)},
                {narrow(wk * d), 0},
            });
        case CascadeLevel::B5:
            return IntPolynomial({
                {narrow(2 * wn * (wn + wk) * a), narrow_power(k)},
                {narrow((wn - wk) * (2 * wn - wk) * c), 0},
            });
        case CascadeLevel::P1:
            break;
    }
    throw DomainError("unknown helper polynomial level");
}

double cascade_eval(CascadeLevel level, GrowthFactor x, LoanTerms terms) {
    return helper_polynomial(level, terms).evaluate(x.value());
}

}  // namespace loancurve

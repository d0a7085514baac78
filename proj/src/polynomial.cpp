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

#include "loancurve/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "loancurve/error.hpp"

namespace loancurve {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw DomainError("polynomial coefficients exceed the 64-bit range");
    }
    return out;
}

std::int64_t checked_sum(std::span<const std::int64_t> values) {
    std::int64_t total = 0;
    for (auto v : values) total = checked_add(total, v);
    return total;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Monomial> terms) {
    for (const auto& t : terms) {
        if (t.power < 0) {
            throw DomainError("negative power " + std::to_string(t.power) + " in polynomial");
        }
    }
    std::sort(terms.begin(), terms.end(),
              [](const Monomial& l, const Monomial& r) { return l.power > r.power; });
    for (const auto& t : terms) {
        if (!terms_.empty() && terms_.back().power == t.power) {
            terms_.back().coefficient = checked_add(terms_.back().coefficient, t.coefficient);
        } else {
            terms_.push_back(t);
        }
    }
    std::erase_if(terms_, [](const Monomial& t) { return t.coefficient == 0; });
    if (terms_.empty()) return;

    degree_ = terms_.front().power;
    std::vector<std::int64_t> dense(static_cast<std::size_t>(degree_) + 1, 0);
    for (const auto& t : terms_) dense[static_cast<std::size_t>(t.power)] = t.coefficient;
    value_at_one_ = checked_sum(dense);

    // Synthetic division by (x - 1): q_{i-1} = c_i + c_{i+1} + ... + c_deg.
    while (dense.size() > 1 && checked_sum(dense) == 0) {
        std::vector<std::int64_t> quotient(dense.size() - 1, 0);
        std::int64_t acc = 0;
        for (std::size_t i = dense.size() - 1; i >= 1; --i) {
            acc = checked_add(acc, dense[i]);
            quotient[i - 1] = acc;
        }
        dense = std::move(quotient);
        ++multiplicity_;
    }
    cofactor_ = std::move(dense);
}

double IntPolynomial::cofactor_scaled(double x) const {
    if (cofactor_.empty()) return 0.0;
    const double t = 1.0 / x;
    double acc = static_cast<double>(cofactor_.front());
    for (std::size_t j = 1; j < cofactor_.size(); ++j) {
        acc = acc * t + static_cast<double>(cofactor_[j]);
    }
    return acc;
}

double IntPolynomial::evaluate_scaled(double x) const {
    if (cofactor_.empty()) return 0.0;
    const double q = cofactor_scaled(x);
    if (multiplicity_ == 0) return q;
    return std::pow((x - 1.0) / x, multiplicity_) * q;
}

double IntPolynomial::evaluate(double x) const {
    if (x == 1.0) return static_cast<double>(value_at_one_);
    if (cofactor_.empty()) return 0.0;
    const int cofactor_degree = static_cast<int>(cofactor_.size()) - 1;
    const double value = std::pow(x - 1.0, multiplicity_) * std::pow(x, cofactor_degree) *
                         cofactor_scaled(x);
    if (!std::isfinite(value)) {
        throw DomainError("polynomial value at x=" + std::to_string(x) +
                          " is not representable as a double");
    }
    return value;
}

}  // namespace loancurve

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

#include <stdexcept>
#include <string>

namespace loancurve {

/// Raised when an argument lies outside the domain of a kernel function.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// An inflection point was requested for a term/stop pair whose balance is
/// concave in the growth factor.
class RegimeMismatch : public DomainError {
public:
    explicit RegimeMismatch(const std::string& what) : DomainError(what) {}
};

}  // namespace loancurve

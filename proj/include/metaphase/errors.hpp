// Copyright 2026 The Metaphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace metaphase {

// Raised when an input lies outside the domain where an operation is defined
// (singular matrices, off-grid samples, degenerate quadratic forms). The CLI
// maps every subclass to exit code 3.
class NumericalDomainError : public std::runtime_error {
public:
    NumericalDomainError(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define METAPHASE_DOMAIN_ERROR(Name)                                        \
    class Name : public NumericalDomainError {                              \
    public:                                                                 \
        explicit Name(const std::string& what) : NumericalDomainError(#Name, what) {} \
    }

METAPHASE_DOMAIN_ERROR(NotSymplectic);
METAPHASE_DOMAIN_ERROR(NotFree);
METAPHASE_DOMAIN_ERROR(SingularMatrix);
METAPHASE_DOMAIN_ERROR(SingularSminusI);
METAPHASE_DOMAIN_ERROR(SingularMminusHalfJ);
METAPHASE_DOMAIN_ERROR(DegenerateMatrix);
METAPHASE_DOMAIN_ERROR(ParityMismatch);
METAPHASE_DOMAIN_ERROR(OutOfDomain);
METAPHASE_DOMAIN_ERROR(GridMismatch);
METAPHASE_DOMAIN_ERROR(TruncationError);
METAPHASE_DOMAIN_ERROR(FactorizationFailed);
METAPHASE_DOMAIN_ERROR(DegeneratePhase);
METAPHASE_DOMAIN_ERROR(SingularAngle);

#undef METAPHASE_DOMAIN_ERROR

// Shape errors are programming errors, not numerical ones.
class DimensionMismatch : public std::invalid_argument {
public:
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace metaphase

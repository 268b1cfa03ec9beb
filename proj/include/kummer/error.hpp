/*
   Copyright 2026 The kummer-ag Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef KUMMER_ERROR_HPP
#define KUMMER_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace kummer {

enum class ErrorKind {
    // gf
    NotPrime,
    NotIrreducible,
    BadModulusDegree,
    FieldTooLarge,
    DivisionByZero,
    FieldMismatch,
    OutOfRange,
    // curve
    BadParameter,
    GcdViolation,
    CharacteristicDividesM,
    DuplicateRoots,
    NotSplit,
    IndexOutOfRange,
    // rrlattice
    ArityMismatch,
    PoleAtPlace,
    // weierstrass
    BadArity,
    NonPositiveCoordinate,
    NegativeCoordinate,
    NotPureGapBox,
    EmptyRiemannRochSpace,
    // agcode
    PlaceInSupport,
    InfinityInD,
    DuplicatePlace,
    InconsistentDivisor,
    BudgetExceeded,
    InvariantViolated,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

}  // namespace kummer

#endif

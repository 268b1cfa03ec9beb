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

#include "kummer/error.hpp"

namespace kummer {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::NotIrreducible: return "NotIrreducible";
        case ErrorKind::BadModulusDegree: return "BadModulusDegree";
        case ErrorKind::FieldTooLarge: return "FieldTooLarge";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::BadParameter: return "BadParameter";
        case ErrorKind::GcdViolation: return "GcdViolation";
        case ErrorKind::CharacteristicDividesM: return "CharacteristicDividesM";
        case ErrorKind::DuplicateRoots: return "DuplicateRoots";
        case ErrorKind::NotSplit: return "NotSplit";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::ArityMismatch: return "ArityMismatch";
        case ErrorKind::PoleAtPlace: return "PoleAtPlace";
        case ErrorKind::BadArity: return "BadArity";
        case ErrorKind::NonPositiveCoordinate: return "NonPositiveCoordinate";
        case ErrorKind::NegativeCoordinate: return "NegativeCoordinate";
        case ErrorKind::NotPureGapBox: return "NotPureGapBox";
        case ErrorKind::EmptyRiemannRochSpace: return "EmptyRiemannRochSpace";
        case ErrorKind::PlaceInSupport: return "PlaceInSupport";
        case ErrorKind::InfinityInD: return "InfinityInD";
        case ErrorKind::DuplicatePlace: return "DuplicatePlace";
        case ErrorKind::InconsistentDivisor: return "InconsistentDivisor";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::InvariantViolated: return "InvariantViolated";
    }
    return "Unknown";
}

}  // namespace kummer

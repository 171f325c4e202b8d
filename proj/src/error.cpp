/*
 * Copyright (c) 2026, The denserank Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "denserank/error.hpp"

namespace denserank {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyTier: return "EmptyTier";
    case ErrorKind::DuplicateAlternative: return "DuplicateAlternative";
    case ErrorKind::EmptyOrder: return "EmptyOrder";
    case ErrorKind::NotComplete: return "NotComplete";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::UnknownAlternative: return "UnknownAlternative";
    case ErrorKind::NotASubset: return "NotASubset";
    case ErrorKind::NotABijection: return "NotABijection";
    case ErrorKind::SingleTier: return "SingleTier";
    case ErrorKind::CloneAlreadyPresent: return "CloneAlreadyPresent";
    case ErrorKind::SourceTierWouldVanish: return "SourceTierWouldVanish";
    case ErrorKind::TargetTierAbsent: return "TargetTierAbsent";
    case ErrorKind::TargetIsSourceTier: return "TargetIsSourceTier";
    case ErrorKind::EmptyGround: return "EmptyGround";
    case ErrorKind::NotLinear: return "NotLinear";
    case ErrorKind::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorKind::NotIndexable: return "NotIndexable";
    case ErrorKind::UnknownMethod: return "UnknownMethod";
    case ErrorKind::InvalidBound: return "InvalidBound";
    case ErrorKind::MatrixMismatch: return "MatrixMismatch";
    case ErrorKind::ImplicationViolated: return "ImplicationViolated";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::EmptyInput: return "EmptyInput";
  }
  return "Error";
}

}  // namespace denserank

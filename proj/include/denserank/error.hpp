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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace denserank {

enum class ErrorKind {
  // core order
  EmptyTier,
  DuplicateAlternative,
  EmptyOrder,
  NotComplete,
  NotTransitive,
  UnknownAlternative,
  NotASubset,
  NotABijection,
  SingleTier,
  CloneAlreadyPresent,
  SourceTierWouldVanish,
  TargetTierAbsent,
  TargetIsSourceTier,
  EmptyGround,
  // operators
  NotLinear,
  NegativeCoefficient,
  NotIndexable,
  UnknownMethod,
  // engine
  InvalidBound,
  MatrixMismatch,
  ImplicationViolated,
  // ingestion
  ParseError,
  DuplicateId,
  EmptyInput,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace denserank

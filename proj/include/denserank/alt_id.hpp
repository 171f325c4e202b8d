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

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

namespace denserank {

/// Label of an alternative.
///
/// Labels compare in natural order: runs of decimal digits compare by numeric
/// value, everything else byte-wise, so `x2 < x10`. Labels that tie under
/// natural order (`x01` vs `x1`) fall back to plain string comparison, which
/// keeps the order total and consistent with equality.
class AltId {
 public:
  AltId() = default;
  explicit AltId(std::string label) : label_(std::move(label)) {}
  explicit AltId(const char* label) : label_(label) {}

  const std::string& label() const noexcept { return label_; }

  /// Trailing decimal number of the label (`x7` -> 7), if any.
  std::optional<std::uint64_t> list_number() const;

  /// True for labels in the namespace reserved for generated clones.
  bool is_reserved() const noexcept { return !label_.empty() && label_.front() == kReservedPrefix; }

  friend bool operator==(const AltId& a, const AltId& b) noexcept { return a.label_ == b.label_; }
  friend std::strong_ordering operator<=>(const AltId& a, const AltId& b) noexcept;

  static constexpr char kReservedPrefix = '~';

 private:
  std::string label_;
};

inline std::ostream& operator<<(std::ostream& os, const AltId& id) { return os << id.label(); }

}  // namespace denserank

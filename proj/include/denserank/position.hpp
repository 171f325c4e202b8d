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

#include <cstdint>
#include <map>
#include <string>

#include <boost/rational.hpp>

#include "denserank/alt_id.hpp"

namespace denserank {

/// Exact rational position. Halves from the fractional rank and quotients
/// from the counterexample operators are represented without rounding.
using Position = boost::rational<std::int64_t>;

/// `3` or `3/2`.
std::string format_position(const Position& p);

/// Parses `3`, `-3`, or `3/2`. Throws Error(ParseError).
Position parse_position(const std::string& text);

/// Total map from the alternatives of an order to their positions.
class PositionAssignment {
 public:
  using Map = std::map<AltId, Position>;

  PositionAssignment() = default;
  explicit PositionAssignment(Map positions) : positions_(std::move(positions)) {}

  const Position& at(const AltId& a) const;
  void set(const AltId& a, Position p) { positions_[a] = p; }
  std::size_t size() const noexcept { return positions_.size(); }
  bool contains(const AltId& a) const { return positions_.contains(a); }

  Map::const_iterator begin() const noexcept { return positions_.begin(); }
  Map::const_iterator end() const noexcept { return positions_.end(); }

  friend bool operator==(const PositionAssignment&, const PositionAssignment&) = default;

 private:
  Map positions_;
};

std::string to_string(const PositionAssignment& positions);

}  // namespace denserank

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

#include "denserank/position.hpp"

#include <charconv>
#include <sstream>

#include "denserank/error.hpp"

namespace denserank {

std::string format_position(const Position& p) {
  if (p.denominator() == 1) return std::to_string(p.numerator());
  return std::to_string(p.numerator()) + "/" + std::to_string(p.denominator());
}

namespace {

std::int64_t parse_int(std::string_view text, const std::string& whole) {
  std::int64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw Error(ErrorKind::ParseError, "not an exact fraction: '" + whole + "'");
  }
  return value;
}

}  // namespace

Position parse_position(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Position(parse_int(text, text));
  const auto num = parse_int(std::string_view(text).substr(0, slash), text);
  const auto den = parse_int(std::string_view(text).substr(slash + 1), text);
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
  return Position(num, den);
}

const Position& PositionAssignment::at(const AltId& a) const {
  const auto it = positions_.find(a);
  if (it == positions_.end()) {
    throw Error(ErrorKind::UnknownAlternative, "no position for '" + a.label() + "'");
  }
  return it->second;
}

std::string to_string(const PositionAssignment& positions) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [a, p] : positions) {
    os << (first ? "" : ", ") << a << ':' << format_position(p);
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace denserank

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

#include "denserank/alt_id.hpp"

#include <cctype>
#include <limits>
#include <string_view>

namespace denserank {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::string_view strip_leading_zeros(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  return first == std::string_view::npos ? digits.substr(digits.size()) : digits.substr(first);
}

// Compares two digit runs by numeric value without converting them.
std::strong_ordering compare_numeric(std::string_view a, std::string_view b) {
  a = strip_leading_zeros(a);
  b = strip_leading_zeros(b);
  if (a.size() != b.size()) return a.size() <=> b.size();
  return a.compare(b) <=> 0;
}

}  // namespace

std::optional<std::uint64_t> AltId::list_number() const {
  std::size_t begin = label_.size();
  while (begin > 0 && is_digit(label_[begin - 1])) --begin;
  if (begin == label_.size()) return std::nullopt;

  std::uint64_t value = 0;
  for (std::size_t i = begin; i < label_.size(); ++i) {
    const auto digit = static_cast<std::uint64_t>(label_[i] - '0');
    if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) return std::nullopt;
    value = value * 10 + digit;
  }
  return value;
}

std::strong_ordering operator<=>(const AltId& lhs, const AltId& rhs) noexcept {
  const std::string_view a = lhs.label_;
  const std::string_view b = rhs.label_;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ie = i;
      std::size_t je = j;
      while (ie < a.size() && is_digit(a[ie])) ++ie;
      while (je < b.size() && is_digit(b[je])) ++je;
      if (auto c = compare_numeric(a.substr(i, ie - i), b.substr(j, je - j)); c != 0) return c;
      i = ie;
      j = je;
      continue;
    }
    if (a[i] != b[j]) {
      return static_cast<unsigned char>(a[i]) <=> static_cast<unsigned char>(b[j]);
    }
    ++i;
    ++j;
  }
  if (auto c = (a.size() - i) <=> (b.size() - j); c != 0) return c;
  return a.compare(b) <=> 0;
}

}  // namespace denserank

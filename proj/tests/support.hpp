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

#include <functional>
#include <vector>

#include "denserank/enumerate.hpp"
#include "denserank/weak_order.hpp"
#include "oracles.hpp"

namespace denserank::test {

inline WeakOrder make_order(const oracle::Tiers& tiers) {
  std::vector<std::vector<AltId>> converted;
  for (const auto& tier : tiers) {
    auto& out = converted.emplace_back();
    for (const auto& a : tier) out.emplace_back(a);
  }
  return WeakOrder::from_tiers(std::move(converted));
}

inline oracle::Tiers labels_of(const WeakOrder& order) {
  oracle::Tiers out;
  for (const auto& tier : order.tiers()) {
    auto& t = out.emplace_back();
    for (const auto& a : tier) t.push_back(a.label());
  }
  return out;
}

/// Every weak order on {x1..xn} for n = 1..max_n.
inline void for_all_orders(std::size_t max_n, const std::function<void(const WeakOrder&)>& fn) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    for_each_weak_order(standard_ground(n), [&](const WeakOrder& r) {
      fn(r);
      return true;
    });
  }
}

inline AltId id(const char* label) { return AltId(label); }

}  // namespace denserank::test

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

#include "denserank/enumerate.hpp"

#include <algorithm>
#include <string>

#include "denserank/error.hpp"

namespace denserank {

namespace {

class PartitionWalker {
 public:
  PartitionWalker(const AltSet& ground, const OrderVisitor& visit)
      : visit_(visit), remaining_(ground.begin(), ground.end()) {}

  std::uint64_t run() {
    descend();
    return visited_;
  }

 private:
  // Returns false once the visitor asked to stop.
  bool descend() {
    if (remaining_.empty()) {
      ++visited_;
      return visit_(WeakOrder::from_tiers(prefix_));
    }
    const std::vector<AltId> pool = remaining_;
    const std::uint64_t limit = std::uint64_t{1} << pool.size();
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
      std::vector<AltId> top;
      remaining_.clear();
      for (std::size_t i = 0; i < pool.size(); ++i) {
        ((mask >> i) & 1U ? top : remaining_).push_back(pool[i]);
      }
      prefix_.push_back(std::move(top));
      const bool keep_going = descend();
      prefix_.pop_back();
      if (!keep_going) return false;
    }
    remaining_ = pool;
    return true;
  }

  const OrderVisitor& visit_;
  std::vector<AltId> remaining_;
  std::vector<std::vector<AltId>> prefix_;
  std::uint64_t visited_ = 0;
};

}  // namespace

std::uint64_t for_each_weak_order(const AltSet& ground, const OrderVisitor& visit) {
  if (ground.empty()) throw Error(ErrorKind::EmptyGround, "cannot enumerate orders on an empty set");
  if (ground.size() > 16) throw Error(ErrorKind::InvalidBound, "ground set too large to enumerate");
  return PartitionWalker(ground, visit).run();
}

std::uint64_t for_each_linear_order(const AltSet& ground, const OrderVisitor& visit) {
  if (ground.empty()) throw Error(ErrorKind::EmptyGround, "cannot enumerate orders on an empty set");
  std::vector<AltId> perm(ground.begin(), ground.end());
  std::uint64_t visited = 0;
  do {
    std::vector<std::vector<AltId>> tiers;
    tiers.reserve(perm.size());
    for (const auto& a : perm) tiers.push_back({a});
    ++visited;
    if (!visit(WeakOrder::from_tiers(std::move(tiers)))) break;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return visited;
}

std::vector<WeakOrder> enumerate_weak_orders(const AltSet& ground) {
  std::vector<WeakOrder> out;
  for_each_weak_order(ground, [&](const WeakOrder& r) {
    out.push_back(r);
    return true;
  });
  return out;
}

std::vector<WeakOrder> enumerate_linear_orders(const AltSet& ground) {
  std::vector<WeakOrder> out;
  for_each_linear_order(ground, [&](const WeakOrder& r) {
    out.push_back(r);
    return true;
  });
  return out;
}

AltSet standard_ground(std::size_t n) {
  AltSet ground;
  for (std::size_t i = 1; i <= n; ++i) ground.emplace("x" + std::to_string(i));
  return ground;
}

}  // namespace denserank

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
#include <functional>
#include <vector>

#include "denserank/weak_order.hpp"

namespace denserank {

/// Visitor for enumeration streams; return false to stop early.
using OrderVisitor = std::function<bool(const WeakOrder&)>;

/// Streams every ordered set partition of `ground` exactly once.
///
/// The top tier is chosen first among the non-empty subsets of the remaining
/// alternatives, in subset-mask order over labels (lowest label = lowest bit),
/// then the rest is enumerated recursively. The order is deterministic.
/// Returns the number of orders visited. Throws EmptyGround.
std::uint64_t for_each_weak_order(const AltSet& ground, const OrderVisitor& visit);

/// Streams all linear orders on `ground` in lexicographic permutation order.
std::uint64_t for_each_linear_order(const AltSet& ground, const OrderVisitor& visit);

std::vector<WeakOrder> enumerate_weak_orders(const AltSet& ground);
std::vector<WeakOrder> enumerate_linear_orders(const AltSet& ground);

/// The ground set {x1, ..., xn} used by the verification universe.
AltSet standard_ground(std::size_t n);

}  // namespace denserank

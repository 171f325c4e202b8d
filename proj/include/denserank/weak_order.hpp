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

#include <cstddef>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "denserank/alt_id.hpp"

namespace denserank {

using Tier = std::vector<AltId>;  // sorted, non-empty
using AltSet = std::set<AltId>;

/// Realized dominated-counts of a weak order, ascending, with tier sizes.
/// `entries.front().dominated == 0` always (the bottom tier).
struct TierSignature {
  struct Entry {
    std::size_t dominated;  // p: number of alternatives strictly below the tier
    std::size_t size;       // #T_p
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> entries;

  std::size_t tier_count() const noexcept { return entries.size(); }
  bool contains(std::size_t p) const noexcept;
  friend bool operator==(const TierSignature&, const TierSignature&) = default;
};

/// A complete preorder on a finite set, stored as its ordered indifference
/// classes (best tier first). Immutable once constructed; every constructor
/// path validates that tiers are non-empty and pairwise disjoint.
class WeakOrder {
 public:
  /// Validating constructor. Tier contents are treated as sets.
  static WeakOrder from_tiers(std::vector<std::vector<AltId>> tiers);
  static WeakOrder from_tiers(std::initializer_list<std::initializer_list<const char*>> tiers);

  /// Builds the order from a weak preference relation given as `(a, b)` pairs
  /// meaning "a is at least as good as b". Reflexive pairs are required.
  static WeakOrder from_pairs(const AltSet& ground, const std::set<std::pair<AltId, AltId>>& weak_prefs);

  const std::vector<Tier>& tiers() const noexcept { return tiers_; }
  std::size_t tier_count() const noexcept { return tiers_.size(); }
  std::size_t size() const noexcept { return index_.size(); }
  bool is_linear() const noexcept { return tiers_.size() == index_.size(); }

  /// Alternatives in label order.
  AltSet ground() const;
  bool contains(const AltId& a) const { return index_.contains(a); }

  /// Index of the tier holding `a` (0 = top). Throws UnknownAlternative.
  std::size_t tier_of(const AltId& a) const;

  bool weakly_prefers(const AltId& a, const AltId& b) const { return tier_of(a) <= tier_of(b); }
  bool strictly_prefers(const AltId& a, const AltId& b) const { return tier_of(a) < tier_of(b); }
  bool indifferent(const AltId& a, const AltId& b) const { return tier_of(a) == tier_of(b); }

  friend bool operator==(const WeakOrder& a, const WeakOrder& b) { return a.tiers_ == b.tiers_; }

 private:
  WeakOrder() = default;
  void index_tiers();

  std::vector<Tier> tiers_;
  std::map<AltId, std::size_t> index_;
};

std::string to_string(const WeakOrder& order);
inline std::ostream& operator<<(std::ostream& os, const WeakOrder& order) { return os << to_string(order); }

/// #{b : a P b}, the number of alternatives strictly below `a`.
std::size_t dominated_count(const WeakOrder& order, const AltId& a);

TierSignature tier_signature(const WeakOrder& order);

/// Keeps the non-empty intersections of each tier with `subset`, in order.
WeakOrder restrict(const WeakOrder& order, const AltSet& subset);

/// Renames every alternative; `sigma` must be a bijection on the ground set.
WeakOrder relabel(const WeakOrder& order, const std::map<AltId, AltId>& sigma);

/// Drops the bottom tier. Throws SingleTier when only one tier exists.
WeakOrder truncate_bottom(const WeakOrder& order);

/// Adds `clone` to the tier of `pattern`.
WeakOrder duplicate(const WeakOrder& order, const AltId& pattern, const AltId& clone);

/// Moves `mover` into the existing tier `target_tier`. The source tier must
/// keep at least one other alternative, so the tier count never changes.
WeakOrder ud_move(const WeakOrder& order, const AltId& mover, std::size_t target_tier);

/// One alternative per tier (the smallest label), top to bottom.
std::vector<AltId> maximal_chain(const WeakOrder& order);

/// A label from the reserved clone namespace that is absent from `order`.
/// Its list number is one past the largest list number in the ground set.
AltId fresh_clone_id(const WeakOrder& order);

}  // namespace denserank

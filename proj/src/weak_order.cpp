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

#include "denserank/weak_order.hpp"

#include <algorithm>
#include <sstream>

#include "denserank/error.hpp"

namespace denserank {

bool TierSignature::contains(std::size_t p) const noexcept {
  return std::any_of(entries.begin(), entries.end(), [p](const Entry& e) { return e.dominated == p; });
}

void WeakOrder::index_tiers() {
  index_.clear();
  for (std::size_t t = 0; t < tiers_.size(); ++t) {
    for (const auto& a : tiers_[t]) index_.emplace(a, t);
  }
}

WeakOrder WeakOrder::from_tiers(std::vector<std::vector<AltId>> tiers) {
  if (tiers.empty()) throw Error(ErrorKind::EmptyOrder, "a weak order needs at least one tier");

  WeakOrder order;
  order.tiers_.reserve(tiers.size());
  for (std::size_t t = 0; t < tiers.size(); ++t) {
    auto& tier = tiers[t];
    if (tier.empty()) throw Error(ErrorKind::EmptyTier, "tier " + std::to_string(t) + " is empty");
    std::sort(tier.begin(), tier.end());
    for (const auto& a : tier) {
      if (!order.index_.emplace(a, t).second) {
        throw Error(ErrorKind::DuplicateAlternative, "alternative '" + a.label() + "' appears more than once");
      }
    }
    order.tiers_.push_back(std::move(tier));
  }
  return order;
}

WeakOrder WeakOrder::from_tiers(std::initializer_list<std::initializer_list<const char*>> tiers) {
  std::vector<std::vector<AltId>> converted;
  converted.reserve(tiers.size());
  for (const auto& tier : tiers) {
    auto& out = converted.emplace_back();
    for (const char* label : tier) out.emplace_back(label);
  }
  return from_tiers(std::move(converted));
}

WeakOrder WeakOrder::from_pairs(const AltSet& ground, const std::set<std::pair<AltId, AltId>>& weak_prefs) {
  if (ground.empty()) throw Error(ErrorKind::EmptyOrder, "empty ground set");
  for (const auto& [a, b] : weak_prefs) {
    for (const auto* x : {&a, &b}) {
      if (!ground.contains(*x)) {
        throw Error(ErrorKind::UnknownAlternative, "pair mentions '" + x->label() + "' outside the ground set");
      }
    }
  }
  auto related = [&](const AltId& a, const AltId& b) { return weak_prefs.contains({a, b}); };

  for (const auto& a : ground) {
    for (const auto& b : ground) {
      if (!related(a, b) && !related(b, a)) {
        throw Error(ErrorKind::NotComplete,
                    "neither " + a.label() + " R " + b.label() + " nor " + b.label() + " R " + a.label());
      }
    }
  }
  for (const auto& a : ground) {
    for (const auto& b : ground) {
      if (!related(a, b)) continue;
      for (const auto& c : ground) {
        if (related(b, c) && !related(a, c)) {
          throw Error(ErrorKind::NotTransitive, a.label() + " R " + b.label() + " and " + b.label() + " R " +
                                                    c.label() + " but not " + a.label() + " R " + c.label());
        }
      }
    }
  }

  // Alternatives sharing a dominated-count are indifferent; larger counts sit higher.
  std::map<std::size_t, std::vector<AltId>, std::greater<>> by_count;
  for (const auto& a : ground) {
    const auto dominated = static_cast<std::size_t>(std::count_if(
        ground.begin(), ground.end(), [&](const AltId& b) { return related(a, b) && !related(b, a); }));
    by_count[dominated].push_back(a);
  }
  std::vector<std::vector<AltId>> tiers;
  for (auto& [count, tier] : by_count) tiers.push_back(std::move(tier));
  return from_tiers(std::move(tiers));
}

AltSet WeakOrder::ground() const {
  AltSet out;
  for (const auto& [a, t] : index_) out.insert(out.end(), a);
  return out;
}

std::size_t WeakOrder::tier_of(const AltId& a) const {
  const auto it = index_.find(a);
  if (it == index_.end()) throw Error(ErrorKind::UnknownAlternative, "'" + a.label() + "' is not in the order");
  return it->second;
}

std::string to_string(const WeakOrder& order) {
  std::ostringstream os;
  os << '[';
  for (std::size_t t = 0; t < order.tier_count(); ++t) {
    if (t) os << ", ";
    os << '{';
    const auto& tier = order.tiers()[t];
    for (std::size_t i = 0; i < tier.size(); ++i) os << (i ? "," : "") << tier[i];
    os << '}';
  }
  os << ']';
  return os.str();
}

std::size_t dominated_count(const WeakOrder& order, const AltId& a) {
  const auto& tiers = order.tiers();
  std::size_t below = 0;
  for (std::size_t t = order.tier_of(a) + 1; t < tiers.size(); ++t) below += tiers[t].size();
  return below;
}

TierSignature tier_signature(const WeakOrder& order) {
  TierSignature sig;
  std::size_t below = 0;
  for (auto it = order.tiers().rbegin(); it != order.tiers().rend(); ++it) {
    sig.entries.push_back({below, it->size()});
    below += it->size();
  }
  return sig;
}

WeakOrder restrict(const WeakOrder& order, const AltSet& subset) {
  for (const auto& a : subset) {
    if (!order.contains(a)) throw Error(ErrorKind::NotASubset, "'" + a.label() + "' is not in the order");
  }
  std::vector<std::vector<AltId>> tiers;
  for (const auto& tier : order.tiers()) {
    std::vector<AltId> kept;
    std::copy_if(tier.begin(), tier.end(), std::back_inserter(kept),
                 [&](const AltId& a) { return subset.contains(a); });
    if (!kept.empty()) tiers.push_back(std::move(kept));
  }
  return WeakOrder::from_tiers(std::move(tiers));
}

WeakOrder relabel(const WeakOrder& order, const std::map<AltId, AltId>& sigma) {
  if (sigma.size() != order.size()) {
    throw Error(ErrorKind::NotABijection, "mapping covers " + std::to_string(sigma.size()) + " labels, order has " +
                                              std::to_string(order.size()));
  }
  AltSet image;
  for (const auto& [from, to] : sigma) {
    if (!order.contains(from)) throw Error(ErrorKind::NotABijection, "'" + from.label() + "' is not in the order");
    if (!order.contains(to)) throw Error(ErrorKind::NotABijection, "'" + to.label() + "' is not in the order");
    if (!image.insert(to).second) throw Error(ErrorKind::NotABijection, "'" + to.label() + "' is hit twice");
  }
  std::vector<std::vector<AltId>> tiers;
  for (const auto& tier : order.tiers()) {
    auto& out = tiers.emplace_back();
    for (const auto& a : tier) out.push_back(sigma.at(a));
  }
  return WeakOrder::from_tiers(std::move(tiers));
}

WeakOrder truncate_bottom(const WeakOrder& order) {
  if (order.tier_count() < 2) throw Error(ErrorKind::SingleTier, "cannot drop the only tier");
  std::vector<std::vector<AltId>> tiers(order.tiers().begin(), order.tiers().end() - 1);
  return WeakOrder::from_tiers(std::move(tiers));
}

WeakOrder duplicate(const WeakOrder& order, const AltId& pattern, const AltId& clone) {
  const auto t = order.tier_of(pattern);
  if (order.contains(clone)) {
    throw Error(ErrorKind::CloneAlreadyPresent, "'" + clone.label() + "' is already in the order");
  }
  std::vector<std::vector<AltId>> tiers(order.tiers().begin(), order.tiers().end());
  tiers[t].push_back(clone);
  return WeakOrder::from_tiers(std::move(tiers));
}

WeakOrder ud_move(const WeakOrder& order, const AltId& mover, std::size_t target_tier) {
  const auto source = order.tier_of(mover);
  if (order.tiers()[source].size() < 2) {
    throw Error(ErrorKind::SourceTierWouldVanish, "'" + mover.label() + "' is alone in its tier");
  }
  if (target_tier >= order.tier_count()) {
    throw Error(ErrorKind::TargetTierAbsent, "no tier " + std::to_string(target_tier));
  }
  if (target_tier == source) {
    throw Error(ErrorKind::TargetIsSourceTier, "'" + mover.label() + "' already sits in tier " + std::to_string(source));
  }
  std::vector<std::vector<AltId>> tiers(order.tiers().begin(), order.tiers().end());
  std::erase(tiers[source], mover);
  tiers[target_tier].push_back(mover);
  return WeakOrder::from_tiers(std::move(tiers));
}

std::vector<AltId> maximal_chain(const WeakOrder& order) {
  std::vector<AltId> chain;
  chain.reserve(order.tier_count());
  for (const auto& tier : order.tiers()) chain.push_back(tier.front());
  return chain;
}

AltId fresh_clone_id(const WeakOrder& order) {
  std::uint64_t next = order.size();
  for (const auto& tier : order.tiers()) {
    for (const auto& a : tier) {
      if (auto number = a.list_number()) next = std::max(next, *number);
    }
  }
  for (++next;; ++next) {
    AltId candidate(std::string(1, AltId::kReservedPrefix) + "x" + std::to_string(next));
    if (!order.contains(candidate)) return candidate;
  }
}

}  // namespace denserank

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

// Exhaustive properties of the rank operators over every weak order with at
// most five alternatives.

#include <gtest/gtest.h>

#include <future>
#include <set>

#include "denserank/operators.hpp"
#include "support.hpp"

using namespace denserank;
using denserank::test::for_all_orders;
using denserank::test::labels_of;

namespace {

constexpr std::size_t kMaxN = 5;

using RankFn = PositionAssignment (*)(const WeakOrder&);

const std::vector<std::pair<const char*, RankFn>>& tie_ranks() {
  static const std::vector<std::pair<const char*, RankFn>> fns = {
      {"dense", dense}, {"standard", standard}, {"modified", modified}, {"fractional", fractional}};
  return fns;
}

std::vector<std::size_t> tier_sizes(const WeakOrder& r) {
  std::vector<std::size_t> sizes;
  for (const auto& t : r.tiers()) sizes.push_back(t.size());
  return sizes;
}

std::set<Position> value_set(const PositionAssignment& p) {
  std::set<Position> out;
  for (const auto& [a, v] : p) out.insert(v);
  return out;
}

// Alternatives whose position differs between two assignments.
AltSet changed(const PositionAssignment& before, const PositionAssignment& after, const AltSet& over) {
  AltSet out;
  for (const auto& a : over) {
    if (before.at(a) != after.at(a)) out.insert(a);
  }
  return out;
}

}  // namespace

TEST(LinearOrders, AllRanksAgreeWithSequential) {
  for (std::size_t n = 1; n <= kMaxN; ++n) {
    for (const auto& r : enumerate_linear_orders(standard_ground(n))) {
      const auto seq = sequential(r);
      EXPECT_EQ(value_set(seq).size(), n);
      EXPECT_EQ(*value_set(seq).begin(), Position(1));
      EXPECT_EQ(*value_set(seq).rbegin(), Position(static_cast<std::int64_t>(n)));
      for (const auto& [name, fn] : tie_ranks()) EXPECT_EQ(fn(r), seq) << name << " on " << to_string(r);
      EXPECT_EQ(dense_via_chain(r), seq);
    }
  }
}

TEST(AllOrders, IndifferentAlternativesShareAPosition) {
  for_all_orders(kMaxN, [](const WeakOrder& r) {
    for (const auto& [name, fn] : tie_ranks()) {
      const auto p = fn(r);
      for (const auto& tier : r.tiers()) {
        for (const auto& a : tier) EXPECT_EQ(p.at(a), p.at(tier.front())) << name << " on " << to_string(r);
      }
    }
  });
}

TEST(AllOrders, PointwiseOrderingAndMidrankIdentity) {
  for_all_orders(kMaxN, [](const WeakOrder& r) {
    const auto d = dense(r);
    const auto s = standard(r);
    const auto f = fractional(r);
    const auto m = modified(r);
    for (const auto& a : r.ground()) {
      EXPECT_LE(d.at(a), s.at(a));
      EXPECT_LE(s.at(a), f.at(a));
      EXPECT_LE(f.at(a), m.at(a));
      EXPECT_EQ(f.at(a), (s.at(a) + m.at(a)) / 2);
    }
  });
}

TEST(AllOrders, MonotoneInPreference) {
  for_all_orders(kMaxN, [](const WeakOrder& r) {
    for (const auto& [name, fn] : tie_ranks()) {
      const auto p = fn(r);
      for (const auto& a : r.ground()) {
        for (const auto& b : r.ground()) {
          EXPECT_EQ(r.weakly_prefers(a, b), p.at(a) <= p.at(b)) << name << " on " << to_string(r);
        }
      }
    }
  });
}

TEST(AllOrders, DenseMatchesChainAndRelationOracle) {
  std::size_t orders = 0;
  for_all_orders(kMaxN, [&](const WeakOrder& r) {
    ++orders;
    const auto d = dense(r);
    EXPECT_EQ(d, dense_via_chain(r)) << to_string(r);
    const oracle::Relation rel(labels_of(r));
    for (const auto& a : r.ground()) EXPECT_EQ(d.at(a), rel.dense(a.label()));
  });
  EXPECT_EQ(orders, 1U + 3U + 13U + 75U + 541U);
}

TEST(AllOrders, TieRanksMatchRelationOracle) {
  for_all_orders(kMaxN, [](const WeakOrder& r) {
    const oracle::Relation rel(labels_of(r));
    const auto s = standard(r);
    const auto m = modified(r);
    const auto f = fractional(r);
    for (const auto& a : r.ground()) {
      EXPECT_EQ(s.at(a), rel.standard(a.label()));
      EXPECT_EQ(m.at(a), rel.modified(a.label()));
      EXPECT_EQ(f.at(a), rel.fractional(a.label()));
    }
  });
}

TEST(AllOrders, DenseRangeHasNoGaps) {
  for_all_orders(kMaxN, [](const WeakOrder& r) {
    std::set<Position> want;
    for (std::size_t k = 1; k <= r.tier_count(); ++k) want.insert(Position(static_cast<std::int64_t>(k)));
    EXPECT_EQ(value_set(dense(r)), want);
  });
}

// Knowing only which positions occur (and n), the tie-breaking ranks reveal
// the tier sizes; the dense rank reveals only the number of tiers.
TEST(Reconstruction, ValueSetsDetermineTierSizes) {
  for (std::size_t n = 1; n <= kMaxN; ++n) {
    for (const auto& [name, fn] : tie_ranks()) {
      std::map<std::set<Position>, std::vector<std::size_t>> seen;
      std::map<std::set<Position>, std::size_t> tier_counts;
      bool ambiguous = false;
      for (const auto& r : enumerate_weak_orders(standard_ground(n))) {
        const auto key = value_set(fn(r));
        const auto [it, inserted] = seen.emplace(key, tier_sizes(r));
        if (!inserted && it->second != tier_sizes(r)) ambiguous = true;
        const auto [ct, fresh] = tier_counts.emplace(key, r.tier_count());
        EXPECT_EQ(ct->second, r.tier_count()) << name;
      }
      if (std::string_view(name) == "dense") {
        EXPECT_EQ(ambiguous, n >= 3) << "n=" << n;
      } else {
        EXPECT_FALSE(ambiguous) << name << " n=" << n;
      }
    }
  }
  const auto a = WeakOrder::from_tiers({{"x1", "x2"}, {"x3"}});
  const auto b = WeakOrder::from_tiers({{"x1"}, {"x2", "x3"}});
  EXPECT_EQ(value_set(dense(a)), value_set(dense(b)));
  EXPECT_NE(tier_sizes(a), tier_sizes(b));
  EXPECT_NE(value_set(standard(a)), value_set(standard(b)));
  EXPECT_NE(value_set(modified(a)), value_set(modified(b)));
  EXPECT_NE(value_set(fractional(a)), value_set(fractional(b)));
}

// Which alternatives move when a clone joins tier t.
TEST(ShiftPatterns, Duplication) {
  for_all_orders(4, [](const WeakOrder& r) {
    const auto clone = fresh_clone_id(r);
    const auto ground = r.ground();
    for (const auto& pattern : ground) {
      const auto d = duplicate(r, pattern, clone);
      const auto t = r.tier_of(pattern);
      AltSet below;
      AltSet same_or_below;
      for (const auto& a : ground) {
        if (r.tier_of(a) > t) below.insert(a);
        if (r.tier_of(a) >= t) same_or_below.insert(a);
      }
      EXPECT_EQ(changed(standard(r), standard(d), ground), below);
      EXPECT_EQ(changed(modified(r), modified(d), ground), same_or_below);
      EXPECT_EQ(changed(fractional(r), fractional(d), ground), same_or_below);
      EXPECT_TRUE(changed(dense(r), dense(d), ground).empty());
    }
  });
}

// Moving between tiers k < l (either direction): fractional shifts tiers
// k..l, standard k+1..l, modified k..l-1; dense shifts nothing.
TEST(ShiftPatterns, UdMoves) {
  for_all_orders(kMaxN, [](const WeakOrder& r) {
    for (std::size_t s = 0; s < r.tier_count(); ++s) {
      if (r.tiers()[s].size() < 2) continue;
      for (const auto& mover : r.tiers()[s]) {
        for (std::size_t t = 0; t < r.tier_count(); ++t) {
          if (t == s) continue;
          const auto moved = ud_move(r, mover, t);
          AltSet others = r.ground();
          others.erase(mover);
          const auto k = std::min(s, t);
          const auto l = std::max(s, t);
          AltSet frac_band;
          AltSet std_band;
          AltSet mod_band;
          for (const auto& a : others) {
            const auto tier = r.tier_of(a);
            if (tier >= k && tier <= l) frac_band.insert(a);
            if (tier >= k + 1 && tier <= l) std_band.insert(a);
            if (tier >= k && tier + 1 <= l) mod_band.insert(a);
          }
          EXPECT_EQ(changed(fractional(r), fractional(moved), others), frac_band);
          EXPECT_EQ(changed(standard(r), standard(moved), others), std_band);
          EXPECT_EQ(changed(modified(r), modified(moved), others), mod_band);
          EXPECT_TRUE(changed(dense(r), dense(moved), others).empty());
        }
      }
    }
  });
}

TEST(Affine, IdentityAndConstantInstances) {
  const auto identity = make_affine_operator({Position(1), Position(0)});
  const auto constant = make_affine_operator({Position(0), Position(5)});
  for_all_orders(kMaxN, [&](const WeakOrder& r) {
    EXPECT_EQ(identity(r), dense(r));
    for (const auto& [a, p] : constant(r)) EXPECT_EQ(p, Position(5));
  });
}

TEST(Operators, DeterministicAndThreadSafe) {
  const auto orders = enumerate_weak_orders(standard_ground(4));
  const auto evaluate_all = [&orders] {
    std::vector<PositionAssignment> out;
    for (const auto& op : registered_operators()) {
      for (const auto& r : orders) {
        if (op.accepts(r)) out.push_back(op(r));
      }
    }
    return out;
  };
  const auto reference = evaluate_all();
  std::vector<std::future<std::vector<PositionAssignment>>> futures;
  for (int i = 0; i < 4; ++i) futures.push_back(std::async(std::launch::async, evaluate_all));
  for (auto& f : futures) EXPECT_EQ(f.get(), reference);
}

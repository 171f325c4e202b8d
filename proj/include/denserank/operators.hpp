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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "denserank/position.hpp"
#include "denserank/weak_order.hpp"

namespace denserank {

// ----------------------------------------------------------------------
// Principal rank operators

/// 1..n down a linear order. Throws NotLinear on orders with ties.
PositionAssignment sequential(const WeakOrder& order);

/// One plus the number of realized dominated-counts above the alternative's.
/// Values fill {1, ..., #T} without gaps.
PositionAssignment dense(const WeakOrder& order);

/// Dense rank recomputed from a maximal chain: chain members get 1..#T and
/// everything indifferent to a chain member inherits its value.
PositionAssignment dense_via_chain(const WeakOrder& order);

/// 1 + #{b : b P a}, the best rank a tie covers ("1-1-3").
PositionAssignment standard(const WeakOrder& order);

/// #{b : b R a}, the worst rank a tie covers ("2-2-3").
PositionAssignment modified(const WeakOrder& order);

/// Mean of the ranks a tie covers ("1.5-1.5-3").
PositionAssignment fractional(const WeakOrder& order);

// ----------------------------------------------------------------------
// Counterexample operators. Each violates exactly the axioms it was built
// to violate; the engine uses them to show the dense-rank axioms are
// independent.

enum class CounterexampleKind {
  quotient,              // dense / size of own tier
  affine,                // a * dense + b, a, b >= 0
  plus_n,                // dense + n off the linear domain, dense on it
  list_index,            // the label's list number, ignoring preferences
  dense_over_tiercount,  // dense / #T
};

struct AffineCoefficients {
  Position a{2};
  Position b{1};
  friend bool operator==(const AffineCoefficients&, const AffineCoefficients&) = default;
};

/// Throws NegativeCoefficient for affine with a < 0 or b < 0, and
/// NotIndexable for list-index on a label without a trailing number.
PositionAssignment counterexample_operator(CounterexampleKind kind, const WeakOrder& order,
                                           const AffineCoefficients& coefficients = {});

// ----------------------------------------------------------------------
// Registry

enum class Domain { all_weak_orders, linear_only };

/// A named, pure map from weak orders to positions.
class PositionOperator {
 public:
  using Fn = std::function<PositionAssignment(const WeakOrder&)>;

  PositionOperator(std::string name, Domain domain, Fn fn, std::optional<AffineCoefficients> params = std::nullopt)
      : name_(std::move(name)), domain_(domain), fn_(std::move(fn)), params_(params) {}

  /// Registry key (`affine` for every parameterization).
  const std::string& name() const noexcept { return name_; }

  /// Stable identifier including parameters, e.g. `affine:a=2/1,b=1/1`.
  std::string id() const;

  Domain domain() const noexcept { return domain_; }
  const std::optional<AffineCoefficients>& parameters() const noexcept { return params_; }

  bool accepts(const WeakOrder& order) const noexcept {
    return domain_ == Domain::all_weak_orders || order.is_linear();
  }

  /// Throws NotLinear when the order lies outside the declared domain.
  PositionAssignment evaluate(const WeakOrder& order) const;
  PositionAssignment operator()(const WeakOrder& order) const { return evaluate(order); }

 private:
  std::string name_;
  Domain domain_;
  Fn fn_;
  std::optional<AffineCoefficients> params_;
};

PositionOperator make_affine_operator(const AffineCoefficients& coefficients);

/// The eleven registered operators, in a fixed order:
/// dense, dense-chain, standard, modified, fractional, sequential, quotient,
/// affine (a=2, b=1), plus-n, list-index, dense-over-tiercount.
const std::vector<PositionOperator>& registered_operators();

/// Looks up a registered name or a parameterized `affine:a=p/q,b=r/s`.
/// Throws UnknownMethod.
PositionOperator find_operator(std::string_view name);

}  // namespace denserank

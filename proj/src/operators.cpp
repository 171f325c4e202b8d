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

#include "denserank/operators.hpp"

#include <algorithm>

#include "denserank/error.hpp"

namespace denserank {

namespace {

Position as_position(std::size_t value) { return Position(static_cast<std::int64_t>(value)); }

// Calls fn(tier, dominated, above) for each tier, top to bottom, where
// `dominated` counts the alternatives strictly below and `above` those
// strictly above.
template <typename Fn>
void for_each_tier(const WeakOrder& order, Fn&& fn) {
  std::size_t above = 0;
  const std::size_t n = order.size();
  for (const auto& tier : order.tiers()) {
    const std::size_t dominated = n - above - tier.size();
    fn(tier, dominated, above);
    above += tier.size();
  }
}

}  // namespace

PositionAssignment sequential(const WeakOrder& order) {
  if (!order.is_linear()) {
    throw Error(ErrorKind::NotLinear, "the sequential function needs a linear order, got " + to_string(order));
  }
  PositionAssignment out;
  const std::size_t n = order.size();
  for_each_tier(order, [&](const Tier& tier, std::size_t dominated, std::size_t) {
    out.set(tier.front(), as_position(n - dominated));
  });
  return out;
}

PositionAssignment dense(const WeakOrder& order) {
  const auto signature = tier_signature(order);
  std::vector<std::size_t> realized;
  realized.reserve(signature.entries.size());
  for (const auto& e : signature.entries) realized.push_back(e.dominated);

  PositionAssignment out;
  for_each_tier(order, [&](const Tier& tier, std::size_t dominated, std::size_t) {
    // #{p' in T : p' > p} + 1
    const auto higher = realized.end() - std::upper_bound(realized.begin(), realized.end(), dominated);
    const auto value = as_position(static_cast<std::size_t>(higher) + 1);
    for (const auto& a : tier) out.set(a, value);
  });
  return out;
}

PositionAssignment dense_via_chain(const WeakOrder& order) {
  const auto chain = maximal_chain(order);
  std::map<std::size_t, Position> by_tier;
  for (std::size_t l = 0; l < chain.size(); ++l) by_tier.emplace(order.tier_of(chain[l]), as_position(l + 1));

  PositionAssignment out;
  for (const auto& tier : order.tiers()) {
    for (const auto& a : tier) out.set(a, by_tier.at(order.tier_of(a)));
  }
  return out;
}

PositionAssignment standard(const WeakOrder& order) {
  PositionAssignment out;
  for_each_tier(order, [&](const Tier& tier, std::size_t, std::size_t above) {
    for (const auto& a : tier) out.set(a, as_position(above + 1));
  });
  return out;
}

PositionAssignment modified(const WeakOrder& order) {
  PositionAssignment out;
  const std::size_t n = order.size();
  for_each_tier(order, [&](const Tier& tier, std::size_t dominated, std::size_t) {
    for (const auto& a : tier) out.set(a, as_position(n - dominated));
  });
  return out;
}

PositionAssignment fractional(const WeakOrder& order) {
  const auto lo = standard(order);
  const auto hi = modified(order);
  PositionAssignment out;
  for (const auto& [a, p] : lo) out.set(a, (p + hi.at(a)) / 2);
  return out;
}

PositionAssignment counterexample_operator(CounterexampleKind kind, const WeakOrder& order,
                                           const AffineCoefficients& coefficients) {
  switch (kind) {
    case CounterexampleKind::quotient: {
      auto out = dense(order);
      for (const auto& tier : order.tiers()) {
        for (const auto& a : tier) out.set(a, out.at(a) / as_position(tier.size()));
      }
      return out;
    }
    case CounterexampleKind::affine: {
      if (coefficients.a < 0 || coefficients.b < 0) {
        throw Error(ErrorKind::NegativeCoefficient, "affine coefficients must be non-negative");
      }
      auto out = dense(order);
      for (const auto& [a, p] : dense(order)) out.set(a, coefficients.a * p + coefficients.b);
      return out;
    }
    case CounterexampleKind::plus_n: {
      auto out = dense(order);
      if (order.is_linear()) return out;
      for (const auto& [a, p] : dense(order)) out.set(a, p + as_position(order.size()));
      return out;
    }
    case CounterexampleKind::list_index: {
      PositionAssignment out;
      for (const auto& tier : order.tiers()) {
        for (const auto& a : tier) {
          const auto number = a.list_number();
          if (!number) throw Error(ErrorKind::NotIndexable, "label '" + a.label() + "' has no list number");
          out.set(a, Position(static_cast<std::int64_t>(*number)));
        }
      }
      return out;
    }
    case CounterexampleKind::dense_over_tiercount: {
      auto out = dense(order);
      const auto tiers = as_position(order.tier_count());
      for (const auto& [a, p] : dense(order)) out.set(a, p / tiers);
      return out;
    }
  }
  throw Error(ErrorKind::UnknownMethod, "unhandled counterexample kind");
}

std::string PositionOperator::id() const {
  if (!params_) return name_;
  const auto frac = [](const Position& p) {
    return std::to_string(p.numerator()) + "/" + std::to_string(p.denominator());
  };
  return name_ + ":a=" + frac(params_->a) + ",b=" + frac(params_->b);
}

PositionAssignment PositionOperator::evaluate(const WeakOrder& order) const {
  if (!accepts(order)) {
    throw Error(ErrorKind::NotLinear, "operator '" + name_ + "' is only defined on linear orders");
  }
  return fn_(order);
}

PositionOperator make_affine_operator(const AffineCoefficients& coefficients) {
  if (coefficients.a < 0 || coefficients.b < 0) {
    throw Error(ErrorKind::NegativeCoefficient, "affine coefficients must be non-negative");
  }
  return PositionOperator(
      "affine", Domain::all_weak_orders,
      [coefficients](const WeakOrder& r) {
        return counterexample_operator(CounterexampleKind::affine, r, coefficients);
      },
      coefficients);
}

const std::vector<PositionOperator>& registered_operators() {
  static const std::vector<PositionOperator> registry = [] {
    const auto counterexample = [](CounterexampleKind kind) {
      return [kind](const WeakOrder& r) { return counterexample_operator(kind, r); };
    };
    std::vector<PositionOperator> ops;
    ops.emplace_back("dense", Domain::all_weak_orders, dense);
    ops.emplace_back("dense-chain", Domain::all_weak_orders, dense_via_chain);
    ops.emplace_back("standard", Domain::all_weak_orders, standard);
    ops.emplace_back("modified", Domain::all_weak_orders, modified);
    ops.emplace_back("fractional", Domain::all_weak_orders, fractional);
    ops.emplace_back("sequential", Domain::linear_only, sequential);
    ops.emplace_back("quotient", Domain::all_weak_orders, counterexample(CounterexampleKind::quotient));
    ops.push_back(make_affine_operator({}));
    ops.emplace_back("plus-n", Domain::all_weak_orders, counterexample(CounterexampleKind::plus_n));
    ops.emplace_back("list-index", Domain::all_weak_orders, counterexample(CounterexampleKind::list_index));
    ops.emplace_back("dense-over-tiercount", Domain::all_weak_orders,
                     counterexample(CounterexampleKind::dense_over_tiercount));
    return ops;
  }();
  return registry;
}

namespace {

// `a=2/1,b=1/1` (either order, integers allowed).
AffineCoefficients parse_affine_parameters(std::string_view text, std::string_view whole) {
  AffineCoefficients out;
  bool seen_a = false;
  bool seen_b = false;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::UnknownMethod, "malformed affine parameters in '" + std::string(whole) + "'");
    }
    const auto key = item.substr(0, eq);
    Position value;
    try {
      value = parse_position(std::string(item.substr(eq + 1)));
    } catch (const Error&) {
      throw Error(ErrorKind::UnknownMethod, "malformed affine coefficient in '" + std::string(whole) + "'");
    }
    if (key == "a" && !seen_a) {
      out.a = value;
      seen_a = true;
    } else if (key == "b" && !seen_b) {
      out.b = value;
      seen_b = true;
    } else {
      throw Error(ErrorKind::UnknownMethod, "unexpected affine parameter in '" + std::string(whole) + "'");
    }
  }
  if (!seen_a || !seen_b) {
    throw Error(ErrorKind::UnknownMethod, "affine needs both a and b in '" + std::string(whole) + "'");
  }
  return out;
}

}  // namespace

PositionOperator find_operator(std::string_view name) {
  constexpr std::string_view affine_prefix = "affine:";
  if (name.starts_with(affine_prefix)) {
    return make_affine_operator(parse_affine_parameters(name.substr(affine_prefix.size()), name));
  }
  for (const auto& op : registered_operators()) {
    if (op.name() == name) return op;
  }
  throw Error(ErrorKind::UnknownMethod, "no operator named '" + std::string(name) + "'");
}

}  // namespace denserank

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

#include "denserank/axioms.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "denserank/enumerate.hpp"
#include "denserank/error.hpp"

namespace denserank {

std::string_view to_string(Axiom axiom) noexcept {
  switch (axiom) {
    case Axiom::equality: return "equality";
    case Axiom::neutrality: return "neutrality";
    case Axiom::sequentiality: return "sequentiality";
    case Axiom::truncation: return "truncation";
    case Axiom::duplication: return "duplication";
    case Axiom::ud_independency: return "ud-independency";
    case Axiom::monotonicity: return "monotonicity";
  }
  return "?";
}

std::optional<Axiom> parse_axiom(std::string_view name) noexcept {
  for (auto axiom : kAllAxioms) {
    if (to_string(axiom) == name) return axiom;
  }
  return std::nullopt;
}

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "?";
}

std::string_view to_string(Provenance provenance) noexcept {
  return provenance == Provenance::asserted ? "asserted" : "derived";
}

std::string_view to_string(ImplicationStatus status) noexcept {
  switch (status) {
    case ImplicationStatus::consistent: return "consistent";
    case ImplicationStatus::vacuous: return "vacuous";
    case ImplicationStatus::violated: return "violated";
  }
  return "?";
}

std::string describe(const Transform& t) {
  std::ostringstream os;
  switch (t.kind) {
    case Transform::Kind::indifferent_pair:
      os << "indifferent pair (" << t.first << ", " << t.second << ")";
      break;
    case Transform::Kind::relabel: {
      os << "relabel {";
      bool first = true;
      for (const auto& [from, to] : t.sigma) {
        os << (first ? "" : ", ") << from << "->" << to;
        first = false;
      }
      os << "}";
      break;
    }
    case Transform::Kind::sequential:
      os << "compare with sequential function";
      break;
    case Transform::Kind::truncate_bottom:
      os << "truncate bottom tier";
      break;
    case Transform::Kind::duplicate:
      os << "duplicate " << t.first << " as " << t.second;
      break;
    case Transform::Kind::ud_move:
      os << "move " << t.first << " to tier " << t.target_tier;
      break;
    case Transform::Kind::ordered_pair:
      os << "ordered pair (" << t.first << ", " << t.second << ")";
      break;
  }
  return os.str();
}

namespace {

Transform make_transform(Transform::Kind kind, AltId first = {}, AltId second = {}, std::size_t target = 0) {
  Transform t;
  t.kind = kind;
  t.first = std::move(first);
  t.second = std::move(second);
  t.target_tier = target;
  return t;
}

struct Outcome {
  std::uint64_t cases = 0;
  std::optional<Witness> witness;
};

using OrderCheck = std::function<Outcome(const WeakOrder&)>;

void require_bound(int max_n) {
  if (max_n < kMinBound || max_n > kMaxBound) {
    throw Error(ErrorKind::InvalidBound, "universe bound must lie in [" + std::to_string(kMinBound) + ", " +
                                             std::to_string(kMaxBound) + "], got " + std::to_string(max_n));
  }
}

std::vector<WeakOrder> universe(const PositionOperator& op, Axiom axiom, int max_n) {
  std::vector<WeakOrder> orders;
  const auto keep = [&](const WeakOrder& r) {
    if (op.accepts(r)) orders.push_back(r);
    return true;
  };
  for (int n = 1; n <= max_n; ++n) {
    const auto ground = standard_ground(static_cast<std::size_t>(n));
    if (axiom == Axiom::sequentiality) {
      for_each_linear_order(ground, keep);
    } else {
      for_each_weak_order(ground, keep);
    }
  }
  return orders;
}

Witness make_witness(const WeakOrder& base, Transform transform, std::optional<WeakOrder> transformed,
                     const AltId& alternative, const Position& before, const Position& after) {
  return Witness{base, std::move(transform), std::move(transformed), alternative, before, after};
}

Outcome check_equality_on(const PositionOperator& op, const WeakOrder& r) {
  Outcome out;
  const auto pos = op(r);
  for (const auto& tier : r.tiers()) {
    for (std::size_t i = 0; i < tier.size(); ++i) {
      for (std::size_t j = i + 1; j < tier.size(); ++j) {
        ++out.cases;
        const auto& a = tier[i];
        const auto& b = tier[j];
        if (pos.at(a) != pos.at(b)) {
          auto t = make_transform(Transform::Kind::indifferent_pair, a, b);
          out.witness = make_witness(r, std::move(t), std::nullopt, a, pos.at(a), pos.at(b));
          return out;
        }
      }
    }
  }
  return out;
}

Outcome check_neutrality_on(const PositionOperator& op, const WeakOrder& r,
                            const std::vector<std::vector<std::size_t>>& perms) {
  Outcome out;
  const auto pos = op(r);
  const auto ground_set = r.ground();
  const std::vector<AltId> ground(ground_set.begin(), ground_set.end());
  for (const auto& perm : perms) {
    std::map<AltId, AltId> sigma;
    for (std::size_t i = 0; i < ground.size(); ++i) sigma.emplace(ground[i], ground[perm[i]]);
    const auto image = relabel(r, sigma);
    if (!op.accepts(image)) continue;
    ++out.cases;
    const auto moved = op(image);
    for (const auto& a : ground) {
      if (moved.at(sigma.at(a)) != pos.at(a)) {
        auto t = make_transform(Transform::Kind::relabel);
        t.sigma = sigma;
        out.witness = make_witness(r, std::move(t), image, a, pos.at(a), moved.at(sigma.at(a)));
        return out;
      }
    }
  }
  return out;
}

Outcome check_sequentiality_on(const PositionOperator& op, const WeakOrder& r) {
  Outcome out;
  out.cases = 1;
  const auto expected = sequential(r);
  const auto pos = op(r);
  for (const auto& tier : r.tiers()) {
    const auto& a = tier.front();
    if (pos.at(a) != expected.at(a)) {
      out.witness =
          make_witness(r, make_transform(Transform::Kind::sequential), std::nullopt, a, expected.at(a), pos.at(a));
      return out;
    }
  }
  return out;
}

Outcome check_truncation_on(const PositionOperator& op, const WeakOrder& r) {
  Outcome out;
  if (r.tier_count() < 2) return out;
  const auto truncated = truncate_bottom(r);
  if (!op.accepts(truncated)) return out;
  out.cases = 1;
  const auto pos = op(r);
  const auto after = op(truncated);
  for (const auto& tier : truncated.tiers()) {
    for (const auto& a : tier) {
      if (after.at(a) != pos.at(a)) {
        out.witness =
            make_witness(r, make_transform(Transform::Kind::truncate_bottom), truncated, a, pos.at(a), after.at(a));
        return out;
      }
    }
  }
  return out;
}

Outcome check_duplication_on(const PositionOperator& op, const WeakOrder& r) {
  Outcome out;
  const auto pos = op(r);
  const auto clone = fresh_clone_id(r);
  const auto ground = r.ground();
  for (const auto& pattern : ground) {
    const auto extended = duplicate(r, pattern, clone);
    if (!op.accepts(extended)) continue;
    ++out.cases;
    const auto after = op(extended);
    const auto t = make_transform(Transform::Kind::duplicate, pattern, clone);
    for (const auto& a : ground) {
      if (after.at(a) != pos.at(a)) {
        out.witness = make_witness(r, t, extended, a, pos.at(a), after.at(a));
        return out;
      }
    }
    if (after.at(clone) != after.at(pattern)) {
      out.witness = make_witness(r, t, extended, clone, after.at(pattern), after.at(clone));
      return out;
    }
  }
  return out;
}

Outcome check_ud_independency_on(const PositionOperator& op, const WeakOrder& r) {
  Outcome out;
  const auto pos = op(r);
  const auto ground = r.ground();
  for (std::size_t source = 0; source < r.tier_count(); ++source) {
    const auto& tier = r.tiers()[source];
    if (tier.size() < 2) continue;
    for (const auto& mover : tier) {
      for (std::size_t target = 0; target < r.tier_count(); ++target) {
        if (target == source) continue;
        const auto moved = ud_move(r, mover, target);
        if (!op.accepts(moved)) continue;
        ++out.cases;
        const auto after = op(moved);
        for (const auto& a : ground) {
          if (a == mover) continue;
          if (after.at(a) != pos.at(a)) {
            auto t = make_transform(Transform::Kind::ud_move, mover, AltId{}, target);
            out.witness = make_witness(r, std::move(t), moved, a, pos.at(a), after.at(a));
            return out;
          }
        }
      }
    }
  }
  return out;
}

Outcome check_monotonicity_on(const PositionOperator& op, const WeakOrder& r) {
  Outcome out;
  const auto pos = op(r);
  const auto ground = r.ground();
  for (const auto& a : ground) {
    for (const auto& b : ground) {
      if (a == b) continue;
      ++out.cases;
      if (r.weakly_prefers(a, b) != (pos.at(a) <= pos.at(b))) {
        auto t = make_transform(Transform::Kind::ordered_pair, a, b);
        out.witness = make_witness(r, std::move(t), std::nullopt, a, pos.at(a), pos.at(b));
        return out;
      }
    }
  }
  return out;
}

// Evaluates `check` over the universe and merges in enumeration order, so the
// report never depends on the number of workers.
AxiomReport run(const PositionOperator& op, Axiom axiom, int max_n, const EngineOptions& options,
                const OrderCheck& check) {
  require_bound(max_n);
  const auto orders = universe(op, axiom, max_n);

  AxiomReport report;
  report.op = op.id();
  report.axiom = axiom;
  report.max_n = max_n;

  const auto finish = [&](std::uint64_t cases, std::optional<Witness> witness) {
    report.cases_checked = cases;
    if (witness) {
      report.verdict = Verdict::fail;
      report.witness = std::move(witness);
    } else {
      report.verdict = cases == 0 ? Verdict::not_applicable : Verdict::pass;
    }
    return report;
  };

  const std::size_t workers = std::min<std::size_t>(std::max<std::size_t>(options.threads, 1), orders.size());
  if (workers <= 1) {
    std::uint64_t cases = 0;
    for (const auto& r : orders) {
      auto outcome = check(r);
      cases += outcome.cases;
      if (outcome.witness) return finish(cases, std::move(outcome.witness));
    }
    return finish(cases, std::nullopt);
  }

  std::vector<Outcome> outcomes(orders.size());
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  const std::size_t chunk = (orders.size() + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(orders.size(), begin + chunk);
        for (std::size_t i = begin; i < end; ++i) {
          outcomes[i] = check(orders[i]);
          if (outcomes[i].witness) break;
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::uint64_t cases = 0;
  for (auto& outcome : outcomes) {
    cases += outcome.cases;
    if (outcome.witness) return finish(cases, std::move(outcome.witness));
  }
  return finish(cases, std::nullopt);
}

}  // namespace

std::vector<std::vector<std::size_t>> neutrality_permutations(std::size_t n) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> identity(n);
  std::iota(identity.begin(), identity.end(), std::size_t{0});

  if (n <= kExhaustivePermutationMaxN) {
    auto perm = identity;
    do {
      perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return perms;
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto perm = identity;
      std::swap(perm[i], perm[j]);
      perms.push_back(std::move(perm));
    }
  }
  // mt19937_64 output is fully specified, so the sample is portable.
  std::mt19937_64 rng(kPermutationSeed);
  for (std::size_t k = 0; k < kSampledPermutations; ++k) {
    auto perm = identity;
    for (std::size_t i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);
    perms.push_back(std::move(perm));
  }
  return perms;
}

AxiomReport check_equality(const PositionOperator& op, int max_n, const EngineOptions& options) {
  return run(op, Axiom::equality, max_n, options, [&](const WeakOrder& r) { return check_equality_on(op, r); });
}

AxiomReport check_neutrality(const PositionOperator& op, int max_n, const EngineOptions& options) {
  std::map<std::size_t, std::vector<std::vector<std::size_t>>> perms;
  for (int n = 1; n <= std::clamp(max_n, 1, kMaxBound); ++n) {
    perms.emplace(n, neutrality_permutations(static_cast<std::size_t>(n)));
  }
  return run(op, Axiom::neutrality, max_n, options,
             [&](const WeakOrder& r) { return check_neutrality_on(op, r, perms.at(r.size())); });
}

AxiomReport check_sequentiality(const PositionOperator& op, int max_n, const EngineOptions& options) {
  return run(op, Axiom::sequentiality, max_n, options,
             [&](const WeakOrder& r) { return check_sequentiality_on(op, r); });
}

AxiomReport check_truncation(const PositionOperator& op, int max_n, const EngineOptions& options) {
  return run(op, Axiom::truncation, max_n, options, [&](const WeakOrder& r) { return check_truncation_on(op, r); });
}

AxiomReport check_duplication(const PositionOperator& op, int max_n, const EngineOptions& options) {
  return run(op, Axiom::duplication, max_n, options,
             [&](const WeakOrder& r) { return check_duplication_on(op, r); });
}

AxiomReport check_ud_independency(const PositionOperator& op, int max_n, const EngineOptions& options) {
  return run(op, Axiom::ud_independency, max_n, options,
             [&](const WeakOrder& r) { return check_ud_independency_on(op, r); });
}

AxiomReport check_monotonicity(const PositionOperator& op, int max_n, const EngineOptions& options) {
  return run(op, Axiom::monotonicity, max_n, options,
             [&](const WeakOrder& r) { return check_monotonicity_on(op, r); });
}

AxiomReport check_axiom(const PositionOperator& op, Axiom axiom, int max_n, const EngineOptions& options) {
  switch (axiom) {
    case Axiom::equality: return check_equality(op, max_n, options);
    case Axiom::neutrality: return check_neutrality(op, max_n, options);
    case Axiom::sequentiality: return check_sequentiality(op, max_n, options);
    case Axiom::truncation: return check_truncation(op, max_n, options);
    case Axiom::duplication: return check_duplication(op, max_n, options);
    case Axiom::ud_independency: return check_ud_independency(op, max_n, options);
    case Axiom::monotonicity: return check_monotonicity(op, max_n, options);
  }
  throw Error(ErrorKind::InvalidBound, "unknown axiom");
}

bool reproduces_violation(const PositionOperator& op, Axiom axiom, const Witness& w) {
  using Kind = Transform::Kind;
  const auto& t = w.transform;
  const auto expected_kind = [&] {
    switch (axiom) {
      case Axiom::equality: return Kind::indifferent_pair;
      case Axiom::neutrality: return Kind::relabel;
      case Axiom::sequentiality: return Kind::sequential;
      case Axiom::truncation: return Kind::truncate_bottom;
      case Axiom::duplication: return Kind::duplicate;
      case Axiom::ud_independency: return Kind::ud_move;
      case Axiom::monotonicity: return Kind::ordered_pair;
    }
    return Kind::sequential;
  }();
  if (t.kind != expected_kind) return false;

  try {
    const auto pos = op(w.base);
    Position before;
    Position after;
    switch (t.kind) {
      case Kind::indifferent_pair:
        if (!w.base.indifferent(t.first, t.second) || t.first == t.second) return false;
        before = pos.at(t.first);
        after = pos.at(t.second);
        break;
      case Kind::relabel: {
        const auto image = relabel(w.base, t.sigma);
        if (w.transformed != image) return false;
        before = pos.at(w.alternative);
        after = op(image).at(t.sigma.at(w.alternative));
        break;
      }
      case Kind::sequential:
        before = sequential(w.base).at(w.alternative);
        after = pos.at(w.alternative);
        break;
      case Kind::truncate_bottom: {
        const auto truncated = truncate_bottom(w.base);
        if (w.transformed != truncated) return false;
        before = pos.at(w.alternative);
        after = op(truncated).at(w.alternative);
        break;
      }
      case Kind::duplicate: {
        if (!t.second.is_reserved()) return false;
        const auto extended = duplicate(w.base, t.first, t.second);
        if (w.transformed != extended) return false;
        const auto ext = op(extended);
        before = w.alternative == t.second ? ext.at(t.first) : pos.at(w.alternative);
        after = ext.at(w.alternative);
        break;
      }
      case Kind::ud_move: {
        if (w.alternative == t.first) return false;
        const auto moved = ud_move(w.base, t.first, t.target_tier);
        if (w.transformed != moved) return false;
        before = pos.at(w.alternative);
        after = op(moved).at(w.alternative);
        break;
      }
      case Kind::ordered_pair:
        if (t.first == t.second || w.alternative != t.first) return false;
        before = pos.at(t.first);
        after = pos.at(t.second);
        if (before != w.before || after != w.after) return false;
        return w.base.weakly_prefers(t.first, t.second) != (before <= after);
    }
    return before == w.before && after == w.after && before != after;
  } catch (const Error&) {
    return false;
  }
}

bool coincides_with_dense(const PositionOperator& op, int max_n) {
  require_bound(max_n);
  bool same = true;
  for (int n = 1; n <= max_n && same; ++n) {
    for_each_weak_order(standard_ground(static_cast<std::size_t>(n)), [&](const WeakOrder& r) {
      if (op.accepts(r) && op(r) != dense(r)) same = false;
      return same;
    });
  }
  return same;
}

// ----------------------------------------------------------------------
// Expected table

namespace {

using Row = std::array<ExpectedCell, kAllAxioms.size()>;

constexpr ExpectedCell pass(Provenance p, std::string_view note) { return {Verdict::pass, 0, p, note}; }
constexpr ExpectedCell fail(int witness_n, Provenance p, std::string_view note) {
  return {Verdict::fail, witness_n, p, note};
}
constexpr ExpectedCell not_applicable(std::string_view note) {
  return {Verdict::not_applicable, 0, Provenance::derived, note};
}

constexpr auto A = Provenance::asserted;
constexpr auto D = Provenance::derived;

const std::map<std::string_view, Row, std::less<>>& expected_table() {
  // Columns follow kAllAxioms: equality, neutrality, sequentiality,
  // truncation, duplication, ud-independency, monotonicity.
  static const std::map<std::string_view, Row, std::less<>> table = {
      {"dense",
       {pass(A, "one value per tier"), pass(A, "depends on tier structure only"), pass(A, "1..n on linear orders"),
        pass(A, "counts tiers above only"), pass(A, "clones never add a tier"),
        pass(A, "legal moves never add or remove a tier"), pass(D, "tier index order")}},
      {"dense-chain",
       {pass(D, "equals dense"), pass(D, "equals dense"), pass(D, "equals dense"), pass(D, "equals dense"),
        pass(D, "equals dense"), pass(D, "equals dense"), pass(D, "equals dense")}},
      {"standard",
       {pass(A, "highest rank of the tie"), pass(A, "depends on tier sizes only"), pass(A, "1..n on linear orders"),
        pass(A, "ignores tiers below"), fail(2, A, "a clone shifts every lower tier"),
        fail(3, A, "moving up shifts the departure tier's followers"), pass(D, "strictly increasing by tier")}},
      {"modified",
       {pass(A, "lowest rank of the tie"), pass(A, "depends on tier sizes only"), pass(A, "1..n on linear orders"),
        pass(A, "ignores tiers below"), fail(1, A, "a clone shifts its own tier"),
        fail(3, A, "moving changes the departure tier's size"), pass(D, "strictly increasing by tier")}},
      {"fractional",
       {pass(A, "mean rank of the tie"), pass(A, "depends on tier sizes only"), pass(A, "1..n on linear orders"),
        pass(A, "ignores tiers below"), fail(1, A, "a clone shifts its own tier"),
        fail(3, A, "moving changes both tiers' means"), pass(D, "strictly increasing by tier")}},
      {"sequential",
       {not_applicable("linear orders have no ties"), pass(D, "relabelling keeps orders linear"),
        pass(A, "is the sequential function"), pass(D, "truncated linear orders stay linear"),
        not_applicable("a clone always creates a tie"), not_applicable("moves require a tie"),
        pass(D, "1..n along the order")}},
      {"quotient",
       {pass(D, "one value per tier"), pass(D, "depends on tier structure only"),
        pass(A, "tier sizes are 1 on linear orders"), pass(A, "tier sizes above are untouched"),
        fail(1, A, "a clone grows the denominator"), fail(3, A, "moves resize two tiers"),
        fail(3, D, "a large tier can undercut a lower singleton")}},
      {"affine",
       {pass(D, "one value per tier"), pass(D, "depends on tier structure only"),
        fail(1, A, "only the identity map is sequential"), pass(D, "inherits dense truncation"),
        pass(A, "inherits dense duplication"), pass(D, "inherits dense independence"),
        pass(D, "increasing map of dense for a > 0")}},
      {"plus-n",
       {pass(D, "one value per tier"), pass(D, "linearity is relabelling-invariant"), pass(A, "dense on linear orders"),
        fail(3, A, "truncation can make the order linear"), fail(1, D, "a clone of a linear order adds n + 1"),
        pass(A, "n and the tier count are fixed by moves"), pass(D, "uniform shift of dense")}},
      {"list-index",
       {fail(2, A, "tied labels keep distinct list numbers"), fail(2, A, "list numbers ignore relabelling"),
        fail(2, A, "list order need not match preference"), pass(A, "remaining labels keep their numbers"),
        fail(1, D, "the clone gets a fresh list number"), pass(A, "labels keep their numbers"),
        fail(2, D, "label order can oppose preference")}},
      {"dense-over-tiercount",
       {pass(D, "one value per tier"), pass(D, "depends on tier structure only"),
        fail(2, D, "divides 1..n by n on linear orders"), fail(2, A, "dropping a tier changes the divisor"),
        pass(A, "clones keep the tier count"), pass(D, "moves keep the tier count"),
        pass(D, "positive multiple of dense")}},
  };
  return table;
}

}  // namespace

const ExpectedCell& expected_cell(std::string_view op_name, Axiom axiom) {
  const auto& table = expected_table();
  const auto it = table.find(op_name);
  if (it == table.end()) {
    throw Error(ErrorKind::UnknownMethod, "no expected row for '" + std::string(op_name) + "'");
  }
  const auto column = static_cast<std::size_t>(std::find(kAllAxioms.begin(), kAllAxioms.end(), axiom) -
                                               kAllAxioms.begin());
  return it->second.at(column);
}

std::optional<int> smallest_universe(Domain domain, Axiom axiom) noexcept {
  const bool linear = domain == Domain::linear_only;
  switch (axiom) {
    case Axiom::equality: return linear ? std::nullopt : std::optional<int>(2);
    case Axiom::neutrality: return 1;
    case Axiom::sequentiality: return 1;
    case Axiom::truncation: return 2;
    case Axiom::duplication: return linear ? std::nullopt : std::optional<int>(1);
    case Axiom::ud_independency: return linear ? std::nullopt : std::optional<int>(3);
    case Axiom::monotonicity: return 2;
  }
  return std::nullopt;
}

Verdict expected_verdict(std::string_view op_name, Domain domain, Axiom axiom, int max_n) {
  const auto& cell = expected_cell(op_name, axiom);
  const auto smallest = smallest_universe(domain, axiom);
  if (!smallest || max_n < *smallest) return Verdict::not_applicable;
  if (cell.verdict == Verdict::fail && max_n < cell.witness_n) return Verdict::pass;
  return cell.verdict;
}

bool MatrixVerification::ok() const {
  return std::all_of(cells.begin(), cells.end(), [](const MatrixCell& c) { return c.matches(); });
}

std::vector<MatrixCell> MatrixVerification::mismatches() const {
  std::vector<MatrixCell> out;
  std::copy_if(cells.begin(), cells.end(), std::back_inserter(out), [](const MatrixCell& c) { return !c.matches(); });
  return out;
}

const AxiomReport& MatrixVerification::report(std::string_view op_id, Axiom axiom) const {
  for (const auto& c : cells) {
    if (c.observed.op == op_id && c.observed.axiom == axiom) return c.observed;
  }
  throw Error(ErrorKind::UnknownMethod, "no report for '" + std::string(op_id) + "'");
}

MatrixVerification verify_matrix(int max_n, const EngineOptions& options) {
  require_bound(max_n);
  MatrixVerification result;
  result.max_n = max_n;
  for (const auto& op : registered_operators()) {
    for (auto axiom : kAllAxioms) {
      const auto& cell = expected_cell(op.name(), axiom);
      result.cells.push_back(MatrixCell{expected_verdict(op.name(), op.domain(), axiom, max_n), cell.provenance,
                                        cell.note, check_axiom(op, axiom, max_n, options)});
    }
  }
  return result;
}

void require_consistent(const MatrixVerification& result) {
  const auto bad = result.mismatches();
  if (bad.empty()) return;
  std::ostringstream os;
  os << bad.size() << " cell(s) differ:";
  for (const auto& c : bad) {
    os << ' ' << c.observed.op << '/' << to_string(c.observed.axiom) << " expected " << to_string(c.expected)
       << " observed " << to_string(c.observed.verdict) << ';';
  }
  throw Error(ErrorKind::MatrixMismatch, os.str());
}

const std::vector<Implication>& implications() {
  static const std::vector<Implication> list = {
      {"neutrality => equality", {Axiom::neutrality}, Axiom::equality},
      {"duplication => neutrality", {Axiom::duplication}, Axiom::neutrality},
      {"duplication => ud-independency", {Axiom::duplication}, Axiom::ud_independency},
      {"sequentiality + truncation + ud-independency => equality",
       {Axiom::sequentiality, Axiom::truncation, Axiom::ud_independency},
       Axiom::equality},
      {"monotonicity => equality", {Axiom::monotonicity}, Axiom::equality},
      {"sequentiality + duplication => dense", {Axiom::sequentiality, Axiom::duplication}, std::nullopt},
      {"sequentiality + truncation + ud-independency => dense",
       {Axiom::sequentiality, Axiom::truncation, Axiom::ud_independency},
       std::nullopt},
  };
  return list;
}

std::vector<ImplicationResult> verify_implications(const MatrixVerification& matrix) {
  std::vector<ImplicationResult> results;
  for (const auto& op : registered_operators()) {
    // An antecedent only counts when its quantifier had instances; a
    // not_applicable consequent is satisfied.
    const auto passes = [&](Axiom axiom) { return matrix.report(op.id(), axiom).verdict == Verdict::pass; };
    const auto holds = [&](Axiom axiom) { return matrix.report(op.id(), axiom).verdict != Verdict::fail; };
    for (const auto& imp : implications()) {
      ImplicationStatus status;
      if (!std::all_of(imp.antecedents.begin(), imp.antecedents.end(), passes)) {
        status = ImplicationStatus::vacuous;
      } else {
        const bool consequent = imp.consequent ? holds(*imp.consequent) : coincides_with_dense(op, matrix.max_n);
        status = consequent ? ImplicationStatus::consistent : ImplicationStatus::violated;
      }
      results.push_back({std::string(imp.name), op.id(), status});
    }
  }
  return results;
}

std::vector<ImplicationResult> verify_implications(int max_n, const EngineOptions& options) {
  return verify_implications(verify_matrix(max_n, options));
}

void require_no_violations(const std::vector<ImplicationResult>& results) {
  for (const auto& r : results) {
    if (r.status == ImplicationStatus::violated) {
      throw Error(ErrorKind::ImplicationViolated, r.op + " violates \"" + r.implication + "\"");
    }
  }
}

}  // namespace denserank

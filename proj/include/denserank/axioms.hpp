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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "denserank/operators.hpp"

namespace denserank {

enum class Axiom {
  equality,
  neutrality,
  sequentiality,
  truncation,
  duplication,
  ud_independency,
  monotonicity,
};

inline constexpr std::array<Axiom, 7> kAllAxioms = {
    Axiom::equality,    Axiom::neutrality,      Axiom::sequentiality, Axiom::truncation,
    Axiom::duplication, Axiom::ud_independency, Axiom::monotonicity,
};

std::string_view to_string(Axiom axiom) noexcept;
std::optional<Axiom> parse_axiom(std::string_view name) noexcept;

enum class Verdict { pass, fail, not_applicable };
std::string_view to_string(Verdict verdict) noexcept;

/// The change applied to a base order to expose a violation.
struct Transform {
  enum class Kind {
    indifferent_pair,  // first I second, same order
    relabel,           // sigma applied to the base order
    sequential,        // compared against the sequential function
    truncate_bottom,
    duplicate,         // first = pattern, second = clone
    ud_move,           // first = mover, target_tier
    ordered_pair,      // first, second compared for monotonicity
  };
  Kind kind = Kind::sequential;
  AltId first;
  AltId second;
  std::size_t target_tier = 0;
  std::map<AltId, AltId> sigma;

  friend bool operator==(const Transform&, const Transform&) = default;
};

std::string describe(const Transform& transform);

/// Minimal evidence of a violation. `before` is the value the axiom demands
/// and `after` the value the operator produced (for equality and
/// monotonicity: the positions of `transform.first` and `transform.second`).
struct Witness {
  WeakOrder base;
  Transform transform;
  std::optional<WeakOrder> transformed;
  AltId alternative;
  Position before;
  Position after;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct AxiomReport {
  std::string op;  // operator id
  Axiom axiom = Axiom::equality;
  int max_n = 0;
  Verdict verdict = Verdict::pass;
  std::uint64_t cases_checked = 0;
  std::optional<Witness> witness;

  friend bool operator==(const AxiomReport&, const AxiomReport&) = default;
};

struct EngineOptions {
  /// Worker threads for partitioning the universe; results are identical for
  /// every value.
  std::size_t threads = 1;
};

// Universe: for n = 1..max_n, every weak order on {x1, ..., xn} the operator
// accepts (linear orders only for sequentiality). Checking stops at the first
// violation in enumeration order. A quantifier with no in-domain instance is
// reported not_applicable. All checkers require 2 <= max_n <= 8.

inline constexpr int kMinBound = 2;
inline constexpr int kMaxBound = 8;

/// Neutrality enumerates all n! permutations up to this size; above it, all
/// transpositions plus a seeded random sample.
inline constexpr std::size_t kExhaustivePermutationMaxN = 4;
inline constexpr std::size_t kSampledPermutations = 20;
inline constexpr std::uint64_t kPermutationSeed = 0;

AxiomReport check_axiom(const PositionOperator& op, Axiom axiom, int max_n, const EngineOptions& options = {});

AxiomReport check_equality(const PositionOperator& op, int max_n, const EngineOptions& options = {});
AxiomReport check_neutrality(const PositionOperator& op, int max_n, const EngineOptions& options = {});
AxiomReport check_sequentiality(const PositionOperator& op, int max_n, const EngineOptions& options = {});
AxiomReport check_truncation(const PositionOperator& op, int max_n, const EngineOptions& options = {});
AxiomReport check_duplication(const PositionOperator& op, int max_n, const EngineOptions& options = {});
AxiomReport check_ud_independency(const PositionOperator& op, int max_n, const EngineOptions& options = {});
AxiomReport check_monotonicity(const PositionOperator& op, int max_n, const EngineOptions& options = {});

/// Permutations of {0..n-1} used for neutrality on ground sets of size n.
std::vector<std::vector<std::size_t>> neutrality_permutations(std::size_t n);

/// Re-derives the witness through the public operator interface and returns
/// true iff it reproduces the recorded values and they violate the axiom.
bool reproduces_violation(const PositionOperator& op, Axiom axiom, const Witness& witness);

/// True iff `op` coincides with the dense rank on every in-domain order with
/// at most max_n alternatives.
bool coincides_with_dense(const PositionOperator& op, int max_n);

// ----------------------------------------------------------------------
// Expected operator-by-axiom table

enum class Provenance {
  asserted,  // established analytically for the operator
  derived,   // recorded from a prior exhaustive run
};
std::string_view to_string(Provenance provenance) noexcept;

struct ExpectedCell {
  Verdict verdict;  // verdict once the universe is large enough
  int witness_n;    // for fail: size of the smallest violating base order
  Provenance provenance;
  std::string_view note;
};

/// Cell for a registered operator name. Throws UnknownMethod.
const ExpectedCell& expected_cell(std::string_view op_name, Axiom axiom);

/// Smallest universe bound with an in-domain instance of the axiom, or
/// nullopt when the domain admits none.
std::optional<int> smallest_universe(Domain domain, Axiom axiom) noexcept;

/// Expected verdict at a given bound: not_applicable below the smallest
/// universe, pass while the bound is below the witness size.
Verdict expected_verdict(std::string_view op_name, Domain domain, Axiom axiom, int max_n);

struct MatrixCell {
  Verdict expected;
  Provenance provenance;
  std::string_view note;
  AxiomReport observed;

  bool matches() const noexcept { return expected == observed.verdict; }
};

struct MatrixVerification {
  int max_n = 0;
  std::vector<MatrixCell> cells;  // operator-major, axioms in kAllAxioms order

  bool ok() const;
  std::vector<MatrixCell> mismatches() const;
  const AxiomReport& report(std::string_view op_id, Axiom axiom) const;
};

/// Runs every checker on every registered operator.
MatrixVerification verify_matrix(int max_n, const EngineOptions& options = {});

/// Throws Error(MatrixMismatch) listing the offending cells.
void require_consistent(const MatrixVerification& result);

// ----------------------------------------------------------------------
// Implication instances

struct Implication {
  std::string_view name;
  std::vector<Axiom> antecedents;
  /// nullopt: the consequent is "coincides with the dense rank".
  std::optional<Axiom> consequent;
};

const std::vector<Implication>& implications();

enum class ImplicationStatus { consistent, vacuous, violated };
std::string_view to_string(ImplicationStatus status) noexcept;

struct ImplicationResult {
  std::string implication;
  std::string op;
  ImplicationStatus status;

  friend bool operator==(const ImplicationResult&, const ImplicationResult&) = default;
};

/// Evaluates every implication for every operator of an existing matrix run.
/// An instance is vacuous unless every antecedent passed with at least one
/// case; a not_applicable consequent counts as satisfied.
std::vector<ImplicationResult> verify_implications(const MatrixVerification& matrix);
std::vector<ImplicationResult> verify_implications(int max_n, const EngineOptions& options = {});

/// Throws Error(ImplicationViolated) naming the first violation.
void require_no_violations(const std::vector<ImplicationResult>& results);

}  // namespace denserank

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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "denserank/operators.hpp"
#include "denserank/weak_order.hpp"

namespace denserank {

/// Exact decimal score; no binary rounding ever enters tie detection.
using Score = boost::multiprecision::cpp_rational;

/// `[+-]digits[.digits][e[+-]digits]` or `[+-].digits[...]`. Throws ParseError.
Score parse_decimal(std::string_view text);

struct ScoredRecord {
  AltId id;
  Score score;  // higher is better
};

/// `id,score` rows; blank lines are skipped, CRLF accepted. Errors carry the
/// line and column. Throws ParseError, DuplicateId, EmptyInput.
std::vector<ScoredRecord> parse_scores_csv(std::string_view data, bool has_header);

/// Highest score first. Without epsilon, equal scores share a tier. With
/// epsilon, neighbouring scores at most epsilon apart are chained into one
/// tier, so 10, 9.5, 9 with epsilon 0.5 form a single tier.
WeakOrder order_from_scores(const std::vector<ScoredRecord>& records, const std::optional<Score>& epsilon = {});

struct RankRow {
  AltId id;
  Position position;
};

/// Evaluates `op` and sorts rows by position, then label.
std::vector<RankRow> rank_rows(const WeakOrder& order, const PositionOperator& op);

/// `id,position` header, one row per alternative, `p/q` for fractions.
std::string format_rows_csv(const std::vector<RankRow>& rows);

/// `{"method": ..., "positions": [{"id": ..., "position": {"num", "den"}}]}`.
std::string format_rows_json(const std::string& method, const std::vector<RankRow>& rows);

}  // namespace denserank

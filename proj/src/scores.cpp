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

#include "denserank/scores.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "denserank/error.hpp"
#include "denserank/json_io.hpp"

namespace denserank {

using boost::multiprecision::cpp_int;

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

constexpr long kMaxExponent = 4000;

}  // namespace

Score parse_decimal(std::string_view text) {
  const auto bad = [&] { return Error(ErrorKind::ParseError, "not a decimal number: '" + std::string(text) + "'"); };
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';

  cpp_int mantissa = 0;
  long scale = 0;
  bool any_digit = false;
  for (; i < text.size() && is_digit(text[i]); ++i) {
    mantissa = mantissa * 10 + (text[i] - '0');
    any_digit = true;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    for (; i < text.size() && is_digit(text[i]); ++i) {
      mantissa = mantissa * 10 + (text[i] - '0');
      ++scale;
      any_digit = true;
    }
  }
  if (!any_digit) throw bad();

  long exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) exp_negative = text[i++] == '-';
    bool exp_digit = false;
    for (; i < text.size() && is_digit(text[i]); ++i) {
      exponent = exponent * 10 + (text[i] - '0');
      exp_digit = true;
      if (exponent > kMaxExponent) throw Error(ErrorKind::ParseError, "exponent out of range in '" + std::string(text) + "'");
    }
    if (!exp_digit) throw bad();
    if (exp_negative) exponent = -exponent;
  }
  if (i != text.size()) throw bad();

  const long shift = exponent - scale;
  const cpp_int power = boost::multiprecision::pow(cpp_int(10), static_cast<unsigned>(shift < 0 ? -shift : shift));
  Score value = shift >= 0 ? Score(mantissa * power) : Score(mantissa, power);
  return negative ? Score(-value) : value;
}

std::vector<ScoredRecord> parse_scores_csv(std::string_view data, bool has_header) {
  std::vector<ScoredRecord> records;
  std::set<AltId> seen;
  std::size_t line_no = 0;
  bool header_pending = has_header;

  while (!data.empty()) {
    const auto nl = data.find('\n');
    std::string_view line = data.substr(0, nl);
    data = nl == std::string_view::npos ? std::string_view{} : data.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) continue;
    if (header_pending) {
      header_pending = false;
      continue;
    }

    const auto where = [&](std::size_t column) {
      return "line " + std::to_string(line_no) + ", column " + std::to_string(column);
    };
    const auto comma = line.find(',');
    if (comma == std::string_view::npos) {
      throw Error(ErrorKind::ParseError, where(line.size() + 1) + ": expected 'id,score'");
    }
    if (const auto extra = line.find(',', comma + 1); extra != std::string_view::npos) {
      throw Error(ErrorKind::ParseError, where(extra + 1) + ": unexpected extra field");
    }
    const auto id = trim(line.substr(0, comma));
    if (id.empty()) throw Error(ErrorKind::ParseError, where(1) + ": empty id");

    const auto raw_score = line.substr(comma + 1);
    const auto score_text = trim(raw_score);
    const std::size_t score_column =
        comma + 2 + static_cast<std::size_t>(score_text.empty() ? 0 : score_text.data() - raw_score.data());
    Score score;
    try {
      score = parse_decimal(score_text);
    } catch (const Error&) {
      throw Error(ErrorKind::ParseError, where(score_column) + ": invalid score '" + std::string(score_text) + "'");
    }

    AltId alt{std::string(id)};
    if (!seen.insert(alt).second) {
      throw Error(ErrorKind::DuplicateId, where(1) + ": id '" + alt.label() + "' repeated");
    }
    records.push_back({std::move(alt), std::move(score)});
  }
  if (records.empty()) throw Error(ErrorKind::EmptyInput, "no records");
  return records;
}

WeakOrder order_from_scores(const std::vector<ScoredRecord>& records, const std::optional<Score>& epsilon) {
  if (records.empty()) throw Error(ErrorKind::EmptyInput, "no records");
  if (epsilon && *epsilon < 0) throw Error(ErrorKind::ParseError, "tie epsilon must be non-negative");

  std::vector<const ScoredRecord*> sorted;
  sorted.reserve(records.size());
  for (const auto& r : records) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(), [](const ScoredRecord* a, const ScoredRecord* b) {
    if (a->score != b->score) return a->score > b->score;
    return a->id < b->id;
  });

  const Score tolerance = epsilon.value_or(Score(0));
  std::vector<std::vector<AltId>> tiers;
  const Score* previous = nullptr;
  for (const auto* r : sorted) {
    if (!previous || *previous - r->score > tolerance) tiers.emplace_back();
    tiers.back().push_back(r->id);
    previous = &r->score;
  }
  return WeakOrder::from_tiers(std::move(tiers));
}

std::vector<RankRow> rank_rows(const WeakOrder& order, const PositionOperator& op) {
  std::vector<RankRow> rows;
  for (const auto& [id, pos] : op(order)) rows.push_back({id, pos});
  std::stable_sort(rows.begin(), rows.end(), [](const RankRow& a, const RankRow& b) {
    if (a.position != b.position) return a.position < b.position;
    return a.id < b.id;
  });
  return rows;
}

std::string format_rows_csv(const std::vector<RankRow>& rows) {
  std::string out = "id,position\n";
  for (const auto& row : rows) {
    out += row.id.label();
    out += ',';
    out += format_position(row.position);
    out += '\n';
  }
  return out;
}

std::string format_rows_json(const std::string& method, const std::vector<RankRow>& rows) {
  nlohmann::json positions = nlohmann::json::array();
  for (const auto& row : rows) {
    positions.push_back({{"id", row.id.label()}, {"position", to_json(row.position)}});
  }
  nlohmann::json doc{{"method", method}, {"positions", std::move(positions)}};
  return doc.dump(2) + "\n";
}

}  // namespace denserank

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

#include "denserank/json_io.hpp"

#include <algorithm>

#include "denserank/error.hpp"

namespace denserank {

using nlohmann::json;

namespace {

// Line and column (1-based) of a byte offset.
std::string locate(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

AltId label_from_json(const json& item) {
  if (item.is_string()) return AltId(item.get<std::string>());
  if (item.is_number_integer()) return AltId(std::to_string(item.get<std::int64_t>()));
  throw Error(ErrorKind::ParseError, "alternative labels must be strings or integers, got " + item.dump());
}

}  // namespace

json to_json(const WeakOrder& order) {
  json tiers = json::array();
  for (const auto& tier : order.tiers()) {
    json t = json::array();
    for (const auto& a : tier) t.push_back(a.label());
    tiers.push_back(std::move(t));
  }
  return json{{"tiers", std::move(tiers)}};
}

WeakOrder weak_order_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("tiers") || !doc["tiers"].is_array()) {
    throw Error(ErrorKind::ParseError, "expected an object with a \"tiers\" array");
  }
  std::vector<std::vector<AltId>> tiers;
  for (const auto& tier : doc["tiers"]) {
    if (!tier.is_array()) throw Error(ErrorKind::ParseError, "each tier must be an array, got " + tier.dump());
    auto& out = tiers.emplace_back();
    for (const auto& item : tier) out.push_back(label_from_json(item));
  }
  return WeakOrder::from_tiers(std::move(tiers));
}

WeakOrder parse_weak_order(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, "invalid JSON at " + locate(text, e.byte == 0 ? 0 : e.byte - 1));
  }
  return weak_order_from_json(doc);
}

json to_json(const Position& p) { return json{{"num", p.numerator()}, {"den", p.denominator()}}; }

json to_json(const Witness& w) {
  json out{
      {"base", to_json(w.base)},
      {"transform", describe(w.transform)},
      {"alternative", w.alternative.label()},
      {"before", to_json(w.before)},
      {"after", to_json(w.after)},
  };
  out["transformed"] = w.transformed ? to_json(*w.transformed) : json(nullptr);
  return out;
}

json to_json(const AxiomReport& report) {
  return json{
      {"operator", report.op},
      {"axiom", std::string(to_string(report.axiom))},
      {"maxN", report.max_n},
      {"verdict", std::string(to_string(report.verdict))},
      {"casesChecked", report.cases_checked},
      {"witness", report.witness ? to_json(*report.witness) : json(nullptr)},
  };
}

json verification_report(const MatrixVerification& matrix, const std::vector<ImplicationResult>& results) {
  json cells = json::array();
  for (const auto& c : matrix.cells) {
    auto cell = to_json(c.observed);
    cell["expected"] = std::string(to_string(c.expected));
    cell["provenance"] = std::string(to_string(c.provenance));
    cell["note"] = std::string(c.note);
    cell["matches"] = c.matches();
    cells.push_back(std::move(cell));
  }
  json imps = json::array();
  bool violated = false;
  for (const auto& r : results) {
    imps.push_back({{"implication", r.implication},
                    {"operator", r.op},
                    {"status", std::string(to_string(r.status))}});
    violated = violated || r.status == ImplicationStatus::violated;
  }
  return json{
      {"maxN", matrix.max_n},
      {"matrixConsistent", matrix.ok()},
      {"implicationsConsistent", !violated},
      {"matrix", std::move(cells)},
      {"implications", std::move(imps)},
  };
}

}  // namespace denserank

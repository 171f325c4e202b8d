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

#include <string>
#include <vector>

#include <json.hpp>

#include "denserank/axioms.hpp"
#include "denserank/weak_order.hpp"

namespace denserank {

/// `{"tiers": [["x3"], ["x6", "x8"], ...]}`, top tier first.
nlohmann::json to_json(const WeakOrder& order);

/// Accepts string or integer labels. Throws ParseError on a malformed
/// document and the WeakOrder construction errors on invalid tiers.
WeakOrder weak_order_from_json(const nlohmann::json& doc);
WeakOrder parse_weak_order(const std::string& text);

/// `{"num": 3, "den": 2}`.
nlohmann::json to_json(const Position& p);

nlohmann::json to_json(const Witness& witness);

/// {operator, axiom, maxN, verdict, casesChecked, witness}
nlohmann::json to_json(const AxiomReport& report);

/// Full verification report: matrix cells (with expectations) and
/// implication instances.
nlohmann::json verification_report(const MatrixVerification& matrix, const std::vector<ImplicationResult>& results);

}  // namespace denserank

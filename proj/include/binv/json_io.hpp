// Copyright 2026 The binv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BINV_JSON_IO_HPP
#define BINV_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "binv/catalog.hpp"
#include "binv/correlation.hpp"
#include "binv/equilibrium.hpp"
#include "binv/game.hpp"
#include "binv/optimize.hpp"
#include "binv/quantum.hpp"

namespace binv {

using Json = nlohmann::json;

// Games: {"players": n, "types": [[labels]...], "actions": [[labels]...],
//         "prior": [{"t": [...], "p": x}...],
//         "payoffs": [{"t": [...], "a": [...], "v": [x per player]}...]}.
// Omitted prior entries are zero; omitted payoff entries are an error.
Json game_to_json(const BayesianGame& game);
BayesianGame game_from_json(const Json& j);

// Correlations: {"inputs": [sizes], "outputs": [sizes],
//                "entries": [{"r": [...], "s": [...], "p": x}...]};
// omitted entries are zero.
Json correlation_to_json(const Correlation& q);
Correlation correlation_from_json(const Json& j);

// Communication solutions: the device correlation plus strategy tables and
// per-player randomness.
Json solution_to_json(const Solution& sol);
Solution solution_from_json(const Json& j);

// Standard-form distributions:
// {"types": [sizes], "actions": [sizes],
//  "entries": [{"sigma": [[action per type] per player], "p": x}...]}.
Json standard_form_to_json(const StandardFormDistribution& w);
StandardFormDistribution standard_form_from_json(const Json& j);

// Quantum solutions: {"dims": [...], "rho": [[[re,im]...]...],
//                     "measurements": [player][type][outcome] -> matrix}.
// Doubles round-trip exactly through the decimal encoding.
Json quantum_to_json(const QuantumSolution& q);
QuantumSolution quantum_from_json(const Json& j);

Json validation_to_json(const ValidationReport& report);
Json equilibrium_report_to_json(const EquilibriumReport& report);
Json optimization_result_to_json(const OptimizationResult& result);
Json classification_to_json(const ClassificationReport& report);
Json mermin_to_json(const catalog::MerminQuantities& q);

std::string objective_to_string(const SocialObjective& objective);
SocialObjective objective_from_string(const std::string& text);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace binv

#endif  // BINV_JSON_IO_HPP

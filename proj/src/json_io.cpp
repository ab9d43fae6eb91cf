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

#include "binv/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace binv {

namespace {

std::vector<int> int_list(const Json& j) {
  std::vector<int> out;
  for (const auto& v : j) out.push_back(v.get<int>());
  return out;
}

Json labels_or_defaults(const std::vector<std::vector<std::string>>& labels,
                        const std::vector<int>& sizes) {
  Json out = Json::array();
  for (size_t i = 0; i < sizes.size(); ++i) {
    Json one = Json::array();
    for (int k = 0; k < sizes[i]; ++k) {
      if (i < labels.size() && k < static_cast<int>(labels[i].size()))
        one.push_back(labels[i][k]);
      else
        one.push_back(std::to_string(k));
    }
    out.push_back(one);
  }
  return out;
}

ComplexMatrix matrix_from_json(const Json& j) {
  int rows = static_cast<int>(j.size());
  int cols = rows > 0 ? static_cast<int>(j[0].size()) : 0;
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols)
      throw std::invalid_argument("matrix rows have uneven length");
    for (int k = 0; k < cols; ++k)
      m.at(i, k) = Complex(j[i][k][0].get<double>(), j[i][k][1].get<double>());
  }
  return m;
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.cols; ++k)
      row.push_back(Json::array({m.at(i, k).real(), m.at(i, k).imag()}));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

Json game_to_json(const BayesianGame& game) {
  Json j;
  j["players"] = game.num_players();
  j["types"] = labels_or_defaults(game.type_labels, game.types().sizes());
  j["actions"] =
      labels_or_defaults(game.action_labels, game.actions().sizes());
  Json prior = Json::array();
  for (long t = 0; t < game.types().total(); ++t) {
    if (game.prior(t) == 0.0) continue;
    prior.push_back({{"t", game.types().decode(t)}, {"p", game.prior(t)}});
  }
  j["prior"] = prior;
  Json payoffs = Json::array();
  for (long t = 0; t < game.types().total(); ++t)
    for (long a = 0; a < game.actions().total(); ++a) {
      std::vector<double> v(game.num_players());
      for (int i = 0; i < game.num_players(); ++i) v[i] = game.payoff(i, t, a);
      payoffs.push_back({{"t", game.types().decode(t)},
                         {"a", game.actions().decode(a)},
                         {"v", v}});
    }
  j["payoffs"] = payoffs;
  return j;
}

BayesianGame game_from_json(const Json& j) {
  int n = j.at("players").get<int>();
  std::vector<std::vector<std::string>> type_labels, action_labels;
  std::vector<int> type_sizes, action_sizes;
  for (const auto& labels : j.at("types")) {
    type_labels.push_back(labels.get<std::vector<std::string>>());
    type_sizes.push_back(static_cast<int>(labels.size()));
  }
  for (const auto& labels : j.at("actions")) {
    action_labels.push_back(labels.get<std::vector<std::string>>());
    action_sizes.push_back(static_cast<int>(labels.size()));
  }
  if (static_cast<int>(type_sizes.size()) != n ||
      static_cast<int>(action_sizes.size()) != n)
    throw std::invalid_argument("game JSON: players " + std::to_string(n) +
                                " does not match alphabet lists");
  ProfileSpace types(type_sizes), actions(action_sizes);
  std::vector<double> prior(types.total(), 0.0);
  for (const auto& entry : j.at("prior")) {
    std::vector<int> t = int_list(entry.at("t"));
    prior[types.index(t)] = entry.at("p").get<double>();
  }
  std::vector<std::vector<double>> payoffs(
      n, std::vector<double>(types.total() * actions.total(), 0.0));
  std::vector<bool> seen(types.total() * actions.total(), false);
  for (const auto& entry : j.at("payoffs")) {
    std::vector<int> t = int_list(entry.at("t"));
    std::vector<int> a = int_list(entry.at("a"));
    long cell = types.index(t) * actions.total() + actions.index(a);
    const auto& v = entry.at("v");
    if (static_cast<int>(v.size()) != n)
      throw std::invalid_argument("game JSON: payoff vector length mismatch");
    for (int i = 0; i < n; ++i) payoffs[i][cell] = v[i].get<double>();
    seen[cell] = true;
  }
  for (long cell = 0; cell < static_cast<long>(seen.size()); ++cell)
    if (!seen[cell]) {
      long t = cell / actions.total(), a = cell % actions.total();
      throw std::invalid_argument(
          "game JSON: missing payoff entry at t=(" +
          join_ints(types.decode(t)) + "), a=(" + join_ints(actions.decode(a)) +
          ")");
    }
  BayesianGame game(type_sizes, action_sizes, std::move(prior),
                    std::move(payoffs));
  game.type_labels = std::move(type_labels);
  game.action_labels = std::move(action_labels);
  return game;
}

Json correlation_to_json(const Correlation& q) {
  Json j;
  j["inputs"] = q.inputs().sizes();
  j["outputs"] = q.outputs().sizes();
  Json entries = Json::array();
  for (long r = 0; r < q.inputs().total(); ++r)
    for (long s = 0; s < q.outputs().total(); ++s) {
      if (q.at(r, s) == 0.0) continue;
      entries.push_back({{"r", q.inputs().decode(r)},
                         {"s", q.outputs().decode(s)},
                         {"p", q.at(r, s)}});
    }
  j["entries"] = entries;
  return j;
}

Correlation correlation_from_json(const Json& j) {
  Correlation q(int_list(j.at("inputs")), int_list(j.at("outputs")));
  for (const auto& entry : j.at("entries")) {
    std::vector<int> r = int_list(entry.at("r"));
    std::vector<int> s = int_list(entry.at("s"));
    q.set(r, s, entry.at("p").get<double>());
  }
  return q;
}

Json solution_to_json(const Solution& sol) {
  Json j;
  j["device"] = correlation_to_json(sol.device);
  j["types"] = sol.type_sizes;
  j["actions"] = sol.action_sizes;
  j["randomness"] = sol.randomness;
  j["input_map"] = sol.input_map;
  j["output_map"] = sol.output_map;
  return j;
}

Solution solution_from_json(const Json& j) {
  Solution sol{correlation_from_json(j.at("device")),
               int_list(j.at("types")),
               int_list(j.at("actions")),
               j.at("randomness").get<std::vector<std::vector<double>>>(),
               j.at("input_map")
                   .get<std::vector<std::vector<std::vector<int>>>>(),
               j.at("output_map")
                   .get<std::vector<std::vector<std::vector<std::vector<int>>>>>()};
  ValidationReport report = sol.validate();
  if (!report.valid)
    throw std::invalid_argument("solution JSON: " + report.issues.front());
  return sol;
}

Json standard_form_to_json(const StandardFormDistribution& w) {
  Json j;
  j["types"] = w.type_sizes;
  j["actions"] = w.action_sizes;
  ProfileSpace sigmas = w.strategy_space();
  Json entries = Json::array();
  for (long g = 0; g < sigmas.total(); ++g) {
    if (w.weights[g] == 0.0) continue;
    std::vector<int> sp = sigmas.decode(g);
    Json sigma = Json::array();
    for (size_t i = 0; i < w.type_sizes.size(); ++i) {
      std::vector<int> fn(w.type_sizes[i]);
      for (int t = 0; t < w.type_sizes[i]; ++t)
        fn[t] = function_value(sp[i], t, w.action_sizes[i]);
      sigma.push_back(fn);
    }
    entries.push_back({{"sigma", sigma}, {"p", w.weights[g]}});
  }
  j["entries"] = entries;
  return j;
}

StandardFormDistribution standard_form_from_json(const Json& j) {
  StandardFormDistribution w;
  w.type_sizes = int_list(j.at("types"));
  w.action_sizes = int_list(j.at("actions"));
  ProfileSpace sigmas = w.strategy_space();
  w.weights.assign(sigmas.total(), 0.0);
  for (const auto& entry : j.at("entries")) {
    const auto& sigma = entry.at("sigma");
    if (sigma.size() != w.type_sizes.size())
      throw std::invalid_argument("standard form JSON: player count mismatch");
    std::vector<int> profile(w.type_sizes.size());
    for (size_t i = 0; i < w.type_sizes.size(); ++i) {
      std::vector<int> fn = int_list(sigma[i]);
      if (static_cast<int>(fn.size()) != w.type_sizes[i])
        throw std::invalid_argument(
            "standard form JSON: strategy not total on types");
      long idx = 0;
      for (int t = w.type_sizes[i] - 1; t >= 0; --t) {
        if (fn[t] < 0 || fn[t] >= w.action_sizes[i])
          throw std::invalid_argument("standard form JSON: action range");
        idx = idx * w.action_sizes[i] + fn[t];
      }
      profile[i] = static_cast<int>(idx);
    }
    w.weights[sigmas.index(profile)] += entry.at("p").get<double>();
  }
  return w;
}

Json quantum_to_json(const QuantumSolution& q) {
  Json j;
  j["dims"] = q.dims();
  j["rho"] = matrix_to_json(q.state.matrix);
  Json players = Json::array();
  for (const auto& per_type : q.measurements) {
    Json types = Json::array();
    for (const Povm& povm : per_type) {
      Json outcomes = Json::array();
      for (const ComplexMatrix& e : povm.elements)
        outcomes.push_back(matrix_to_json(e));
      types.push_back(outcomes);
    }
    players.push_back(types);
  }
  j["measurements"] = players;
  return j;
}

QuantumSolution quantum_from_json(const Json& j) {
  QuantumSolution q;
  q.state.dims = int_list(j.at("dims"));
  q.state.matrix = matrix_from_json(j.at("rho"));
  for (const auto& types : j.at("measurements")) {
    std::vector<Povm> per_type;
    for (const auto& outcomes : types) {
      Povm povm;
      for (const auto& m : outcomes) povm.elements.push_back(matrix_from_json(m));
      per_type.push_back(std::move(povm));
    }
    q.measurements.push_back(std::move(per_type));
  }
  return q;
}

Json validation_to_json(const ValidationReport& report) {
  return Json{{"valid", report.valid}, {"issues", report.issues}};
}

namespace {

Json deviation_to_json(const DeviationSpec& d) {
  Json j;
  j["player"] = d.player;
  if (d.type >= 0) j["type"] = d.type;
  if (d.misreport >= 0) j["misreport"] = d.misreport;
  if (!d.relabel.empty()) j["relabel"] = d.relabel;
  if (d.sigma_recommended >= 0) {
    j["sigma_recommended"] = d.sigma_recommended;
    j["sigma_alternative"] = d.sigma_alternative;
  }
  return j;
}

}  // namespace

Json equilibrium_report_to_json(const EquilibriumReport& report) {
  Json j;
  j["class"] = report.equilibrium_class;
  j["holds"] = report.holds;
  j["margin"] = report.margin;
  j["payoffs"] = report.payoffs;
  j["worst_deviation"] = deviation_to_json(report.worst);
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

Json optimization_result_to_json(const OptimizationResult& result) {
  Json j;
  j["class"] = result.opt_class;
  j["objective"] = objective_to_string(result.objective);
  j["value"] = result.value;
  if (!result.exact_value.empty()) j["exact_value"] = result.exact_value;
  j["witness"] = correlation_to_json(result.witness);
  if (result.witness_standard_form)
    j["witness_standard_form"] =
        standard_form_to_json(*result.witness_standard_form);
  return j;
}

Json classification_to_json(const ClassificationReport& report) {
  Json ns;
  ns["holds"] = report.non_signalling.belief_invariant;
  ns["worst_violation"] = report.non_signalling.worst_violation;
  if (report.non_signalling.witness.player >= 0) {
    ns["witness"] = {{"player", report.non_signalling.witness.player},
                     {"r", report.non_signalling.witness.input},
                     {"r_alt", report.non_signalling.witness.input_alt}};
  }
  Json j;
  j["non_signalling"] = ns;
  j["product"] = report.product;
  j["local"] = report.local;
  j["local_within_budget"] = report.local_within_budget;
  return j;
}

Json mermin_to_json(const catalog::MerminQuantities& q) {
  return Json{{"P", q.p}, {"M", q.m}};
}

std::string objective_to_string(const SocialObjective& objective) {
  switch (objective.kind) {
    case SocialObjective::Kind::SocialWelfare: return "sw";
    case SocialObjective::Kind::SinglePlayer:
      return "player:" + std::to_string(objective.player);
    case SocialObjective::Kind::Weighted: {
      std::ostringstream os;
      os << "w:";
      for (size_t i = 0; i < objective.weights.size(); ++i)
        os << (i ? "," : "") << objective.weights[i];
      return os.str();
    }
  }
  return "sw";
}

SocialObjective objective_from_string(const std::string& text) {
  if (text.empty() || text == "sw") return SocialObjective::sw();
  if (text.rfind("player:", 0) == 0)
    return SocialObjective::single(std::stoi(text.substr(7)));
  if (text.rfind("w:", 0) == 0) {
    std::vector<double> weights;
    std::stringstream ss(text.substr(2));
    std::string item;
    while (std::getline(ss, item, ',')) weights.push_back(std::stod(item));
    return SocialObjective::weighted(std::move(weights));
  }
  throw std::invalid_argument("unknown objective: " + text +
                              " (expected sw, player:<i>, or w:<list>)");
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace binv

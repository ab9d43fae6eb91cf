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

#include "binv/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "binv/json_io.hpp"

namespace binv {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

std::string fmt_payoffs(const PayoffVector& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + fmt(v[i]);
  return out + ")";
}

double default_epsilon() {
  if (const char* env = std::getenv("EPSILON")) {
    try {
      return std::stod(env);
    } catch (...) {
      throw std::invalid_argument("EPSILON environment variable is not a number");
    }
  }
  return 0.1;
}

struct Args {
  std::string game_file, correlation_file, standard_form_file, solution_file;
  std::string klass, objective = "sw", dump_lp, out_file, name;
  double tol = 1e-8;
  double epsilon = -1.0;  // resolved against EPSILON env below
  bool json = false;
  bool exact = false;
  bool exhaustive = false;
  long local_budget = 1000000;
};

void emit(const Json& j, bool json_mode, std::ostream& out,
          const std::string& human) {
  if (json_mode)
    out << j.dump(2) << "\n";
  else
    out << human;
}

int cmd_validate(const Args& a, std::ostream& out) {
  ValidationReport report;
  if (!a.game_file.empty()) {
    report = validate_game(game_from_json(load_json_file(a.game_file)));
  } else if (!a.correlation_file.empty()) {
    report = correlation_from_json(load_json_file(a.correlation_file))
                 .validate();
  } else if (!a.solution_file.empty()) {
    report = validate_quantum_solution(
        quantum_from_json(load_json_file(a.solution_file)));
  } else {
    throw CLI::ValidationError(
        "validate needs --game, --correlation or --solution");
  }
  std::string human = report.valid ? "valid\n" : "invalid\n";
  for (const auto& issue : report.issues) human += "  " + issue + "\n";
  emit(validation_to_json(report), a.json, out, human);
  return report.valid ? 0 : 2;
}

int cmd_payoff(const Args& a, std::ostream& out) {
  BayesianGame game = game_from_json(load_json_file(a.game_file));
  Correlation q = correlation_from_json(load_json_file(a.correlation_file));
  SocialObjective objective = objective_from_string(a.objective);
  PayoffVector payoffs = expected_payoffs(game, q);
  double social = social_payoff(game, q, objective);
  Json j{{"payoffs", payoffs},
         {"objective", objective_to_string(objective)},
         {"social", social}};
  emit(j, a.json, out,
       "payoffs " + fmt_payoffs(payoffs) + "\n" +
           objective_to_string(objective) + " = " + fmt(social) + "\n");
  return 0;
}

int cmd_classify(const Args& a, std::ostream& out) {
  Correlation q = correlation_from_json(load_json_file(a.correlation_file));
  ValidationReport valid = q.validate();
  if (!valid.valid)
    throw std::invalid_argument("correlation invalid: " + valid.issues.front());
  ClassificationReport report = classify(q, a.tol, a.local_budget);
  if (a.exhaustive)
    report.non_signalling = is_belief_invariant(q, a.tol, true);
  std::string human;
  human += std::string("non-signalling: ") +
           (report.non_signalling.belief_invariant ? "yes" : "no") +
           " (worst violation " + fmt(report.non_signalling.worst_violation) +
           ")\n";
  human += std::string("product:        ") + (report.product ? "yes" : "no") +
           "\n";
  human += std::string("local:          ");
  human += report.local_within_budget ? (report.local ? "yes" : "no")
                                      : "budget exceeded";
  human += "\n";
  emit(classification_to_json(report), a.json, out, human);
  return 0;
}

int cmd_verify(const Args& a, std::ostream& out) {
  BayesianGame game = game_from_json(load_json_file(a.game_file));
  EquilibriumReport report;
  if (a.klass == "correlated") {
    if (a.standard_form_file.empty())
      throw CLI::ValidationError(
          "verify --class correlated needs --standard-form");
    report = verify_correlated_standard(
        game, standard_form_from_json(load_json_file(a.standard_form_file)),
        a.tol);
  } else {
    if (a.correlation_file.empty())
      throw CLI::ValidationError("verify needs --correlation");
    Correlation q = correlation_from_json(load_json_file(a.correlation_file));
    if (a.klass == "comm")
      report = verify_comm_equilibrium(game, q, a.tol);
    else if (a.klass == "binv")
      report = verify_binv_equilibrium(game, q, a.tol);
    else if (a.klass == "nash")
      report = verify_nash(game, q, a.tol);
    else
      throw CLI::ValidationError("unknown class: " + a.klass);
  }
  std::string human = report.equilibrium_class + " equilibrium: " +
                      (report.holds ? "yes" : "no") + "\n" +
                      "margin  " + fmt(report.margin) + "\n" + "payoffs " +
                      fmt_payoffs(report.payoffs) + "\n";
  if (!report.holds && report.worst.player >= 0)
    human += "worst deviation: player " + std::to_string(report.worst.player) +
             "\n";
  emit(equilibrium_report_to_json(report), a.json, out, human);
  return report.holds ? 0 : 2;
}

int cmd_optimize(const Args& a, std::ostream& out) {
  BayesianGame game = game_from_json(load_json_file(a.game_file));
  SocialObjective objective = objective_from_string(a.objective);
  OptimizeOptions opts;
  opts.exact = a.exact;

  if (!a.dump_lp.empty()) {
    LinearProgram lp;
    if (a.klass == "comm")
      lp = build_comm_lp(game, objective);
    else if (a.klass == "binv")
      lp = build_binv_lp(game, objective);
    else if (a.klass == "correlated")
      lp = build_correlated_lp(game, objective, opts.profile_budget);
    else if (a.klass == "binv-value")
      lp = build_ns_value_lp(game);
    else
      throw CLI::ValidationError("no LP dump for class: " + a.klass);
    std::ofstream f(a.dump_lp);
    if (!f) throw std::runtime_error("cannot write " + a.dump_lp);
    f << dump_lp(lp);
  }

  if (a.klass == "zero-sum") {
    ZeroSumResult r = zero_sum_value(game, opts);
    Json j{{"class", "zero-sum"},
           {"value1", r.value1},
           {"value2", r.value2},
           {"maximin1", r.maximin1},
           {"maximin2", r.maximin2}};
    emit(j, a.json, out,
         "guaranteed values (" + fmt(r.value1) + ", " + fmt(r.value2) + ")\n");
    return 0;
  }

  OptimizationResult result;
  if (a.klass == "comm")
    result = max_obj_comm(game, objective, opts);
  else if (a.klass == "binv")
    result = max_obj_binv(game, objective, opts);
  else if (a.klass == "correlated")
    result = max_obj_correlated(game, objective, opts);
  else if (a.klass == "binv-value")
    result = binv_value_full_coordination(game, opts);
  else if (a.klass == "local-value")
    result = local_value_full_coordination(game, opts);
  else
    throw CLI::ValidationError("unknown class: " + a.klass);

  std::string human = result.opt_class + " optimum (" +
                      objective_to_string(result.objective) +
                      ") = " + fmt(result.value);
  if (!result.exact_value.empty()) human += " (= " + result.exact_value + ")";
  human += "\n";
  emit(optimization_result_to_json(result), a.json, out, human);
  return 0;
}

int cmd_quantum_eval(const Args& a, std::ostream& out) {
  BayesianGame game = game_from_json(load_json_file(a.game_file));
  QuantumSolution qsol = quantum_from_json(load_json_file(a.solution_file));
  ValidationReport valid = validate_quantum_solution(qsol);
  if (!valid.valid) {
    emit(validation_to_json(valid), a.json, out,
         "invalid quantum solution: " + valid.issues.front() + "\n");
    return 2;
  }
  EquilibriumReport report = verify_quantum_equilibrium(game, qsol, a.tol);
  Json j = equilibrium_report_to_json(report);
  Json types = Json::array();
  for (const QuantumTypeAnalysis& t : quantum_deviation_analysis(game, qsol))
    types.push_back({{"player", t.player},
                     {"type", t.type},
                     {"on_path", t.on_path},
                     {"best_deviation", t.best_value}});
  j["per_type"] = types;
  std::string human = std::string("equilibrium: ") +
                      (report.holds ? "yes" : "no") + "\n" + "payoffs " +
                      fmt_payoffs(report.payoffs) + "\nmargin  " +
                      fmt(report.margin) + "\n";
  emit(j, a.json, out, human);
  return report.holds ? 0 : 2;
}

int cmd_catalog_emit(const Args& a, std::ostream& out) {
  double eps = a.epsilon >= 0 ? a.epsilon : default_epsilon();
  Json j;
  bool found = false;
  for (const std::string& name : catalog::game_names())
    if (name == a.name) {
      j = game_to_json(catalog::game_by_name(name, eps));
      found = true;
    }
  if (!found)
    for (const std::string& name : catalog::correlation_names())
      if (name == a.name) {
        j = correlation_to_json(catalog::reference_correlation(name, eps));
        found = true;
      }
  if (!found)
    for (const std::string& name : catalog::standard_form_names())
      if (name == a.name) {
        j = standard_form_to_json(catalog::reference_standard_form(name));
        found = true;
      }
  if (!found)
    throw std::invalid_argument("unknown catalog name: " + a.name);
  if (!a.out_file.empty()) {
    save_json_file(a.out_file, j);
    out << "wrote " << a.out_file << "\n";
  } else {
    out << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_catalog_list(std::ostream& out) {
  out << "games:\n";
  for (const auto& n : catalog::game_names()) out << "  " << n << "\n";
  out << "correlations:\n";
  for (const auto& n : catalog::correlation_names()) out << "  " << n << "\n";
  out << "standard forms:\n";
  for (const auto& n : catalog::standard_form_names()) out << "  " << n << "\n";
  return 0;
}

int cmd_mermin(const Args& a, std::ostream& out) {
  Correlation q = correlation_from_json(load_json_file(a.correlation_file));
  catalog::MerminQuantities m = catalog::mermin_quantities(q);
  emit(mermin_to_json(m), a.json, out,
       "P = " + fmt(m.p) + "\nM = " + fmt(m.m) + "\n");
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Bayesian games, correlation classes and equilibria"};
  app.require_subcommand(1);
  Args a;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", a.json, "machine-readable output");
    cmd->add_option("--tol", a.tol, "numerical tolerance");
  };

  CLI::App* validate = app.add_subcommand("validate", "check an artifact");
  validate->add_option("--game", a.game_file);
  validate->add_option("--correlation", a.correlation_file);
  validate->add_option("--solution", a.solution_file);
  add_common(validate);

  CLI::App* payoff = app.add_subcommand("payoff", "expected payoffs");
  payoff->add_option("--game", a.game_file)->required();
  payoff->add_option("--correlation", a.correlation_file)->required();
  payoff->add_option("--objective", a.objective);
  add_common(payoff);

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "correlation classes");
  classify_cmd->add_option("--correlation", a.correlation_file)->required();
  classify_cmd->add_flag("--exhaustive", a.exhaustive,
                         "check every subset of players");
  classify_cmd->add_option("--local-budget", a.local_budget);
  add_common(classify_cmd);

  CLI::App* verify = app.add_subcommand("verify", "equilibrium membership");
  verify->add_option("--game", a.game_file)->required();
  verify->add_option("--correlation", a.correlation_file);
  verify->add_option("--standard-form", a.standard_form_file);
  verify->add_option("--class", a.klass, "comm | binv | nash | correlated")
      ->required();
  add_common(verify);

  CLI::App* optimize = app.add_subcommand("optimize", "optimal equilibria");
  optimize->add_option("--game", a.game_file)->required();
  optimize
      ->add_option("--class", a.klass,
                   "comm | binv | correlated | binv-value | local-value | "
                   "zero-sum")
      ->required();
  optimize->add_option("--objective", a.objective);
  optimize->add_flag("--exact", a.exact, "rational tableau, exact fractions");
  optimize->add_option("--dump-lp", a.dump_lp, "write the LP in text form");
  add_common(optimize);

  CLI::App* quantum =
      app.add_subcommand("quantum-eval", "quantum equilibrium check");
  quantum->add_option("--game", a.game_file)->required();
  quantum->add_option("--solution", a.solution_file)->required();
  add_common(quantum);

  CLI::App* cat = app.add_subcommand("catalog", "built-in games");
  CLI::App* cat_emit = cat->add_subcommand("emit", "write an artifact");
  cat_emit->add_option("name", a.name)->required();
  cat_emit->add_option("--epsilon", a.epsilon);
  cat_emit->add_option("--out", a.out_file);
  CLI::App* cat_list = cat->add_subcommand("list", "list names");
  cat->require_subcommand(1);

  CLI::App* mermin = app.add_subcommand("mermin", "Mermin quantities");
  mermin->add_option("--correlation", a.correlation_file)->required();
  add_common(mermin);

  std::vector<const char*> argv;
  argv.push_back("binv");
  for (const std::string& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*validate) return cmd_validate(a, out);
    if (*payoff) return cmd_payoff(a, out);
    if (*classify_cmd) return cmd_classify(a, out);
    if (*verify) return cmd_verify(a, out);
    if (*optimize) return cmd_optimize(a, out);
    if (*quantum) return cmd_quantum_eval(a, out);
    if (*cat_emit) return cmd_catalog_emit(a, out);
    if (*cat_list) return cmd_catalog_list(out);
    if (*mermin) return cmd_mermin(a, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 1;
}

}  // namespace binv

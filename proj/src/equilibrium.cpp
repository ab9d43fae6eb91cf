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

#include "binv/equilibrium.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace binv {

namespace {

void check_canonical(const BayesianGame& game, const Correlation& q) {
  if (q.inputs().sizes() != game.types().sizes() ||
      q.outputs().sizes() != game.actions().sizes())
    throw std::invalid_argument(
        "equilibrium check: correlation is not canonical for this game");
}

// On-path conditional value of player i at type t_i (prior-weighted).
double on_path_value(const BayesianGame& game, const Correlation& q,
                     int player, int type) {
  double v = 0.0;
  for (long t = 0; t < game.types().total(); ++t) {
    if (game.types().decode(t)[player] != type) continue;
    double pt = game.prior(t);
    if (pt == 0.0) continue;
    for (long a = 0; a < game.actions().total(); ++a)
      v += pt * q.at(t, a) * game.payoff(player, t, a);
  }
  return v;
}

// Value of reporting `misreport` and playing alpha(suggestion) at type t_i,
// with everyone else truthful and obedient.
double deviation_value(const BayesianGame& game, const Correlation& q,
                       int player, int type, int misreport,
                       long alpha_index) {
  int num_actions = game.actions().size(player);
  double v = 0.0;
  for (long t = 0; t < game.types().total(); ++t) {
    std::vector<int> tp = game.types().decode(t);
    if (tp[player] != type) continue;
    double pt = game.prior(t);
    if (pt == 0.0) continue;
    long reported = game.types().with_coordinate(tp, player, misreport);
    for (long a = 0; a < game.actions().total(); ++a) {
      double qa = q.at(reported, a);
      if (qa == 0.0) continue;
      std::vector<int> ap = game.actions().decode(a);
      int played = function_value(alpha_index, ap[player], num_actions);
      long a_played = game.actions().with_coordinate(ap, player, played);
      v += pt * qa * game.payoff(player, t, a_played);
    }
  }
  return v;
}

}  // namespace

std::pair<DeviationSpec, double> best_classical_deviation(
    const BayesianGame& game, const Correlation& q, int player) {
  check_canonical(game, q);
  int num_actions = game.actions().size(player);
  long relabel_count = function_count(num_actions, num_actions);
  DeviationSpec best;
  double best_gain = -std::numeric_limits<double>::infinity();
  for (int type = 0; type < game.types().size(player); ++type) {
    if (game.type_marginal(player, type) <= 0.0) continue;  // vacuous
    double on_path = on_path_value(game, q, player, type);
    for (int report = 0; report < game.types().size(player); ++report) {
      for (long alpha = 0; alpha < relabel_count; ++alpha) {
        double gain =
            deviation_value(game, q, player, type, report, alpha) - on_path;
        if (gain > best_gain + 1e-15) {
          best_gain = gain;
          best.player = player;
          best.type = type;
          best.misreport = report;
          best.relabel.assign(num_actions, 0);
          for (int a = 0; a < num_actions; ++a)
            best.relabel[a] = function_value(alpha, a, num_actions);
        }
      }
    }
  }
  if (best.player < 0) {  // every type had zero marginal
    best.player = player;
    best_gain = 0.0;
  }
  return {best, best_gain};
}

EquilibriumReport verify_comm_equilibrium(const BayesianGame& game,
                                          const Correlation& q, double tol) {
  check_canonical(game, q);
  EquilibriumReport report;
  report.equilibrium_class = "comm";
  report.payoffs = expected_payoffs(game, q);
  report.margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < game.num_players(); ++i) {
    auto [spec, gain] = best_classical_deviation(game, q, i);
    if (-gain < report.margin) {
      report.margin = -gain;
      report.worst = spec;
    }
  }
  if (!std::isfinite(report.margin)) report.margin = 0.0;
  report.holds = report.margin >= -tol;
  return report;
}

EquilibriumReport verify_binv_equilibrium(const BayesianGame& game,
                                          const Correlation& q, double tol) {
  EquilibriumReport report = verify_comm_equilibrium(game, q, tol);
  report.equilibrium_class = "binv";
  BeliefInvarianceResult bi = is_belief_invariant(q, tol);
  if (!bi.belief_invariant) {
    report.note = "correlation signals: player " +
                  std::to_string(bi.witness.player) + " marginal moves by " +
                  std::to_string(bi.worst_violation) + " under input change";
  }
  report.margin = std::min(report.margin, -bi.worst_violation);
  report.holds = report.holds && bi.belief_invariant;
  return report;
}

PayoffVector standard_form_payoffs(const BayesianGame& game,
                                   const StandardFormDistribution& w) {
  ProfileSpace sigmas = w.strategy_space();
  PayoffVector out(game.num_players(), 0.0);
  for (long g = 0; g < sigmas.total(); ++g) {
    if (w.weights[g] == 0.0) continue;
    std::vector<int> sp = sigmas.decode(g);
    for (long t = 0; t < game.types().total(); ++t) {
      double pt = game.prior(t);
      if (pt == 0.0) continue;
      std::vector<int> tp = game.types().decode(t);
      std::vector<int> a(game.num_players());
      for (int i = 0; i < game.num_players(); ++i)
        a[i] = function_value(sp[i], tp[i], game.actions().size(i));
      long ai = game.actions().index(a);
      for (int i = 0; i < game.num_players(); ++i)
        out[i] += w.weights[g] * pt * game.payoff(i, t, ai);
    }
  }
  return out;
}

Correlation standard_form_correlation(const BayesianGame& game,
                                      const StandardFormDistribution& w) {
  ProfileSpace sigmas = w.strategy_space();
  Correlation out(game.types().sizes(), game.actions().sizes());
  for (long g = 0; g < sigmas.total(); ++g) {
    if (w.weights[g] == 0.0) continue;
    std::vector<int> sp = sigmas.decode(g);
    for (long t = 0; t < game.types().total(); ++t) {
      std::vector<int> tp = game.types().decode(t);
      std::vector<int> a(game.num_players());
      for (int i = 0; i < game.num_players(); ++i)
        a[i] = function_value(sp[i], tp[i], game.actions().size(i));
      long ai = game.actions().index(a);
      out.set(t, ai, out.at(t, ai) + w.weights[g]);
    }
  }
  return out;
}

EquilibriumReport verify_correlated_standard(const BayesianGame& game,
                                             const StandardFormDistribution& w,
                                             double tol) {
  if (w.type_sizes != game.types().sizes() ||
      w.action_sizes != game.actions().sizes())
    throw std::invalid_argument("standard form alphabets mismatch the game");
  ProfileSpace sigmas = w.strategy_space();
  if (static_cast<long>(w.weights.size()) != sigmas.total())
    throw std::invalid_argument("standard form weight vector size mismatch");
  double mass = 0.0;
  for (double p : w.weights) {
    if (p < -kProbTolerance)
      throw std::invalid_argument("standard form has a negative weight");
    mass += p;
  }
  if (std::abs(mass - 1.0) > kProbTolerance)
    throw std::invalid_argument("standard form weights sum to " +
                                std::to_string(mass));

  EquilibriumReport report;
  report.equilibrium_class = "correlated";
  report.payoffs = standard_form_payoffs(game, w);
  report.margin = std::numeric_limits<double>::infinity();

  int n = game.num_players();
  // u_i(sigma) tables over joint strategy profiles.
  std::vector<std::vector<double>> u(n,
                                     std::vector<double>(sigmas.total(), 0.0));
  for (long g = 0; g < sigmas.total(); ++g) {
    std::vector<int> sp = sigmas.decode(g);
    for (long t = 0; t < game.types().total(); ++t) {
      double pt = game.prior(t);
      if (pt == 0.0) continue;
      std::vector<int> tp = game.types().decode(t);
      std::vector<int> a(n);
      for (int i = 0; i < n; ++i)
        a[i] = function_value(sp[i], tp[i], game.actions().size(i));
      long ai = game.actions().index(a);
      for (int i = 0; i < n; ++i) u[i][g] += pt * game.payoff(i, t, ai);
    }
  }

  for (int i = 0; i < n; ++i) {
    long count_i = sigmas.size(i);
    for (long rec = 0; rec < count_i; ++rec) {
      for (long alt = 0; alt < count_i; ++alt) {
        // slack = sum over sigma_{-i} of w(rec, sigma_{-i}) *
        //         (u_i(rec, sigma_{-i}) - u_i(alt, sigma_{-i})).
        double slack = 0.0;
        for (long g = 0; g < sigmas.total(); ++g) {
          std::vector<int> sp = sigmas.decode(g);
          if (sp[i] != rec) continue;
          double wg = w.weights[g];
          if (wg == 0.0) continue;
          long g_alt =
              sigmas.with_coordinate(sp, i, static_cast<int>(alt));
          slack += wg * (u[i][g] - u[i][g_alt]);
        }
        if (slack < report.margin) {
          report.margin = slack;
          report.worst = DeviationSpec{};
          report.worst.player = i;
          report.worst.sigma_recommended = rec;
          report.worst.sigma_alternative = alt;
        }
      }
    }
  }
  if (!std::isfinite(report.margin)) report.margin = 0.0;
  report.holds = report.margin >= -tol;
  return report;
}

EquilibriumReport verify_nash(const BayesianGame& game, const Correlation& q,
                              double tol) {
  EquilibriumReport report = verify_comm_equilibrium(game, q, tol);
  report.equilibrium_class = "nash";
  double defect = product_defect(q);
  report.margin = std::min(report.margin, -defect);
  if (defect > tol) {
    report.holds = false;
    report.note = "correlation does not factorize into per-player strategies"
                  " (defect " + std::to_string(defect) + ")";
  }
  return report;
}

std::vector<QuantumTypeAnalysis> quantum_deviation_analysis(
    const BayesianGame& game, const QuantumSolution& qsol) {
  int n = game.num_players();
  if (qsol.num_players() != n)
    throw std::invalid_argument("quantum solution player count mismatch");
  for (int i = 0; i < n; ++i) {
    if (game.actions().size(i) != 2)
      throw std::invalid_argument(
          "quantum equilibrium check supports binary actions only");
    if (static_cast<int>(qsol.measurements[i].size()) !=
        game.types().size(i))
      throw std::invalid_argument("POVM table does not cover all types");
  }
  ValidationReport valid = validate_quantum_solution(qsol);
  if (!valid.valid)
    throw std::invalid_argument("invalid quantum solution: " +
                                valid.issues.front());

  std::vector<QuantumTypeAnalysis> out;
  for (int i = 0; i < n; ++i) {
    for (int type = 0; type < game.types().size(i); ++type) {
      if (game.type_marginal(i, type) <= 0.0) continue;
      // K_a = sum_{t_-i, a_-i} P(t) v_i(t, a_-i a) Tr_{!=i} rho (X x I_i).
      int di = qsol.dims()[i];
      std::vector<ComplexMatrix> k(2, ComplexMatrix(di, di));
      for (long t = 0; t < game.types().total(); ++t) {
        std::vector<int> tp = game.types().decode(t);
        if (tp[i] != type) continue;
        double pt = game.prior(t);
        if (pt == 0.0) continue;
        // Enumerate the other players' outcomes.
        std::vector<int> other_sizes;
        for (int j = 0; j < n; ++j)
          if (j != i) other_sizes.push_back(game.actions().size(j));
        ProfileSpace others(other_sizes.empty() ? std::vector<int>{1}
                                                : other_sizes);
        for (long o = 0; o < others.total(); ++o) {
          std::vector<int> op = others.decode(o);
          // Joint operator with identity in slot i.
          ComplexMatrix joint(1, 1);
          joint.at(0, 0) = 1.0;
          int oi = 0;
          std::vector<int> a_profile(n, 0);
          for (int j = 0; j < n; ++j) {
            ComplexMatrix factor =
                j == i ? ComplexMatrix::identity(di)
                       : qsol.measurements[j][tp[j]].elements[op[oi]];
            if (j != i) a_profile[j] = op[oi++];
            joint = tensor(joint, factor);
          }
          ComplexMatrix cond =
              partial_trace(qsol.state.matrix * joint, qsol.dims(), i);
          // Hermitize; the pairing tr(K N) only sees the Hermitian part.
          ComplexMatrix herm = 0.5 * (cond + cond.adjoint());
          for (int my_a = 0; my_a < 2; ++my_a) {
            a_profile[i] = my_a;
            double weight =
                pt * game.payoff(i, t, game.actions().index(a_profile));
            if (weight == 0.0) continue;
            k[my_a] = k[my_a] + Complex(weight, 0) * herm;
          }
        }
      }
      QuantumTypeAnalysis analysis;
      analysis.player = i;
      analysis.type = type;
      // On-path: play the prescribed POVM.
      double on_path = 0.0;
      for (int a = 0; a < 2; ++a)
        on_path += std::real(
            (k[a] * qsol.measurements[i][type].elements[a]).trace());
      analysis.on_path = on_path;
      // Best deviation: max over 0 <= N <= I of tr K_0 N + tr K_1 (I - N)
      // = tr K_1 + sum of positive eigenvalues of K_0 - K_1.
      double best = std::real(k[1].trace());
      EigenDecomposition diff = hermitian_eigen(k[0] - k[1], 1e-8);
      for (double lambda : diff.eigenvalues)
        if (lambda > 0) best += lambda;
      analysis.best_value = best;
      out.push_back(analysis);
    }
  }
  return out;
}

EquilibriumReport verify_quantum_equilibrium(const BayesianGame& game,
                                             const QuantumSolution& qsol,
                                             double tol) {
  EquilibriumReport report;
  report.equilibrium_class = "quantum";
  report.payoffs = expected_payoffs(game, induced_correlation(qsol));
  report.margin = std::numeric_limits<double>::infinity();
  for (const QuantumTypeAnalysis& a :
       quantum_deviation_analysis(game, qsol)) {
    double slack = a.on_path - a.best_value;
    if (slack < report.margin) {
      report.margin = slack;
      report.worst = DeviationSpec{};
      report.worst.player = a.player;
      report.worst.type = a.type;
    }
  }
  if (!std::isfinite(report.margin)) report.margin = 0.0;
  report.holds = report.margin >= -tol;
  return report;
}

}  // namespace binv

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

#ifndef BINV_EQUILIBRIUM_HPP
#define BINV_EQUILIBRIUM_HPP

#include <string>
#include <vector>

#include "binv/correlation.hpp"
#include "binv/game.hpp"
#include "binv/quantum.hpp"

namespace binv {

// Distribution over profiles of pure Bayesian strategies sigma_i: T_i -> A_i
// (the mediator draws a profile and tells each player their function).
// Strategy indices encode sigma_i(t) as digit t, least significant first.
struct StandardFormDistribution {
  std::vector<int> type_sizes;
  std::vector<int> action_sizes;
  std::vector<double> weights;  // indexed by the strategy-profile space

  ProfileSpace strategy_space() const {
    std::vector<int> counts;
    for (size_t i = 0; i < type_sizes.size(); ++i)
      counts.push_back(static_cast<int>(
          function_count(type_sizes[i], action_sizes[i])));
    return ProfileSpace(counts);
  }
};

// One unilateral deviation. For canonical checks: player i of type `type`
// reports `misreport` and applies `relabel` (a map on suggested actions) to
// whatever the device suggests. For standard-form checks: player i told
// `sigma_recommended` plays `sigma_alternative` instead.
struct DeviationSpec {
  int player = -1;
  int type = -1;
  int misreport = -1;
  std::vector<int> relabel;
  long sigma_recommended = -1;
  long sigma_alternative = -1;
};

struct EquilibriumReport {
  std::string equilibrium_class;
  bool holds = false;
  // Minimum over all enumerated deviations of (on-path value - deviation
  // value); for composite classes the subclass defect enters negatively, so
  // holds == (margin >= -tol) in every report.
  double margin = 0.0;
  DeviationSpec worst;
  PayoffVector payoffs;
  std::string note;
};

// Canonical communication equilibrium: for every player i, type t_i with
// positive marginal, report r_i and relabeling alpha_i of the suggestion,
// truthful obedient play is at least as good.
EquilibriumReport verify_comm_equilibrium(const BayesianGame& game,
                                          const Correlation& q,
                                          double tol = 1e-8);

// Communication equilibrium whose correlation is belief-invariant.
EquilibriumReport verify_binv_equilibrium(const BayesianGame& game,
                                          const Correlation& q,
                                          double tol = 1e-8);

// Correlated equilibrium in standard form: the complete-information game on
// strategy sets A_i^{T_i} with u_i(sigma) = sum_t P(t) v_i(t, sigma(t)), with
// the usual conditional-obedience inequalities.
EquilibriumReport verify_correlated_standard(
    const BayesianGame& game, const StandardFormDistribution& w,
    double tol = 1e-8);

// Factorizing canonical communication equilibrium.
EquilibriumReport verify_nash(const BayesianGame& game, const Correlation& q,
                              double tol = 1e-8);

// Exhaustive best deviation for one player over (t_i, r_i, alpha_i); the gain
// is max(deviation - on-path), <= 0 exactly when the player's conditions
// hold. Ties break on the first (t_i, r_i, alpha-index) in scan order.
std::pair<DeviationSpec, double> best_classical_deviation(
    const BayesianGame& game, const Correlation& q, int player);

// Quantum correlated equilibrium via the binary-action closed form: for each
// (i, t_i) the best deviating POVM value is tr K_1 + sum of the positive
// eigenvalues of K_0 - K_1, where K_a collects the payoff-weighted
// conditional operators on subsystem i. Action sets larger than 2 are
// rejected.
EquilibriumReport verify_quantum_equilibrium(const BayesianGame& game,
                                             const QuantumSolution& qsol,
                                             double tol = 1e-8);

// Per-(player, type) deviation analysis behind the quantum verifier.
struct QuantumTypeAnalysis {
  int player = 0;
  int type = 0;
  double on_path = 0.0;     // prior-weighted conditional payoff
  double best_value = 0.0;  // closed-form optimum over deviating POVMs
};
std::vector<QuantumTypeAnalysis> quantum_deviation_analysis(
    const BayesianGame& game, const QuantumSolution& qsol);

// Expected payoffs of a standard-form distribution.
PayoffVector standard_form_payoffs(const BayesianGame& game,
                                   const StandardFormDistribution& w);

// Canonical correlation induced by a standard-form distribution:
// Q(a|t) = sum_sigma w(sigma) [sigma(t) = a].
Correlation standard_form_correlation(const BayesianGame& game,
                                      const StandardFormDistribution& w);

}  // namespace binv

#endif  // BINV_EQUILIBRIUM_HPP

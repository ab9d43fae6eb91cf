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

#ifndef BINV_OPTIMIZE_HPP
#define BINV_OPTIMIZE_HPP

#include <optional>
#include <string>
#include <vector>

#include "binv/equilibrium.hpp"
#include "binv/game.hpp"
#include "binv/simplex.hpp"

namespace binv {

struct OptimizeOptions {
  bool exact = false;          // rational tableau, certified fractions
  long max_denominator = 1000000;
  long profile_budget = 10000; // standard-form strategy profiles
  double tol = 1e-9;
};

struct OptimizationResult {
  std::string opt_class;
  double value = 0.0;
  std::string exact_value;  // nonempty in exact mode
  Correlation witness;
  std::optional<StandardFormDistribution> witness_standard_form;
  SocialObjective objective;
  LpStatus status = LpStatus::Optimal;
};

// LP builders, exposed for dumping and cross-checks. Variables are Q(a|t)
// ordered t-major.
LinearProgram build_comm_lp(const BayesianGame& game,
                            const SocialObjective& objective);
LinearProgram build_binv_lp(const BayesianGame& game,
                            const SocialObjective& objective);
LinearProgram build_correlated_lp(const BayesianGame& game,
                                  const SocialObjective& objective,
                                  long profile_budget = 10000);
LinearProgram build_ns_value_lp(const BayesianGame& game);

// Maximum of the objective over canonical communication equilibria.
OptimizationResult max_obj_comm(const BayesianGame& game,
                                const SocialObjective& objective,
                                const OptimizeOptions& opts = {});

// Same with the one-coordinate non-signalling equalities added.
OptimizationResult max_obj_binv(const BayesianGame& game,
                                const SocialObjective& objective,
                                const OptimizeOptions& opts = {});

// Maximum over standard-form correlated equilibria; the witness carries both
// the strategy-profile weights and the induced canonical correlation.
OptimizationResult max_obj_correlated(const BayesianGame& game,
                                      const SocialObjective& objective,
                                      const OptimizeOptions& opts = {});

// Full-coordination game value over the non-signalling polytope (no
// incentive constraints).
OptimizationResult binv_value_full_coordination(
    const BayesianGame& game, const OptimizeOptions& opts = {});

// Full-coordination game value over local correlations: exhaustive maximum
// over deterministic strategy profiles.
OptimizationResult local_value_full_coordination(
    const BayesianGame& game, const OptimizeOptions& opts = {});

struct ZeroSumResult {
  double value1 = 0.0;
  double value2 = 0.0;
  std::vector<double> maximin1;  // mixed strategy over A_1^{T_1}
  std::vector<double> maximin2;  // mixed strategy over A_2^{T_2}
};

// von Neumann-Morgenstern guaranteed values of a detected constant-sum game;
// v1 + v2 equals the prior-weighted constant.
ZeroSumResult zero_sum_value(const BayesianGame& game,
                             const OptimizeOptions& opts = {});

// Feasibility: is the canonical correlation Q the canonical representative of
// some standard-form correlated equilibrium of the game? Returns a witness
// distribution when it is.
std::optional<StandardFormDistribution> standard_form_membership(
    const BayesianGame& game, const Correlation& q, double tol = 1e-8,
    long profile_budget = 10000);

}  // namespace binv

#endif  // BINV_OPTIMIZE_HPP

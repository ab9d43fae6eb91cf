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

#ifndef BINV_CATALOG_HPP
#define BINV_CATALOG_HPP

#include <array>
#include <string>
#include <vector>

#include "binv/correlation.hpp"
#include "binv/equilibrium.hpp"
#include "binv/game.hpp"

namespace binv {
namespace catalog {

// Two-player XOR-style coordination game: binary uniform types, match wins
// when t1*t2 = 0, mismatch wins when t1*t2 = 1.
BayesianGame chsh();

// Conflict-of-interest variant: coordination favors one player per cell,
// anti-coordination pays (3/4, 3/4).
BayesianGame pappa();

// Three-player conflict game on the GHZ predicate. Types from
// {(0,0,1),(0,1,0),(1,0,0)} w.p. 1/6 and (1,1,1) w.p. 1/2; losing whenever
// tau != a1+a2+a3 mod 2, matchers of tau get epsilon, others 1.
BayesianGame ghz_conflict(double epsilon);

// Variant with uniform prior over the four valid triples and payoff
// delta = (2+epsilon)/3 in the all-matcher cells.
BayesianGame ghz_mermin(double epsilon);

// Full-coordination GHZ predicate game (win = 1), uniform prior over the
// four valid triples.
BayesianGame ghz_predicate();

// Prisoners-dilemma / anti-coordination hybrid with uniform binary types.
BayesianGame pd_coordination(double epsilon);

// Two-route congestion game with CHSH structure; payoffs are negated costs
// (3/2 on the preferred coordination pattern, 2 otherwise).
BayesianGame congestion_chsh();

// The same game derived literally from the two-leg network (load cost x on
// the s1 legs, constant 1 on the s0 legs, 1/x into the sink).
BayesianGame congestion_chsh_graph();

// Conflict variant: separate sinks joined by a bridging edge of constant
// cost epsilon_edge; player 1 targets the upper sink, player 2 the lower.
BayesianGame congestion_chsh_conflict(double epsilon_edge);

// Catalog games by stable name; epsilon feeds the parametrized ones.
BayesianGame game_by_name(const std::string& name, double epsilon = 0.1);
std::vector<std::string> game_names();

// Named canonical correlations:
//   pr_box, ghz_binv, ghz_corr_best, ghz_comm_best, q_star, q_prime,
//   chsh_comm, chsh_shared_coin, pappa_fair_coin.
Correlation reference_correlation(const std::string& name,
                                  double epsilon = 0.1);
std::vector<std::string> correlation_names();

// Named standard-form distributions used by the correlated-equilibrium
// checks: chsh_shared_coin, pappa_fair_coin, pappa_unfair, pappa_pure_00,
// ghz_corr_best, pd_qstar.
StandardFormDistribution reference_standard_form(const std::string& name);
std::vector<std::string> standard_form_names();

// Parameters of the constrained PD-game correlation family: the suggestion
// at type 0 is action 0, type-1 rows carry (p, q, p00..p11).
struct LemmaParams {
  double p = 0.0;
  double q = 0.0;
  double p00 = 0.0;
  double p01 = 0.0;
  double p10 = 0.0;
  double p11 = 0.0;
  double epsilon = 0.1;

  ValidationReport validate() const;
};

// The induced canonical correlation for pd_coordination(epsilon).
Correlation lemma_correlation(const LemmaParams& params);

// The six equilibrium slacks of the type-1 deviation family, nonnegative
// exactly when those conditions hold.
std::array<double, 6> lemma_conditions(const LemmaParams& params);

struct MerminQuantities {
  double p = 0.0;  // sum of the sixteen winning-parity conditional masses
  double m = 0.0;  // 4 - 2p
};

// Evaluated on a three-player binary canonical correlation over the four
// type profiles (0,0,1), (0,1,0), (1,0,0), (1,1,1).
MerminQuantities mermin_quantities(const Correlation& q);

}  // namespace catalog
}  // namespace binv

#endif  // BINV_CATALOG_HPP

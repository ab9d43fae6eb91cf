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

#include <doctest.h>

#include "binv/catalog.hpp"
#include "binv/optimize.hpp"
#include "support.hpp"

using namespace binv;
using namespace binv::catalog;

TEST_CASE("xor-game optima across the equilibrium classes") {
  BayesianGame ch = chsh();
  SocialObjective sw = SocialObjective::sw();
  CHECK(max_obj_correlated(ch, sw).value == doctest::Approx(1.5).epsilon(1e-9));
  CHECK(max_obj_binv(ch, sw).value == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(max_obj_comm(ch, sw).value == doctest::Approx(2.0).epsilon(1e-9));

  OptimizeOptions exact;
  exact.exact = true;
  CHECK(max_obj_correlated(ch, sw, exact).exact_value == "3/2");
  CHECK(binv_value_full_coordination(ch, exact).exact_value == "1");
  CHECK(local_value_full_coordination(ch).value ==
        doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("conflict-variant optimum") {
  BayesianGame pa = pappa();
  OptimizationResult r = max_obj_correlated(pa, SocialObjective::sw());
  CHECK(r.value == doctest::Approx(1.125).epsilon(1e-9));  // strictly < 3/2
  CHECK(r.value < 1.5 - 1e-6);
  REQUIRE(r.witness_standard_form.has_value());
  CHECK(verify_correlated_standard(pa, *r.witness_standard_form, 1e-7).holds);

  // Optimal fair rewards need the non-local box: both wider classes top out
  // at the full win rate.
  OptimizeOptions exact;
  exact.exact = true;
  CHECK(max_obj_binv(pa, SocialObjective::sw(), exact).exact_value == "3/2");
  CHECK(max_obj_comm(pa, SocialObjective::sw(), exact).exact_value == "3/2");
}

TEST_CASE("three-player conflict optima (regression baselines)") {
  BayesianGame gz = ghz_conflict(0.1);
  SocialObjective sw = SocialObjective::sw();
  OptimizeOptions exact;
  exact.exact = true;

  OptimizationResult corr = max_obj_correlated(gz, sw, exact);
  CHECK(corr.exact_value == "7/4");
  REQUIRE(corr.witness_standard_form.has_value());
  CHECK(verify_correlated_standard(gz, *corr.witness_standard_form, 1e-7)
            .holds);

  OptimizationResult binv = max_obj_binv(gz, sw, exact);
  CHECK(binv.exact_value == "39/20");
  CHECK(verify_binv_equilibrium(gz, binv.witness, 1e-7).holds);

  OptimizationResult comm = max_obj_comm(gz, sw, exact);
  CHECK(comm.exact_value == "21/10");
  CHECK(verify_comm_equilibrium(gz, comm.witness, 1e-7).holds);

  // The nested classes stay ordered.
  CHECK(corr.value <= binv.value + 1e-9);
  CHECK(binv.value <= comm.value + 1e-9);
}

TEST_CASE("dilemma-coordination optima (regression baselines)") {
  BayesianGame pd = pd_coordination(0.1);
  SocialObjective sw = SocialObjective::sw();
  OptimizeOptions exact;
  exact.exact = true;

  // The belief-invariant optimum is exactly the anti-correlated value 2-eps.
  OptimizationResult binv = max_obj_binv(pd, sw, exact);
  CHECK(binv.exact_value == "19/10");
  CHECK(verify_binv_equilibrium(pd, binv.witness, 1e-7).holds);
  CHECK(max_obj_correlated(pd, sw, exact).exact_value == "19/10");

  // The unrestricted communication optimum is strictly above it and its
  // witness signals: high social welfare here buys no privacy.
  OptimizationResult comm = max_obj_comm(pd, sw, exact);
  CHECK(comm.exact_value == "723/380");
  CHECK(comm.value > 1.9 + 1e-4);
  CHECK(verify_comm_equilibrium(pd, comm.witness, 1e-7).holds);
  CHECK_FALSE(is_belief_invariant(comm.witness, 1e-8).belief_invariant);
  CHECK_FALSE(standard_form_membership(pd, comm.witness, 1e-8).has_value());
}

TEST_CASE("full-coordination values") {
  BayesianGame gp = ghz_predicate();
  CHECK(binv_value_full_coordination(gp).value ==
        doctest::Approx(1.0).epsilon(1e-9));
  OptimizationResult local = local_value_full_coordination(gp);
  CHECK(local.value == doctest::Approx(0.75).epsilon(1e-12));
  // Scaled by the four equally likely rows, the parity sum tops out at 3.
  CHECK(4.0 * local.value == doctest::Approx(3.0).epsilon(1e-7));
  REQUIRE(local.witness_standard_form.has_value());
  MerminQuantities m = mermin_quantities(
      standard_form_correlation(gp, *local.witness_standard_form));
  CHECK(m.p == doctest::Approx(3.0).epsilon(1e-9));

  // Constant payoff: the value is that constant.
  std::vector<std::vector<double>> flat(2, std::vector<double>(16, 0.625));
  BayesianGame constant({2, 2}, {2, 2}, std::vector<double>(4, 0.25), flat);
  CHECK(binv_value_full_coordination(constant).value ==
        doctest::Approx(0.625).epsilon(1e-9));

  CHECK_THROWS(binv_value_full_coordination(pappa()));
  CHECK_THROWS(local_value_full_coordination(ghz_conflict(0.1)));
}

TEST_CASE("zero-sum values") {
  // Bayesian matching pennies: uniform binary types, type-independent
  // payoffs, v2 = -v1.
  std::vector<double> v1(16), v2(16);
  for (long t = 0; t < 4; ++t)
    for (long a = 0; a < 4; ++a) {
      double win = (a == 0 || a == 3) ? 1.0 : -1.0;
      v1[t * 4 + a] = win;
      v2[t * 4 + a] = -win;
    }
  BayesianGame pennies({2, 2}, {2, 2}, std::vector<double>(4, 0.25),
                       {v1, v2});
  ZeroSumResult zr = zero_sum_value(pennies);
  CHECK(zr.value1 == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(zr.value2 == doctest::Approx(0.0).epsilon(1e-9));

  // Complete-information 2x2 with mixed value 1/3.
  std::vector<std::vector<double>> m = {{1, -1, 0, 1}, {-1, 1, 0, -1}};
  BayesianGame third({1, 1}, {2, 2}, {1.0}, m);
  ZeroSumResult zt = zero_sum_value(third);
  CHECK(zt.value1 == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  CHECK(zt.value2 == doctest::Approx(-1.0 / 3.0).epsilon(1e-9));

  CHECK_THROWS(zero_sum_value(chsh()));  // not constant-sum
}

TEST_CASE("complete-information prior collapses the hierarchy") {
  BayesianGame r = restrict_to_type(chsh(), std::array{1, 1});
  double comm = max_obj_comm(r, SocialObjective::sw()).value;
  double corr = max_obj_correlated(r, SocialObjective::sw()).value;
  CHECK(comm == doctest::Approx(corr).epsilon(1e-7));
  CHECK(comm == doctest::Approx(2.0).epsilon(1e-7));
}

TEST_CASE("standard-form membership of canonical correlations") {
  BayesianGame pd = pd_coordination(0.1);
  auto qstar = standard_form_membership(pd, reference_correlation("q_star"));
  REQUIRE(qstar.has_value());
  CHECK(verify_correlated_standard(pd, *qstar, 1e-7).holds);

  // Signalling correlations cannot be standard-form equilibria.
  BayesianGame ch = chsh();
  CHECK_FALSE(standard_form_membership(ch, reference_correlation("chsh_comm"))
                  .has_value());
}

TEST_CASE("profile budget guards") {
  std::vector<int> big_types(2, 8), big_actions(2, 8);
  ProfileSpace ts(big_types), as(big_actions);
  std::vector<std::vector<double>> payoffs(
      2, std::vector<double>(ts.total() * as.total(), 0.0));
  std::vector<double> prior(ts.total(), 1.0 / ts.total());
  BayesianGame big(big_types, big_actions, prior, payoffs);
  CHECK_THROWS(max_obj_correlated(big, SocialObjective::sw()));
}

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
#include "binv/equilibrium.hpp"
#include "binv/optimize.hpp"
#include "binv/quantum.hpp"
#include "support.hpp"

using namespace binv;
using namespace binv::catalog;
using binv::testing::Rng;

TEST_CASE("expected payoffs are linear in the correlation") {
  Rng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    BayesianGame game = testing::random_game(rng);
    Correlation q1 = testing::random_correlation(rng, {2, 2}, {2, 2});
    Correlation q2 = testing::random_correlation(rng, {2, 2}, {2, 2});
    double p = (trial % 5) / 4.0;
    PayoffVector mixed = expected_payoffs(game, mix(q1, q2, p));
    PayoffVector v1 = expected_payoffs(game, q1);
    PayoffVector v2 = expected_payoffs(game, q2);
    for (int i = 0; i < 2; ++i)
      CHECK(mixed[i] ==
            doctest::Approx(p * v1[i] + (1 - p) * v2[i]).epsilon(1e-12));
  }
}

TEST_CASE("conditional payoffs sum to the expectation") {
  Rng rng(103);
  for (int trial = 0; trial < 200; ++trial) {
    BayesianGame game = testing::random_game(rng);
    Correlation q = testing::random_correlation(rng, {2, 2}, {2, 2});
    PayoffVector v = expected_payoffs(game, q);
    for (int i = 0; i < 2; ++i) {
      double total = 0.0;
      for (int t = 0; t < 2; ++t) {
        if (game.type_marginal(i, t) <= 0.0) continue;
        total += conditional_payoff(game, q, i, t);
      }
      CHECK(total == doctest::Approx(v[i]).epsilon(1e-12));
    }
  }
}

TEST_CASE("constant-sum games pin the payoff sum") {
  Rng rng(107);
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    // Random v1 plus a type-only sum makes a constant-sum game.
    std::vector<double> v1(16), v2(16), s(4);
    for (double& x : s) x = val(rng);
    for (long t = 0; t < 4; ++t)
      for (long a = 0; a < 4; ++a) {
        v1[t * 4 + a] = val(rng);
        v2[t * 4 + a] = s[t] - v1[t * 4 + a];
      }
    std::vector<double> prior = testing::random_distribution(rng, 4);
    BayesianGame game({2, 2}, {2, 2}, prior, {v1, v2});
    auto detected = detect_constant_sum(game);
    REQUIRE(detected.has_value());
    double expected = 0.0;
    for (long t = 0; t < 4; ++t) expected += prior[t] * (*detected)[t];
    Correlation q = testing::random_correlation(rng, {2, 2}, {2, 2});
    PayoffVector v = expected_payoffs(game, q);
    CHECK(v[0] + v[1] == doctest::Approx(expected).epsilon(1e-10));

    // The guaranteed values also split the constant.
    if (trial < 25) {
      ZeroSumResult zr = zero_sum_value(game);
      CHECK(zr.value1 + zr.value2 == doctest::Approx(expected).epsilon(1e-8));
    }
  }
}

TEST_CASE("canonicalization preserves payoffs") {
  Rng rng(109);
  for (int trial = 0; trial < 200; ++trial) {
    BayesianGame game = testing::random_game(rng);
    Solution sol = testing::random_solution(rng, game, 2 + trial % 2,
                                            2 + trial % 3, 1 + trial % 3);
    PayoffVector direct = solution_payoffs(game, sol);
    PayoffVector canonical =
        expected_payoffs(game, canonicalize(sol, game));
    for (int i = 0; i < 2; ++i)
      CHECK(direct[i] == doctest::Approx(canonical[i]).epsilon(1e-12));
  }
}

TEST_CASE("canonicalization preserves belief invariance") {
  Rng rng(113);
  for (int trial = 0; trial < 100; ++trial) {
    BayesianGame game = testing::random_game(rng);
    // A belief-invariant device: mixture of local correlations, sometimes
    // stirred with the nonlocal box.
    Correlation device =
        testing::random_local_correlation(rng, {2, 2}, {2, 2});
    if (trial % 3 == 0)
      device = mix(device, reference_correlation("pr_box"), 0.4);
    REQUIRE(is_belief_invariant(device, 1e-9).belief_invariant);
    Solution sol = testing::random_solution(rng, game, 2, 2, 2);
    sol.device = device;
    Correlation canon = canonicalize(sol, game);
    CHECK(is_belief_invariant(canon, 1e-8).belief_invariant);
  }
}

TEST_CASE("mixing preserves belief invariance and locality") {
  Rng rng(127);
  for (int trial = 0; trial < 50; ++trial) {
    Correlation l1 = testing::random_local_correlation(rng, {2, 2}, {2, 2});
    Correlation l2 = testing::random_local_correlation(rng, {2, 2}, {2, 2});
    Correlation m = mix(l1, l2, 0.5);
    CHECK(is_belief_invariant(m, 1e-9).belief_invariant);
    if (trial < 10) CHECK(local_membership(m).has_value());

    Correlation b = mix(l1, reference_correlation("pr_box"), 0.7);
    CHECK(is_belief_invariant(b, 1e-9).belief_invariant);
  }
}

TEST_CASE("local membership implies belief invariance") {
  Rng rng(131);
  for (int trial = 0; trial < 25; ++trial) {
    Correlation q = testing::random_correlation(rng, {2, 2}, {2, 2});
    auto dec = local_membership(q);
    if (dec)
      CHECK(is_belief_invariant(q, 1e-7).belief_invariant);
  }
  // And membership succeeds on everything built locally.
  for (int trial = 0; trial < 25; ++trial) {
    Correlation q = testing::random_local_correlation(rng, {2, 2}, {2, 2});
    CHECK(local_membership(q).has_value());
  }
}

TEST_CASE("marginals are normalized") {
  Rng rng(137);
  for (int trial = 0; trial < 50; ++trial) {
    Correlation q = testing::random_correlation(rng, {2, 2, 2}, {2, 2, 2});
    std::vector<int> keep;
    for (int i = 0; i < 3; ++i)
      if (rng() % 2) keep.push_back(i);
    std::vector<int> r = {static_cast<int>(rng() % 2),
                          static_cast<int>(rng() % 2),
                          static_cast<int>(rng() % 2)};
    std::vector<double> m = marginal(q, keep, r);
    double total = 0.0;
    for (double p : m) total += p;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("quantum correlations never signal") {
  Rng rng(139);
  for (int trial = 0; trial < 80; ++trial) {
    QuantumSolution q = testing::random_quantum_solution(rng);
    Correlation c = induced_correlation(q);
    for (long t = 0; t < c.inputs().total(); ++t) {
      double row = 0.0;
      for (long a = 0; a < c.outputs().total(); ++a) row += c.at(t, a);
      CHECK(row == doctest::Approx(1.0).epsilon(1e-10));
    }
    CHECK(is_belief_invariant(c, 1e-8).belief_invariant);
  }
}

TEST_CASE("quantum best response dominates the prescribed measurement") {
  Rng rng(149);
  for (int trial = 0; trial < 60; ++trial) {
    BayesianGame game = testing::random_game(rng);
    QuantumSolution q = testing::random_quantum_solution(rng);
    for (const QuantumTypeAnalysis& a : quantum_deviation_analysis(game, q))
      CHECK(a.best_value >= a.on_path - 1e-9);
  }
}

TEST_CASE("mixtures of verified equilibria remain verified") {
  Rng rng(151);
  int pairs = 0;
  while (pairs < 40) {
    BayesianGame game = testing::random_game(rng);
    OptimizationResult r1 = max_obj_comm(game, SocialObjective::single(0));
    OptimizationResult r2 = max_obj_comm(game, SocialObjective::single(1));
    for (double p : {0.0, 0.25, 0.5, 1.0}) {
      Correlation m = mix(r1.witness, r2.witness, p);
      CHECK(verify_comm_equilibrium(game, m, 1e-6).holds);
    }
    OptimizationResult b1 = max_obj_binv(game, SocialObjective::single(0));
    OptimizationResult b2 = max_obj_binv(game, SocialObjective::sw());
    for (double p : {0.25, 0.5}) {
      Correlation m = mix(b1.witness, b2.witness, p);
      CHECK(verify_binv_equilibrium(game, m, 1e-6).holds);
    }
    ++pairs;
  }
}

TEST_CASE("optimum hierarchy over the equilibrium classes") {
  Rng rng(157);
  for (int trial = 0; trial < 60; ++trial) {
    BayesianGame game = testing::random_game(rng, 2, 2, 2, trial % 7 == 0);
    double corr = max_obj_correlated(game, SocialObjective::sw()).value;
    double binv = max_obj_binv(game, SocialObjective::sw()).value;
    double comm = max_obj_comm(game, SocialObjective::sw()).value;
    CHECK(corr <= binv + 1e-7);
    CHECK(binv <= comm + 1e-7);
    if (trial % 7 == 0)  // complete information collapses the hierarchy
      CHECK(comm == doctest::Approx(corr).epsilon(1e-7));
  }
}

TEST_CASE("optimizer witnesses pass their verifiers") {
  Rng rng(163);
  for (int trial = 0; trial < 30; ++trial) {
    BayesianGame game = testing::random_game(rng);
    OptimizationResult corr = max_obj_correlated(game, SocialObjective::sw());
    REQUIRE(corr.witness_standard_form.has_value());
    CHECK(verify_correlated_standard(game, *corr.witness_standard_form, 1e-7)
              .holds);
    OptimizationResult binv = max_obj_binv(game, SocialObjective::sw());
    CHECK(verify_binv_equilibrium(game, binv.witness, 1e-7).holds);
    OptimizationResult comm = max_obj_comm(game, SocialObjective::sw());
    CHECK(verify_comm_equilibrium(game, comm.witness, 1e-7).holds);
  }
}

TEST_CASE("restriction collapse: communication advice becomes shared advice") {
  Rng rng(167);
  for (int trial = 0; trial < 40; ++trial) {
    BayesianGame game = testing::random_game(rng);
    std::vector<int> t0 = {static_cast<int>(rng() % 2),
                           static_cast<int>(rng() % 2)};
    BayesianGame restricted = restrict_to_type(game, t0);
    OptimizationResult comm =
        max_obj_comm(restricted, SocialObjective::sw());
    REQUIRE(verify_comm_equilibrium(restricted, comm.witness, 1e-7).holds);
    // Lift the advice row at t0 to an input-independent distribution.
    long t0_idx = game.types().index(t0);
    Correlation lifted(game.types().sizes(), game.actions().sizes());
    for (long t = 0; t < game.types().total(); ++t)
      for (long a = 0; a < game.actions().total(); ++a)
        lifted.set(t, a, comm.witness.at(t0_idx, a));
    auto w = standard_form_membership(restricted, lifted, 1e-7);
    REQUIRE(w.has_value());
    CHECK(verify_correlated_standard(restricted, *w, 1e-6).holds);
  }
}

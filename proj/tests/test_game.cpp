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
#include "binv/correlation.hpp"
#include "binv/game.hpp"
#include "support.hpp"

using namespace binv;
using namespace binv::catalog;

namespace {

Correlation constant_action(const BayesianGame& game,
                            const std::vector<int>& action) {
  Correlation q(game.types().sizes(), game.actions().sizes());
  long a = game.actions().index(action);
  for (long t = 0; t < game.types().total(); ++t) q.set(t, a, 1.0);
  return q;
}

}  // namespace

TEST_CASE("catalog games validate") {
  for (const std::string& name : game_names()) {
    BayesianGame game = game_by_name(name, 0.1);
    ValidationReport report = validate_game(game);
    CAPTURE(name);
    CHECK(report.valid);
  }
}

TEST_CASE("validation flags prior defects") {
  std::vector<std::vector<double>> payoffs(1, std::vector<double>(4, 0.0));
  BayesianGame short_mass({2}, {2}, {0.5, 0.4}, payoffs);
  ValidationReport r1 = validate_game(short_mass);
  CHECK_FALSE(r1.valid);
  CHECK(r1.issues.front().find("prior mass 0.9") != std::string::npos);

  BayesianGame negative({2}, {2}, {1.2, -0.2}, payoffs);
  CHECK_FALSE(validate_game(negative).valid);
}

TEST_CASE("expected payoffs on the catalog games") {
  BayesianGame ch = chsh();
  PayoffVector zero = expected_payoffs(ch, constant_action(ch, {0, 0}));
  CHECK(zero[0] == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(zero[1] == doctest::Approx(0.75).epsilon(1e-12));

  PayoffVector pr = expected_payoffs(ch, reference_correlation("pr_box"));
  CHECK(pr[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pr[1] == doctest::Approx(1.0).epsilon(1e-12));

  BayesianGame pa = pappa();
  PayoffVector pz = expected_payoffs(pa, constant_action(pa, {0, 0}));
  CHECK(pz[0] == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(pz[1] == doctest::Approx(0.375).epsilon(1e-12));

  // All-zero payoffs stay zero under any correlation.
  std::vector<std::vector<double>> zeros(2, std::vector<double>(16, 0.0));
  BayesianGame null_game({2, 2}, {2, 2},
                         std::vector<double>(4, 0.25), zeros);
  PayoffVector nv =
      expected_payoffs(null_game, reference_correlation("pr_box"));
  CHECK(nv[0] == 0.0);
  CHECK(nv[1] == 0.0);
}

TEST_CASE("social payoff") {
  BayesianGame ch = chsh();
  CHECK(social_payoff(ch, reference_correlation("pr_box"),
                      SocialObjective::sw()) == doctest::Approx(2.0));

  BayesianGame gz = ghz_conflict(0.1);
  CHECK(social_payoff(gz, reference_correlation("ghz_binv"),
                      SocialObjective::sw()) ==
        doctest::Approx(1.65).epsilon(1e-12));

  CHECK(social_payoff(ch, reference_correlation("pr_box"),
                      SocialObjective::weighted({0.0, 0.0})) == 0.0);
}

TEST_CASE("conditional payoff carries the joint prior weight") {
  BayesianGame ch = chsh();
  Correlation q0 = constant_action(ch, {0, 0});
  // Player 1 of type 0 wins against both opposing types, 1/4 weight each.
  CHECK(conditional_payoff(ch, q0, 0, 0) == doctest::Approx(0.5));

  // Constrained PD correlation with p = q = 1/2, p01 = p10 = 1/2: the
  // type-1 slice evaluates to ((1-eps)(1-q) + p01 + p10) / 4.
  double eps = 0.1;
  BayesianGame pd = pd_coordination(eps);
  Correlation qs = reference_correlation("q_star", eps);
  double expected = ((1 - eps) * 0.5 + 1.0) / 4.0;
  CHECK(conditional_payoff(pd, qs, 0, 1) ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK(expected == doctest::Approx(0.3625));

  // Summing the slices over the player's types recovers <v_i>.
  PayoffVector all = expected_payoffs(pd, qs);
  for (int i = 0; i < 2; ++i) {
    double total = 0.0;
    for (int t = 0; t < 2; ++t) total += conditional_payoff(pd, qs, i, t);
    CHECK(total == doctest::Approx(all[i]).epsilon(1e-12));
  }

  // A single-type player's slice is the whole expectation.
  std::vector<std::vector<double>> payoffs(
      2, {0.3, 0.7, 0.1, 0.9});
  BayesianGame single({1, 1}, {2, 2}, {1.0}, payoffs);
  Correlation qq({1, 1}, {2, 2});
  qq.set(0, 1, 0.25);
  qq.set(0, 2, 0.75);
  CHECK(conditional_payoff(single, qq, 0, 0) ==
        doctest::Approx(expected_payoffs(single, qq)[0]));

  // Zero-probability types are rejected.
  BayesianGame restricted = restrict_to_type(ch, std::array{0, 0});
  CHECK_THROWS(conditional_payoff(restricted, q0, 0, 1));
}

TEST_CASE("restrict_to_type") {
  BayesianGame ch = chsh();
  BayesianGame r = restrict_to_type(ch, std::array{0, 0});
  CHECK(r.prior(0) == 1.0);
  for (long t = 1; t < 4; ++t) CHECK(r.prior(t) == 0.0);
  for (long t = 0; t < 4; ++t)
    for (long a = 0; a < 4; ++a)
      CHECK(r.payoff(0, t, a) == ch.payoff(0, t, a));

  // Payoffs of the restricted game reduce to one row of Q.
  testing::Rng rng(7);
  Correlation q = testing::random_correlation(rng, {2, 2}, {2, 2});
  PayoffVector v = expected_payoffs(r, q);
  double direct = 0.0;
  for (long a = 0; a < 4; ++a) direct += q.at(0, a) * ch.payoff(0, 0, a);
  CHECK(v[0] == doctest::Approx(direct).epsilon(1e-12));

  CHECK_THROWS(restrict_to_type(ch, std::array{2, 0}));
}

TEST_CASE("detect_constant_sum") {
  // Matching pennies over trivial types.
  std::vector<std::vector<double>> mp = {{1, -1, -1, 1}, {-1, 1, 1, -1}};
  BayesianGame pennies({1, 1}, {2, 2}, {1.0}, mp);
  auto s = detect_constant_sum(pennies);
  REQUIRE(s.has_value());
  CHECK((*s)[0] == doctest::Approx(0.0));

  CHECK_FALSE(detect_constant_sum(pappa()).has_value());
  CHECK_FALSE(detect_constant_sum(chsh()).has_value());
  CHECK_THROWS(detect_constant_sum(ghz_conflict(0.1)));
}

TEST_CASE("full coordination detection") {
  CHECK(is_full_coordination(chsh()));
  CHECK(is_full_coordination(ghz_predicate()));
  CHECK_FALSE(is_full_coordination(pappa()));
  CHECK_FALSE(is_full_coordination(ghz_conflict(0.1)));
}

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
#include "support.hpp"

using namespace binv;
using namespace binv::catalog;

TEST_CASE("correlation validation") {
  Correlation q({2}, {2});
  q.set(0, 0, 0.6);
  q.set(0, 1, 0.4);
  q.set(1, 0, 1.0);
  CHECK(q.validate().valid);
  q.set(1, 0, 0.9);
  CHECK_FALSE(q.validate().valid);
  q.set(1, 0, 1.3);
  q.set(1, 1, -0.3);
  CHECK_FALSE(q.validate().valid);
}

TEST_CASE("belief invariance") {
  CHECK(is_belief_invariant(reference_correlation("pr_box")).belief_invariant);
  CHECK(is_belief_invariant(reference_correlation("ghz_binv")).belief_invariant);

  // The deterministic advice correlation signals: flipping player 1's input
  // moves player 2's marginal.
  BeliefInvarianceResult r =
      is_belief_invariant(reference_correlation("chsh_comm"));
  CHECK_FALSE(r.belief_invariant);
  CHECK(r.worst_violation == doctest::Approx(1.0));
  CHECK(r.witness.player >= 0);

  // Product correlations never signal.
  testing::Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    Correlation q = testing::random_local_correlation(rng, {2, 2}, {2, 2}, 1);
    CHECK(is_belief_invariant(q, 1e-9).belief_invariant);
  }

  // The exhaustive subset sweep agrees with the one-coordinate check.
  for (const char* name : {"pr_box", "ghz_binv", "chsh_comm"}) {
    Correlation q = reference_correlation(name);
    CHECK(is_belief_invariant(q, 1e-9).belief_invariant ==
          is_belief_invariant(q, 1e-9, true).belief_invariant);
  }
}

TEST_CASE("canonicalize") {
  BayesianGame ch = chsh();

  // Identity solution: device alphabets equal (T, A), trivial randomness.
  testing::Rng rng(5);
  Correlation device = testing::random_correlation(rng, {2, 2}, {2, 2});
  Solution identity{device, {2, 2}, {2, 2}, {{1.0}, {1.0}}, {}, {}};
  identity.input_map = {{{0}, {1}}, {{0}, {1}}};
  identity.output_map.resize(2);
  for (int i = 0; i < 2; ++i) {
    identity.output_map[i].resize(2);
    for (int t = 0; t < 2; ++t) {
      identity.output_map[i][t] = {{0}, {1}};
    }
  }
  Correlation canon = canonicalize(identity, ch);
  for (long t = 0; t < 4; ++t)
    for (long a = 0; a < 4; ++a)
      CHECK(canon.at(t, a) == doctest::Approx(device.at(t, a)));

  // Advice-pair solution: the device sends (action, game bit), players act
  // on the first coordinate. Canonical form is the deterministic advice
  // correlation.
  Solution pairs{Correlation({2, 2}, {4, 4}), {2, 2}, {2, 2},
                 {{1.0}, {1.0}}, {}, {}};
  for (int r1 = 0; r1 < 2; ++r1)
    for (int r2 = 0; r2 < 2; ++r2) {
      int tau = r1 & r2;
      int s1 = 2 * 0 + tau;
      int s2 = 2 * tau + tau;
      pairs.device.set(std::array{r1, r2}, std::array{s1, s2}, 1.0);
    }
  pairs.input_map = {{{0}, {1}}, {{0}, {1}}};
  pairs.output_map.resize(2);
  for (int i = 0; i < 2; ++i) {
    pairs.output_map[i].resize(2);
    for (int t = 0; t < 2; ++t) {
      pairs.output_map[i][t].resize(4);
      for (int s = 0; s < 4; ++s) pairs.output_map[i][t][s] = {s / 2};
    }
  }
  Correlation comm = canonicalize(pairs, ch);
  Correlation expected = reference_correlation("chsh_comm");
  for (long t = 0; t < 4; ++t)
    for (long a = 0; a < 4; ++a)
      CHECK(comm.at(t, a) == doctest::Approx(expected.at(t, a)));

  PayoffVector direct = solution_payoffs(ch, pairs);
  PayoffVector via = expected_payoffs(ch, comm);
  CHECK(direct[0] == doctest::Approx(via[0]).epsilon(1e-12));
  CHECK(direct[1] == doctest::Approx(via[1]).epsilon(1e-12));
}

TEST_CASE("mix") {
  Correlation pr = reference_correlation("pr_box");
  Correlation coin = reference_correlation("chsh_shared_coin");
  Correlation same = mix(pr, pr, 0.3);
  Correlation all_first = mix(pr, coin, 1.0);
  for (long r = 0; r < 4; ++r)
    for (long s = 0; s < 4; ++s) {
      CHECK(same.at(r, s) == doctest::Approx(pr.at(r, s)));
      CHECK(all_first.at(r, s) == doctest::Approx(pr.at(r, s)));
    }
  CHECK_THROWS(mix(pr, coin, 1.5));
  CHECK_THROWS(mix(pr, reference_correlation("ghz_binv"), 0.5));
}

TEST_CASE("product detection") {
  BayesianGame ch = chsh();
  Correlation const0(ch.types().sizes(), ch.actions().sizes());
  for (long t = 0; t < 4; ++t) const0.set(t, 0, 1.0);
  CHECK(is_product(const0));
  CHECK_FALSE(is_product(reference_correlation("chsh_shared_coin")));
  CHECK_FALSE(is_product(reference_correlation("pr_box")));
  // Signalling correlations have no single-player conditionals at all.
  CHECK_FALSE(is_product(reference_correlation("chsh_comm")));
}

TEST_CASE("local membership") {
  Correlation coin = reference_correlation("chsh_shared_coin");
  auto dec = local_membership(coin);
  REQUIRE(dec.has_value());
  for (long r = 0; r < 4; ++r)
    for (long s = 0; s < 4; ++s)
      CHECK(dec->evaluate(coin.inputs(), coin.outputs(), r, s) ==
            doctest::Approx(coin.at(r, s)).epsilon(1e-8));

  CHECK_FALSE(local_membership(reference_correlation("pr_box")).has_value());

  // A product correlation decomposes with a single effective atom.
  testing::Rng rng(31);
  Correlation prod = testing::random_local_correlation(rng, {2, 2}, {2, 2}, 1);
  CHECK(local_membership(prod).has_value());

  // Budget guard.
  Correlation big({4, 4, 4}, {4, 4, 4});
  for (long r = 0; r < big.inputs().total(); ++r) big.set(r, 0, 1.0);
  CHECK_THROWS(local_membership(big, 1e-8, 1000));
}

TEST_CASE("marginals") {
  Correlation pr = reference_correlation("pr_box");
  std::vector<int> all = {0, 1};
  std::vector<int> r = {0, 1};
  std::vector<double> m = marginal(pr, all, r);
  for (long s = 0; s < 4; ++s) CHECK(m[s] == doctest::Approx(pr.at(1, s)));

  std::vector<int> first = {0};
  for (long ri = 0; ri < 4; ++ri) {
    std::vector<int> rp = pr.inputs().decode(ri);
    std::vector<double> one = marginal(pr, first, rp);
    CHECK(one[0] == doctest::Approx(0.5));
    CHECK(one[1] == doctest::Approx(0.5));
  }

  std::vector<int> none = {};
  std::vector<double> point = marginal(pr, none, r);
  CHECK(point.size() == 1);
  CHECK(point[0] == doctest::Approx(1.0));
}

TEST_CASE("classification report ties the pieces together") {
  ClassificationReport pr = classify(reference_correlation("pr_box"));
  CHECK(pr.non_signalling.belief_invariant);
  CHECK_FALSE(pr.product);
  CHECK_FALSE(pr.local);

  ClassificationReport coin =
      classify(reference_correlation("chsh_shared_coin"));
  CHECK(coin.non_signalling.belief_invariant);
  CHECK(coin.local);
}

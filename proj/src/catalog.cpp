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

#include "binv/catalog.hpp"

#include <cmath>
#include <stdexcept>

namespace binv {
namespace catalog {

namespace {

int parity(std::span<const int> a) {
  int x = 0;
  for (int v : a) x ^= (v & 1);
  return x;
}

int product_bit(std::span<const int> t) {
  int x = 1;
  for (int v : t) x &= v;
  return x;
}

bool chsh_win(int tau, int a1, int a2) {
  return tau == 0 ? a1 == a2 : a1 != a2;
}

BayesianGame two_player_game(const std::vector<double>& prior,
                             // cell(t1,t2,a1,a2) -> (v1, v2)
                             auto cell) {
  std::vector<std::vector<double>> payoffs(2, std::vector<double>(16, 0.0));
  for (int t1 = 0; t1 < 2; ++t1)
    for (int t2 = 0; t2 < 2; ++t2)
      for (int a1 = 0; a1 < 2; ++a1)
        for (int a2 = 0; a2 < 2; ++a2) {
          auto [v1, v2] = cell(t1, t2, a1, a2);
          long idx = (t1 * 2 + t2) * 4 + a1 * 2 + a2;
          payoffs[0][idx] = v1;
          payoffs[1][idx] = v2;
        }
  return BayesianGame({2, 2}, {2, 2}, prior, std::move(payoffs));
}

const std::vector<double> kUniform4 = {0.25, 0.25, 0.25, 0.25};

// --- congestion networks -------------------------------------------------

struct CongestionEdge {
  enum class Kind { Constant, Linear, Inverse };
  Kind kind;
  double k;
  double cost(int load) const {
    switch (kind) {
      case Kind::Constant: return k;
      case Kind::Linear: return k * load;
      case Kind::Inverse: return k / load;
    }
    return 0.0;
  }
};

struct CongestionNetwork {
  std::vector<CongestionEdge> edges;
  // routes[player][type][action] -> edge ids
  std::vector<std::vector<std::vector<std::vector<int>>>> routes;
  std::vector<double> prior;
};

BayesianGame strategic_form(const CongestionNetwork& net) {
  std::vector<std::vector<double>> payoffs(2, std::vector<double>(16, 0.0));
  for (int t1 = 0; t1 < 2; ++t1)
    for (int t2 = 0; t2 < 2; ++t2)
      for (int a1 = 0; a1 < 2; ++a1)
        for (int a2 = 0; a2 < 2; ++a2) {
          const auto& route1 = net.routes[0][t1][a1];
          const auto& route2 = net.routes[1][t2][a2];
          std::vector<int> load(net.edges.size(), 0);
          for (int e : route1) ++load[e];
          for (int e : route2) ++load[e];
          double c1 = 0.0, c2 = 0.0;
          for (int e : route1) c1 += net.edges[e].cost(load[e]);
          for (int e : route2) c2 += net.edges[e].cost(load[e]);
          long idx = (t1 * 2 + t2) * 4 + a1 * 2 + a2;
          payoffs[0][idx] = -c1;
          payoffs[1][idx] = -c2;
        }
  BayesianGame game({2, 2}, {2, 2}, net.prior, std::move(payoffs));
  game.action_labels = {{"UP", "DOWN"}, {"UP", "DOWN"}};
  return game;
}

}  // namespace

BayesianGame chsh() {
  return two_player_game(kUniform4, [](int t1, int t2, int a1, int a2) {
    double w = chsh_win(t1 & t2, a1, a2) ? 1.0 : 0.0;
    return std::pair{w, w};
  });
}

BayesianGame pappa() {
  return two_player_game(kUniform4, [](int t1, int t2, int a1, int a2) {
    if (!chsh_win(t1 & t2, a1, a2)) return std::pair{0.0, 0.0};
    if ((t1 & t2) == 0)
      return a1 == 0 ? std::pair{1.0, 0.5} : std::pair{0.5, 1.0};
    return std::pair{0.75, 0.75};
  });
}

namespace {

BayesianGame ghz_family(double epsilon, const std::vector<double>& prior,
                        double all_match_payoff) {
  ProfileSpace types({2, 2, 2});
  ProfileSpace actions({2, 2, 2});
  std::vector<std::vector<double>> payoffs(3, std::vector<double>(64, 0.0));
  for (long t = 0; t < 8; ++t) {
    std::vector<int> tp = types.decode(t);
    int tau = product_bit(tp);
    for (long a = 0; a < 8; ++a) {
      std::vector<int> ap = actions.decode(a);
      if (parity(ap) != tau) continue;  // joint loss
      int matchers = 0;
      for (int v : ap) matchers += v == tau;
      for (int i = 0; i < 3; ++i) {
        double v = matchers == 3 ? all_match_payoff
                                 : (ap[i] == tau ? epsilon : 1.0);
        payoffs[i][t * 8 + a] = v;
      }
    }
  }
  return BayesianGame({2, 2, 2}, {2, 2, 2}, prior, std::move(payoffs));
}

std::vector<double> ghz_prior(double p_asym, double p_111) {
  std::vector<double> prior(8, 0.0);
  prior[1] = p_asym;  // (0,0,1)
  prior[2] = p_asym;  // (0,1,0)
  prior[4] = p_asym;  // (1,0,0)
  prior[7] = p_111;   // (1,1,1)
  return prior;
}

}  // namespace

BayesianGame ghz_conflict(double epsilon) {
  if (epsilon <= 0.0 || epsilon > 1.0)
    throw std::invalid_argument("ghz_conflict: epsilon must be in (0, 1]");
  return ghz_family(epsilon, ghz_prior(1.0 / 6.0, 0.5), epsilon);
}

BayesianGame ghz_mermin(double epsilon) {
  if (epsilon < 0.0 || epsilon > 1.0)
    throw std::invalid_argument("ghz_mermin: epsilon must be in [0, 1]");
  return ghz_family(epsilon, ghz_prior(0.25, 0.25), (2.0 + epsilon) / 3.0);
}

BayesianGame ghz_predicate() {
  ProfileSpace types({2, 2, 2});
  ProfileSpace actions({2, 2, 2});
  std::vector<std::vector<double>> payoffs(3, std::vector<double>(64, 0.0));
  for (long t = 0; t < 8; ++t) {
    int tau = product_bit(types.decode(t));
    for (long a = 0; a < 8; ++a) {
      double w = parity(actions.decode(a)) == tau ? 1.0 : 0.0;
      for (int i = 0; i < 3; ++i) payoffs[i][t * 8 + a] = w;
    }
  }
  return BayesianGame({2, 2, 2}, {2, 2, 2}, ghz_prior(0.25, 0.25),
                      std::move(payoffs));
}

BayesianGame pd_coordination(double epsilon) {
  if (epsilon <= 0.0 || epsilon >= 1.0)
    throw std::invalid_argument("pd_coordination: epsilon must be in (0, 1)");
  return two_player_game(
      kUniform4, [epsilon](int t1, int t2, int a1, int a2) {
        if ((t1 & t2) == 0) {
          if (a1 == 0 && a2 == 0) return std::pair{1 - epsilon, 1 - epsilon};
          if (a1 == 0 && a2 == 1) return std::pair{2.0, 0.0};
          if (a1 == 1 && a2 == 0) return std::pair{0.0, 2.0};
          return std::pair{2 - epsilon, 2 - epsilon};
        }
        return a1 != a2 ? std::pair{1.0, 1.0} : std::pair{0.0, 0.0};
      });
}

BayesianGame congestion_chsh() {
  // Strategic form of the two-route network: 3/2 where the routes spread the
  // load the right way (coordinate from s0, split from s1), 2 otherwise.
  BayesianGame game =
      two_player_game(kUniform4, [](int t1, int t2, int a1, int a2) {
        double cost = chsh_win(t1 & t2, a1, a2) ? 1.5 : 2.0;
        return std::pair{-cost, -cost};
      });
  game.action_labels = {{"UP", "DOWN"}, {"UP", "DOWN"}};
  return game;
}

BayesianGame congestion_chsh_graph() {
  CongestionNetwork net;
  enum { S1U, S1D, S0U, S0D, UT, DT };
  net.edges = {{CongestionEdge::Kind::Linear, 1.0},
               {CongestionEdge::Kind::Linear, 1.0},
               {CongestionEdge::Kind::Constant, 1.0},
               {CongestionEdge::Kind::Constant, 1.0},
               {CongestionEdge::Kind::Inverse, 1.0},
               {CongestionEdge::Kind::Inverse, 1.0}};
  // type 0 starts at s0, type 1 at s1; action 0 = UP via u, 1 = DOWN via d.
  std::vector<std::vector<std::vector<int>>> per_player = {
      {{S0U, UT}, {S0D, DT}},   // type 0
      {{S1U, UT}, {S1D, DT}}};  // type 1
  net.routes = {per_player, per_player};
  net.prior = kUniform4;
  return strategic_form(net);
}

BayesianGame congestion_chsh_conflict(double epsilon_edge) {
  if (epsilon_edge < 0.0)
    throw std::invalid_argument("congestion_chsh_conflict: negative cost");
  CongestionNetwork net;
  enum { S1U, S1D, S0U, S0D, UT1, DT2, BRIDGE };
  net.edges = {{CongestionEdge::Kind::Linear, 1.0},
               {CongestionEdge::Kind::Linear, 1.0},
               {CongestionEdge::Kind::Constant, 1.0},
               {CongestionEdge::Kind::Constant, 1.0},
               {CongestionEdge::Kind::Inverse, 1.0},
               {CongestionEdge::Kind::Inverse, 1.0},
               {CongestionEdge::Kind::Constant, epsilon_edge}};
  // Player 1 targets the sink behind u, player 2 the sink behind d; the
  // bridge closes the gap in the other case.
  net.routes = {
      {{{S0U, UT1}, {S0D, DT2, BRIDGE}},    // player 1, type 0
       {{S1U, UT1}, {S1D, DT2, BRIDGE}}},   // player 1, type 1
      {{{S0U, UT1, BRIDGE}, {S0D, DT2}},    // player 2, type 0
       {{S1U, UT1, BRIDGE}, {S1D, DT2}}}};  // player 2, type 1
  net.prior = kUniform4;
  return strategic_form(net);
}

BayesianGame game_by_name(const std::string& name, double epsilon) {
  if (name == "chsh") return chsh();
  if (name == "pappa") return pappa();
  if (name == "ghz_conflict") return ghz_conflict(epsilon);
  if (name == "ghz_mermin") return ghz_mermin(epsilon);
  if (name == "ghz_predicate") return ghz_predicate();
  if (name == "pd_coordination") return pd_coordination(epsilon);
  if (name == "congestion_chsh") return congestion_chsh();
  if (name == "congestion_chsh_graph") return congestion_chsh_graph();
  if (name == "congestion_chsh_conflict")
    return congestion_chsh_conflict(epsilon);
  throw std::invalid_argument("unknown catalog game: " + name);
}

std::vector<std::string> game_names() {
  return {"chsh",          "pappa",           "ghz_conflict",
          "ghz_mermin",    "ghz_predicate",   "pd_coordination",
          "congestion_chsh", "congestion_chsh_graph",
          "congestion_chsh_conflict"};
}

namespace {

Correlation parity_box() {
  Correlation q({2, 2, 2}, {2, 2, 2});
  for (long t = 0; t < 8; ++t) {
    std::vector<int> tp = q.inputs().decode(t);
    int tau = product_bit(tp);
    for (long a = 0; a < 8; ++a)
      if (parity(q.outputs().decode(a)) == tau) q.set(t, a, 0.25);
  }
  return q;
}

}  // namespace

Correlation reference_correlation(const std::string& name, double epsilon) {
  if (name == "pr_box") {
    Correlation q({2, 2}, {2, 2});
    for (int t1 = 0; t1 < 2; ++t1)
      for (int t2 = 0; t2 < 2; ++t2)
        for (int a = 0; a < 2; ++a) {
          int b = (t1 & t2) ? 1 - a : a;  // outputs XOR to t1*t2
          q.set(std::array{t1, t2}, std::array{a, b}, 0.5);
        }
    return q;
  }
  if (name == "chsh_shared_coin") {
    Correlation q({2, 2}, {2, 2});
    for (long t = 0; t < 4; ++t) {
      q.set(t, 0, 0.5);  // (0,0)
      q.set(t, 3, 0.5);  // (1,1)
    }
    return q;
  }
  if (name == "chsh_comm") {
    Correlation q({2, 2}, {2, 2});
    q.set(std::array{0, 0}, std::array{0, 0}, 1.0);
    q.set(std::array{0, 1}, std::array{0, 0}, 1.0);
    q.set(std::array{1, 0}, std::array{0, 0}, 1.0);
    q.set(std::array{1, 1}, std::array{0, 1}, 1.0);
    return q;
  }
  if (name == "ghz_binv") return parity_box();
  if (name == "ghz_corr_best") {
    Correlation q({2, 2, 2}, {2, 2, 2});
    for (long t = 0; t < 8; ++t) {
      std::vector<int> tp = q.inputs().decode(t);
      std::vector<int> a = {1 - tp[0], 1 - tp[1], 1 - tp[2]};
      q.set(t, q.outputs().index(a), 1.0);
    }
    return q;
  }
  if (name == "ghz_comm_best") {
    Correlation q({2, 2, 2}, {2, 2, 2});
    ProfileSpace out({2, 2, 2});
    const std::vector<std::vector<int>> tau0 = {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    const std::vector<std::vector<int>> tau1 = {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
    for (long t = 0; t < 8; ++t) {
      int tau = product_bit(q.inputs().decode(t));
      for (const auto& a : (tau == 0 ? tau0 : tau1))
        q.set(t, out.index(a), 1.0 / 3.0);
    }
    return q;
  }
  if (name == "q_star")
    return lemma_correlation({0.5, 0.5, 0.0, 0.5, 0.5, 0.0, epsilon});
  if (name == "q_prime")
    return lemma_correlation({0.0, 0.0, 0.0, 0.5, 0.5, 0.0, epsilon});
  if (name == "pappa_fair_coin") {
    Correlation q({2, 2}, {2, 2});
    // Even mix of the two pure equilibria (constant-0, follow-type) and
    // (flip-type, constant-1).
    q.set(std::array{0, 0}, std::array{0, 0}, 0.5);
    q.set(std::array{0, 0}, std::array{1, 1}, 0.5);
    q.set(std::array{0, 1}, std::array{0, 1}, 0.5);
    q.set(std::array{0, 1}, std::array{1, 1}, 0.5);
    q.set(std::array{1, 0}, std::array{0, 0}, 0.5);
    q.set(std::array{1, 0}, std::array{0, 1}, 0.5);
    q.set(std::array{1, 1}, std::array{0, 1}, 1.0);
    return q;
  }
  throw std::invalid_argument("unknown catalog correlation: " + name);
}

std::vector<std::string> correlation_names() {
  return {"pr_box",        "chsh_shared_coin", "chsh_comm",
          "ghz_binv",      "ghz_corr_best",    "ghz_comm_best",
          "q_star",        "q_prime",          "pappa_fair_coin"};
}

namespace {

// Strategy indices for binary types/actions, encoding sigma(t) as digit t:
// value = sigma(0) + 2 * sigma(1).
constexpr int kConst0 = 0;
constexpr int kFlip = 1;    // sigma(t) = 1 - t
constexpr int kFollow = 2;  // sigma(t) = t
constexpr int kConst1 = 3;

StandardFormDistribution binary_two_player(
    std::vector<std::pair<std::array<int, 2>, double>> atoms) {
  StandardFormDistribution w;
  w.type_sizes = {2, 2};
  w.action_sizes = {2, 2};
  w.weights.assign(16, 0.0);
  ProfileSpace space({4, 4});
  for (const auto& [sigma, p] : atoms)
    w.weights[space.index(std::array{sigma[0], sigma[1]})] += p;
  return w;
}

}  // namespace

StandardFormDistribution reference_standard_form(const std::string& name) {
  if (name == "chsh_shared_coin")
    return binary_two_player({{{kConst0, kConst0}, 0.5},
                              {{kConst1, kConst1}, 0.5}});
  if (name == "pappa_fair_coin")
    return binary_two_player({{{kConst0, kFollow}, 0.5},
                              {{kFlip, kConst1}, 0.5}});
  if (name == "pappa_unfair")
    return binary_two_player({{{kConst0, kFollow}, 1.0}});
  if (name == "pappa_pure_00")
    return binary_two_player({{{kConst0, kConst0}, 1.0}});
  if (name == "pd_qstar")
    return binary_two_player({{{kConst0, kFollow}, 0.5},
                              {{kFollow, kConst0}, 0.5}});
  if (name == "ghz_corr_best") {
    StandardFormDistribution w;
    w.type_sizes = {2, 2, 2};
    w.action_sizes = {2, 2, 2};
    w.weights.assign(64, 0.0);
    ProfileSpace space({4, 4, 4});
    w.weights[space.index(std::array{kFlip, kFlip, kFlip})] = 1.0;
    return w;
  }
  throw std::invalid_argument("unknown standard-form distribution: " + name);
}

std::vector<std::string> standard_form_names() {
  return {"chsh_shared_coin", "pappa_fair_coin", "pappa_unfair",
          "pappa_pure_00",    "pd_qstar",        "ghz_corr_best"};
}

ValidationReport LemmaParams::validate() const {
  ValidationReport report;
  auto in_unit = [](double x) { return x >= -kProbTolerance &&
                                       x <= 1.0 + kProbTolerance; };
  for (double x : {p, q, p00, p01, p10, p11})
    if (!in_unit(x)) report.fail("probability out of [0,1]");
  if (std::abs(p00 + p01 + p10 + p11 - 1.0) > kProbTolerance)
    report.fail("type-(1,1) row mass " +
                std::to_string(p00 + p01 + p10 + p11));
  if (epsilon <= 0.0 || epsilon >= 1.0) report.fail("epsilon out of (0,1)");
  return report;
}

Correlation lemma_correlation(const LemmaParams& params) {
  ValidationReport report = params.validate();
  if (!report.valid)
    throw std::invalid_argument("lemma_correlation: " + report.issues.front());
  Correlation q({2, 2}, {2, 2});
  q.set(std::array{0, 0}, std::array{0, 0}, 1.0);
  q.set(std::array{0, 1}, std::array{0, 0}, 1.0 - params.p);
  q.set(std::array{0, 1}, std::array{0, 1}, params.p);
  q.set(std::array{1, 0}, std::array{0, 0}, 1.0 - params.q);
  q.set(std::array{1, 0}, std::array{1, 0}, params.q);
  q.set(std::array{1, 1}, std::array{0, 0}, params.p00);
  q.set(std::array{1, 1}, std::array{0, 1}, params.p01);
  q.set(std::array{1, 1}, std::array{1, 0}, params.p10);
  q.set(std::array{1, 1}, std::array{1, 1}, params.p11);
  return q;
}

std::array<double, 6> lemma_conditions(const LemmaParams& params) {
  ValidationReport report = params.validate();
  if (!report.valid)
    throw std::invalid_argument("lemma_conditions: " + report.issues.front());
  const double e = 1.0 - params.epsilon;
  return {
      params.p10 - params.p11 - e * params.q,
      params.p01 - params.p11 - e * params.p,
      e * (1.0 - params.q) - (params.p00 - params.p01),
      e * (1.0 - params.p) - (params.p00 - params.p10),
      (params.p01 + params.p10) - (params.p00 + params.p11) -
          e * (2.0 * params.q - 1.0),
      (params.p01 + params.p10) - (params.p00 + params.p11) -
          e * (2.0 * params.p - 1.0),
  };
}

MerminQuantities mermin_quantities(const Correlation& q) {
  if (q.num_players() != 3 || q.inputs().sizes() != std::vector<int>{2, 2, 2} ||
      q.outputs().sizes() != std::vector<int>{2, 2, 2})
    throw std::invalid_argument(
        "mermin_quantities: needs a 3-player binary canonical correlation");
  MerminQuantities out;
  for (long t : {1L, 2L, 4L, 7L}) {  // (0,0,1), (0,1,0), (1,0,0), (1,1,1)
    int tau = product_bit(q.inputs().decode(t));
    for (long a = 0; a < 8; ++a)
      if (parity(q.outputs().decode(a)) == tau) out.p += q.at(t, a);
  }
  out.m = 4.0 - 2.0 * out.p;
  return out;
}

}  // namespace catalog
}  // namespace binv

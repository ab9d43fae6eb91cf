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

#include "binv/game.hpp"

#include <cmath>
#include <stdexcept>

#include "binv/correlation.hpp"

namespace binv {

BayesianGame::BayesianGame(std::vector<int> type_sizes,
                           std::vector<int> action_sizes,
                           std::vector<double> prior,
                           std::vector<std::vector<double>> payoffs)
    : types_(std::move(type_sizes)),
      actions_(std::move(action_sizes)),
      prior_(std::move(prior)),
      payoffs_(std::move(payoffs)) {
  if (types_.arity() < 1) throw std::invalid_argument("game: no players");
  if (actions_.arity() != types_.arity())
    throw std::invalid_argument("game: type/action player count mismatch");
  if (static_cast<long>(prior_.size()) != types_.total())
    throw std::invalid_argument("game: prior size mismatch");
  if (static_cast<int>(payoffs_.size()) != num_players())
    throw std::invalid_argument("game: payoff tensor count mismatch");
  for (const auto& v : payoffs_)
    if (static_cast<long>(v.size()) != types_.total() * actions_.total())
      throw std::invalid_argument("game: payoff tensor size mismatch");
}

double BayesianGame::type_marginal(int i, int t_i) const {
  double m = 0.0;
  for (long t = 0; t < types_.total(); ++t) {
    if (types_.decode(t)[i] == t_i) m += prior_[t];
  }
  return m;
}

ValidationReport validate_game(const BayesianGame& game) {
  ValidationReport report;
  double mass = 0.0;
  for (long t = 0; t < game.types().total(); ++t) {
    double p = game.prior(t);
    if (p < -kProbTolerance)
      report.fail("negative prior entry at t=(" +
                  join_ints(game.types().decode(t)) + ")");
    mass += p;
  }
  if (std::abs(mass - 1.0) > kProbTolerance)
    report.fail("prior mass " + std::to_string(mass));
  for (int i = 0; i < game.num_players(); ++i) {
    for (double v : game.payoff_tensor(i)) {
      if (!std::isfinite(v)) {
        report.fail("non-finite payoff entry for player " + std::to_string(i));
        break;
      }
    }
  }
  return report;
}

static void check_canonical_shape(const BayesianGame& game,
                                  const Correlation& q) {
  if (q.inputs().sizes() != game.types().sizes() ||
      q.outputs().sizes() != game.actions().sizes())
    throw std::invalid_argument(
        "correlation alphabets do not match the game's types/actions");
}

PayoffVector expected_payoffs(const BayesianGame& game, const Correlation& q) {
  check_canonical_shape(game, q);
  PayoffVector out(game.num_players(), 0.0);
  for (long t = 0; t < game.types().total(); ++t) {
    double pt = game.prior(t);
    if (pt == 0.0) continue;
    for (long a = 0; a < game.actions().total(); ++a) {
      double w = pt * q.at(t, a);
      if (w == 0.0) continue;
      for (int i = 0; i < game.num_players(); ++i)
        out[i] += w * game.payoff(i, t, a);
    }
  }
  return out;
}

double social_payoff(const BayesianGame& game, const Correlation& q,
                     const SocialObjective& objective) {
  PayoffVector v = expected_payoffs(game, q);
  double total = 0.0;
  for (int i = 0; i < game.num_players(); ++i)
    total += objective.weight(i, game.num_players()) * v[i];
  return total;
}

double conditional_payoff(const BayesianGame& game, const Correlation& q,
                          int player, int type) {
  check_canonical_shape(game, q);
  if (player < 0 || player >= game.num_players())
    throw std::out_of_range("conditional_payoff: player out of range");
  if (type < 0 || type >= game.types().size(player))
    throw std::out_of_range("conditional_payoff: type out of range");
  if (game.type_marginal(player, type) <= 0.0)
    throw std::invalid_argument(
        "conditional_payoff: type has zero prior probability");
  double sum = 0.0;
  for (long t = 0; t < game.types().total(); ++t) {
    if (game.types().decode(t)[player] != type) continue;
    double pt = game.prior(t);
    if (pt == 0.0) continue;
    for (long a = 0; a < game.actions().total(); ++a)
      sum += pt * q.at(t, a) * game.payoff(player, t, a);
  }
  return sum;
}

BayesianGame restrict_to_type(const BayesianGame& game,
                              std::span<const int> t0) {
  long idx = game.types().index(t0);  // range-checked
  std::vector<double> prior(game.types().total(), 0.0);
  prior[idx] = 1.0;
  std::vector<std::vector<double>> payoffs;
  payoffs.reserve(game.num_players());
  for (int i = 0; i < game.num_players(); ++i)
    payoffs.push_back(game.payoff_tensor(i));
  BayesianGame out(game.types().sizes(), game.actions().sizes(),
                   std::move(prior), std::move(payoffs));
  out.type_labels = game.type_labels;
  out.action_labels = game.action_labels;
  return out;
}

std::optional<std::vector<double>> detect_constant_sum(
    const BayesianGame& game) {
  if (game.num_players() != 2)
    throw std::invalid_argument("detect_constant_sum: requires 2 players");
  std::vector<double> s(game.types().total());
  for (long t = 0; t < game.types().total(); ++t) {
    double first = game.payoff(0, t, 0) + game.payoff(1, t, 0);
    for (long a = 1; a < game.actions().total(); ++a) {
      double sum = game.payoff(0, t, a) + game.payoff(1, t, a);
      if (std::abs(sum - first) > kProbTolerance) return std::nullopt;
    }
    s[t] = first;
  }
  return s;
}

bool is_full_coordination(const BayesianGame& game, double tol) {
  for (int i = 1; i < game.num_players(); ++i) {
    for (size_t k = 0; k < game.payoff_tensor(0).size(); ++k)
      if (std::abs(game.payoff_tensor(i)[k] - game.payoff_tensor(0)[k]) > tol)
        return false;
  }
  return true;
}

}  // namespace binv

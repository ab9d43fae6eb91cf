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

#ifndef BINV_GAME_HPP
#define BINV_GAME_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "binv/util.hpp"

namespace binv {

class Correlation;

// Finite game of incomplete information: n players, per-player type and
// action alphabets, a common prior P(t) over type profiles and one payoff
// tensor v_i(t, a) per player.
class BayesianGame {
 public:
  BayesianGame(std::vector<int> type_sizes, std::vector<int> action_sizes,
               std::vector<double> prior,
               std::vector<std::vector<double>> payoffs);

  int num_players() const { return static_cast<int>(types_.arity()); }
  const ProfileSpace& types() const { return types_; }
  const ProfileSpace& actions() const { return actions_; }

  double prior(long t_index) const { return prior_[t_index]; }
  const std::vector<double>& prior() const { return prior_; }
  // Marginal probability of player i having type t_i.
  double type_marginal(int i, int t_i) const;

  double payoff(int player, long t_index, long a_index) const {
    return payoffs_[player][t_index * actions_.total() + a_index];
  }
  const std::vector<double>& payoff_tensor(int player) const {
    return payoffs_[player];
  }

  // Optional display labels; empty when index-based.
  std::vector<std::vector<std::string>> type_labels;
  std::vector<std::vector<std::string>> action_labels;

 private:
  ProfileSpace types_;
  ProfileSpace actions_;
  std::vector<double> prior_;                 // indexed by type profile
  std::vector<std::vector<double>> payoffs_;  // [player][t * |A| + a]
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> issues;
  void fail(std::string msg) {
    valid = false;
    issues.push_back(std::move(msg));
  }
};

using PayoffVector = std::vector<double>;

// Social objective: sum of payoffs, one player's payoff, or a weighted sum.
struct SocialObjective {
  enum class Kind { SocialWelfare, SinglePlayer, Weighted };
  Kind kind = Kind::SocialWelfare;
  int player = 0;
  std::vector<double> weights;

  static SocialObjective sw() { return {}; }
  static SocialObjective single(int i) {
    return {Kind::SinglePlayer, i, {}};
  }
  static SocialObjective weighted(std::vector<double> w) {
    return {Kind::Weighted, 0, std::move(w)};
  }

  double weight(int i, int n) const {
    switch (kind) {
      case Kind::SocialWelfare: return 1.0;
      case Kind::SinglePlayer: return i == player ? 1.0 : 0.0;
      case Kind::Weighted:
        if (static_cast<int>(weights.size()) != n)
          throw std::invalid_argument("objective weight count mismatch");
        return weights[i];
    }
    return 0.0;
  }
};

inline constexpr double kProbTolerance = 1e-9;

ValidationReport validate_game(const BayesianGame& game);

// <v_i> = sum_{t,a} P(t) Q(a|t) v_i(t,a) for every player.
PayoffVector expected_payoffs(const BayesianGame& game, const Correlation& q);

double social_payoff(const BayesianGame& game, const Correlation& q,
                     const SocialObjective& objective);

// Unnormalized conditional payoff of player i at type t_i: the sum
// sum_{t_-i, a} P(t) Q(a|t) v_i(t,a) over profiles with coordinate i fixed.
// It carries the joint prior weight, so summing over t_i recovers <v_i>.
double conditional_payoff(const BayesianGame& game, const Correlation& q,
                          int player, int type);

// Same game with a point-mass prior on t0.
BayesianGame restrict_to_type(const BayesianGame& game,
                              std::span<const int> t0);

// For two-player games: s(t) = v_1(t,a) + v_2(t,a) when the sum does not
// depend on a (within kProbTolerance); std::nullopt otherwise.
std::optional<std::vector<double>> detect_constant_sum(
    const BayesianGame& game);

// All payoff tensors equal within tolerance.
bool is_full_coordination(const BayesianGame& game, double tol = 1e-9);

}  // namespace binv

#endif  // BINV_GAME_HPP

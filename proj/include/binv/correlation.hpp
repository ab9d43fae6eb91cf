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

#ifndef BINV_CORRELATION_HPP
#define BINV_CORRELATION_HPP

#include <optional>
#include <span>
#include <vector>

#include "binv/game.hpp"
#include "binv/util.hpp"

namespace binv {

// Joint conditional distribution Q(s|r) over per-player output alphabets S_i
// given per-player input alphabets R_i, stored as a dense row-stochastic
// tensor. Canonical correlations are the special case R = T, S = A.
class Correlation {
 public:
  Correlation() = default;  // empty placeholder; assign before use
  Correlation(std::vector<int> input_sizes, std::vector<int> output_sizes);

  int num_players() const { return inputs_.arity(); }
  const ProfileSpace& inputs() const { return inputs_; }
  const ProfileSpace& outputs() const { return outputs_; }

  double at(long r_index, long s_index) const {
    return q_[r_index * outputs_.total() + s_index];
  }
  void set(long r_index, long s_index, double p) {
    q_[r_index * outputs_.total() + s_index] = p;
  }
  void set(std::span<const int> r, std::span<const int> s, double p) {
    set(inputs_.index(r), outputs_.index(s), p);
  }

  ValidationReport validate(double tol = kProbTolerance) const;

  bool same_shape(const Correlation& other) const {
    return inputs_.sizes() == other.inputs_.sizes() &&
           outputs_.sizes() == other.outputs_.sizes();
  }

 private:
  ProfileSpace inputs_;
  ProfileSpace outputs_;
  std::vector<double> q_;  // [r * |S| + s]
};

// A general communication solution: device Q(s|r), per-player input maps
// f_i(t_i, lambda_i) -> r_i, output maps g_i(t_i, s_i, lambda_i) -> a_i and
// private randomness distributions Lambda_i.
struct Solution {
  Correlation device;
  std::vector<int> type_sizes;
  std::vector<int> action_sizes;
  // randomness[i][l] = Lambda_i(l)
  std::vector<std::vector<double>> randomness;
  // input_map[i][t_i][l] = r_i
  std::vector<std::vector<std::vector<int>>> input_map;
  // output_map[i][t_i][s_i][l] = a_i
  std::vector<std::vector<std::vector<std::vector<int>>>> output_map;

  ValidationReport validate() const;
};

// Shared-variable simulation of a correlation: weights V over profiles of
// per-player components gamma_i, and response kernels L_i(s_i | r_i, gamma_i).
struct LocalDecomposition {
  ProfileSpace components;            // per-player gamma alphabets
  std::vector<double> weights;        // V(gamma), indexed by profile
  // kernels[i][gamma_i][r_i * |S_i| + s_i]
  std::vector<std::vector<std::vector<double>>> kernels;

  // Evaluates sum_gamma V(gamma) prod_i L_i(s_i | r_i, gamma_i).
  double evaluate(const ProfileSpace& inputs, const ProfileSpace& outputs,
                  long r_index, long s_index) const;
};

struct NonSignallingWitness {
  int player = -1;                 // whose input moved
  std::vector<int> input = {};     // r
  std::vector<int> input_alt = {}; // r' (differs from r in `player` only)
  std::vector<int> marginal_outputs = {};  // s_{-player} where it shows
};

struct BeliefInvarianceResult {
  bool belief_invariant = true;
  double worst_violation = 0.0;
  NonSignallingWitness witness;
};

struct ClassificationReport {
  BeliefInvarianceResult non_signalling;
  bool product = false;
  bool local = false;
  bool local_within_budget = true;
  std::optional<LocalDecomposition> decomposition;
};

// Non-signalling check by single-coordinate input swaps: for every player j
// and inputs r, r' differing only at j, the output marginal on N\{j} must
// be unchanged within tol. The all-subsets condition follows by telescoping;
// `exhaustive` additionally checks every proper subset directly.
BeliefInvarianceResult is_belief_invariant(const Correlation& q,
                                           double tol = 1e-9,
                                           bool exhaustive = false);

// Canonical representative of a communication solution played truthfully:
// Qhat(a|t) = sum_lambda Lambda(lambda) sum_{s: g(t,s,lambda)=a}
//             Q(s | f(t,lambda)).
Correlation canonicalize(const Solution& sol, const BayesianGame& game);

// Expected payoffs of a solution played directly (summing over t, lambda, s);
// the independent route against which canonicalize is checked.
PayoffVector solution_payoffs(const BayesianGame& game, const Solution& sol);

// Pointwise convex combination p*Q1 + (1-p)*Q2.
Correlation mix(const Correlation& q1, const Correlation& q2, double p);

// True iff Q(a|t) factorizes as prod_i m_i(a_i|t_i) within tol, where m_i are
// the single-player conditionals. Only belief-invariant correlations have
// well-defined m_i; anything else reports false.
bool is_product(const Correlation& q, double tol = 1e-9);

// Largest absolute deviation from the product of single-player conditionals
// (at least the non-signalling violation, which makes them ill-defined).
double product_defect(const Correlation& q);

// LP membership test for the local polytope: weights over profiles of
// deterministic local functions sigma_i: R_i -> S_i reproducing Q.
// Throws if prod_i |S_i|^|R_i| exceeds `budget`.
std::optional<LocalDecomposition> local_membership(const Correlation& q,
                                                   double tol = 1e-8,
                                                   long budget = 1000000);

// Marginal distribution of the outputs of players in `keep` given input r.
std::vector<double> marginal(const Correlation& q, std::span<const int> keep,
                             std::span<const int> r);

ClassificationReport classify(const Correlation& q, double tol = 1e-9,
                              long local_budget = 1000000);

}  // namespace binv

#endif  // BINV_CORRELATION_HPP

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

#include "binv/correlation.hpp"

#include <cmath>
#include <stdexcept>

#include "binv/simplex.hpp"

namespace binv {

Correlation::Correlation(std::vector<int> input_sizes,
                         std::vector<int> output_sizes)
    : inputs_(std::move(input_sizes)), outputs_(std::move(output_sizes)) {
  if (inputs_.arity() != outputs_.arity())
    throw std::invalid_argument("correlation: input/output arity mismatch");
  q_.assign(inputs_.total() * outputs_.total(), 0.0);
}

ValidationReport Correlation::validate(double tol) const {
  ValidationReport report;
  for (long r = 0; r < inputs_.total(); ++r) {
    double row = 0.0;
    for (long s = 0; s < outputs_.total(); ++s) {
      double p = at(r, s);
      if (p < -tol) {
        report.fail("negative entry Q(s|r) at r=(" +
                    join_ints(inputs_.decode(r)) + "), s=(" +
                    join_ints(outputs_.decode(s)) + ")");
      }
      row += p;
    }
    if (std::abs(row - 1.0) > tol)
      report.fail("row mass " + std::to_string(row) + " at r=(" +
                  join_ints(inputs_.decode(r)) + ")");
  }
  return report;
}

ValidationReport Solution::validate() const {
  ValidationReport report;
  int n = device.num_players();
  if (static_cast<int>(type_sizes.size()) != n ||
      static_cast<int>(action_sizes.size()) != n ||
      static_cast<int>(randomness.size()) != n ||
      static_cast<int>(input_map.size()) != n ||
      static_cast<int>(output_map.size()) != n) {
    report.fail("solution: per-player table count mismatch");
    return report;
  }
  for (int i = 0; i < n; ++i) {
    double mass = 0.0;
    for (double p : randomness[i]) {
      if (p < -kProbTolerance) report.fail("negative randomness weight");
      mass += p;
    }
    if (std::abs(mass - 1.0) > kProbTolerance)
      report.fail("randomness of player " + std::to_string(i) +
                  " has mass " + std::to_string(mass));
    if (static_cast<int>(input_map[i].size()) != type_sizes[i] ||
        static_cast<int>(output_map[i].size()) != type_sizes[i])
      report.fail("strategy table of player " + std::to_string(i) +
                  " not total on types");
  }
  return report;
}

double LocalDecomposition::evaluate(const ProfileSpace& inputs,
                                    const ProfileSpace& outputs, long r_index,
                                    long s_index) const {
  std::vector<int> r = inputs.decode(r_index);
  std::vector<int> s = outputs.decode(s_index);
  double total = 0.0;
  for (long g = 0; g < components.total(); ++g) {
    double w = weights[g];
    if (w == 0.0) continue;
    std::vector<int> gamma = components.decode(g);
    double prod = w;
    for (int i = 0; i < inputs.arity() && prod != 0.0; ++i)
      prod *= kernels[i][gamma[i]][r[i] * outputs.size(i) + s[i]];
    total += prod;
  }
  return total;
}

namespace {

// Marginal over the outputs of all players except `skip`, as a dense vector
// indexed by the reduced output profile.
std::vector<double> marginal_without(const Correlation& q, int skip,
                                     long r_index) {
  std::vector<int> reduced_sizes;
  for (int i = 0; i < q.num_players(); ++i)
    if (i != skip) reduced_sizes.push_back(q.outputs().size(i));
  ProfileSpace reduced(reduced_sizes.empty() ? std::vector<int>{1}
                                             : reduced_sizes);
  std::vector<double> m(reduced.total(), 0.0);
  for (long s = 0; s < q.outputs().total(); ++s) {
    std::vector<int> sp = q.outputs().decode(s);
    std::vector<int> rp;
    for (int i = 0; i < q.num_players(); ++i)
      if (i != skip) rp.push_back(sp[i]);
    long idx = reduced_sizes.empty() ? 0 : reduced.index(rp);
    m[idx] += q.at(r_index, s);
  }
  return m;
}

}  // namespace

BeliefInvarianceResult is_belief_invariant(const Correlation& q, double tol,
                                           bool exhaustive) {
  BeliefInvarianceResult result;
  int n = q.num_players();
  for (int j = 0; j < n; ++j) {
    // Group inputs by the coordinates other than j: compare the marginal on
    // N\{j} across the |R_j| values.
    for (long r = 0; r < q.inputs().total(); ++r) {
      std::vector<int> rp = q.inputs().decode(r);
      if (rp[j] != 0) continue;  // use r_j = 0 as the reference row
      std::vector<double> ref = marginal_without(q, j, r);
      for (int rj = 1; rj < q.inputs().size(j); ++rj) {
        long r_alt = q.inputs().with_coordinate(rp, j, rj);
        std::vector<double> alt = marginal_without(q, j, r_alt);
        for (size_t k = 0; k < ref.size(); ++k) {
          double dev = std::abs(ref[k] - alt[k]);
          if (dev > result.worst_violation) {
            result.worst_violation = dev;
            result.witness.player = j;
            result.witness.input = rp;
            result.witness.input_alt = q.inputs().decode(r_alt);
            result.witness.marginal_outputs.assign(1, static_cast<int>(k));
          }
        }
      }
    }
  }
  if (exhaustive && n > 1) {
    // Direct check of the subset form: the marginal of s_I may not depend on
    // r_J for any proper nonempty I. Redundant given the one-coordinate
    // sweep, kept as a cross-check for small instances.
    for (int mask = 1; mask < (1 << n) - 1; ++mask) {
      for (long r1 = 0; r1 < q.inputs().total(); ++r1) {
        std::vector<int> a = q.inputs().decode(r1);
        for (long r2 = 0; r2 < q.inputs().total(); ++r2) {
          std::vector<int> b = q.inputs().decode(r2);
          bool same_on_i = true;
          for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) same_on_i &= a[i] == b[i];
          if (!same_on_i) continue;
          // Accumulate marginals on I for both rows.
          std::vector<double> m1, m2;
          std::vector<int> isz;
          for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) isz.push_back(q.outputs().size(i));
          ProfileSpace ip(isz);
          m1.assign(ip.total(), 0.0);
          m2.assign(ip.total(), 0.0);
          for (long s = 0; s < q.outputs().total(); ++s) {
            std::vector<int> sp = q.outputs().decode(s);
            std::vector<int> si;
            for (int i = 0; i < n; ++i)
              if ((mask >> i) & 1) si.push_back(sp[i]);
            m1[ip.index(si)] += q.at(r1, s);
            m2[ip.index(si)] += q.at(r2, s);
          }
          for (long k = 0; k < ip.total(); ++k)
            result.worst_violation =
                std::max(result.worst_violation, std::abs(m1[k] - m2[k]));
        }
      }
    }
  }
  result.belief_invariant = result.worst_violation <= tol;
  return result;
}

Correlation canonicalize(const Solution& sol, const BayesianGame& game) {
  int n = game.num_players();
  if (sol.type_sizes != game.types().sizes() ||
      sol.action_sizes != game.actions().sizes())
    throw std::invalid_argument(
        "canonicalize: solution alphabets do not match the game");
  if (sol.device.num_players() != n)
    throw std::invalid_argument("canonicalize: device player count mismatch");
  Correlation out(game.types().sizes(), game.actions().sizes());

  std::vector<int> lambda_sizes;
  for (const auto& l : sol.randomness)
    lambda_sizes.push_back(static_cast<int>(l.size()));
  ProfileSpace lambdas(lambda_sizes);

  for (long t = 0; t < game.types().total(); ++t) {
    std::vector<int> tp = game.types().decode(t);
    for (long l = 0; l < lambdas.total(); ++l) {
      std::vector<int> lp = lambdas.decode(l);
      double wl = 1.0;
      for (int i = 0; i < n; ++i) wl *= sol.randomness[i][lp[i]];
      if (wl == 0.0) continue;
      std::vector<int> r(n);
      for (int i = 0; i < n; ++i) r[i] = sol.input_map[i][tp[i]][lp[i]];
      long r_idx = sol.device.inputs().index(r);
      for (long s = 0; s < sol.device.outputs().total(); ++s) {
        double p = sol.device.at(r_idx, s);
        if (p == 0.0) continue;
        std::vector<int> sp = sol.device.outputs().decode(s);
        std::vector<int> a(n);
        for (int i = 0; i < n; ++i) a[i] = sol.output_map[i][tp[i]][sp[i]][lp[i]];
        long a_idx = game.actions().index(a);
        out.set(t, a_idx, out.at(t, a_idx) + wl * p);
      }
    }
  }
  return out;
}

PayoffVector solution_payoffs(const BayesianGame& game, const Solution& sol) {
  int n = game.num_players();
  PayoffVector out(n, 0.0);
  std::vector<int> lambda_sizes;
  for (const auto& l : sol.randomness)
    lambda_sizes.push_back(static_cast<int>(l.size()));
  ProfileSpace lambdas(lambda_sizes);

  for (long t = 0; t < game.types().total(); ++t) {
    double pt = game.prior(t);
    if (pt == 0.0) continue;
    std::vector<int> tp = game.types().decode(t);
    for (long l = 0; l < lambdas.total(); ++l) {
      std::vector<int> lp = lambdas.decode(l);
      double wl = pt;
      for (int i = 0; i < n; ++i) wl *= sol.randomness[i][lp[i]];
      if (wl == 0.0) continue;
      std::vector<int> r(n);
      for (int i = 0; i < n; ++i) r[i] = sol.input_map[i][tp[i]][lp[i]];
      long r_idx = sol.device.inputs().index(r);
      for (long s = 0; s < sol.device.outputs().total(); ++s) {
        double p = sol.device.at(r_idx, s);
        if (p == 0.0) continue;
        std::vector<int> sp = sol.device.outputs().decode(s);
        std::vector<int> a(n);
        for (int i = 0; i < n; ++i) a[i] = sol.output_map[i][tp[i]][sp[i]][lp[i]];
        long a_idx = game.actions().index(a);
        for (int i = 0; i < n; ++i)
          out[i] += wl * p * game.payoff(i, t, a_idx);
      }
    }
  }
  return out;
}

Correlation mix(const Correlation& q1, const Correlation& q2, double p) {
  if (!q1.same_shape(q2))
    throw std::invalid_argument("mix: correlation alphabets differ");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("mix: p out of [0,1]");
  Correlation out(q1.inputs().sizes(), q1.outputs().sizes());
  for (long r = 0; r < q1.inputs().total(); ++r)
    for (long s = 0; s < q1.outputs().total(); ++s)
      out.set(r, s, p * q1.at(r, s) + (1.0 - p) * q2.at(r, s));
  return out;
}

namespace {

// Deviation of Q from the product of its single-player conditionals.
double factorization_defect(const Correlation& q) {
  int n = q.num_players();
  // Single-player conditionals m_i(s_i | r_i), read off any row; belief
  // invariance makes the choice immaterial up to tol.
  std::vector<std::vector<std::vector<double>>> m(n);
  std::vector<int> base(n, 0);
  for (int i = 0; i < n; ++i) {
    m[i].assign(q.inputs().size(i),
                std::vector<double>(q.outputs().size(i), 0.0));
    for (int ri = 0; ri < q.inputs().size(i); ++ri) {
      long r = q.inputs().with_coordinate(base, i, ri);
      for (long s = 0; s < q.outputs().total(); ++s)
        m[i][ri][q.outputs().decode(s)[i]] += q.at(r, s);
    }
  }
  double worst = 0.0;
  for (long r = 0; r < q.inputs().total(); ++r) {
    std::vector<int> rp = q.inputs().decode(r);
    for (long s = 0; s < q.outputs().total(); ++s) {
      std::vector<int> sp = q.outputs().decode(s);
      double prod = 1.0;
      for (int i = 0; i < n; ++i) prod *= m[i][rp[i]][sp[i]];
      worst = std::max(worst, std::abs(prod - q.at(r, s)));
    }
  }
  return worst;
}

}  // namespace

double product_defect(const Correlation& q) {
  BeliefInvarianceResult bi = is_belief_invariant(q, 0.0);
  return std::max(bi.worst_violation, factorization_defect(q));
}

bool is_product(const Correlation& q, double tol) {
  BeliefInvarianceResult bi = is_belief_invariant(q, tol);
  if (!bi.belief_invariant) return false;
  return factorization_defect(q) <= tol;
}

std::optional<LocalDecomposition> local_membership(const Correlation& q,
                                                   double tol, long budget) {
  int n = q.num_players();
  std::vector<long> counts(n);
  long profiles = 1;
  for (int i = 0; i < n; ++i) {
    counts[i] = function_count(q.inputs().size(i), q.outputs().size(i));
    profiles *= counts[i];
    if (profiles > budget)
      throw std::invalid_argument("local_membership: profile budget exceeded");
  }

  // Feasibility LP: weights over deterministic strategy profiles reproducing
  // every entry of Q, plus total mass one.
  LinearProgram lp;
  lp.num_vars = static_cast<int>(profiles);
  lp.objective.assign(lp.num_vars, 0.0);
  std::vector<int> count_sizes(counts.begin(), counts.end());
  ProfileSpace sigma_space(count_sizes);

  for (long r = 0; r < q.inputs().total(); ++r) {
    std::vector<int> rp = q.inputs().decode(r);
    for (long s = 0; s < q.outputs().total(); ++s) {
      std::vector<int> sp = q.outputs().decode(s);
      std::vector<double> row(lp.num_vars, 0.0);
      for (long g = 0; g < profiles; ++g) {
        std::vector<int> sigma = sigma_space.decode(g);
        bool hit = true;
        for (int i = 0; i < n && hit; ++i)
          hit = function_value(sigma[i], rp[i], q.outputs().size(i)) == sp[i];
        if (hit) row[g] = 1.0;
      }
      lp.add_eq(std::move(row), q.at(r, s));
    }
  }
  lp.add_eq(std::vector<double>(lp.num_vars, 1.0), 1.0);

  LpSolution sol = solve(lp, 1e-11);
  if (sol.status != LpStatus::Optimal || sol.primal_residual > tol)
    return std::nullopt;

  LocalDecomposition dec;
  dec.components = sigma_space;
  dec.weights = sol.x;
  dec.kernels.resize(n);
  for (int i = 0; i < n; ++i) {
    dec.kernels[i].resize(counts[i]);
    for (long f = 0; f < counts[i]; ++f) {
      auto& k = dec.kernels[i][f];
      k.assign(q.inputs().size(i) * q.outputs().size(i), 0.0);
      for (int ri = 0; ri < q.inputs().size(i); ++ri)
        k[ri * q.outputs().size(i) +
          function_value(f, ri, q.outputs().size(i))] = 1.0;
    }
  }
  return dec;
}

std::vector<double> marginal(const Correlation& q, std::span<const int> keep,
                             std::span<const int> r) {
  long r_index = q.inputs().index(r);
  std::vector<int> keep_sizes;
  for (int i : keep) keep_sizes.push_back(q.outputs().size(i));
  ProfileSpace kp(keep_sizes.empty() ? std::vector<int>{1} : keep_sizes);
  std::vector<double> m(kp.total(), 0.0);
  for (long s = 0; s < q.outputs().total(); ++s) {
    std::vector<int> sp = q.outputs().decode(s);
    std::vector<int> si;
    for (int i : keep) si.push_back(sp[i]);
    m[keep.empty() ? 0 : kp.index(si)] += q.at(r_index, s);
  }
  return m;
}

ClassificationReport classify(const Correlation& q, double tol,
                              long local_budget) {
  ClassificationReport report;
  report.non_signalling = is_belief_invariant(q, tol);
  report.product = is_product(q, tol);
  try {
    report.decomposition = local_membership(q, std::max(tol, 1e-8),
                                            local_budget);
    report.local = report.decomposition.has_value();
  } catch (const std::invalid_argument&) {
    report.local_within_budget = false;
  }
  return report;
}

}  // namespace binv

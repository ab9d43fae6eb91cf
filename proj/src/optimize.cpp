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

#include "binv/optimize.hpp"

#include <cmath>
#include <stdexcept>

namespace binv {

namespace {

long q_var(const BayesianGame& game, long t, long a) {
  return t * game.actions().total() + a;
}

std::vector<double> objective_vector(const BayesianGame& game,
                                     const SocialObjective& objective) {
  int n = game.num_players();
  std::vector<double> c(game.types().total() * game.actions().total(), 0.0);
  for (long t = 0; t < game.types().total(); ++t) {
    double pt = game.prior(t);
    if (pt == 0.0) continue;
    for (long a = 0; a < game.actions().total(); ++a) {
      double v = 0.0;
      for (int i = 0; i < n; ++i)
        v += objective.weight(i, n) * game.payoff(i, t, a);
      c[q_var(game, t, a)] = pt * v;
    }
  }
  return c;
}

void add_normalization_rows(const BayesianGame& game, LinearProgram* lp) {
  for (long t = 0; t < game.types().total(); ++t) {
    std::vector<double> row(lp->num_vars, 0.0);
    for (long a = 0; a < game.actions().total(); ++a)
      row[q_var(game, t, a)] = 1.0;
    lp->add_eq(std::move(row), 1.0,
               "norm_t" + join_ints(game.types().decode(t)));
  }
}

// Incentive rows: on-path value minus deviation value >= 0, written as
// (deviation - on-path) <= 0 for every (i, t_i, r_i, alpha_i).
void add_incentive_rows(const BayesianGame& game, LinearProgram* lp) {
  int n = game.num_players();
  for (int i = 0; i < n; ++i) {
    int num_actions = game.actions().size(i);
    long relabels = function_count(num_actions, num_actions);
    for (int type = 0; type < game.types().size(i); ++type) {
      if (game.type_marginal(i, type) <= 0.0) continue;
      for (int report = 0; report < game.types().size(i); ++report) {
        for (long alpha = 0; alpha < relabels; ++alpha) {
          std::vector<double> row(lp->num_vars, 0.0);
          bool nontrivial = false;
          for (long t = 0; t < game.types().total(); ++t) {
            std::vector<int> tp = game.types().decode(t);
            if (tp[i] != type) continue;
            double pt = game.prior(t);
            if (pt == 0.0) continue;
            long reported = game.types().with_coordinate(tp, i, report);
            for (long a = 0; a < game.actions().total(); ++a) {
              std::vector<int> ap = game.actions().decode(a);
              int played = function_value(alpha, ap[i], num_actions);
              long a_played = game.actions().with_coordinate(ap, i, played);
              // deviation term: listens at the reported row
              row[q_var(game, reported, a)] +=
                  pt * game.payoff(i, t, a_played);
              // on-path term
              row[q_var(game, t, a)] -= pt * game.payoff(i, t, a);
            }
          }
          for (double v : row)
            if (v != 0.0) nontrivial = true;
          if (nontrivial)
            lp->add_ineq(std::move(row), 0.0,
                         "ic_p" + std::to_string(i) + "_t" +
                             std::to_string(type) + "_r" +
                             std::to_string(report) + "_a" +
                             std::to_string(alpha));
        }
      }
    }
  }
}

// One-coordinate non-signalling equalities, with r_j = 0 as reference row.
void add_ns_rows(const BayesianGame& game, LinearProgram* lp) {
  int n = game.num_players();
  for (int j = 0; j < n; ++j) {
    std::vector<int> other_sizes;
    for (int k = 0; k < n; ++k)
      if (k != j) other_sizes.push_back(game.actions().size(k));
    ProfileSpace others(other_sizes.empty() ? std::vector<int>{1}
                                            : other_sizes);
    for (long t = 0; t < game.types().total(); ++t) {
      std::vector<int> tp = game.types().decode(t);
      if (tp[j] != 0) continue;
      for (int tj = 1; tj < game.types().size(j); ++tj) {
        long t_alt = game.types().with_coordinate(tp, j, tj);
        for (long o = 0; o < others.total(); ++o) {
          std::vector<int> op = others.decode(o);
          std::vector<double> row(lp->num_vars, 0.0);
          for (int aj = 0; aj < game.actions().size(j); ++aj) {
            std::vector<int> a(n);
            int oi = 0;
            for (int k = 0; k < n; ++k) a[k] = k == j ? aj : op[oi++];
            long ai = game.actions().index(a);
            row[q_var(game, t, ai)] += 1.0;
            row[q_var(game, t_alt, ai)] -= 1.0;
          }
          lp->add_eq(std::move(row), 0.0,
                     "ns_p" + std::to_string(j) + "_t" + std::to_string(t) +
                         "v" + std::to_string(tj) + "_s" + std::to_string(o));
        }
      }
    }
  }
}

Correlation correlation_from_vector(const BayesianGame& game,
                                    const std::vector<double>& x) {
  Correlation q(game.types().sizes(), game.actions().sizes());
  for (long t = 0; t < game.types().total(); ++t)
    for (long a = 0; a < game.actions().total(); ++a)
      q.set(t, a, std::max(0.0, x[q_var(game, t, a)]));
  return q;
}

OptimizationResult run_lp(const BayesianGame& game, const LinearProgram& lp,
                          const SocialObjective& objective,
                          const std::string& opt_class,
                          const OptimizeOptions& opts) {
  LpSolution sol = opts.exact ? solve_exact(lp, opts.max_denominator)
                              : solve(lp, opts.tol);
  if (sol.status != LpStatus::Optimal)
    throw std::runtime_error("optimization LP did not reach optimality (" +
                             std::string(sol.status == LpStatus::Infeasible
                                             ? "infeasible"
                                             : sol.status == LpStatus::Unbounded
                                                   ? "unbounded"
                                                   : "iteration limit") +
                             ")");
  return OptimizationResult{opt_class,
                            sol.value,
                            sol.exact_value,
                            correlation_from_vector(game, sol.x),
                            std::nullopt,
                            objective,
                            sol.status};
}

std::vector<std::vector<double>> strategy_utilities(const BayesianGame& game,
                                                    const ProfileSpace& sigmas) {
  int n = game.num_players();
  std::vector<std::vector<double>> u(n,
                                     std::vector<double>(sigmas.total(), 0.0));
  for (long g = 0; g < sigmas.total(); ++g) {
    std::vector<int> sp = sigmas.decode(g);
    for (long t = 0; t < game.types().total(); ++t) {
      double pt = game.prior(t);
      if (pt == 0.0) continue;
      std::vector<int> tp = game.types().decode(t);
      std::vector<int> a(n);
      for (int i = 0; i < n; ++i)
        a[i] = function_value(sp[i], tp[i], game.actions().size(i));
      long ai = game.actions().index(a);
      for (int i = 0; i < n; ++i) u[i][g] += pt * game.payoff(i, t, ai);
    }
  }
  return u;
}

ProfileSpace strategy_space_or_throw(const BayesianGame& game, long budget) {
  std::vector<int> counts;
  long total = 1;
  for (int i = 0; i < game.num_players(); ++i) {
    long c = function_count(game.types().size(i), game.actions().size(i));
    total *= c;
    if (total > budget)
      throw std::invalid_argument("strategy-profile budget exceeded");
    counts.push_back(static_cast<int>(c));
  }
  return ProfileSpace(counts);
}

void add_correlated_rows(const BayesianGame& game, const ProfileSpace& sigmas,
                         const std::vector<std::vector<double>>& u,
                         LinearProgram* lp) {
  int n = game.num_players();
  for (int i = 0; i < n; ++i) {
    for (long rec = 0; rec < sigmas.size(i); ++rec) {
      for (long alt = 0; alt < sigmas.size(i); ++alt) {
        if (rec == alt) continue;
        std::vector<double> row(lp->num_vars, 0.0);
        for (long g = 0; g < sigmas.total(); ++g) {
          std::vector<int> sp = sigmas.decode(g);
          if (sp[i] != rec) continue;
          long g_alt = sigmas.with_coordinate(sp, i, static_cast<int>(alt));
          row[g] = u[i][g_alt] - u[i][g];  // deviation gain <= 0
        }
        lp->add_ineq(std::move(row), 0.0,
                     "ce_p" + std::to_string(i) + "_s" + std::to_string(rec) +
                         "_to" + std::to_string(alt));
      }
    }
  }
}

}  // namespace

LinearProgram build_comm_lp(const BayesianGame& game,
                            const SocialObjective& objective) {
  LinearProgram lp;
  lp.num_vars =
      static_cast<int>(game.types().total() * game.actions().total());
  lp.objective = objective_vector(game, objective);
  for (long t = 0; t < game.types().total(); ++t)
    for (long a = 0; a < game.actions().total(); ++a)
      lp.var_names.push_back("q_t" + join_ints(game.types().decode(t)) + "_a" +
                             join_ints(game.actions().decode(a)));
  add_normalization_rows(game, &lp);
  add_incentive_rows(game, &lp);
  return lp;
}

LinearProgram build_binv_lp(const BayesianGame& game,
                            const SocialObjective& objective) {
  LinearProgram lp = build_comm_lp(game, objective);
  add_ns_rows(game, &lp);
  return lp;
}

LinearProgram build_correlated_lp(const BayesianGame& game,
                                  const SocialObjective& objective,
                                  long profile_budget) {
  ProfileSpace sigmas = strategy_space_or_throw(game, profile_budget);
  std::vector<std::vector<double>> u = strategy_utilities(game, sigmas);
  LinearProgram lp;
  lp.num_vars = static_cast<int>(sigmas.total());
  lp.objective.assign(lp.num_vars, 0.0);
  int n = game.num_players();
  for (long g = 0; g < sigmas.total(); ++g) {
    for (int i = 0; i < n; ++i)
      lp.objective[g] += objective.weight(i, n) * u[i][g];
    lp.var_names.push_back("w_s" + join_ints(sigmas.decode(g)));
  }
  lp.add_eq(std::vector<double>(lp.num_vars, 1.0), 1.0, "norm");
  add_correlated_rows(game, sigmas, u, &lp);
  return lp;
}

LinearProgram build_ns_value_lp(const BayesianGame& game) {
  LinearProgram lp;
  lp.num_vars =
      static_cast<int>(game.types().total() * game.actions().total());
  lp.objective = objective_vector(game, SocialObjective::single(0));
  add_normalization_rows(game, &lp);
  add_ns_rows(game, &lp);
  return lp;
}

OptimizationResult max_obj_comm(const BayesianGame& game,
                                const SocialObjective& objective,
                                const OptimizeOptions& opts) {
  return run_lp(game, build_comm_lp(game, objective), objective, "comm", opts);
}

OptimizationResult max_obj_binv(const BayesianGame& game,
                                const SocialObjective& objective,
                                const OptimizeOptions& opts) {
  return run_lp(game, build_binv_lp(game, objective), objective, "binv", opts);
}

OptimizationResult max_obj_correlated(const BayesianGame& game,
                                      const SocialObjective& objective,
                                      const OptimizeOptions& opts) {
  LinearProgram lp = build_correlated_lp(game, objective, opts.profile_budget);
  LpSolution sol = opts.exact ? solve_exact(lp, opts.max_denominator)
                              : solve(lp, opts.tol);
  if (sol.status != LpStatus::Optimal)
    throw std::runtime_error("correlated-equilibrium LP did not solve");
  StandardFormDistribution w;
  w.type_sizes = game.types().sizes();
  w.action_sizes = game.actions().sizes();
  w.weights = sol.x;
  for (double& p : w.weights) p = std::max(0.0, p);
  OptimizationResult out{"correlated",
                         sol.value,
                         sol.exact_value,
                         standard_form_correlation(game, w),
                         std::move(w),
                         objective,
                         sol.status};
  return out;
}

OptimizationResult binv_value_full_coordination(const BayesianGame& game,
                                                const OptimizeOptions& opts) {
  if (!is_full_coordination(game))
    throw std::invalid_argument(
        "binv_value_full_coordination: payoff functions differ");
  OptimizationResult out = run_lp(game, build_ns_value_lp(game),
                                  SocialObjective::single(0), "binv-value",
                                  opts);
  return out;
}

OptimizationResult local_value_full_coordination(const BayesianGame& game,
                                                 const OptimizeOptions& opts) {
  if (!is_full_coordination(game))
    throw std::invalid_argument(
        "local_value_full_coordination: payoff functions differ");
  ProfileSpace sigmas =
      strategy_space_or_throw(game, std::max(opts.profile_budget, 1000000L));
  std::vector<std::vector<double>> u = strategy_utilities(game, sigmas);
  long best = 0;
  for (long g = 1; g < sigmas.total(); ++g)
    if (u[0][g] > u[0][best]) best = g;

  StandardFormDistribution w;
  w.type_sizes = game.types().sizes();
  w.action_sizes = game.actions().sizes();
  w.weights.assign(sigmas.total(), 0.0);
  w.weights[best] = 1.0;
  OptimizationResult out{"local-value",
                         u[0][best],
                         {},
                         standard_form_correlation(game, w),
                         std::move(w),
                         SocialObjective::single(0),
                         LpStatus::Optimal};
  return out;
}

ZeroSumResult zero_sum_value(const BayesianGame& game,
                             const OptimizeOptions& opts) {
  if (game.num_players() != 2)
    throw std::invalid_argument("zero_sum_value: requires 2 players");
  if (!detect_constant_sum(game))
    throw std::invalid_argument("zero_sum_value: game is not constant-sum");
  ProfileSpace sigmas = strategy_space_or_throw(game, opts.profile_budget);
  std::vector<std::vector<double>> u = strategy_utilities(game, sigmas);

  // Maximin LP for one player: variables (x over own strategies, z+ , z-),
  // maximize z+ - z- with z <= x . U(., alt) for every opposing strategy.
  auto maximin = [&](int me) {
    int mine = sigmas.size(me);
    int theirs = sigmas.size(1 - me);
    LinearProgram lp;
    lp.num_vars = mine + 2;
    lp.objective.assign(lp.num_vars, 0.0);
    lp.objective[mine] = 1.0;
    lp.objective[mine + 1] = -1.0;
    for (int other = 0; other < theirs; ++other) {
      std::vector<double> row(lp.num_vars, 0.0);
      for (int own = 0; own < mine; ++own) {
        std::vector<int> profile(2);
        profile[me] = own;
        profile[1 - me] = other;
        row[own] = -u[me][sigmas.index(profile)];
      }
      row[mine] = 1.0;
      row[mine + 1] = -1.0;
      lp.add_ineq(std::move(row), 0.0);
    }
    std::vector<double> norm(lp.num_vars, 0.0);
    for (int own = 0; own < mine; ++own) norm[own] = 1.0;
    lp.add_eq(std::move(norm), 1.0);
    LpSolution sol = opts.exact ? solve_exact(lp, opts.max_denominator)
                                : solve(lp, opts.tol);
    if (sol.status != LpStatus::Optimal)
      throw std::runtime_error("zero-sum LP did not solve");
    std::vector<double> x(sol.x.begin(), sol.x.begin() + mine);
    return std::make_pair(sol.value, x);
  };

  ZeroSumResult out;
  auto [v1, x1] = maximin(0);
  auto [v2, x2] = maximin(1);
  out.value1 = v1;
  out.value2 = v2;
  out.maximin1 = std::move(x1);
  out.maximin2 = std::move(x2);
  return out;
}

std::optional<StandardFormDistribution> standard_form_membership(
    const BayesianGame& game, const Correlation& q, double tol,
    long profile_budget) {
  ProfileSpace sigmas = strategy_space_or_throw(game, profile_budget);
  std::vector<std::vector<double>> u = strategy_utilities(game, sigmas);
  LinearProgram lp;
  lp.num_vars = static_cast<int>(sigmas.total());
  lp.objective.assign(lp.num_vars, 0.0);
  lp.add_eq(std::vector<double>(lp.num_vars, 1.0), 1.0, "norm");
  add_correlated_rows(game, sigmas, u, &lp);
  // Match the canonical correlation entrywise.
  int n = game.num_players();
  for (long t = 0; t < game.types().total(); ++t) {
    std::vector<int> tp = game.types().decode(t);
    for (long a = 0; a < game.actions().total(); ++a) {
      std::vector<int> ap = game.actions().decode(a);
      std::vector<double> row(lp.num_vars, 0.0);
      for (long g = 0; g < sigmas.total(); ++g) {
        std::vector<int> sp = sigmas.decode(g);
        bool hit = true;
        for (int i = 0; i < n && hit; ++i)
          hit = function_value(sp[i], tp[i], game.actions().size(i)) == ap[i];
        if (hit) row[g] = 1.0;
      }
      lp.add_eq(std::move(row), q.at(t, a));
    }
  }
  LpSolution sol = solve(lp, 1e-11);
  if (sol.status != LpStatus::Optimal || sol.primal_residual > tol)
    return std::nullopt;
  StandardFormDistribution w;
  w.type_sizes = game.types().sizes();
  w.action_sizes = game.actions().sizes();
  w.weights = sol.x;
  for (double& p : w.weights) p = std::max(0.0, p);
  return w;
}

}  // namespace binv

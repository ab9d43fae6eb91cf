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

#ifndef BINV_SIMPLEX_HPP
#define BINV_SIMPLEX_HPP

#include <string>
#include <vector>

namespace binv {

// max c.x  subject to  A x <= b,  E x = d,  x >= 0.
struct LinearProgram {
  int num_vars = 0;
  std::vector<double> objective;
  std::vector<std::vector<double>> ineq_rows;
  std::vector<double> ineq_rhs;
  std::vector<std::vector<double>> eq_rows;
  std::vector<double> eq_rhs;
  std::vector<std::string> var_names;   // optional
  std::vector<std::string> row_names;   // optional, in insertion order

  void add_ineq(std::vector<double> row, double rhs, std::string name = {});
  void add_eq(std::vector<double> row, double rhs, std::string name = {});
};

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  double value = 0.0;
  std::vector<double> x;
  std::vector<double> dual_ineq;  // y >= 0 for Ax <= b rows
  std::vector<double> dual_eq;    // free duals for Ex = d rows
  // Post-solve certificates (filled for Optimal).
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double complementary_slackness = 0.0;
  long pivots = 0;
  // Exact mode only: decimal value above plus the exact fraction.
  std::string exact_value;
  // Set when the double tableau failed its certificates and the solve was
  // redone over exact rationals.
  bool used_exact_fallback = false;
};

// Two-phase primal simplex on a dense tableau. Entering variable by largest
// reduced cost (ties to the lowest index), leaving row by the lexicographic
// ratio test, so the pivot sequence is an anti-cycling deterministic
// function of the input. If the floating-point tableau fails its optimality
// certificates the solve is redone over exact rationals on the same data.
LpSolution solve(const LinearProgram& lp, double tol = 1e-9,
                 long max_pivots = 1000000);

// Phase-one feasibility only.
std::pair<bool, std::vector<double>> feasibility(const LinearProgram& lp,
                                                 double tol = 1e-9,
                                                 long max_pivots = 1000000);

// Exact mode: every coefficient is snapped to the nearest rational with
// denominator <= max_denominator (continued fractions) and the tableau runs
// over arbitrary-precision rationals. Intended for certifying the small
// catalog instances whose data are exact fractions.
LpSolution solve_exact(const LinearProgram& lp,
                       long max_denominator = 1000000,
                       long max_pivots = 1000000);

// CPLEX LP-format text of the program, for external cross-checking.
std::string dump_lp(const LinearProgram& lp);

}  // namespace binv

#endif  // BINV_SIMPLEX_HPP

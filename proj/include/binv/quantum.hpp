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

#ifndef BINV_QUANTUM_HPP
#define BINV_QUANTUM_HPP

#include <vector>

#include "binv/correlation.hpp"
#include "binv/game.hpp"
#include "binv/linalg.hpp"

namespace binv {

// Density operator with explicit per-player subsystem dimensions.
struct DensityMatrix {
  ComplexMatrix matrix;
  std::vector<int> dims;
};

// Positive operator valued measure: PSD elements summing to identity.
struct Povm {
  std::vector<ComplexMatrix> elements;  // indexed by outcome
};

// Shared state plus one POVM per (player, type); player i's POVMs act on
// subsystem i and have one outcome per action.
struct QuantumSolution {
  DensityMatrix state;
  std::vector<std::vector<Povm>> measurements;  // [player][type]

  int num_players() const { return static_cast<int>(dims().size()); }
  const std::vector<int>& dims() const { return state.dims; }
};

ValidationReport validate_quantum_solution(const QuantumSolution& q,
                                           double tol = 1e-10);

// Born-rule canonical correlation Q(a|t) = tr rho (M^{t_1}_{a_1} x ... x
// M^{t_n}_{a_n}). Imaginary residues above 1e-10 are an error; smaller ones
// are dropped and entries clamped to [0, 1].
Correlation induced_correlation(const QuantumSolution& q);

// Diagonal embedding of a correlated (input-independent) classical solution:
// rho = sum_s Q(s) |s_1><s_1| x ... and projective POVMs grouping the s_i
// with g_i(t_i, s_i) = a_i. The induced correlation equals the classical
// canonical representative.
//
// `shared` is the joint distribution over S (profile-indexed over
// shared_sizes), `output_map[i][t_i][s_i]` the action player i takes.
QuantumSolution embed_local(
    const std::vector<std::vector<std::vector<int>>>& output_map,
    const std::vector<double>& shared, const std::vector<int>& shared_sizes,
    const std::vector<int>& type_sizes, const std::vector<int>& action_sizes);

// The explicit three-qubit construction: state (|111>-|001>-|010>-|100>)/2,
// type-0 POVM {(I+X)/2, (I-X)/2}, type-1 POVM {|0><0|, |1><1|}, identical
// for all three players.
QuantumSolution ghz_solution();

}  // namespace binv

#endif  // BINV_QUANTUM_HPP

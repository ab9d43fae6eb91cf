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

#ifndef BINV_TESTS_SUPPORT_HPP
#define BINV_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "binv/catalog.hpp"
#include "binv/correlation.hpp"
#include "binv/game.hpp"
#include "binv/linalg.hpp"
#include "binv/quantum.hpp"

namespace binv::testing {

using Rng = std::mt19937_64;

inline std::vector<double> random_distribution(Rng& rng, int n,
                                               bool allow_sparse = false) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> p(n, 0.0);
  if (allow_sparse && unit(rng) < 0.25) {
    p[static_cast<int>(unit(rng) * n) % n] = 1.0;
    return p;
  }
  double total = 0.0;
  for (double& x : p) {
    x = -std::log(std::max(unit(rng), 1e-12));
    total += x;
  }
  for (double& x : p) x /= total;
  return p;
}

inline BayesianGame random_game(Rng& rng, int players = 2, int types = 2,
                                int actions = 2, bool point_mass_prior = false) {
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  std::vector<int> t_sizes(players, types), a_sizes(players, actions);
  ProfileSpace ts(t_sizes), as(a_sizes);
  std::vector<double> prior;
  if (point_mass_prior) {
    prior.assign(ts.total(), 0.0);
    prior[rng() % ts.total()] = 1.0;
  } else {
    prior = random_distribution(rng, static_cast<int>(ts.total()));
  }
  std::vector<std::vector<double>> payoffs(
      players, std::vector<double>(ts.total() * as.total()));
  for (auto& tensor : payoffs)
    for (double& v : tensor) v = val(rng);
  return BayesianGame(t_sizes, a_sizes, std::move(prior), std::move(payoffs));
}

inline Correlation random_correlation(Rng& rng, const std::vector<int>& inputs,
                                      const std::vector<int>& outputs) {
  Correlation q(inputs, outputs);
  for (long r = 0; r < q.inputs().total(); ++r) {
    std::vector<double> row = random_distribution(
        rng, static_cast<int>(q.outputs().total()), true);
    for (long s = 0; s < q.outputs().total(); ++s) q.set(r, s, row[s]);
  }
  return q;
}

// Mixture of product correlations: local by construction.
inline Correlation random_local_correlation(Rng& rng,
                                            const std::vector<int>& inputs,
                                            const std::vector<int>& outputs,
                                            int atoms = 3) {
  Correlation q(inputs, outputs);
  std::vector<double> mixture = random_distribution(rng, atoms);
  for (int k = 0; k < atoms; ++k) {
    // One response table per player.
    std::vector<std::vector<std::vector<double>>> tables(inputs.size());
    for (size_t i = 0; i < inputs.size(); ++i) {
      tables[i].resize(inputs[i]);
      for (int r = 0; r < inputs[i]; ++r)
        tables[i][r] = random_distribution(rng, outputs[i]);
    }
    for (long r = 0; r < q.inputs().total(); ++r) {
      std::vector<int> rp = q.inputs().decode(r);
      for (long s = 0; s < q.outputs().total(); ++s) {
        std::vector<int> sp = q.outputs().decode(s);
        double prod = mixture[k];
        for (size_t i = 0; i < inputs.size(); ++i)
          prod *= tables[i][rp[i]][sp[i]];
        q.set(r, s, q.at(r, s) + prod);
      }
    }
  }
  return q;
}

inline Solution random_solution(Rng& rng, const BayesianGame& game,
                                int device_inputs = 2, int device_outputs = 2,
                                int lambda = 2) {
  int n = game.num_players();
  Solution sol{Correlation(std::vector<int>(n, device_inputs),
                           std::vector<int>(n, device_outputs)),
               game.types().sizes(),
               game.actions().sizes(),
               {},
               {},
               {}};
  sol.device = random_correlation(rng, std::vector<int>(n, device_inputs),
                                  std::vector<int>(n, device_outputs));
  sol.randomness.resize(n);
  sol.input_map.resize(n);
  sol.output_map.resize(n);
  for (int i = 0; i < n; ++i) {
    sol.randomness[i] = random_distribution(rng, lambda);
    sol.input_map[i].resize(game.types().size(i));
    sol.output_map[i].resize(game.types().size(i));
    for (int t = 0; t < game.types().size(i); ++t) {
      sol.input_map[i][t].resize(lambda);
      for (int l = 0; l < lambda; ++l)
        sol.input_map[i][t][l] = static_cast<int>(rng() % device_inputs);
      sol.output_map[i][t].resize(device_outputs);
      for (int s = 0; s < device_outputs; ++s) {
        sol.output_map[i][t][s].resize(lambda);
        for (int l = 0; l < lambda; ++l)
          sol.output_map[i][t][s][l] =
              static_cast<int>(rng() % game.actions().size(i));
      }
    }
  }
  return sol;
}

inline ComplexMatrix random_complex_matrix(Rng& rng, int rows, int cols) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (auto& v : m.a) v = Complex(g(rng), g(rng));
  return m;
}

inline ComplexMatrix random_hermitian(Rng& rng, int n) {
  ComplexMatrix m = random_complex_matrix(rng, n, n);
  ComplexMatrix h = 0.5 * (m + m.adjoint());
  for (int i = 0; i < n; ++i) h.at(i, i) = Complex(h.at(i, i).real(), 0.0);
  return h;
}

// Normalized Gram state M^dagger M / tr.
inline DensityMatrix random_state(Rng& rng, const std::vector<int>& dims) {
  long d = 1;
  for (int k : dims) d *= k;
  ComplexMatrix m = random_complex_matrix(rng, static_cast<int>(d),
                                          static_cast<int>(d));
  ComplexMatrix gram = m.adjoint() * m;
  double tr = gram.trace().real();
  return DensityMatrix{Complex(1.0 / tr, 0.0) * gram, dims};
}

// Two-outcome POVM {E, I - E} with E = (I + H/||H||)/2.
inline Povm random_binary_povm(Rng& rng, int dim) {
  ComplexMatrix h = random_hermitian(rng, dim);
  EigenDecomposition dec = hermitian_eigen(h, 1e-8);
  double norm = std::max(std::abs(dec.eigenvalues.front()),
                         std::abs(dec.eigenvalues.back()));
  if (norm < 1e-12) norm = 1.0;
  ComplexMatrix e =
      Complex(0.5, 0) * (ComplexMatrix::identity(dim) +
                         Complex(1.0 / norm, 0) * h);
  return Povm{{e, ComplexMatrix::identity(dim) - e}};
}

inline QuantumSolution random_quantum_solution(Rng& rng, int players = 2,
                                               int types = 2) {
  std::vector<int> dims(players, 2);
  QuantumSolution q{random_state(rng, dims), {}};
  q.measurements.resize(players);
  for (int i = 0; i < players; ++i)
    for (int t = 0; t < types; ++t)
      q.measurements[i].push_back(random_binary_povm(rng, 2));
  return q;
}

inline catalog::LemmaParams random_lemma_params(Rng& rng,
                                                double epsilon = 0.1) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> row = random_distribution(rng, 4, true);
  catalog::LemmaParams params;
  params.p = unit(rng);
  params.q = unit(rng);
  params.p00 = row[0];
  params.p01 = row[1];
  params.p10 = row[2];
  params.p11 = row[3];
  params.epsilon = epsilon;
  return params;
}

}  // namespace binv::testing

#endif  // BINV_TESTS_SUPPORT_HPP

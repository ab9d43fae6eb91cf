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

#include "binv/quantum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace binv {

namespace {

constexpr double kImagResidue = 1e-10;

ComplexMatrix joint_operator(const QuantumSolution& q,
                             const std::vector<int>& types,
                             const std::vector<int>& actions) {
  ComplexMatrix op = q.measurements[0][types[0]].elements[actions[0]];
  for (int i = 1; i < q.num_players(); ++i)
    op = tensor(op, q.measurements[i][types[i]].elements[actions[i]]);
  return op;
}

}  // namespace

ValidationReport validate_quantum_solution(const QuantumSolution& q,
                                           double tol) {
  ValidationReport report;
  long dim = 1;
  for (int d : q.dims()) dim *= d;
  const ComplexMatrix& rho = q.state.matrix;
  if (rho.rows != rho.cols || rho.rows != dim) {
    report.fail("state dimension does not match subsystem dims");
    return report;
  }
  if (!rho.is_hermitian(tol)) report.fail("state is not Hermitian");
  double tr = std::real(rho.trace());
  if (std::abs(tr - 1.0) > tol)
    report.fail("state trace " + std::to_string(tr));
  if (rho.is_hermitian(1e-8)) {
    EigenDecomposition dec = hermitian_eigen(rho, 1e-8);
    if (dec.eigenvalues.front() < -tol)
      report.fail("state has negative eigenvalue " +
                  std::to_string(dec.eigenvalues.front()));
  }

  if (static_cast<int>(q.measurements.size()) != q.num_players()) {
    report.fail("measurement table player count mismatch");
    return report;
  }
  for (int i = 0; i < q.num_players(); ++i) {
    for (size_t t = 0; t < q.measurements[i].size(); ++t) {
      const Povm& povm = q.measurements[i][t];
      if (povm.elements.empty()) {
        report.fail("empty POVM");
        continue;
      }
      ComplexMatrix sum(q.dims()[i], q.dims()[i]);
      for (const ComplexMatrix& e : povm.elements) {
        if (e.rows != q.dims()[i] || e.cols != q.dims()[i]) {
          report.fail("POVM element dimension mismatch for player " +
                      std::to_string(i));
          continue;
        }
        if (!e.is_hermitian(tol))
          report.fail("POVM element not Hermitian (player " +
                      std::to_string(i) + ", type " + std::to_string(t) + ")");
        else if (!is_psd(e, tol))
          report.fail("POVM element not PSD (player " + std::to_string(i) +
                      ", type " + std::to_string(t) + ")");
        sum = sum + e;
      }
      ComplexMatrix defect = sum - ComplexMatrix::identity(q.dims()[i]);
      if (defect.max_abs() > tol)
        report.fail("POVM of player " + std::to_string(i) + ", type " +
                    std::to_string(t) + " sums to identity + " +
                    std::to_string(defect.max_abs()));
    }
  }
  return report;
}

Correlation induced_correlation(const QuantumSolution& q) {
  ValidationReport report = validate_quantum_solution(q);
  if (!report.valid)
    throw std::invalid_argument("induced_correlation: invalid solution: " +
                                report.issues.front());
  int n = q.num_players();
  std::vector<int> type_sizes(n), action_sizes(n);
  for (int i = 0; i < n; ++i) {
    type_sizes[i] = static_cast<int>(q.measurements[i].size());
    action_sizes[i] = static_cast<int>(q.measurements[i][0].elements.size());
    for (const Povm& p : q.measurements[i])
      if (static_cast<int>(p.elements.size()) != action_sizes[i])
        throw std::invalid_argument(
            "induced_correlation: outcome count varies across types");
  }
  Correlation out(type_sizes, action_sizes);
  for (long t = 0; t < out.inputs().total(); ++t) {
    std::vector<int> tp = out.inputs().decode(t);
    for (long a = 0; a < out.outputs().total(); ++a) {
      std::vector<int> ap = out.outputs().decode(a);
      Complex val = (q.state.matrix * joint_operator(q, tp, ap)).trace();
      if (std::abs(val.imag()) > kImagResidue)
        throw std::invalid_argument(
            "induced_correlation: Born probability has imaginary residue " +
            std::to_string(val.imag()));
      double p = std::min(1.0, std::max(0.0, val.real()));
      out.set(t, a, p);
    }
  }
  return out;
}

QuantumSolution embed_local(
    const std::vector<std::vector<std::vector<int>>>& output_map,
    const std::vector<double>& shared, const std::vector<int>& shared_sizes,
    const std::vector<int>& type_sizes, const std::vector<int>& action_sizes) {
  int n = static_cast<int>(shared_sizes.size());
  if (static_cast<int>(output_map.size()) != n ||
      static_cast<int>(type_sizes.size()) != n ||
      static_cast<int>(action_sizes.size()) != n)
    throw std::invalid_argument("embed_local: per-player table mismatch");
  ProfileSpace s_space(shared_sizes);
  if (static_cast<long>(shared.size()) != s_space.total())
    throw std::invalid_argument("embed_local: shared distribution size");
  double mass = 0.0;
  for (double p : shared) {
    if (p < -kProbTolerance)
      throw std::invalid_argument("embed_local: negative weight");
    mass += p;
  }
  if (std::abs(mass - 1.0) > kProbTolerance)
    throw std::invalid_argument("embed_local: distribution not normalized");

  QuantumSolution q;
  q.state.dims = shared_sizes;
  long dim = s_space.total();
  q.state.matrix = ComplexMatrix(static_cast<int>(dim), static_cast<int>(dim));
  // Computational-basis diagonal state: the profile index is the basis index.
  for (long s = 0; s < dim; ++s) q.state.matrix.at(s, s) = shared[s];

  q.measurements.resize(n);
  for (int i = 0; i < n; ++i) {
    q.measurements[i].resize(type_sizes[i]);
    for (int t = 0; t < type_sizes[i]; ++t) {
      Povm povm;
      povm.elements.assign(action_sizes[i],
                           ComplexMatrix(shared_sizes[i], shared_sizes[i]));
      for (int s = 0; s < shared_sizes[i]; ++s) {
        int a = output_map[i][t][s];
        povm.elements[a].at(s, s) = 1.0;
      }
      q.measurements[i][t] = std::move(povm);
    }
  }
  return q;
}

QuantumSolution ghz_solution() {
  QuantumSolution q;
  q.state.dims = {2, 2, 2};
  ComplexMatrix psi(8, 1);
  // |xyz> indexed 4x + 2y + z.
  psi.at(7, 0) = 0.5;   // |111>
  psi.at(1, 0) = -0.5;  // |001>
  psi.at(2, 0) = -0.5;  // |010>
  psi.at(4, 0) = -0.5;  // |100>
  q.state.matrix = psi * psi.adjoint();

  ComplexMatrix m00(2, 2), m01(2, 2);
  m00.at(0, 0) = 0.5; m00.at(0, 1) = 0.5;
  m00.at(1, 0) = 0.5; m00.at(1, 1) = 0.5;
  m01.at(0, 0) = 0.5; m01.at(0, 1) = -0.5;
  m01.at(1, 0) = -0.5; m01.at(1, 1) = 0.5;
  ComplexMatrix m10 = ComplexMatrix::diag({1.0, 0.0});
  ComplexMatrix m11 = ComplexMatrix::diag({0.0, 1.0});

  Povm type0{{m00, m01}};
  Povm type1{{m10, m11}};
  q.measurements.assign(3, {type0, type1});
  return q;
}

}  // namespace binv

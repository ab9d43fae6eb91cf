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

#include <doctest.h>

#include "binv/linalg.hpp"
#include "binv/quantum.hpp"
#include "support.hpp"

using namespace binv;

namespace {

double matrix_distance(const ComplexMatrix& x, const ComplexMatrix& y) {
  return (x - y).max_abs();
}

}  // namespace

TEST_CASE("tensor products") {
  ComplexMatrix i2 = ComplexMatrix::identity(2);
  CHECK(matrix_distance(tensor(i2, i2), ComplexMatrix::identity(4)) == 0.0);

  ComplexMatrix d1 = ComplexMatrix::diag({1, 0});
  ComplexMatrix d2 = ComplexMatrix::diag({0, 1});
  CHECK(matrix_distance(tensor(d1, d2), ComplexMatrix::diag({0, 1, 0, 0})) ==
        0.0);

  testing::Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    ComplexMatrix a = testing::random_complex_matrix(rng, 3, 3);
    ComplexMatrix b = testing::random_complex_matrix(rng, 2, 2);
    ComplexMatrix c = testing::random_complex_matrix(rng, 2, 2);
    Complex tt = tensor(a, b).trace();
    CHECK(std::abs(tt - a.trace() * b.trace()) < 1e-12);
    CHECK(matrix_distance(tensor(tensor(a, b), c), tensor(a, tensor(b, c))) <
          1e-14);
    // On dyadic entries every product is exact, so associativity is too.
    auto dyadic = [&rng](int n) {
      const double vals[] = {-2, -1, -0.5, 0, 0.5, 1, 2};
      ComplexMatrix m(n, n);
      for (auto& v : m.a) v = Complex(vals[rng() % 7], vals[rng() % 7]);
      return m;
    };
    ComplexMatrix da = dyadic(3), db = dyadic(2), dc = dyadic(2);
    CHECK(matrix_distance(tensor(tensor(da, db), dc),
                          tensor(da, tensor(db, dc))) == 0.0);
  }

  CHECK_THROWS(tensor(ComplexMatrix::identity(32),
                      ComplexMatrix::identity(32), 256));
}

TEST_CASE("hermitian eigendecomposition") {
  ComplexMatrix z = ComplexMatrix::diag({1, -1});
  EigenDecomposition dz = hermitian_eigen(z);
  CHECK(dz.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(dz.eigenvalues[1] == doctest::Approx(1.0));

  ComplexMatrix x(2, 2);
  x.at(0, 1) = 1.0;
  x.at(1, 0) = 1.0;
  EigenDecomposition dx = hermitian_eigen(x);
  CHECK(dx.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(dx.eigenvalues[1] == doctest::Approx(1.0));

  testing::Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    ComplexMatrix h = testing::random_hermitian(rng, 8);
    EigenDecomposition dec = hermitian_eigen(h);
    // Reconstruction H = V diag(lambda) V^dagger.
    ComplexMatrix lambda = ComplexMatrix::diag(dec.eigenvalues);
    ComplexMatrix recon =
        dec.eigenvectors * lambda * dec.eigenvectors.adjoint();
    CHECK(matrix_distance(recon, h) < 1e-9);
    // Column residuals H v = lambda v.
    for (int k = 0; k < 8; ++k) {
      ComplexMatrix v(8, 1);
      for (int i = 0; i < 8; ++i) v.at(i, 0) = dec.eigenvectors.at(i, k);
      ComplexMatrix hv = h * v;
      for (int i = 0; i < 8; ++i)
        CHECK(std::abs(hv.at(i, 0) - dec.eigenvalues[k] * v.at(i, 0)) <
              1e-10);
    }
    // Orthonormal columns.
    ComplexMatrix gram = dec.eigenvectors.adjoint() * dec.eigenvectors;
    CHECK(matrix_distance(gram, ComplexMatrix::identity(8)) < 1e-10);
    // Eigenvalue sum matches the trace.
    double sum = 0;
    for (double l : dec.eigenvalues) sum += l;
    CHECK(sum == doctest::Approx(h.trace().real()).epsilon(1e-10));
    // Ascending order.
    for (int k = 1; k < 8; ++k)
      CHECK(dec.eigenvalues[k - 1] <= dec.eigenvalues[k] + 1e-12);
  }

  ComplexMatrix bad(2, 2);
  bad.at(0, 1) = 1.0;  // not Hermitian
  CHECK_THROWS(hermitian_eigen(bad));
}

TEST_CASE("partial trace") {
  testing::Rng rng(23);
  ComplexMatrix a = testing::random_complex_matrix(rng, 2, 2);
  ComplexMatrix b = testing::random_complex_matrix(rng, 3, 3);
  ComplexMatrix ab = tensor(a, b);
  ComplexMatrix keep_first = partial_trace(ab, {2, 3}, 0);
  CHECK(matrix_distance(keep_first, b.trace() * a) < 1e-12);
  ComplexMatrix keep_second = partial_trace(ab, {2, 3}, 1);
  CHECK(matrix_distance(keep_second, a.trace() * b) < 1e-12);
  CHECK(std::abs(keep_first.trace() - ab.trace()) < 1e-12);

  // Reduced state of the three-qubit construction is maximally mixed.
  QuantumSolution ghz = ghz_solution();
  for (int k = 0; k < 3; ++k) {
    ComplexMatrix red = partial_trace(ghz.state.matrix, {2, 2, 2}, k);
    CHECK(matrix_distance(red, Complex(0.5, 0) * ComplexMatrix::identity(2)) <
          1e-12);
  }

  // Positivity is preserved on random PSD inputs.
  for (int trial = 0; trial < 20; ++trial) {
    DensityMatrix rho = testing::random_state(rng, {2, 2});
    ComplexMatrix red = partial_trace(rho.matrix, {2, 2}, trial % 2);
    CHECK(is_psd(red, 1e-10));
  }

  CHECK_THROWS(partial_trace(ComplexMatrix::identity(6), {2, 2}, 0));
  CHECK_THROWS(partial_trace(ComplexMatrix::identity(4), {2, 2}, 2));
}

TEST_CASE("positive semidefiniteness") {
  CHECK(is_psd(ComplexMatrix::identity(3)));
  CHECK_FALSE(is_psd(ComplexMatrix::diag({1.0, -0.5})));
  testing::Rng rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    ComplexMatrix m = testing::random_complex_matrix(rng, 4, 4);
    CHECK(is_psd(m.adjoint() * m, 1e-10));
  }
}

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

#ifndef BINV_LINALG_HPP
#define BINV_LINALG_HPP

#include <complex>
#include <vector>

namespace binv {

using Complex = std::complex<double>;

// Dense complex matrix, row-major. Small dimensions only (a few qubits).
struct ComplexMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Complex> a;

  ComplexMatrix() = default;
  ComplexMatrix(int r, int c) : rows(r), cols(c), a(r * c, Complex(0, 0)) {}

  static ComplexMatrix identity(int n);
  static ComplexMatrix diag(const std::vector<double>& d);

  Complex& at(int i, int j) { return a[i * cols + j]; }
  const Complex& at(int i, int j) const { return a[i * cols + j]; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double max_abs() const;
  bool is_hermitian(double tol = 1e-10) const;
};

ComplexMatrix operator+(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix operator-(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix operator*(Complex s, const ComplexMatrix& x);

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // columns, orthonormal
};

// Kronecker product; throws if the result dimension exceeds `budget`.
ComplexMatrix tensor(const ComplexMatrix& x, const ComplexMatrix& y,
                     int budget = 256);

// Cyclic Jacobi for complex Hermitian matrices. Converges when the
// off-diagonal Frobenius norm drops below 1e-13, capped at 100 sweeps.
EigenDecomposition hermitian_eigen(const ComplexMatrix& h, double tol = 1e-10);

// Traces out every tensor factor except dims[keep].
ComplexMatrix partial_trace(const ComplexMatrix& m,
                            const std::vector<int>& dims, int keep);

// Minimum eigenvalue >= -tol.
bool is_psd(const ComplexMatrix& h, double tol = 1e-10);

}  // namespace binv

#endif  // BINV_LINALG_HPP

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

#include "binv/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace binv {

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diag(const std::vector<double>& d) {
  ComplexMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(j, i) = std::conj(at(i, j));
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < std::min(rows, cols); ++i) t += at(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& v : a) m = std::max(m, std::abs(v));
  return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = i; j < cols; ++j)
      if (std::abs(at(i, j) - std::conj(at(j, i))) > tol) return false;
  return true;
}

ComplexMatrix operator+(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::invalid_argument("matrix shape mismatch");
  ComplexMatrix m(x.rows, x.cols);
  for (size_t k = 0; k < m.a.size(); ++k) m.a[k] = x.a[k] + y.a[k];
  return m;
}

ComplexMatrix operator-(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::invalid_argument("matrix shape mismatch");
  ComplexMatrix m(x.rows, x.cols);
  for (size_t k = 0; k < m.a.size(); ++k) m.a[k] = x.a[k] - y.a[k];
  return m;
}

ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
  ComplexMatrix m(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      Complex v = x.at(i, k);
      if (v == Complex(0, 0)) continue;
      for (int j = 0; j < y.cols; ++j) m.at(i, j) += v * y.at(k, j);
    }
  return m;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& x) {
  ComplexMatrix m = x;
  for (Complex& v : m.a) v *= s;
  return m;
}

ComplexMatrix tensor(const ComplexMatrix& x, const ComplexMatrix& y,
                     int budget) {
  long rr = static_cast<long>(x.rows) * y.rows;
  long cc = static_cast<long>(x.cols) * y.cols;
  if (rr > budget || cc > budget)
    throw std::invalid_argument("tensor: dimension budget exceeded");
  ComplexMatrix m(static_cast<int>(rr), static_cast<int>(cc));
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) {
      Complex v = x.at(i, j);
      if (v == Complex(0, 0)) continue;
      for (int p = 0; p < y.rows; ++p)
        for (int q = 0; q < y.cols; ++q)
          m.at(i * y.rows + p, j * y.cols + q) = v * y.at(p, q);
    }
  return m;
}

namespace {

double offdiag_norm(const ComplexMatrix& h) {
  double s = 0.0;
  for (int i = 0; i < h.rows; ++i)
    for (int j = 0; j < h.cols; ++j)
      if (i != j) s += std::norm(h.at(i, j));
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition hermitian_eigen(const ComplexMatrix& h, double tol) {
  if (h.rows != h.cols)
    throw std::invalid_argument("hermitian_eigen: square matrix required");
  if (!h.is_hermitian(tol))
    throw std::invalid_argument("hermitian_eigen: matrix is not Hermitian");
  const int n = h.rows;
  ComplexMatrix m = h;
  // Symmetrize away the sub-tol asymmetry so rotations stay exact.
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = Complex(std::real(m.at(i, i)), 0.0);
    for (int j = i + 1; j < n; ++j) {
      Complex avg = 0.5 * (m.at(i, j) + std::conj(m.at(j, i)));
      m.at(i, j) = avg;
      m.at(j, i) = std::conj(avg);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  for (int sweep = 0; sweep < 100; ++sweep) {
    if (offdiag_norm(m) < 1e-13) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        Complex apq = m.at(p, q);
        double mag = std::abs(apq);
        if (mag < 1e-300) continue;
        // Unitary 2x2 rotation J with J^H M J zeroing (p,q): a phase to make
        // the pivot real followed by a real Jacobi rotation.
        Complex phase = apq / mag;
        double app = std::real(m.at(p, p));
        double aqq = std::real(m.at(q, q));
        double tau = (aqq - app) / (2.0 * mag);
        double t = (tau >= 0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;
        // Column update M <- M J, with J[p][p]=c, J[q][p]=-s*conj(phase),
        // J[p][q]=s*phase, J[q][q]=c.
        for (int i = 0; i < n; ++i) {
          Complex mip = m.at(i, p), miq = m.at(i, q);
          m.at(i, p) = c * mip - s * std::conj(phase) * miq;
          m.at(i, q) = s * phase * mip + c * miq;
        }
        // Row update M <- J^H M.
        for (int j = 0; j < n; ++j) {
          Complex mpj = m.at(p, j), mqj = m.at(q, j);
          m.at(p, j) = c * mpj - s * phase * mqj;
          m.at(q, j) = s * std::conj(phase) * mpj + c * mqj;
        }
        // Accumulate V <- V J.
        for (int i = 0; i < n; ++i) {
          Complex vip = v.at(i, p), viq = v.at(i, q);
          v.at(i, p) = c * vip - s * std::conj(phase) * viq;
          v.at(i, q) = s * phase * vip + c * viq;
        }
        m.at(p, q) = 0.0;
        m.at(q, p) = 0.0;
        m.at(p, p) = Complex(std::real(m.at(p, p)), 0.0);
        m.at(q, q) = Complex(std::real(m.at(q, q)), 0.0);
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return std::real(m.at(x, x)) < std::real(m.at(y, y));
  });

  EigenDecomposition dec;
  dec.eigenvalues.resize(n);
  dec.eigenvectors = ComplexMatrix(n, n);
  for (int k = 0; k < n; ++k) {
    dec.eigenvalues[k] = std::real(m.at(order[k], order[k]));
    for (int i = 0; i < n; ++i)
      dec.eigenvectors.at(i, k) = v.at(i, order[k]);
  }
  return dec;
}

ComplexMatrix partial_trace(const ComplexMatrix& m,
                            const std::vector<int>& dims, int keep) {
  long total = 1;
  for (int d : dims) total *= d;
  if (m.rows != m.cols || total != m.rows)
    throw std::invalid_argument("partial_trace: dimension mismatch");
  if (keep < 0 || keep >= static_cast<int>(dims.size()))
    throw std::invalid_argument("partial_trace: keep index out of range");

  int dk = dims[keep];
  ComplexMatrix out(dk, dk);
  int n = static_cast<int>(dims.size());
  std::vector<int> idx(n, 0), jdx(n, 0);
  // Sum m[(..., i_keep, ...), (..., j_keep, ...)] over matching environment
  // indices.
  std::vector<long> stride(n, 1);
  for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];
  long env_total = total / dk;
  for (long e = 0; e < env_total; ++e) {
    long rem = e;
    long base = 0;
    for (int i = n - 1; i >= 0; --i) {
      if (i == keep) continue;
      long digit = rem % dims[i];
      rem /= dims[i];
      base += digit * stride[i];
    }
    for (int a = 0; a < dk; ++a)
      for (int b = 0; b < dk; ++b)
        out.at(a, b) += m.at(base + a * stride[keep], base + b * stride[keep]);
  }
  return out;
}

bool is_psd(const ComplexMatrix& h, double tol) {
  EigenDecomposition dec = hermitian_eigen(h, tol > 0 ? tol : 1e-10);
  return dec.eigenvalues.empty() || dec.eigenvalues.front() >= -tol;
}

}  // namespace binv

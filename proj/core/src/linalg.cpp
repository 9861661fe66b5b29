// Copyright 2026 The swapbit Authors
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

#include "swapbit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace swapbit {

void TensorFactorization::check(const ComplexMatrix& m) const {
  if (!m.is_square() || m.rows() != total()) {
    throw DimensionError("expected a square matrix of dimension " + std::to_string(dim_a) + "*" +
                         std::to_string(dim_b) + "=" + std::to_string(total()) + ", got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  // Guard the products before multiplying so they cannot wrap.
  if ((b.rows() != 0 && a.rows() > kMaxDimension / b.rows()) ||
      (b.cols() != 0 && a.cols() > kMaxDimension / b.cols())) {
    throw DimensionError("kron: result would exceed the configured maximum dimension " +
                         std::to_string(kMaxDimension));
  }
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  }
  return out;
}

ComplexMatrix partial_trace_B(const ComplexMatrix& m, const TensorFactorization& f) {
  f.check(m);
  const std::size_t db = f.dim_b;
  ComplexMatrix out(f.dim_a, f.dim_a);
  for (std::size_t i = 0; i < f.dim_a; ++i)
    for (std::size_t j = 0; j < f.dim_a; ++j) {
      Complex s{};
      for (std::size_t k = 0; k < db; ++k) s += m(i * db + k, j * db + k);
      out(i, j) = s;
    }
  return out;
}

ComplexMatrix partial_trace_A(const ComplexMatrix& m, const TensorFactorization& f) {
  f.check(m);
  const std::size_t db = f.dim_b;
  ComplexMatrix out(db, db);
  for (std::size_t a = 0; a < f.dim_a; ++a)
    for (std::size_t k = 0; k < db; ++k)
      for (std::size_t l = 0; l < db; ++l) out(k, l) += m(a * db + k, a * db + l);
  return out;
}

ComplexMatrix partial_transpose_B(const ComplexMatrix& m, const TensorFactorization& f) {
  f.check(m);
  const std::size_t db = f.dim_b;
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < f.dim_a; ++i)
    for (std::size_t j = 0; j < f.dim_a; ++j)
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) out(i * db + k, j * db + l) = m(i * db + l, j * db + k);
  return out;
}

namespace {

// Cyclic Jacobi on a Hermitian working copy. Each rotation is R = D J with
// D = diag(1, e^{-i phi}) making a_pq real and J the real symmetric Jacobi
// rotation annihilating it; a <- R^dagger a R, v <- v R.
void jacobi_diagonalize(ComplexMatrix& a, ComplexMatrix* v) {
  const std::size_t n = a.rows();
  const double scale = std::max(a.frobenius_norm(), 1e-300);

  for (int sweep = 0; sweep <= tol::kMaxJacobiSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    off = std::sqrt(2.0 * off);
    if (off <= 1e-15 * scale) return;
    if (sweep == tol::kMaxJacobiSweeps) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r <= 1e-18 * scale) continue;
        const Complex phase = apq / r;  // e^{i phi}
        const Complex phase_c = std::conj(phase);
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - s * phase_c * akq;
          a(k, q) = s * akp + c * phase_c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * apk + c * phase * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        if (v != nullptr) {
          for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = (*v)(k, p);
            const Complex vkq = (*v)(k, q);
            (*v)(k, p) = c * vkp - s * phase_c * vkq;
            (*v)(k, q) = s * vkp + c * phase_c * vkq;
          }
        }
      }
    }
  }
  throw ConvergenceError("hermitian_eigen: no convergence after " + std::to_string(tol::kMaxJacobiSweeps) +
                         " Jacobi sweeps");
}

ComplexMatrix hermitian_working_copy(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("hermitian_eigen: matrix is not square");
  const double dev = m.hermiticity_deviation();
  if (dev > tol::kHermitian) {
    throw NotHermitianError("matrix is not Hermitian (max |m - m^dagger| = " + std::to_string(dev) + ")");
  }
  ComplexMatrix a = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    a(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      const Complex h = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a(i, j) = h;
      a(j, i) = std::conj(h);
    }
  }
  return a;
}

}  // namespace

EigenDecomposition hermitian_eigen(const ComplexMatrix& m) {
  ComplexMatrix a = hermitian_working_copy(m);
  const std::size_t n = a.rows();
  ComplexMatrix v = ComplexMatrix::identity(n);
  jacobi_diagonalize(a, &v);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t src = order[col];
    out.values[col] = a(src, src).real();
    Complex fix = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double mag = std::abs(v(k, src));
      if (mag > 1e-12) {
        fix = std::conj(v(k, src)) / mag;
        break;
      }
    }
    for (std::size_t k = 0; k < n; ++k) out.vectors(k, col) = v(k, src) * fix;
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  ComplexMatrix a = hermitian_working_copy(m);
  jacobi_diagonalize(a, nullptr);
  std::vector<double> values(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) values[i] = a(i, i).real();
  std::sort(values.begin(), values.end());
  return values;
}

double trace_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (double x : hermitian_eigenvalues(m)) s += std::abs(x);
  return s;
}

}  // namespace swapbit

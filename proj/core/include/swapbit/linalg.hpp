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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "swapbit/matrix.hpp"

namespace swapbit {

namespace tol {
/// Max |m - m^dagger| entry accepted as Hermitian.
inline constexpr double kHermitian = 1e-10;
/// Residual and orthonormality target of the eigensolver.
inline constexpr double kEigen = 1e-10;
inline constexpr int kMaxJacobiSweeps = 100;
}  // namespace tol

class NotHermitianError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Split of a bipartite space H_A (x) H_B; here A is the device and B the
/// targets. Joint index of (a, b) is a * dim_b + b.
struct TensorFactorization {
  std::size_t dim_a = 1;
  std::size_t dim_b = 1;

  std::size_t total() const { return dim_a * dim_b; }
  /// Throws DimensionError unless m is square of size dim_a * dim_b.
  void check(const ComplexMatrix& m) const;

  friend bool operator==(const TensorFactorization&, const TensorFactorization&) = default;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Tr_B over the second factor; result is dim_a x dim_a.
ComplexMatrix partial_trace_B(const ComplexMatrix& m, const TensorFactorization& f);
/// Tr_A over the first factor; result is dim_b x dim_b.
ComplexMatrix partial_trace_A(const ComplexMatrix& m, const TensorFactorization& f);
/// (1 (x) T) m: transposes every dim_b x dim_b block in place of its position.
ComplexMatrix partial_transpose_B(const ComplexMatrix& m, const TensorFactorization& f);

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column i pairs with values[i]
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi sweeps.
///
/// Eigenvalues come out ascending. Each eigenvector's first component with
/// magnitude above 1e-12 is rotated to be real and positive, so the output
/// is deterministic up to the basis choice inside degenerate eigenspaces.
/// Throws NotHermitianError when max|m - m^dagger| > tol::kHermitian and
/// ConvergenceError after tol::kMaxJacobiSweeps sweeps.
EigenDecomposition hermitian_eigen(const ComplexMatrix& m);

/// Eigenvalues only (same algorithm; skips accumulating vectors).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Sum of |eigenvalues| of a Hermitian matrix.
double trace_norm(const ComplexMatrix& m);

}  // namespace swapbit

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

#include "swapbit/density.hpp"

#include <cmath>
#include <string>

namespace swapbit {
namespace {

void check_hermitian_unit_trace(const ComplexMatrix& m) {
  const double dev = m.hermiticity_deviation();
  if (dev > tol::kHermitian) {
    throw InvalidStateError("density operator is not Hermitian (deviation " + std::to_string(dev) + ")");
  }
  const Complex tr = m.trace();
  if (std::abs(tr - Complex{1.0}) > tol::kDensity) {
    throw InvalidStateError("density operator trace is " + std::to_string(tr.real()) + " (expected 1)");
  }
}

}  // namespace

DensityOperator DensityOperator::from_matrix(ComplexMatrix m) {
  const std::size_t n = m.rows();
  return from_matrix(std::move(m), {n, 1});
}

DensityOperator DensityOperator::from_matrix(ComplexMatrix m, TensorFactorization f) {
  f.check(m);
  check_hermitian_unit_trace(m);
  const auto values = hermitian_eigenvalues(m);
  if (!values.empty() && values.front() < -tol::kDensity) {
    throw InvalidStateError("density operator has negative eigenvalue " + std::to_string(values.front()));
  }
  return {std::move(m), f};
}

DensityOperator DensityOperator::from_pure(const ComplexMatrix& psi) { return from_pure(psi, {psi.rows(), 1}); }

DensityOperator DensityOperator::from_pure(const ComplexMatrix& psi, TensorFactorization f) {
  if (psi.cols() != 1) throw DimensionError("from_pure: expected a column vector");
  const double norm = psi.frobenius_norm();
  if (std::abs(norm - 1.0) > tol::kDensity) {
    throw InvalidStateError("state vector norm is " + std::to_string(norm) + " (expected 1)");
  }
  ComplexMatrix m = outer(psi);
  f.check(m);
  return {std::move(m), f};
}

DensityOperator DensityOperator::maximally_mixed(std::size_t n) {
  if (n == 0) throw DimensionError("maximally_mixed: dimension must be positive");
  return {ComplexMatrix::identity(n) * Complex{1.0 / static_cast<double>(n)}, {n, 1}};
}

DensityOperator DensityOperator::from_channel_output(ComplexMatrix m, TensorFactorization f) {
  f.check(m);
  check_hermitian_unit_trace(m);
  return {std::move(m), f};
}

double DensityOperator::purity() const {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  double s = 0.0;
  for (const auto& z : m_.entries()) s += std::norm(z);
  return s;
}

bool DensityOperator::is_pure(double tolerance) const { return std::abs(purity() - 1.0) <= tolerance; }

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b) {
  return DensityOperator::from_channel_output(kron(a.matrix(), b.matrix()), {a.dim(), b.dim()});
}

double trace_distance(const DensityOperator& a, const DensityOperator& b) {
  return 0.5 * trace_norm(a.matrix() - b.matrix());
}

}  // namespace swapbit

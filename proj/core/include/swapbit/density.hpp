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

#include <stdexcept>

#include "swapbit/linalg.hpp"
#include "swapbit/matrix.hpp"

namespace swapbit {

namespace tol {
/// Trace and negative-eigenvalue slack when validating density operators.
inline constexpr double kDensity = 1e-10;
}  // namespace tol

class InvalidStateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Hermitian, positive semidefinite, unit-trace matrix together with the
/// device x target split it lives on. Single-system states use {dim, 1}.
class DensityOperator {
 public:
  /// Validates Hermiticity, unit trace and positivity (eigenvalues
  /// >= -tol::kDensity). Throws InvalidStateError otherwise.
  static DensityOperator from_matrix(ComplexMatrix m);
  static DensityOperator from_matrix(ComplexMatrix m, TensorFactorization f);
  /// |psi><psi| for a unit column vector.
  static DensityOperator from_pure(const ComplexMatrix& psi);
  static DensityOperator from_pure(const ComplexMatrix& psi, TensorFactorization f);
  static DensityOperator maximally_mixed(std::size_t n);

  /// For outputs of maps already known to be CPTP: checks shape, Hermiticity
  /// and trace, skips the eigenvalue test.
  static DensityOperator from_channel_output(ComplexMatrix m, TensorFactorization f);

  const ComplexMatrix& matrix() const { return m_; }
  const TensorFactorization& factorization() const { return f_; }
  std::size_t dim() const { return m_.rows(); }
  Complex operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  double purity() const;
  bool is_pure(double tolerance = tol::kDensity) const;

 private:
  DensityOperator(ComplexMatrix m, TensorFactorization f) : m_(std::move(m)), f_(f) {}

  ComplexMatrix m_;
  TensorFactorization f_;
};

/// rho_A (x) rho_B with factorization {dim A, dim B}.
DensityOperator tensor(const DensityOperator& a, const DensityOperator& b);

/// (1/2) ||a - b||_1.
double trace_distance(const DensityOperator& a, const DensityOperator& b);

}  // namespace swapbit

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

#include <optional>
#include <string_view>

#include "swapbit/density.hpp"
#include "swapbit/gates.hpp"
#include "swapbit/linalg.hpp"
#include "swapbit/matrix.hpp"

namespace swapbit {

namespace tol {
/// Eigenvalue below -kNpt certifies a negative partial transpose.
inline constexpr double kNpt = 1e-10;
/// Trace distance above kInfo counts as information about the hidden bit.
inline constexpr double kInfo = 1e-10;
/// Entrywise slack of the k = 0 product-form check.
inline constexpr double kProduct = 1e-10;
/// Samples whose largest off-diagonal |alpha| lies in (0, kDegenerate] are
/// bucketed separately in Monte Carlo checks.
inline constexpr double kDegenerate = 1e-8;
/// Smallest |alpha_kl| for which the analytic witness is defined.
inline constexpr double kWitness = 1e-12;
}  // namespace tol

enum class PptVerdict { kNptEntangled, kPptInconclusive };

std::string_view to_string(PptVerdict verdict);

struct PptCertificate {
  double min_eigenvalue = 0.0;
  ComplexMatrix witness_vector;  // eigenvector of the smallest eigenvalue
  /// -max_{k != l} |alpha_kl|, when an overlap matrix was supplied.
  std::optional<double> predicted_eigenvalue;
  PptVerdict verdict = PptVerdict::kPptInconclusive;
};

/// Minimum eigenpair of the partial transpose over the second factor.
PptCertificate ppt_check(const DensityOperator& rho, double tau = tol::kNpt);
PptCertificate ppt_check(const DensityOperator& rho, const TensorFactorization& f, double tau = tol::kNpt);
/// Also records the eigenvalue predicted for a k = 1 output from alpha.
PptCertificate ppt_check(const DensityOperator& rho, const OverlapMatrix& alpha, double tau = tol::kNpt);

struct NptWitness {
  ComplexMatrix vector;  // unnormalized, norm sqrt(2)
  double eigenvalue;     // -|alpha_kl|
};

/// |k>_D|l>_T - (conj(alpha_kl)/|alpha_kl|) |l>_D|k>_T on the N(N+1) joint
/// space, an eigenvector of the partial transpose of the k = 1 output with
/// eigenvalue -|alpha_kl|. k, l are 1-based and distinct. Throws
/// std::invalid_argument when |alpha_kl| <= tol::kWitness.
NptWitness analytic_npt_witness(const OverlapMatrix& alpha, std::size_t k, std::size_t l);

struct IffRecord {
  bool info_gain = false;
  bool npt_k1 = false;
  bool separable_k0_certified = false;
  double trace_distance = 0.0;
  double min_pt_eigenvalue = 0.0;
  double max_offdiagonal_alpha = 0.0;
  double product_deviation = 0.0;

  /// info_gain == npt_k1 and the k = 0 output is product form.
  bool consistent() const { return info_gain == npt_k1 && separable_k0_certified; }
  /// Largest off-diagonal |alpha| in (0, tol::kDegenerate].
  bool degenerate() const { return max_offdiagonal_alpha > 0.0 && max_offdiagonal_alpha <= tol::kDegenerate; }
};

/// Evaluates both sides of "information gain iff k = 1 entanglement" for one
/// gate and device input. The k = 0 side is certified structurally: the
/// output must equal Tr_T(output) (x) |0><0| entrywise within tol::kProduct.
IffRecord iff_theorem_check(const GeneralizedControlGate& gate, const DensityOperator& rho_d);

}  // namespace swapbit

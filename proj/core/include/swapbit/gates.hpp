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
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "swapbit/density.hpp"
#include "swapbit/linalg.hpp"
#include "swapbit/matrix.hpp"

namespace swapbit {

namespace tol {
inline constexpr double kUnitVector = 1e-12;
inline constexpr double kUnitary = 1e-10;
/// Max |sum K^dagger K - I| entry for a Kraus list to count as a channel.
inline constexpr double kCompleteness = 1e-10;
/// Block-extraction slack in membership checks.
inline constexpr double kMembership = 1e-8;
}  // namespace tol

/// A channel in the generalized control-gate class, stored in canonical form:
/// one unit vector v(s) in C^M per control setting s, plus the target unitary
/// U(s) that setting applies. On product inputs
///
///   G(rho_D (x) rho_T) = sum_{k,l} <v(k), v(l)> rho_D[k,l] |k><l| (x) U(k) rho_T U(l)^dagger
///
/// with <v(k), v(l)> = sum_j v_j(k) conj(v_j(l)). Only the Gram matrix of the
/// vectors matters; the vectors themselves are a gauge choice.
class GeneralizedControlGate {
 public:
  /// Throws std::invalid_argument if the lists are empty or differ in length,
  /// a vector is not unit norm (tol::kUnitVector), vectors differ in
  /// dimension, or a target operator is not unitary (tol::kUnitary).
  GeneralizedControlGate(std::vector<std::vector<Complex>> overlap_vectors,
                         std::vector<ComplexMatrix> target_unitaries);

  std::size_t n_settings() const { return vectors_.size(); }
  std::size_t kraus_rank() const { return vectors_.front().size(); }
  std::size_t target_dim() const { return unitaries_.front().rows(); }
  TensorFactorization factorization() const { return {n_settings(), target_dim()}; }

  /// Setting s is 1-based.
  std::span<const Complex> overlap_vector(std::size_t s) const { return vectors_.at(s - 1); }
  const std::vector<std::vector<Complex>>& overlap_vectors() const { return vectors_; }
  const std::vector<ComplexMatrix>& target_unitaries() const { return unitaries_; }

  /// N x N matrix of <v(k), v(l)>.
  ComplexMatrix gram_matrix() const;

 private:
  std::vector<std::vector<Complex>> vectors_;
  std::vector<ComplexMatrix> unitaries_;
};

/// Overlap vectors for the swap targets S_1..S_N.
GeneralizedControlGate swap_control_gate(std::vector<std::vector<Complex>> overlap_vectors);

/// All vectors equal to (1): conjugation by U = sum_k |k><k| (x) S_k.
GeneralizedControlGate ideal_gate(std::size_t n);
/// Orthonormal vectors e_1..e_N: fully dephases the control.
GeneralizedControlGate classical_gate(std::size_t n);
/// Vectors uniform on the unit sphere of C^M, drawn from Rng(seed) in setting order.
GeneralizedControlGate random_gate(std::size_t n, std::size_t kraus_rank, std::uint64_t seed);

/// sum_k |k><k| (x) U(k).
ComplexMatrix control_unitary(std::span<const ComplexMatrix> target_unitaries);

/// Closed-form channel output on a product input, factorized {N, dim T}.
/// Throws DimensionError on size mismatch.
DensityOperator apply(const GeneralizedControlGate& gate, const DensityOperator& rho_d,
                      const DensityOperator& rho_t);

/// Block (k, l) (1-based) of the output: <v(k),v(l)> rho_D[k,l] U(k) rho_T U(l)^dagger.
ComplexMatrix output_block(const GeneralizedControlGate& gate, const DensityOperator& rho_d,
                           const DensityOperator& rho_t, std::size_t k, std::size_t l);

/// Tr_T of apply(...) without forming the joint matrix:
/// [k,l] = <v(k),v(l)> rho_D[k,l] Tr(U(k) rho_T U(l)^dagger). O(N dT^3 + N^2 dT^2).
DensityOperator apply_reduced_device(const GeneralizedControlGate& gate, const DensityOperator& rho_d,
                                     const DensityOperator& rho_t);

class NotAChannelError : public std::invalid_argument {
 public:
  NotAChannelError(const std::string& what, double deviation)
      : std::invalid_argument(what), deviation_(deviation) {}
  double deviation() const { return deviation_; }

 private:
  double deviation_;
};

/// Max entry of |sum_j K_j^dagger K_j - I|. Throws DimensionError if the
/// operators are not square and equal in size, or the list is empty.
double completeness_deviation(std::span<const ComplexMatrix> operators);

/// Kraus operators of a CPTP map; completeness is checked on construction.
class KrausSet {
 public:
  /// Throws NotAChannelError when completeness_deviation > tol::kCompleteness.
  explicit KrausSet(std::vector<ComplexMatrix> operators);

  const std::vector<ComplexMatrix>& operators() const { return ops_; }
  std::size_t size() const { return ops_.size(); }
  std::size_t dim() const { return ops_.front().rows(); }
  double completeness_deviation() const;

  /// sum_j K_j rho K_j^dagger. Linear extension to any joint input,
  /// correlated or not.
  ComplexMatrix evolve(const ComplexMatrix& rho) const;

 private:
  std::vector<ComplexMatrix> ops_;
};

/// K_j = sum_s v_j(s) |s><s| (x) U(s), j = 1..M.
KrausSet kraus_set(const GeneralizedControlGate& gate);

struct MembershipWitness {
  enum class Kind { kOffDiagonalBlock, kDiagonalNotProportional, kNonUnitVector };
  Kind kind;
  std::size_t operator_index;  // 0-based position in the Kraus list
  std::size_t block_row;       // 1-based device setting
  std::size_t block_col;       // 1-based device setting
  double magnitude;            // offending max-abs entry or norm defect
};

const char* to_string(MembershipWitness::Kind kind);

struct MembershipVerdict {
  bool member = false;
  /// Recovered v(1)..v(N) (member only); a gauge choice, compare Gram matrices.
  std::vector<std::vector<Complex>> vectors;
  ComplexMatrix gram;  // member only
  std::optional<MembershipWitness> witness;  // not_member only
};

/// Decomposes each K_j into N x N target-space blocks B_j(k,l). Member iff
/// every off-diagonal block vanishes and every diagonal block is v_j(s) U(s)
/// with the recovered v(s) of unit norm, all within tol::kMembership. The
/// first violation found (operator-major, then row, then column) is the witness.
MembershipVerdict verify_membership(const KrausSet& kraus, std::span<const ComplexMatrix> target_unitaries);
/// Same, against the swaps S_1..S_N on the (N+1)-dimensional target space.
MembershipVerdict verify_membership(const KrausSet& kraus, std::size_t n_settings);

/// alpha[i,j] = <v(i), v(j)> rho_D[i,j]. Hermitian; the diagonal is rho_D's.
struct OverlapMatrix {
  ComplexMatrix alpha;

  std::size_t n() const { return alpha.rows(); }
  /// 1-based access, matching device setting labels.
  Complex operator()(std::size_t i, std::size_t j) const { return alpha.at(i - 1, j - 1); }
  double max_offdiagonal() const;
};

OverlapMatrix overlap_matrix(const GeneralizedControlGate& gate, const DensityOperator& rho_d);

}  // namespace swapbit

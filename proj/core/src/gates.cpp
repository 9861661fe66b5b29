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

#include "swapbit/gates.hpp"

#include <algorithm>
#include <cmath>

#include "swapbit/random.hpp"
#include "swapbit/spaces.hpp"

namespace swapbit {
namespace {

Complex dot(std::span<const Complex> a, std::span<const Complex> b) {
  Complex s{};
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * std::conj(b[j]);
  return s;
}

void check_product_input(const GeneralizedControlGate& gate, const DensityOperator& rho_d,
                         const DensityOperator& rho_t) {
  if (rho_d.dim() != gate.n_settings()) {
    throw DimensionError("device state has dimension " + std::to_string(rho_d.dim()) + ", gate has " +
                         std::to_string(gate.n_settings()) + " settings");
  }
  if (rho_t.dim() != gate.target_dim()) {
    throw DimensionError("target state has dimension " + std::to_string(rho_t.dim()) + ", gate acts on " +
                         std::to_string(gate.target_dim()));
  }
}

}  // namespace

GeneralizedControlGate::GeneralizedControlGate(std::vector<std::vector<Complex>> overlap_vectors,
                                               std::vector<ComplexMatrix> target_unitaries)
    : vectors_(std::move(overlap_vectors)), unitaries_(std::move(target_unitaries)) {
  if (vectors_.empty()) throw std::invalid_argument("gate needs at least one control setting");
  if (vectors_.size() != unitaries_.size()) {
    throw std::invalid_argument("gate has " + std::to_string(vectors_.size()) + " overlap vectors but " +
                                std::to_string(unitaries_.size()) + " target unitaries");
  }
  const std::size_t m = vectors_.front().size();
  if (m == 0) throw std::invalid_argument("overlap vectors must have dimension >= 1");
  const std::size_t dt = unitaries_.front().rows();
  for (std::size_t s = 0; s < vectors_.size(); ++s) {
    const auto& v = vectors_[s];
    if (v.size() != m) throw std::invalid_argument("overlap vectors differ in dimension");
    for (const auto& z : v) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw std::invalid_argument("overlap vector entries must be finite");
      }
    }
    const double norm = std::sqrt(dot(v, v).real());
    if (std::abs(norm - 1.0) > tol::kUnitVector) {
      throw std::invalid_argument("overlap vector " + std::to_string(s + 1) + " has norm " + std::to_string(norm));
    }
    const auto& u = unitaries_[s];
    if (!u.is_square() || u.rows() != dt) throw DimensionError("target unitaries differ in dimension");
    const double dev = max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(dt));
    if (dev > tol::kUnitary) {
      throw std::invalid_argument("target operator " + std::to_string(s + 1) + " is not unitary (deviation " +
                                  std::to_string(dev) + ")");
    }
  }
}

ComplexMatrix GeneralizedControlGate::gram_matrix() const {
  const std::size_t n = n_settings();
  ComplexMatrix g(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) g(k, l) = dot(vectors_[k], vectors_[l]);
  return g;
}

GeneralizedControlGate swap_control_gate(std::vector<std::vector<Complex>> overlap_vectors) {
  const std::size_t n = overlap_vectors.size();
  if (n == 0) throw std::invalid_argument("gate needs at least one control setting");
  return {std::move(overlap_vectors), swap_operators(TargetBasis(n))};
}

GeneralizedControlGate ideal_gate(std::size_t n) {
  return swap_control_gate(std::vector<std::vector<Complex>>(n, std::vector<Complex>{1.0}));
}

GeneralizedControlGate classical_gate(std::size_t n) {
  std::vector<std::vector<Complex>> vs(n, std::vector<Complex>(n));
  for (std::size_t s = 0; s < n; ++s) vs[s][s] = 1.0;
  return swap_control_gate(std::move(vs));
}

GeneralizedControlGate random_gate(std::size_t n, std::size_t kraus_rank, std::uint64_t seed) {
  if (kraus_rank == 0) throw std::invalid_argument("kraus rank must be >= 1");
  Rng rng(seed);
  std::vector<std::vector<Complex>> vs;
  vs.reserve(n);
  for (std::size_t s = 0; s < n; ++s) vs.push_back(random_unit_vector(rng, kraus_rank));
  return swap_control_gate(std::move(vs));
}

ComplexMatrix control_unitary(std::span<const ComplexMatrix> target_unitaries) {
  const std::size_t n = target_unitaries.size();
  const std::size_t dt = target_unitaries.front().rows();
  ComplexMatrix u(n * dt, n * dt);
  for (std::size_t k = 0; k < n; ++k) u.set_block(k * dt, k * dt, target_unitaries[k]);
  return u;
}

ComplexMatrix output_block(const GeneralizedControlGate& gate, const DensityOperator& rho_d,
                           const DensityOperator& rho_t, std::size_t k, std::size_t l) {
  check_product_input(gate, rho_d, rho_t);
  const auto& us = gate.target_unitaries();
  const Complex coeff = dot(gate.overlap_vector(k), gate.overlap_vector(l)) * rho_d(k - 1, l - 1);
  return coeff * (us[k - 1] * rho_t.matrix() * us[l - 1].adjoint());
}

DensityOperator apply(const GeneralizedControlGate& gate, const DensityOperator& rho_d,
                      const DensityOperator& rho_t) {
  check_product_input(gate, rho_d, rho_t);
  const std::size_t n = gate.n_settings();
  const std::size_t dt = gate.target_dim();
  const auto& us = gate.target_unitaries();
  const ComplexMatrix gram = gate.gram_matrix();

  std::vector<ComplexMatrix> left;  // U(k) rho_T
  std::vector<ComplexMatrix> right;  // U(l)^dagger
  left.reserve(n);
  right.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    left.push_back(us[k] * rho_t.matrix());
    right.push_back(us[k].adjoint());
  }

  ComplexMatrix out(n * dt, n * dt);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      const Complex coeff = gram(k, l) * rho_d(k, l);
      if (coeff == Complex{}) continue;
      out.set_block(k * dt, l * dt, coeff * (left[k] * right[l]));
    }
  }
  return DensityOperator::from_channel_output(std::move(out), {n, dt});
}

DensityOperator apply_reduced_device(const GeneralizedControlGate& gate, const DensityOperator& rho_d,
                                     const DensityOperator& rho_t) {
  check_product_input(gate, rho_d, rho_t);
  const std::size_t n = gate.n_settings();
  const std::size_t dt = gate.target_dim();
  const auto& us = gate.target_unitaries();
  const ComplexMatrix gram = gate.gram_matrix();

  std::vector<ComplexMatrix> left;
  left.reserve(n);
  for (std::size_t k = 0; k < n; ++k) left.push_back(us[k] * rho_t.matrix());

  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      const Complex coeff = gram(k, l) * rho_d(k, l);
      if (coeff == Complex{}) continue;
      // Tr(A B^dagger) = sum_ac A[a,c] conj(B[a,c]).
      Complex tr{};
      const auto a = left[k].entries();
      const auto b = us[l].entries();
      for (std::size_t i = 0; i < dt * dt; ++i) tr += a[i] * std::conj(b[i]);
      out(k, l) = coeff * tr;
    }
  }
  return DensityOperator::from_channel_output(std::move(out), {n, 1});
}

double completeness_deviation(std::span<const ComplexMatrix> operators) {
  if (operators.empty()) throw DimensionError("Kraus list is empty");
  const std::size_t d = operators.front().rows();
  ComplexMatrix sum(d, d);
  for (const auto& k : operators) {
    if (!k.is_square() || k.rows() != d) throw DimensionError("Kraus operators must be square and equal in size");
    sum += k.adjoint() * k;
  }
  return max_abs_diff(sum, ComplexMatrix::identity(d));
}

KrausSet::KrausSet(std::vector<ComplexMatrix> operators) : ops_(std::move(operators)) {
  const double dev = swapbit::completeness_deviation(ops_);
  if (dev > tol::kCompleteness) {
    throw NotAChannelError("Kraus operators are not complete: max |sum K^dagger K - I| = " + std::to_string(dev),
                           dev);
  }
}

double KrausSet::completeness_deviation() const { return swapbit::completeness_deviation(ops_); }

ComplexMatrix KrausSet::evolve(const ComplexMatrix& rho) const {
  if (!rho.is_square() || rho.rows() != dim()) throw DimensionError("Kraus evolution: state dimension mismatch");
  ComplexMatrix out(dim(), dim());
  for (const auto& k : ops_) out += k * rho * k.adjoint();
  return out;
}

KrausSet kraus_set(const GeneralizedControlGate& gate) {
  const std::size_t n = gate.n_settings();
  const std::size_t dt = gate.target_dim();
  std::vector<ComplexMatrix> ops;
  ops.reserve(gate.kraus_rank());
  for (std::size_t j = 0; j < gate.kraus_rank(); ++j) {
    ComplexMatrix k(n * dt, n * dt);
    for (std::size_t s = 0; s < n; ++s) {
      k.set_block(s * dt, s * dt, gate.overlap_vectors()[s][j] * gate.target_unitaries()[s]);
    }
    ops.push_back(std::move(k));
  }
  return KrausSet(std::move(ops));
}

const char* to_string(MembershipWitness::Kind kind) {
  switch (kind) {
    case MembershipWitness::Kind::kOffDiagonalBlock: return "off_diagonal_block";
    case MembershipWitness::Kind::kDiagonalNotProportional: return "diagonal_not_proportional";
    case MembershipWitness::Kind::kNonUnitVector: return "non_unit_vector";
  }
  return "unknown";
}

MembershipVerdict verify_membership(const KrausSet& kraus, std::span<const ComplexMatrix> target_unitaries) {
  const std::size_t n = target_unitaries.size();
  if (n == 0) throw DimensionError("verify_membership: no target unitaries");
  const std::size_t dt = target_unitaries.front().rows();
  if (kraus.dim() != n * dt) {
    throw DimensionError("Kraus operators have dimension " + std::to_string(kraus.dim()) + ", expected " +
                         std::to_string(n) + "*" + std::to_string(dt));
  }

  MembershipVerdict verdict;
  const std::size_t m = kraus.size();
  std::vector<std::vector<Complex>> vs(n, std::vector<Complex>(m));

  // Off-diagonal blocks are checked before any diagonal block.
  for (std::size_t j = 0; j < m; ++j) {
    const ComplexMatrix& k = kraus.operators()[j];
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        if (r == c) continue;
        const double mag = max_abs(k.block(r * dt, c * dt, dt, dt));
        if (mag > tol::kMembership) {
          verdict.witness = MembershipWitness{MembershipWitness::Kind::kOffDiagonalBlock, j, r + 1, c + 1, mag};
          return verdict;
        }
      }
  }

  for (std::size_t j = 0; j < m; ++j) {
    const ComplexMatrix& k = kraus.operators()[j];
    for (std::size_t r = 0; r < n; ++r) {
      const ComplexMatrix b = k.block(r * dt, r * dt, dt, dt);
      // Projection coefficient onto U(s): Tr(U^dagger B) / dT.
      const ComplexMatrix& u = target_unitaries[r];
      Complex coeff{};
      for (std::size_t i = 0; i < dt * dt; ++i) coeff += std::conj(u.entries()[i]) * b.entries()[i];
      coeff /= static_cast<double>(dt);
      const double residual = max_abs_diff(b, coeff * u);
      if (residual > tol::kMembership) {
        verdict.witness = MembershipWitness{MembershipWitness::Kind::kDiagonalNotProportional, j, r + 1, r + 1, residual};
        return verdict;
      }
      vs[r][j] = coeff;
    }
  }

  for (std::size_t s = 0; s < n; ++s) {
    const double defect = std::abs(std::sqrt(dot(vs[s], vs[s]).real()) - 1.0);
    if (defect > tol::kMembership) {
      verdict.witness = MembershipWitness{MembershipWitness::Kind::kNonUnitVector, 0, s + 1, s + 1, defect};
      return verdict;
    }
  }

  verdict.member = true;
  verdict.gram = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) verdict.gram(k, l) = dot(vs[k], vs[l]);
  verdict.vectors = std::move(vs);
  return verdict;
}

MembershipVerdict verify_membership(const KrausSet& kraus, std::size_t n_settings) {
  const auto swaps = swap_operators(TargetBasis(n_settings));
  return verify_membership(kraus, swaps);
}

double OverlapMatrix::max_offdiagonal() const {
  double m = 0.0;
  for (std::size_t i = 0; i < alpha.rows(); ++i)
    for (std::size_t j = 0; j < alpha.cols(); ++j)
      if (i != j) m = std::max(m, std::abs(alpha(i, j)));
  return m;
}

OverlapMatrix overlap_matrix(const GeneralizedControlGate& gate, const DensityOperator& rho_d) {
  const std::size_t n = gate.n_settings();
  if (rho_d.dim() != n) {
    throw DimensionError("device state has dimension " + std::to_string(rho_d.dim()) + ", gate has " +
                         std::to_string(n) + " settings");
  }
  const ComplexMatrix gram = gate.gram_matrix();
  ComplexMatrix alpha(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) alpha(i, j) = gram(i, j) * rho_d(i, j);
  return {std::move(alpha)};
}

}  // namespace swapbit

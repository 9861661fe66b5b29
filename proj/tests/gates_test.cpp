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

#include <gtest/gtest.h>

#include <cmath>

#include "swapbit/random.hpp"
#include "swapbit/spaces.hpp"
#include "test_util.hpp"

using namespace swapbit;

namespace {

DensityOperator phi_state(std::size_t n) { return DensityOperator::from_pure(uniform_device_state(DeviceBasis(n))); }

DensityOperator target_density(std::size_t n, int bit) {
  return DensityOperator::from_pure(target_state(TargetBasis(n), bit));
}

// U = sum_k |k><k| (x) S_k assembled from kron, independent of control_unitary().
ComplexMatrix control_unitary_oracle(std::size_t n) {
  ComplexMatrix u(n * (n + 1), n * (n + 1));
  for (std::size_t k = 1; k <= n; ++k) {
    u += kron(outer(device_setting(DeviceBasis(n), k)), swap_operator(TargetBasis(n), k));
  }
  return u;
}

// Zeroes every off-diagonal device block of a joint matrix.
ComplexMatrix dephase_device(const ComplexMatrix& m, std::size_t n, std::size_t dt) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t k = 0; k < n; ++k) out.set_block(k * dt, k * dt, m.block(k * dt, k * dt, dt, dt));
  return out;
}

}  // namespace

TEST(IdealGate, ReproducesEntangledOutputForBitOne) {
  const DensityOperator out = apply(ideal_gate(2), phi_state(2), target_density(2, 1));
  // (|1>_D|1>_T + |2>_D|2>_T)/sqrt2, joint index (k-1)*3 + t.
  ComplexMatrix psi(6, 1);
  psi(1, 0) = 1.0 / std::sqrt(2.0);
  psi(5, 0) = 1.0 / std::sqrt(2.0);
  EXPECT_MATRIX_NEAR(out.matrix(), outer(psi), 1e-15);
  EXPECT_EQ(out.factorization(), (TensorFactorization{2, 3}));
}

TEST(IdealGate, AllOverlapsAreOne) {
  const ComplexMatrix g = ideal_gate(5).gram_matrix();
  for (const auto& z : g.entries()) EXPECT_EQ(z, Complex{1.0});
  EXPECT_EQ(ideal_gate(5).kraus_rank(), 1u);
}

TEST(IdealGate, MatchesUnitaryConjugation) {
  Rng rng(101);
  for (std::size_t n : {1u, 2u, 3u, 4u}) {
    const ComplexMatrix u = control_unitary_oracle(n);
    EXPECT_EQ(u, control_unitary(ideal_gate(n).target_unitaries()));
    for (int trial = 0; trial < 5; ++trial) {
      const DensityOperator rd = random_mixed_state(rng, n, n);
      const DensityOperator rt = random_mixed_state(rng, n + 1, 2);
      const ComplexMatrix expected = u * kron(rd.matrix(), rt.matrix()) * u.adjoint();
      EXPECT_MATRIX_NEAR(apply(ideal_gate(n), rd, rt).matrix(), expected, 1e-12);
    }
  }
}

TEST(ClassicalGate, ErasesDeviceCoherence) {
  Rng rng(102);
  const std::size_t n = 3;
  const DensityOperator rd = random_pure_state(rng, n);
  const DensityOperator rt = random_mixed_state(rng, n + 1, 3);
  const ComplexMatrix out = apply(classical_gate(n), rd, rt).matrix();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      if (k != l) EXPECT_EQ(max_abs(out.block(k * (n + 1), l * (n + 1), n + 1, n + 1)), 0.0);
  EXPECT_TRUE(classical_gate(n).gram_matrix() == ComplexMatrix::identity(n));
}

TEST(ClassicalGate, EqualsDephasedIdealOnDiagonalInput) {
  Rng rng(103);
  for (std::size_t n : {2u, 3u, 4u}) {
    std::vector<Complex> diag(n);
    double total = 0.0;
    for (auto& d : diag) total += (d = rng.uniform() + 0.1).real();
    for (auto& d : diag) d /= total;
    const DensityOperator rd = DensityOperator::from_matrix(ComplexMatrix::diagonal(diag));
    const DensityOperator rt = random_mixed_state(rng, n + 1, 2);
    const ComplexMatrix ideal = apply(ideal_gate(n), rd, rt).matrix();
    EXPECT_MATRIX_NEAR(apply(classical_gate(n), rd, rt).matrix(), dephase_device(ideal, n, n + 1), 1e-14);
  }
}

TEST(ClassicalGate, SingleSettingIsIdeal) {
  Rng rng(104);
  const DensityOperator rt = random_mixed_state(rng, 2, 2);
  const DensityOperator rd = DensityOperator::from_matrix(ComplexMatrix::identity(1));
  EXPECT_EQ(apply(classical_gate(1), rd, rt).matrix(), apply(ideal_gate(1), rd, rt).matrix());
}

TEST(RandomGate, DeterministicAndUnitNorm) {
  const auto g1 = random_gate(3, 4, 77);
  const auto g2 = random_gate(3, 4, 77);
  EXPECT_EQ(g1.overlap_vectors(), g2.overlap_vectors());
  EXPECT_NE(g1.overlap_vectors(), random_gate(3, 4, 78).overlap_vectors());
  for (std::size_t s = 1; s <= 3; ++s) {
    double norm2 = 0.0;
    for (const auto& z : g1.overlap_vector(s)) norm2 += std::norm(z);
    EXPECT_NEAR(std::sqrt(norm2), 1.0, 1e-12);
  }
  EXPECT_THROW(random_gate(3, 0, 1), std::invalid_argument);
}

// Rank one gives unit phases v_s, i.e. the ideal channel after a diagonal
// device phase D = diag(v_1..v_N).
TEST(RandomGate, RankOneIsAPhasedIdealChannel) {
  Rng rng(105);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto g = random_gate(3, 1, seed);
    const DensityOperator rd = random_mixed_state(rng, 3, 3);
    const DensityOperator rt = random_mixed_state(rng, 4, 4);
    std::vector<Complex> phases;
    for (std::size_t s = 1; s <= 3; ++s) phases.push_back(g.overlap_vector(s)[0]);
    const ComplexMatrix d = ComplexMatrix::diagonal(phases);
    const DensityOperator phased = DensityOperator::from_matrix(d * rd.matrix() * d.adjoint());
    EXPECT_MATRIX_NEAR(apply(g, rd, rt).matrix(), apply(ideal_gate(3), phased, rt).matrix(), 1e-12);
  }
}

TEST(Apply, ReducedDeviceStatesOfTheTwoObjectProtocol) {
  const auto gate = ideal_gate(2);
  const DensityOperator phi = phi_state(2);
  const TensorFactorization f{2, 3};
  const ComplexMatrix r0 = partial_trace_B(apply(gate, phi, target_density(2, 0)).matrix(), f);
  const ComplexMatrix r1 = partial_trace_B(apply(gate, phi, target_density(2, 1)).matrix(), f);
  EXPECT_MATRIX_NEAR(r0, phi.matrix(), 1e-15);
  EXPECT_MATRIX_NEAR(r1, 0.5 * ComplexMatrix::identity(2), 1e-15);
}

TEST(Apply, DefiniteSettingAppliesItsSwap) {
  Rng rng(106);
  const std::size_t n = 4;
  for (std::size_t i = 1; i <= n; ++i) {
    const DensityOperator rd = DensityOperator::from_pure(device_setting(DeviceBasis(n), i));
    const DensityOperator rt = random_mixed_state(rng, n + 1, 3);
    const ComplexMatrix s = swap_operator(TargetBasis(n), i);
    const auto gate = random_gate(n, 3, 900 + i);
    EXPECT_MATRIX_NEAR(apply(gate, rd, rt).matrix(), kron(rd.matrix(), s * rt.matrix() * s), 1e-14);
  }
}

TEST(Apply, OutputIsADensityOperator) {
  Rng rng(107);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const auto gate = random_gate(n, 1 + trial % 4, 300 + trial);
    const DensityOperator rd = random_mixed_state(rng, n, 1 + trial % n);
    const DensityOperator rt = random_mixed_state(rng, n + 1, 2);
    const auto out = apply(gate, rd, rt);
    EXPECT_NEAR(out.matrix().trace().real(), 1.0, 1e-12);
    EXPECT_GE(hermitian_eigenvalues(out.matrix()).front(), -1e-10);
    EXPECT_MATRIX_NEAR(apply_reduced_device(gate, rd, rt).matrix(), partial_trace_B(out.matrix(), out.factorization()),
                       1e-13);
    EXPECT_MATRIX_NEAR(output_block(gate, rd, rt, 1, 2), out.matrix().block(0, n + 1, n + 1, n + 1), 1e-15);
  }
}

TEST(Apply, DimensionMismatchThrows) {
  const auto gate = ideal_gate(3);
  EXPECT_THROW(apply(gate, phi_state(2), target_density(3, 0)), DimensionError);
  EXPECT_THROW(apply(gate, phi_state(3), target_density(2, 0)), DimensionError);
  EXPECT_THROW(apply_reduced_device(gate, phi_state(2), target_density(3, 0)), DimensionError);
}

TEST(GateConstruction, ValidatesVectorsAndUnitaries) {
  EXPECT_THROW(swap_control_gate({{1.0}, {0.5}}), std::invalid_argument);
  EXPECT_THROW(swap_control_gate({{1.0}, {1.0, 0.0}}), std::invalid_argument);
  EXPECT_THROW(swap_control_gate({}), std::invalid_argument);
  const ComplexMatrix not_unitary = {{1.0, 0.0}, {0.0, 2.0}};
  EXPECT_THROW(GeneralizedControlGate({{1.0}}, {not_unitary}), std::invalid_argument);
  EXPECT_THROW(GeneralizedControlGate({{1.0}}, {}), std::invalid_argument);
}

TEST(KrausSet, IdealGateIsTheControlUnitary) {
  const KrausSet ks = kraus_set(ideal_gate(3));
  ASSERT_EQ(ks.size(), 1u);
  EXPECT_EQ(ks.operators()[0], control_unitary_oracle(3));
}

TEST(KrausSet, ClassicalGateOperators) {
  const KrausSet ks = kraus_set(classical_gate(2));
  ASSERT_EQ(ks.size(), 2u);
  const DeviceBasis d(2);
  const TargetBasis t(2);
  EXPECT_EQ(ks.operators()[0], kron(outer(device_setting(d, 1)), swap_operator(t, 1)));
  EXPECT_EQ(ks.operators()[1], kron(outer(device_setting(d, 2)), swap_operator(t, 2)));
}

TEST(KrausSet, KrausSumMatchesClosedForm) {
  Rng rng(108);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const auto gate = random_gate(n, 1 + trial % 5, 500 + trial);
    const KrausSet ks = kraus_set(gate);
    EXPECT_LE(ks.completeness_deviation(), 1e-10);
    const DensityOperator rd = random_mixed_state(rng, n, n);
    const DensityOperator rt = random_mixed_state(rng, n + 1, n + 1);
    EXPECT_MATRIX_NEAR(ks.evolve(kron(rd.matrix(), rt.matrix())), apply(gate, rd, rt).matrix(), 1e-12);
  }
}

TEST(KrausSet, IncompleteListIsNotAChannel) {
  const ComplexMatrix half = std::sqrt(0.5) * ComplexMatrix::identity(2);
  try {
    KrausSet ks({half});
    FAIL() << "expected NotAChannelError";
  } catch (const NotAChannelError& e) {
    EXPECT_NEAR(e.deviation(), 0.5, 1e-15);
  }
  EXPECT_THROW(KrausSet({}), DimensionError);
  EXPECT_THROW(KrausSet({ComplexMatrix::identity(2), ComplexMatrix(3, 3)}), DimensionError);
}

TEST(Membership, IdealRoundTrip) {
  const auto verdict = verify_membership(kraus_set(ideal_gate(2)), 2);
  ASSERT_TRUE(verdict.member);
  EXPECT_FALSE(verdict.witness.has_value());
  ASSERT_EQ(verdict.vectors.size(), 2u);
  EXPECT_EQ(verdict.vectors[0], verdict.vectors[1]);
  EXPECT_MATRIX_NEAR(verdict.gram, ideal_gate(2).gram_matrix(), 1e-15);
}

TEST(Membership, RandomGateGramRecovered) {
  const auto gate = random_gate(3, 4, 2024);
  const auto verdict = verify_membership(kraus_set(gate), 3);
  ASSERT_TRUE(verdict.member);
  EXPECT_MATRIX_NEAR(verdict.gram, gate.gram_matrix(), 1e-8);
}

TEST(Membership, GramIsInvariantUnderKrausMixing) {
  // K'_i = sum_j u_ij K_j describes the same channel; vectors change, Gram does not.
  Rng rng(109);
  const auto gate = random_gate(3, 3, 31);
  const KrausSet original = kraus_set(gate);
  const auto& ops = original.operators();
  const ComplexMatrix u = haar_unitary(rng, 3);
  std::vector<ComplexMatrix> mixed;
  for (std::size_t i = 0; i < 3; ++i) {
    ComplexMatrix k(ops[0].rows(), ops[0].cols());
    for (std::size_t j = 0; j < 3; ++j) k += u(i, j) * ops[j];
    mixed.push_back(std::move(k));
  }
  const auto verdict = verify_membership(KrausSet(std::move(mixed)), 3);
  ASSERT_TRUE(verdict.member);
  EXPECT_MATRIX_NEAR(verdict.gram, gate.gram_matrix(), 1e-8);
}

TEST(Membership, HaarUnitaryIsRejectedWithOffDiagonalWitness) {
  Rng rng(110);
  const auto verdict = verify_membership(KrausSet({haar_unitary(rng, 6)}), 2);
  EXPECT_FALSE(verdict.member);
  ASSERT_TRUE(verdict.witness.has_value());
  EXPECT_EQ(verdict.witness->kind, MembershipWitness::Kind::kOffDiagonalBlock);
  EXPECT_EQ(verdict.witness->operator_index, 0u);
  EXPECT_NE(verdict.witness->block_row, verdict.witness->block_col);
  EXPECT_GT(verdict.witness->magnitude, 1e-8);
}

TEST(Membership, WrongTargetUnitaryIsRejected) {
  // Block-diagonal control unitary whose second block is not S_2.
  Rng rng(111);
  const std::vector<ComplexMatrix> targets{ComplexMatrix::identity(3), haar_unitary(rng, 3)};
  const auto verdict = verify_membership(KrausSet({control_unitary(targets)}), 2);
  EXPECT_FALSE(verdict.member);
  ASSERT_TRUE(verdict.witness.has_value());
  EXPECT_EQ(verdict.witness->kind, MembershipWitness::Kind::kDiagonalNotProportional);
  EXPECT_EQ(verdict.witness->block_row, 2u);
}

TEST(Membership, DimensionMismatchThrows) {
  EXPECT_THROW(verify_membership(kraus_set(ideal_gate(2)), 3), DimensionError);
}

TEST(OverlapMatrix, IdealUniformState) {
  const OverlapMatrix a = overlap_matrix(ideal_gate(2), phi_state(2));
  for (std::size_t i = 1; i <= 2; ++i)
    for (std::size_t j = 1; j <= 2; ++j) EXPECT_NEAR(std::abs(a(i, j) - Complex{0.5}), 0.0, 1e-15);
  EXPECT_NEAR(a.max_offdiagonal(), 0.5, 1e-15);
}

TEST(OverlapMatrix, ClassicalIsDiagonalAndRandomIsHermitian) {
  Rng rng(112);
  const DensityOperator rd = random_pure_state(rng, 4);
  const OverlapMatrix c = overlap_matrix(classical_gate(4), rd);
  EXPECT_EQ(c.max_offdiagonal(), 0.0);
  for (std::size_t i = 1; i <= 4; ++i) EXPECT_EQ(c(i, i), rd(i - 1, i - 1));

  const OverlapMatrix r = overlap_matrix(random_gate(4, 2, 5), rd);
  EXPECT_LE(r.alpha.hermiticity_deviation(), 1e-15);
  for (std::size_t i = 1; i <= 4; ++i) EXPECT_NEAR(std::abs(r(i, i) - rd(i - 1, i - 1)), 0.0, 1e-15);
  EXPECT_THROW(overlap_matrix(classical_gate(3), rd), DimensionError);
}

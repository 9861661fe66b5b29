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

#include "swapbit/protocol.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "swapbit/random.hpp"
#include "swapbit/spaces.hpp"
#include "test_util.hpp"

using namespace swapbit;

namespace {

DensityOperator phi_state(std::size_t n) { return DensityOperator::from_pure(uniform_device_state(DeviceBasis(n))); }

// Two-outcome POVM {U D U^dagger, 1 - U D U^dagger} with D diagonal in [0, 1].
MeasurementSpec random_povm(Rng& rng, std::size_t n) {
  const ComplexMatrix u = haar_unitary(rng, n);
  std::vector<Complex> d(n);
  for (auto& x : d) x = rng.uniform();
  ComplexMatrix e0 = u * ComplexMatrix::diagonal(d) * u.adjoint();
  for (std::size_t i = 0; i < n; ++i) {
    e0(i, i) = e0(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) e0(j, i) = std::conj(e0(i, j));
  }
  ComplexMatrix e1 = ComplexMatrix::identity(n) - e0;
  return MeasurementSpec({std::move(e0), std::move(e1)}, false);
}

}  // namespace

TEST(RunProtocol, BitZeroLeavesProductState) {
  const DensityOperator phi = phi_state(2);
  const DensityOperator out = run_protocol(ideal_gate(2), phi, 0);
  EXPECT_MATRIX_NEAR(out.matrix(), kron(phi.matrix(), outer(target_state(TargetBasis(2), 0))), 1e-15);
}

TEST(RunProtocol, BitOneEntangles) {
  const DensityOperator out = run_protocol(ideal_gate(2), phi_state(2), 1);
  const ComplexMatrix psi =
      (1.0 / std::sqrt(2.0)) * (kron(device_setting(DeviceBasis(2), 1), target_state(TargetBasis(2), 1)) +
                                kron(device_setting(DeviceBasis(2), 2), ComplexMatrix::basis_vector(3, 2)));
  EXPECT_MATRIX_NEAR(out.matrix(), outer(psi), 1e-15);
}

TEST(RunProtocol, UnitTraceForAnyGate) {
  Rng rng(201);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 1 + trial % 4;
    for (int bit : {0, 1}) {
      const auto out = run_protocol(random_gate(n, 2, trial), random_mixed_state(rng, n, 2), bit);
      EXPECT_NEAR(out.matrix().trace().real(), 1.0, 1e-12);
    }
  }
  EXPECT_THROW(run_protocol(ideal_gate(2), phi_state(2), 2), std::invalid_argument);
}

TEST(ReducedDeviceStates, TwoAndFourObjects) {
  const auto r2 = reduced_device_states(ideal_gate(2), phi_state(2));
  EXPECT_MATRIX_NEAR(r2.rho0.matrix(), phi_state(2).matrix(), 1e-15);
  EXPECT_MATRIX_NEAR(r2.rho1.matrix(), 0.5 * ComplexMatrix::identity(2), 1e-15);
  const auto r4 = reduced_device_states(ideal_gate(4), phi_state(4));
  EXPECT_MATRIX_NEAR(r4.rho1.matrix(), 0.25 * ComplexMatrix::identity(4), 1e-15);
}

TEST(ReducedDeviceStates, ClassicalGateGivesEqualDiagonalStates) {
  Rng rng(202);
  for (std::size_t n = 1; n <= 5; ++n) {
    const DensityOperator rd = random_mixed_state(rng, n, 2);
    const auto r = reduced_device_states(classical_gate(n), rd);
    EXPECT_MATRIX_NEAR(r.rho0.matrix(), r.rho1.matrix(), 0.0);
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(r.rho0(i, i), rd(i, i));
    EXPECT_EQ(r.rho0.matrix().hermiticity_deviation(), 0.0);
  }
}

TEST(ReducedDeviceStates, AgreesWithJointPartialTrace) {
  Rng rng(203);
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto gate = random_gate(n, 3, n);
    const DensityOperator rd = random_mixed_state(rng, n, 2);
    const auto r = reduced_device_states(gate, rd);
    const auto j1 = run_protocol(gate, rd, 1);
    EXPECT_MATRIX_NEAR(r.rho1.matrix(), partial_trace_B(j1.matrix(), j1.factorization()), 1e-14);
  }
}

TEST(SuccessProbability, CanonicalMeasurement) {
  for (std::size_t n : {2u, 8u}) {
    const DensityOperator phi = phi_state(n);
    const auto r = reduced_device_states(ideal_gate(n), phi);
    EXPECT_NEAR(success_probability(r.rho0, r.rho1, canonical_measurement(phi)), 1.0 - 1.0 / (2.0 * n), 1e-12);
  }
}

TEST(SuccessProbability, IdenticalStatesGiveOneHalf) {
  Rng rng(204);
  const DensityOperator rho = random_mixed_state(rng, 3, 2);
  EXPECT_NEAR(success_probability(rho, rho, helstrom_measurement(rho, rho)), 0.5, 1e-12);
  EXPECT_NEAR(helstrom_bound(rho, rho), 0.5, 1e-12);
}

TEST(SuccessProbability, ErrorPaths) {
  const DensityOperator phi = phi_state(2);
  const auto m = canonical_measurement(phi);
  EXPECT_THROW(success_probability(phi, phi, m, 1.5), std::invalid_argument);
  EXPECT_THROW(success_probability(phi, phi, m, -0.1), std::invalid_argument);
  const MeasurementSpec three({outer(device_setting(DeviceBasis(3), 1)), outer(device_setting(DeviceBasis(3), 2)),
                               outer(device_setting(DeviceBasis(3), 3))},
                              true);
  EXPECT_THROW(success_probability(phi_state(3), phi_state(3), three), std::invalid_argument);
  EXPECT_THROW(success_probability(phi, phi_state(3), m), DimensionError);
  EXPECT_THROW(helstrom_bound(phi, phi_state(3)), DimensionError);
}

TEST(MeasurementSpec, RejectsBadEffects) {
  const ComplexMatrix p = outer(device_setting(DeviceBasis(2), 1));
  EXPECT_THROW(MeasurementSpec({p, p}, true), std::invalid_argument);  // sums to 2|1><1|
  const ComplexMatrix neg = {{1.5, 0.0}, {0.0, 1.0}};
  const ComplexMatrix comp = {{-0.5, 0.0}, {0.0, 0.0}};
  EXPECT_THROW(MeasurementSpec({neg, comp}, false), std::invalid_argument);
  const ComplexMatrix half = 0.5 * ComplexMatrix::identity(2);
  EXPECT_NO_THROW(MeasurementSpec({half, half}, false));
  EXPECT_THROW(MeasurementSpec({half, half}, true), std::invalid_argument);
}

TEST(HelstromBound, TwoObjects) {
  const auto r = reduced_device_states(ideal_gate(2), phi_state(2));
  EXPECT_NEAR(helstrom_bound(r.rho0, r.rho1), 0.75, 1e-12);
}

TEST(HelstromBound, ClosedFormForIdealGate) {
  for (std::size_t n = 1; n <= 16; ++n) {
    const auto r = reduced_device_states(ideal_gate(n), phi_state(n));
    EXPECT_NEAR(helstrom_bound(r.rho0, r.rho1), 1.0 - 1.0 / (2.0 * n), 1e-12) << n;
  }
}

TEST(HelstromBound, AttainedByHelstromMeasurementForAnyPrior) {
  Rng rng(205);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityOperator a = random_mixed_state(rng, 3, 2);
    const DensityOperator b = random_mixed_state(rng, 3, 3);
    const double prior = rng.uniform();
    EXPECT_NEAR(success_probability(a, b, helstrom_measurement(a, b, prior), prior), helstrom_bound(a, b, prior),
                1e-12);
  }
}

TEST(HelstromBound, NoMeasurementBeatsIt) {
  Rng rng(206);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const DensityOperator a = random_mixed_state(rng, n, 1 + trial % n);
    const DensityOperator b = random_mixed_state(rng, n, 1 + (trial / 3) % n);
    const double prior = rng.uniform();
    EXPECT_LE(success_probability(a, b, random_povm(rng, n), prior), helstrom_bound(a, b, prior) + 1e-10);
  }
}

TEST(CanonicalMeasurement, ProjectorsOnTheInitialState) {
  const DensityOperator phi = phi_state(2);
  const auto m = canonical_measurement(phi);
  EXPECT_MATRIX_NEAR(m.effect(0), phi.matrix(), 1e-14);
  EXPECT_MATRIX_NEAR(m.effect(1), ComplexMatrix::identity(2) - phi.matrix(), 1e-14);
  EXPECT_MATRIX_NEAR(m.effect(0) + m.effect(1), ComplexMatrix::identity(2), 1e-15);
  for (const auto& e : m.effects()) EXPECT_MATRIX_NEAR(e * e, e, 1e-12);
  EXPECT_THROW(canonical_measurement(DensityOperator::maximally_mixed(2)), InvalidStateError);
}

TEST(LocationTradeoff, EndpointValues) {
  const auto t2 = location_tradeoff(2);
  EXPECT_NEAR(t2.value_ignorant_location_prob, 1.0, 1e-12);
  EXPECT_NEAR(t2.post_protocol_location_guess, 0.5, 1e-12);
  const auto t5 = location_tradeoff(5);
  EXPECT_NEAR(t5.value_ignorant_location_prob, 1.0, 1e-12);
  EXPECT_NEAR(t5.post_protocol_location_guess, 0.2, 1e-12);
  EXPECT_THROW(location_tradeoff(1), std::invalid_argument);
}

TEST(LocationTradeoff, SettingOutcomesCarryNoBitInformation) {
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto t = location_tradeoff(n);
    ASSERT_EQ(t.setting_outcomes_k0.size(), n);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_NEAR(t.setting_outcomes_k0[i], 1.0 / n, 1e-12);
      EXPECT_NEAR(t.setting_outcomes_k1[i], 1.0 / n, 1e-12);
    }
    EXPECT_LE(t.outcome_deviation, 1e-12);
  }
}

TEST(DistinguishableBaseline, AlwaysMaximallyMixed) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto r0 = distinguishable_baseline(n, 0);
    const auto r1 = distinguishable_baseline(n, 1);
    const ComplexMatrix mixed = (1.0 / n) * ComplexMatrix::identity(n);
    EXPECT_MATRIX_NEAR(r0.matrix(), mixed, 1e-12);
    EXPECT_MATRIX_NEAR(r1.matrix(), mixed, 1e-12);
    EXPECT_LE(trace_distance(r0, r1), 1e-12);
  }
}

// P > 1/2 exactly when some off-diagonal overlap alpha_nm is nonzero.
TEST(Property, InformationIffOffDiagonalOverlap) {
  Rng rng(207);
  int with_info = 0;
  int without_info = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const auto gate = trial % 5 == 4 ? classical_gate(n) : random_gate(n, 1 + trial % 4, 7000 + trial);
    DensityOperator rd = trial % 3 == 0   ? random_pure_state(rng, n)
                         : trial % 3 == 1 ? random_mixed_state(rng, n, 2)
                                          : DensityOperator::maximally_mixed(n);
    const auto r = reduced_device_states(gate, rd);
    const double p = success_probability(r.rho0, r.rho1, helstrom_measurement(r.rho0, r.rho1));
    const double max_alpha = overlap_matrix(gate, rd).max_offdiagonal();
    if (max_alpha > 1e-10) {
      EXPECT_GT(p, 0.5 + 1e-12);
      ++with_info;
    } else {
      EXPECT_NEAR(p, 0.5, 1e-12);
      ++without_info;
    }
  }
  EXPECT_GT(with_info, 0);
  EXPECT_GT(without_info, 0);
}

TEST(MakeReport, InvariantsAndMeasurementChoice) {
  const auto ideal = make_report(ideal_gate(2), GateFamily::kIdeal, phi_state(2));
  EXPECT_EQ(ideal.measurement, "canonical");
  EXPECT_NEAR(ideal.p_success, 0.75, 1e-12);
  EXPECT_NEAR(ideal.helstrom_bound, 0.75, 1e-12);
  EXPECT_NEAR(ideal.trace_distance_device, 0.5, 1e-12);
  EXPECT_NEAR(ideal.location_guess_prob, 0.5, 1e-12);

  Rng rng(208);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const auto rd = random_mixed_state(rng, n, 1 + trial % 2);
    const auto r = make_report(random_gate(n, 2, trial), GateFamily::kCustom, rd, rng.uniform());
    EXPECT_EQ(r.measurement, "helstrom");
    EXPECT_GE(r.p_success, 0.5 - 1e-12);
    EXPECT_LE(r.p_success, r.helstrom_bound + 1e-10);
  }
}

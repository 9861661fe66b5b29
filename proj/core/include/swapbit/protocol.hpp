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
#include <string_view>
#include <vector>

#include "swapbit/density.hpp"
#include "swapbit/gates.hpp"
#include "swapbit/matrix.hpp"

namespace swapbit {

namespace tol {
inline constexpr double kMeasurement = 1e-10;
}  // namespace tol

enum class GateFamily { kIdeal, kClassical, kCustom };

std::string_view to_string(GateFamily family);

/// POVM on the device. Effects must be PSD and sum to the identity within
/// tol::kMeasurement; projective measurements are also checked for P^2 = P.
class MeasurementSpec {
 public:
  /// Throws std::invalid_argument when a condition above fails.
  MeasurementSpec(std::vector<ComplexMatrix> effects, bool projective);

  const std::vector<ComplexMatrix>& effects() const { return effects_; }
  const ComplexMatrix& effect(std::size_t i) const { return effects_.at(i); }
  std::size_t size() const { return effects_.size(); }
  bool projective() const { return projective_; }

 private:
  std::vector<ComplexMatrix> effects_;
  bool projective_;
};

/// The joint device-target state after the interaction, for hidden bit k.
/// Forms the full N(N+1)-dimensional matrix; prefer reduced_device_states
/// for large N.
DensityOperator run_protocol(const GeneralizedControlGate& gate, const DensityOperator& rho_d_init, int bit);

struct ReducedDeviceStates {
  DensityOperator rho0;
  DensityOperator rho1;
};

/// Tr_T of run_protocol for k = 0 and k = 1, computed blockwise.
ReducedDeviceStates reduced_device_states(const GeneralizedControlGate& gate, const DensityOperator& rho_d_init);

/// prior Tr(E0 rho0) + (1 - prior) Tr(E1 rho1); prior is P(k = 0).
double success_probability(const DensityOperator& rho0, const DensityOperator& rho1, const MeasurementSpec& m,
                           double prior = 0.5);

/// 1/2 + 1/2 || prior rho0 - (1 - prior) rho1 ||_1.
double helstrom_bound(const DensityOperator& rho0, const DensityOperator& rho1, double prior = 0.5);

/// Projector onto the positive eigenspace of prior rho0 - (1 - prior) rho1
/// ("guess 0") and its complement. Zero eigenvalues go to the guess-1 effect.
MeasurementSpec helstrom_measurement(const DensityOperator& rho0, const DensityOperator& rho1, double prior = 0.5);

/// {|phi><phi|, 1 - |phi><phi|} for the pure initial device state |phi>.
/// Throws InvalidStateError if rho_d_init is mixed.
MeasurementSpec canonical_measurement(const DensityOperator& rho_d_init);

/// Probability of naming the excitation's mode after measuring the device
/// with m on the k = 1 output and guessing the most likely mode per outcome.
double location_guess_probability(const GeneralizedControlGate& gate, const DensityOperator& rho_d_init,
                                  const MeasurementSpec& m);

struct LocationTradeoff {
  /// Setting-basis measurement: location guess success (always 1).
  double value_ignorant_location_prob;
  /// Canonical value measurement: location guess success (1/N).
  double post_protocol_location_guess;
  /// Setting-basis outcome distributions for k = 0 and k = 1.
  std::vector<double> setting_outcomes_k0;
  std::vector<double> setting_outcomes_k1;
  /// max_i |P(i | k=0) - P(i | k=1)|.
  double outcome_deviation;
};

/// Ideal gate, uniform device state. Throws std::invalid_argument for N < 2.
LocationTradeoff location_tradeoff(std::size_t n);

/// Device reduced state when the objects carry labels: the uniform device
/// state controls position swaps on labeled objects (object 0 holds bit k).
DensityOperator distinguishable_baseline(std::size_t n, int bit);

struct ProtocolReport {
  std::size_t n = 0;
  GateFamily family = GateFamily::kIdeal;
  /// "canonical" (pure input, ideal/classical family) or "helstrom".
  std::string_view measurement;
  double prior = 0.5;
  double p_success = 0.0;
  double helstrom_bound = 0.0;
  double trace_distance_device = 0.0;
  ComplexMatrix rho_d_final_k0;
  ComplexMatrix rho_d_final_k1;
  double location_guess_prob = 0.0;
};

/// Runs both values of the hidden bit and scores them. The canonical
/// measurement is used for pure device inputs with the ideal or classical
/// family; otherwise the Helstrom measurement.
ProtocolReport make_report(const GeneralizedControlGate& gate, GateFamily family, const DensityOperator& rho_d_init,
                           double prior = 0.5);

}  // namespace swapbit

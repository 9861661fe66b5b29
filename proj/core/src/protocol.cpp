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

#include <algorithm>
#include <cmath>
#include <string>

#include "swapbit/linalg.hpp"
#include "swapbit/spaces.hpp"

namespace swapbit {
namespace {

void check_prior(double prior) {
  if (!(prior >= 0.0 && prior <= 1.0)) throw std::invalid_argument("prior must lie in [0, 1]");
}

void check_same_dim(const DensityOperator& a, const DensityOperator& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("states have dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
  }
}

double expectation(const ComplexMatrix& effect, const ComplexMatrix& rho) {
  // Tr(E rho) = sum_ij E[i,j] rho[j,i].
  Complex s{};
  for (std::size_t i = 0; i < rho.rows(); ++i)
    for (std::size_t j = 0; j < rho.cols(); ++j) s += effect(i, j) * rho(j, i);
  return s.real();
}

DensityOperator target_density(std::size_t n, int bit) {
  return DensityOperator::from_pure(target_state(TargetBasis(n), bit));
}

}  // namespace

std::string_view to_string(GateFamily family) {
  switch (family) {
    case GateFamily::kIdeal: return "ideal";
    case GateFamily::kClassical: return "classical";
    case GateFamily::kCustom: return "custom";
  }
  return "unknown";
}

MeasurementSpec::MeasurementSpec(std::vector<ComplexMatrix> effects, bool projective)
    : effects_(std::move(effects)), projective_(projective) {
  if (effects_.empty()) throw std::invalid_argument("measurement needs at least one effect");
  const std::size_t d = effects_.front().rows();
  ComplexMatrix sum(d, d);
  for (std::size_t i = 0; i < effects_.size(); ++i) {
    const auto& e = effects_[i];
    if (!e.is_square() || e.rows() != d) throw DimensionError("measurement effects differ in dimension");
    const auto values = hermitian_eigenvalues(e);
    if (values.front() < -tol::kMeasurement) {
      throw std::invalid_argument("effect " + std::to_string(i) + " is not positive semidefinite");
    }
    if (projective_ && max_abs_diff(e * e, e) > tol::kMeasurement) {
      throw std::invalid_argument("effect " + std::to_string(i) + " is not a projector");
    }
    sum += e;
  }
  const double dev = max_abs_diff(sum, ComplexMatrix::identity(d));
  if (dev > tol::kMeasurement) {
    throw std::invalid_argument("measurement effects do not sum to the identity (deviation " + std::to_string(dev) +
                                ")");
  }
}

DensityOperator run_protocol(const GeneralizedControlGate& gate, const DensityOperator& rho_d_init, int bit) {
  return apply(gate, rho_d_init, target_density(gate.n_settings(), bit));
}

ReducedDeviceStates reduced_device_states(const GeneralizedControlGate& gate, const DensityOperator& rho_d_init) {
  const std::size_t n = gate.n_settings();
  return {apply_reduced_device(gate, rho_d_init, target_density(n, 0)),
          apply_reduced_device(gate, rho_d_init, target_density(n, 1))};
}

double success_probability(const DensityOperator& rho0, const DensityOperator& rho1, const MeasurementSpec& m,
                           double prior) {
  check_prior(prior);
  check_same_dim(rho0, rho1);
  if (m.size() != 2) {
    throw std::invalid_argument("success probability needs a two-outcome measurement, got " +
                                std::to_string(m.size()) + " effects");
  }
  if (m.effect(0).rows() != rho0.dim()) throw DimensionError("measurement and states differ in dimension");
  return prior * expectation(m.effect(0), rho0.matrix()) + (1.0 - prior) * expectation(m.effect(1), rho1.matrix());
}

double helstrom_bound(const DensityOperator& rho0, const DensityOperator& rho1, double prior) {
  check_prior(prior);
  check_same_dim(rho0, rho1);
  const ComplexMatrix gamma = prior * rho0.matrix() - (1.0 - prior) * rho1.matrix();
  return 0.5 + 0.5 * trace_norm(gamma);
}

MeasurementSpec helstrom_measurement(const DensityOperator& rho0, const DensityOperator& rho1, double prior) {
  check_prior(prior);
  check_same_dim(rho0, rho1);
  const std::size_t d = rho0.dim();
  const auto eig = hermitian_eigen(prior * rho0.matrix() - (1.0 - prior) * rho1.matrix());
  ComplexMatrix guess0(d, d);
  for (std::size_t c = 0; c < d; ++c) {
    if (eig.values[c] <= 0.0) continue;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) guess0(i, j) += eig.vectors(i, c) * std::conj(eig.vectors(j, c));
  }
  ComplexMatrix guess1 = ComplexMatrix::identity(d) - guess0;
  return MeasurementSpec({std::move(guess0), std::move(guess1)}, true);
}

MeasurementSpec canonical_measurement(const DensityOperator& rho_d_init) {
  if (!rho_d_init.is_pure()) {
    throw InvalidStateError("canonical measurement needs a pure device state (purity " +
                            std::to_string(rho_d_init.purity()) + "); supply a custom measurement");
  }
  const auto eig = hermitian_eigen(rho_d_init.matrix());
  const std::size_t d = rho_d_init.dim();
  ComplexMatrix phi = eig.vectors.block(0, d - 1, d, 1);
  ComplexMatrix p0 = outer(phi);
  ComplexMatrix p1 = ComplexMatrix::identity(d) - p0;
  return MeasurementSpec({std::move(p0), std::move(p1)}, true);
}

double location_guess_probability(const GeneralizedControlGate& gate, const DensityOperator& rho_d_init,
                                  const MeasurementSpec& m) {
  const std::size_t n = gate.n_settings();
  const std::size_t dt = gate.target_dim();
  if (rho_d_init.dim() != n) throw DimensionError("device state does not match the gate");
  if (m.effect(0).rows() != n) throw DimensionError("measurement does not act on the device");
  const auto& us = gate.target_unitaries();
  const ComplexMatrix gram = gate.gram_matrix();
  const ComplexMatrix rho_t = target_density(n, 1).matrix();
  if (dt != rho_t.rows()) throw DimensionError("location guessing needs the (N+1)-dimensional target space");

  std::vector<ComplexMatrix> left;
  left.reserve(n);
  for (std::size_t k = 0; k < n; ++k) left.push_back(us[k] * rho_t);

  // w[k][l][i] = <i| block(k,l) |i> of the k = 1 joint output.
  std::vector<std::vector<std::vector<Complex>>> w(n, std::vector<std::vector<Complex>>(n));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      const Complex coeff = gram(k, l) * rho_d_init(k, l);
      auto& diag = w[k][l];
      diag.assign(dt, Complex{});
      if (coeff == Complex{}) continue;
      for (std::size_t i = 0; i < dt; ++i) {
        Complex s{};
        for (std::size_t c = 0; c < dt; ++c) s += left[k](i, c) * std::conj(us[l](i, c));
        diag[i] = coeff * s;
      }
    }
  }

  double total = 0.0;
  for (const auto& e : m.effects()) {
    // Tr_D[(E (x) 1) X] = sum_{k,l} E[l,k] X_{kl}; only its diagonal is needed.
    double best = 0.0;
    for (std::size_t i = 1; i < dt; ++i) {
      Complex p{};
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) p += e(l, k) * w[k][l][i];
      best = std::max(best, p.real());
    }
    total += best;
  }
  return total;
}

LocationTradeoff location_tradeoff(std::size_t n) {
  if (n < 2) throw std::invalid_argument("location trade-off needs N >= 2");
  const GeneralizedControlGate gate = ideal_gate(n);
  const DeviceBasis device(n);
  const DensityOperator phi = DensityOperator::from_pure(uniform_device_state(device));

  std::vector<ComplexMatrix> settings;
  settings.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) settings.push_back(outer(device_setting(device, j)));
  const MeasurementSpec setting_basis(std::move(settings), true);

  LocationTradeoff out;
  out.value_ignorant_location_prob = location_guess_probability(gate, phi, setting_basis);
  out.post_protocol_location_guess = location_guess_probability(gate, phi, canonical_measurement(phi));

  const auto reduced = reduced_device_states(gate, phi);
  out.outcome_deviation = 0.0;
  for (const auto& e : setting_basis.effects()) {
    out.setting_outcomes_k0.push_back(expectation(e, reduced.rho0.matrix()));
    out.setting_outcomes_k1.push_back(expectation(e, reduced.rho1.matrix()));
    out.outcome_deviation =
        std::max(out.outcome_deviation, std::abs(out.setting_outcomes_k0.back() - out.setting_outcomes_k1.back()));
  }
  return out;
}

DensityOperator distinguishable_baseline(std::size_t n, int bit) {
  const DeviceBasis device(n);
  const ComplexMatrix phi = uniform_device_state(device);
  const LabeledState objects = distinguishable_joint_state(n, bit);
  const std::size_t dobj = objects.basis.dimension();

  // Joint pure state sum_j phi_j |j>_D (x) swap_(1 j) |objects>, stored as
  // the n x dobj amplitude matrix A; the device reduced state is A A^dagger.
  ComplexMatrix a(n, dobj);
  for (std::size_t j = 1; j <= n; ++j) {
    const LabeledState moved = apply_position_swap(objects, j);
    for (std::size_t x = 0; x < dobj; ++x) a(j - 1, x) = phi(j - 1, 0) * moved.amplitudes(x, 0);
  }
  return DensityOperator::from_channel_output(a * a.adjoint(), {n, 1});
}

ProtocolReport make_report(const GeneralizedControlGate& gate, GateFamily family, const DensityOperator& rho_d_init,
                           double prior) {
  check_prior(prior);
  const auto reduced = reduced_device_states(gate, rho_d_init);
  const bool canonical = family != GateFamily::kCustom && rho_d_init.is_pure();
  const MeasurementSpec m = canonical ? canonical_measurement(rho_d_init)
                                      : helstrom_measurement(reduced.rho0, reduced.rho1, prior);
  ProtocolReport r;
  r.n = gate.n_settings();
  r.family = family;
  r.measurement = canonical ? "canonical" : "helstrom";
  r.prior = prior;
  r.p_success = success_probability(reduced.rho0, reduced.rho1, m, prior);
  r.helstrom_bound = helstrom_bound(reduced.rho0, reduced.rho1, prior);
  r.trace_distance_device = trace_distance(reduced.rho0, reduced.rho1);
  r.rho_d_final_k0 = reduced.rho0.matrix();
  r.rho_d_final_k1 = reduced.rho1.matrix();
  r.location_guess_prob = location_guess_probability(gate, rho_d_init, m);
  return r;
}

}  // namespace swapbit

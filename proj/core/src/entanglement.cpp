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

#include "swapbit/entanglement.hpp"

#include <cmath>
#include <string>

#include "swapbit/protocol.hpp"
#include "swapbit/spaces.hpp"

namespace swapbit {

std::string_view to_string(PptVerdict verdict) {
  return verdict == PptVerdict::kNptEntangled ? "npt_entangled" : "ppt_inconclusive";
}

PptCertificate ppt_check(const DensityOperator& rho, double tau) { return ppt_check(rho, rho.factorization(), tau); }

PptCertificate ppt_check(const DensityOperator& rho, const TensorFactorization& f, double tau) {
  const auto eig = hermitian_eigen(partial_transpose_B(rho.matrix(), f));
  PptCertificate cert;
  cert.min_eigenvalue = eig.values.front();
  cert.witness_vector = eig.vectors.block(0, 0, rho.dim(), 1);
  cert.verdict = cert.min_eigenvalue < -tau ? PptVerdict::kNptEntangled : PptVerdict::kPptInconclusive;
  return cert;
}

PptCertificate ppt_check(const DensityOperator& rho, const OverlapMatrix& alpha, double tau) {
  PptCertificate cert = ppt_check(rho, rho.factorization(), tau);
  if (alpha.n() >= 2) cert.predicted_eigenvalue = -alpha.max_offdiagonal();
  return cert;
}

NptWitness analytic_npt_witness(const OverlapMatrix& alpha, std::size_t k, std::size_t l) {
  const std::size_t n = alpha.n();
  if (k < 1 || k > n || l < 1 || l > n) throw std::out_of_range("witness indices outside 1..N");
  if (k == l) throw std::invalid_argument("witness needs k != l");
  const Complex a = alpha(k, l);
  const double mag = std::abs(a);
  if (mag <= tol::kWitness) {
    throw std::invalid_argument("|alpha_" + std::to_string(k) + std::to_string(l) + "| = " + std::to_string(mag) +
                                " is too small for a witness");
  }
  const std::size_t dt = n + 1;
  ComplexMatrix psi(n * dt, 1);
  psi((k - 1) * dt + l, 0) = 1.0;
  psi((l - 1) * dt + k, 0) = -std::conj(a) / mag;
  return {std::move(psi), -mag};
}

IffRecord iff_theorem_check(const GeneralizedControlGate& gate, const DensityOperator& rho_d) {
  const std::size_t n = gate.n_settings();
  const OverlapMatrix alpha = overlap_matrix(gate, rho_d);
  IffRecord rec;
  rec.max_offdiagonal_alpha = alpha.max_offdiagonal();

  const DensityOperator out0 = run_protocol(gate, rho_d, 0);
  const DensityOperator out1 = run_protocol(gate, rho_d, 1);
  const TensorFactorization f = out0.factorization();

  const DensityOperator reduced0 = DensityOperator::from_channel_output(partial_trace_B(out0.matrix(), f), {n, 1});
  const DensityOperator reduced1 = DensityOperator::from_channel_output(partial_trace_B(out1.matrix(), f), {n, 1});
  rec.trace_distance = trace_distance(reduced0, reduced1);
  rec.info_gain = rec.trace_distance > tol::kInfo;

  const PptCertificate cert = ppt_check(out1, alpha);
  rec.min_pt_eigenvalue = cert.min_eigenvalue;
  rec.npt_k1 = cert.verdict == PptVerdict::kNptEntangled;

  const ComplexMatrix vacuum = outer(target_state(TargetBasis(n), 0));
  rec.product_deviation = max_abs_diff(out0.matrix(), kron(reduced0.matrix(), vacuum));
  rec.separable_k0_certified = rec.product_deviation <= tol::kProduct;
  return rec;
}

}  // namespace swapbit

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

#include "swapbit/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace swapbit {
namespace {

void check_bit(int bit) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("bit must be 0 or 1, got " + std::to_string(bit));
}

void check_setting(std::size_t j, std::size_t n) {
  if (j < 1 || j > n) {
    throw std::out_of_range("setting index " + std::to_string(j) + " outside 1.." + std::to_string(n));
  }
}

}  // namespace

TargetBasis::TargetBasis(std::size_t n_objects) : n_(n_objects) {
  if (n_ == 0) throw std::invalid_argument("TargetBasis: need at least one object");
}

DeviceBasis::DeviceBasis(std::size_t n_settings) : n_(n_settings) {
  if (n_ == 0) throw std::invalid_argument("DeviceBasis: need at least one setting");
}

ComplexMatrix target_state(const TargetBasis& basis, int bit) {
  check_bit(bit);
  return ComplexMatrix::basis_vector(basis.dimension(), static_cast<std::size_t>(bit));
}

ComplexMatrix swap_operator(const TargetBasis& basis, std::size_t j) {
  check_setting(j, basis.n_objects());
  const std::size_t d = basis.dimension();
  ComplexMatrix s(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t image = i;
    if (i == 1) image = j;
    else if (i == j) image = 1;
    s(image, i) = 1.0;
  }
  return s;
}

std::vector<ComplexMatrix> swap_operators(const TargetBasis& basis) {
  std::vector<ComplexMatrix> out;
  out.reserve(basis.n_objects());
  for (std::size_t j = 1; j <= basis.n_objects(); ++j) out.push_back(swap_operator(basis, j));
  return out;
}

ComplexMatrix device_setting(const DeviceBasis& basis, std::size_t j) {
  check_setting(j, basis.n_settings());
  return ComplexMatrix::basis_vector(basis.dimension(), j - 1);
}

ComplexMatrix uniform_device_state(const DeviceBasis& basis) {
  const double amp = 1.0 / std::sqrt(static_cast<double>(basis.n_settings()));
  return ComplexMatrix::column(std::vector<Complex>(basis.n_settings(), Complex{amp}));
}

ObjectLabeling initial_labeling(std::size_t n_objects, int bit) {
  check_bit(bit);
  if (n_objects == 0) throw std::invalid_argument("need at least one object");
  ObjectLabeling label;
  label.object_at.resize(n_objects);
  std::iota(label.object_at.begin(), label.object_at.end(), std::size_t{0});
  label.bits.assign(n_objects, 0);
  label.bits[0] = bit;
  return label;
}

ObjectLabeling apply_position_swap(const ObjectLabeling& label, std::size_t j) {
  check_setting(j, label.object_at.size());
  ObjectLabeling out = label;
  std::swap(out.object_at[0], out.object_at[j - 1]);
  return out;
}

DistinguishableBasis::DistinguishableBasis(std::size_t n_objects) : n_(n_objects) {
  if (n_ == 0) throw std::invalid_argument("DistinguishableBasis: need at least one object");
  for (int bit : {0, 1}) {
    const ObjectLabeling start = initial_labeling(n_, bit);
    for (std::size_t j = 1; j <= n_; ++j) labels_.push_back(apply_position_swap(start, j));
  }
  std::sort(labels_.begin(), labels_.end());
}

std::size_t DistinguishableBasis::index_of(const ObjectLabeling& label) const {
  const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) throw std::out_of_range("labeling outside the reachable subspace");
  return static_cast<std::size_t>(it - labels_.begin());
}

LabeledState distinguishable_joint_state(std::size_t n_objects, int bit) {
  DistinguishableBasis basis(n_objects);
  const std::size_t idx = basis.index_of(initial_labeling(n_objects, bit));
  ComplexMatrix amps = ComplexMatrix::basis_vector(basis.dimension(), idx);
  return {std::move(basis), std::move(amps)};
}

LabeledState apply_position_swap(const LabeledState& state, std::size_t j) {
  ComplexMatrix out(state.basis.dimension(), 1);
  for (std::size_t i = 0; i < state.basis.dimension(); ++i) {
    const Complex amp = state.amplitudes(i, 0);
    if (amp == Complex{}) continue;
    out(state.basis.index_of(apply_position_swap(state.basis.label(i), j)), 0) += amp;
  }
  return {state.basis, std::move(out)};
}

}  // namespace swapbit

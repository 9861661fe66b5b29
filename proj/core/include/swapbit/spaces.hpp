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

#include <compare>
#include <cstddef>
#include <vector>

#include "swapbit/matrix.hpp"

namespace swapbit {

/// Mode-occupation basis for N indistinguishable objects with at most one
/// excitation. Index 0 is "every mode holds bit 0"; index i in 1..N puts the
/// single bit-1 object at mode i. Mode 1 is the hidden-bit object's box.
class TargetBasis {
 public:
  explicit TargetBasis(std::size_t n_objects);
  std::size_t n_objects() const { return n_; }
  std::size_t dimension() const { return n_ + 1; }

 private:
  std::size_t n_;
};

/// Control settings |1>_D .. |N>_D; setting j drives swap S_j and setting 1
/// is the identity. Public indices are 1-based; storage index is j - 1.
class DeviceBasis {
 public:
  explicit DeviceBasis(std::size_t n_settings);
  std::size_t n_settings() const { return n_; }
  std::size_t dimension() const { return n_; }

 private:
  std::size_t n_;
};

/// |0>_T for bit 0, |1>_T for bit 1. Throws std::invalid_argument otherwise.
ComplexMatrix target_state(const TargetBasis& basis, int bit);

/// S_j: exchanges the contents of mode 1 and mode j. On the basis this is the
/// permutation matrix fixing |0>_T and |i>_T (i not in {1, j}) and swapping
/// |1>_T <-> |j>_T. Throws std::out_of_range unless 1 <= j <= N.
ComplexMatrix swap_operator(const TargetBasis& basis, std::size_t j);

/// All N swaps S_1..S_N in order.
std::vector<ComplexMatrix> swap_operators(const TargetBasis& basis);

/// |j>_D (1-based).
ComplexMatrix device_setting(const DeviceBasis& basis, std::size_t j);

/// (1/sqrt N) sum_j |j>_D.
ComplexMatrix uniform_device_state(const DeviceBasis& basis);

// ---------------------------------------------------------------------------
// Labeled (distinguishable) objects.

/// Which object sits at each position, and each object's internal bit.
/// Object 0 is the one carrying the hidden bit; objects 1..N-1 are the
/// reference objects.
struct ObjectLabeling {
  std::vector<std::size_t> object_at;  // position -> object id
  std::vector<int> bits;               // object id -> internal bit

  auto operator<=>(const ObjectLabeling&) const = default;
};

/// Labelings reachable from the initial arrangement by one position swap
/// (1 j), for either value of the hidden bit: 2N labels. The full N! 2^N
/// space is never needed because the control applies a single swap.
class DistinguishableBasis {
 public:
  explicit DistinguishableBasis(std::size_t n_objects);

  std::size_t n_objects() const { return n_; }
  std::size_t dimension() const { return labels_.size(); }
  const ObjectLabeling& label(std::size_t index) const { return labels_.at(index); }
  /// Throws std::out_of_range for labelings outside the reachable set.
  std::size_t index_of(const ObjectLabeling& label) const;

 private:
  std::size_t n_;
  std::vector<ObjectLabeling> labels_;  // sorted
};

/// Exchanges whatever objects occupy positions 1 and j (1-based); objects
/// keep their bits. Throws std::out_of_range for j outside 1..N.
ObjectLabeling apply_position_swap(const ObjectLabeling& label, std::size_t j);

struct LabeledState {
  DistinguishableBasis basis;
  ComplexMatrix amplitudes;  // column, basis.dimension() rows
};

/// Identity arrangement, hidden-bit object at position 1 with bit k, every
/// reference object holding 0.
ObjectLabeling initial_labeling(std::size_t n_objects, int bit);
LabeledState distinguishable_joint_state(std::size_t n_objects, int bit);

/// Position swap (1 j) applied to every component of a labeled state.
LabeledState apply_position_swap(const LabeledState& state, std::size_t j);

}  // namespace swapbit

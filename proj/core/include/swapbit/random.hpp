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

#include <cstdint>
#include <random>
#include <vector>

#include "swapbit/density.hpp"
#include "swapbit/matrix.hpp"

namespace swapbit {

/// Reproducible random stream.
///
/// The bit generator is std::mt19937_64 (fully specified by the standard).
/// The standard distributions are implementation-defined, so uniforms and
/// normals are derived here explicitly:
///   uniform  = (next() >> 11) * 2^-53, in [0, 1)
///   normal   = Box-Muller, sqrt(-2 ln(1 - u1)) * cos(2 pi u2), one pair of
///              uniforms per normal (no caching of the sine branch)
///   complex Gaussian = (normal, normal) for (re, im)
/// Identical seeds therefore give identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform();
  double normal();
  Complex complex_normal();

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer over (master, stream): per-cell seeds for sweeps.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

/// Uniform on the unit sphere of C^dim (normalized complex Gaussian vector).
std::vector<Complex> random_unit_vector(Rng& rng, std::size_t dim);
DensityOperator random_pure_state(Rng& rng, std::size_t dim);
/// Ginibre ensemble G G^dagger / Tr, G of shape dim x rank.
DensityOperator random_mixed_state(Rng& rng, std::size_t dim, std::size_t rank);
/// Haar unitary: Gram-Schmidt QR of a Ginibre matrix with R's diagonal made positive.
ComplexMatrix haar_unitary(Rng& rng, std::size_t dim);
/// Random Hermitian matrix with complex Gaussian entries (GUE-like, unnormalized).
ComplexMatrix random_hermitian(Rng& rng, std::size_t dim);
ComplexMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols);

}  // namespace swapbit

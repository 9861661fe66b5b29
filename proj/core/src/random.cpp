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

#include "swapbit/random.hpp"

#include <cmath>
#include <numbers>

namespace swapbit {

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  const double u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(1.0 - u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<Complex> random_unit_vector(Rng& rng, std::size_t dim) {
  std::vector<Complex> v(dim);
  double norm2 = 0.0;
  // A zero draw has probability zero; redraw rather than divide by it.
  while (norm2 == 0.0) {
    norm2 = 0.0;
    for (auto& z : v) {
      z = rng.complex_normal();
      norm2 += std::norm(z);
    }
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& z : v) z *= inv;
  return v;
}

DensityOperator random_pure_state(Rng& rng, std::size_t dim) {
  return DensityOperator::from_pure(ComplexMatrix::column(random_unit_vector(rng, dim)));
}

ComplexMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  ComplexMatrix g(rows, cols);
  for (auto& z : g.entries()) z = rng.complex_normal();
  return g;
}

DensityOperator random_mixed_state(Rng& rng, std::size_t dim, std::size_t rank) {
  const ComplexMatrix g = random_matrix(rng, dim, rank);
  ComplexMatrix rho = g * g.adjoint();
  rho *= Complex{1.0 / rho.trace().real()};
  // Restore exact Hermiticity lost to rounding in the product.
  for (std::size_t i = 0; i < dim; ++i) {
    rho(i, i) = rho(i, i).real();
    for (std::size_t j = i + 1; j < dim; ++j) rho(j, i) = std::conj(rho(i, j));
  }
  return DensityOperator::from_matrix(std::move(rho));
}

ComplexMatrix haar_unitary(Rng& rng, std::size_t dim) {
  ComplexMatrix q = random_matrix(rng, dim, dim);
  // Modified Gram-Schmidt over columns; normalizing each column to unit
  // length with a positive real R diagonal is what makes the result Haar.
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t p = 0; p < c; ++p) {
      Complex proj{};
      for (std::size_t r = 0; r < dim; ++r) proj += std::conj(q(r, p)) * q(r, c);
      for (std::size_t r = 0; r < dim; ++r) q(r, c) -= proj * q(r, p);
    }
    double norm2 = 0.0;
    for (std::size_t r = 0; r < dim; ++r) norm2 += std::norm(q(r, c));
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t r = 0; r < dim; ++r) q(r, c) *= inv;
  }
  return q;
}

ComplexMatrix random_hermitian(Rng& rng, std::size_t dim) {
  ComplexMatrix h(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    h(i, i) = rng.normal();
    for (std::size_t j = i + 1; j < dim; ++j) {
      h(i, j) = rng.complex_normal();
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

}  // namespace swapbit

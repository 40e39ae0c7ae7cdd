// Copyright 2026 The qdilate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "qdilate/linalg.hpp"

namespace qdilate {

/// Deterministic random source shared by the CLI, the census and the tests.
///
/// Stream contract:
///   * engine: std::mt19937_64 (bit-exact across conforming implementations)
///   * stream seed for (seed, index): splitmix64(seed + 0x9E3779B97F4A7C15 * (index + 1))
///   * uniform(): (engine() >> 11) * 2^-53, in [0, 1)
///   * normal(): Box-Muller on u1 = 1 - uniform(), u2 = uniform(); the cosine
///     branch is returned first, the sine branch is cached for the next call
///   * complex_normal(): (normal() + i normal()) / sqrt(2)
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  double uniform();
  double normal();
  Complex complex_normal();

  /// Flat Dirichlet(1, ..., 1) sample via normalized exponentials.
  std::vector<double> dirichlet(std::size_t k);

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
  std::optional<double> cached_normal_;
};

std::uint64_t splitmix64(std::uint64_t x);

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

/// Haar-distributed unitary: complex Gaussian matrix, Householder QR, then
/// Q * diag(R_ii / |R_ii|).
ComplexMatrix haar_unitary(Index n, Rng& rng);

/// Matrix with i.i.d. complex Gaussian entries.
ComplexMatrix ginibre(Index rows, Index cols, Rng& rng);

/// Random Hermitian matrix (Ginibre G, returns (G + G^dagger)/2).
ComplexMatrix random_hermitian(Index n, Rng& rng);

}  // namespace qdilate

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

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "qdilate/dilation.hpp"

namespace qdilate {

/// Y = sum_i coefficients[i] * left_ops[i] (x) right_ops[i] with both
/// operator families Hilbert-Schmidt orthonormal.
struct OperatorSchmidtDecomposition {
  std::vector<double> coefficients;  // descending, above the rank threshold
  std::vector<ComplexMatrix> left_ops;
  std::vector<ComplexMatrix> right_ops;
  RealVector singulars;              // full spectrum of the realigned matrix

  std::size_t rank() const { return coefficients.size(); }
};

/// R[i*d1 + j, k*d2 + l] = Y[i*d2 + k, j*d2 + l]; maps A (x) B to vec(A) vec(B)^T.
ComplexMatrix realign(const ComplexMatrix& y, Index d1, Index d2);

/// Inverse of realign.
ComplexMatrix unrealign(const ComplexMatrix& r, Index d1, Index d2);

OperatorSchmidtDecomposition operator_schmidt_decomposition(const ComplexMatrix& y, Index d1, Index d2);

std::size_t operator_schmidt_rank(const ComplexMatrix& y, Index d1, Index d2);

struct RankEqualityCheck {
  std::size_t kraus_rank = 0;
  std::size_t schmidt_rank = 0;
  bool equal = false;
  // Some Schmidt ratio r has r^2 <= tau < r; Choi eigenvalues scale as r^2
  // and the two counts may disagree.
  bool ambiguous = false;
  // Choi distance between the channel and the Kraus family read off the
  // Schmidt decomposition, with Tr(B_i B_j^dagger) = n delta_ij.
  double schmidt_kraus_distance = 0.0;
};

RankEqualityCheck check_rank_equality(const DilationUnitary& u, Index d, Index n);

struct RankHistogram {
  std::map<std::size_t, std::size_t> counts;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double tolerance = tol::kRank;
  // Smallest retained Schmidt singular value of U, relative to the largest,
  // over all trials.
  double min_gap = 1.0;
  // Largest discarded singular value, same normalization.
  double max_dropped = 0.0;
  // Trials whose Kraus rank differed from the Schmidt rank of U.
  std::size_t rank_mismatches = 0;
};

/// Kraus-rank histogram of n-noisy operations generated by Haar-random
/// U in U(d*n). Trial t draws from Rng(seed, t) on any thread count.
RankHistogram rank_census(Index d, Index n, std::size_t trials, std::uint64_t seed, unsigned threads = 0);

}  // namespace qdilate

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
#include <span>
#include <utility>
#include <vector>

#include "qdilate/channel.hpp"

namespace qdilate {

/// Two-term weight exchange a U1 . U1^dagger + d U2 . U2^dagger
/// = b V1 . V1^dagger + c V2 . V2^dagger. Requires a >= b >= c >= d >= 0 and
/// a + d = b + c.
struct RebalanceWeights {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
};

/// S^dagger U1^dagger U2 S = diag(z1, z2), z1 conj(z2) = exp(i theta).
struct RelativeDiagonalization {
  ComplexMatrix s;
  Complex z1;
  Complex z2;
  double theta = 0.0;  // [0, 2 pi)
};

struct PhaseSolution {
  double alpha = 0.0;
  double beta = 0.0;
};

/// One T-transform: weight delta moves from entry n to entry m (n < m,
/// 0-based positions in the descending order) and the two unitaries are
/// replaced by (v, w).
struct TTransformStep {
  std::size_t n = 0;
  std::size_t m = 0;
  double delta = 0.0;
  ComplexMatrix v;
  ComplexMatrix w;
  std::vector<double> weights_after;
};

struct ReweightResult {
  MixedUnitaryDecomposition decomposition;
  std::vector<TTransformStep> steps;
};

/// Throws InvalidWeights unless entries are non-negative and sum to 1
/// within tol::kWeightSum.
void check_prob_vector(std::span<const double> p);

void check_rebalance_weights(const RebalanceWeights& w);

/// Prefix-sum majorization p > q on the decreasing rearrangements, with the
/// shorter vector zero-padded.
bool majorizes(std::span<const double> p, std::span<const double> q);

RelativeDiagonalization diagonalize_relative(const ComplexMatrix& u1, const ComplexMatrix& u2);

/// f(alpha) = a^2 + b^2 - c^2 + d^2 + 2ad cos(theta) - 2ab cos(alpha) - 2db cos(theta - alpha)
double phase_residual(const RebalanceWeights& w, double theta, double alpha);

/// Root of phase_residual in [0, theta] by bisection. f(0) <= 0 <= f(theta)
/// holds for valid weights.
double solve_alpha(const RebalanceWeights& w, double theta);

/// beta = arg(a + d e^{i theta} - b e^{i alpha}) mod 2 pi, or 0 when c = 0.
double solve_beta(const RebalanceWeights& w, double theta, double alpha);

std::pair<ComplexMatrix, ComplexMatrix> rebalance_pair(const RebalanceWeights& w, const ComplexMatrix& u1,
                                                         const ComplexMatrix& u2);

/// Rewrites the channel of `m` with weights `q` by a sequence of at most
/// k - 1 T-transforms. The output is in descending weight order.
ReweightResult reweight(const MixedUnitaryDecomposition& m, std::span<const double> q);

/// Same channel with all k weights exactly 1/k.
MixedUnitaryDecomposition uniformize(const MixedUnitaryDecomposition& m);

}  // namespace qdilate

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

#include <array>
#include <cstddef>

#include "qdilate/channel.hpp"

namespace qdilate {

using Matrix3 = Eigen::Matrix3d;
using Vector3 = Eigen::Vector3d;

namespace tol {
// Pauli probabilities in [-kClamp, 0) are rounding noise and clamp to zero.
inline constexpr double kClamp = 1e-9;
// Weights at or below this are dropped from emitted decompositions.
inline constexpr double kDropWeight = 1e-12;
}  // namespace tol

/// Canonical form of a unital qubit channel: its Bloch block
/// t = R_L diag(lambdas) R_R together with SU(2) lifts of R_L and R_R.
struct PauliTransferMatrix {
  Matrix3 t;
  ComplexMatrix u_left;
  ComplexMatrix u_right;
  Vector3 lambdas;
};

struct SignedSvd {
  Matrix3 left;    // SO(3)
  Vector3 lambdas; // |l1| >= |l2| >= |l3|
  Matrix3 right;   // SO(3)
};

/// Probabilities on (1, sigma_1, sigma_2, sigma_3) of the Pauli-diagonal
/// channel with axis scalings `lambdas`. Entries may be negative when the
/// scalings lie outside the tetrahedron of CP maps.
using PauliProbabilities = std::array<double, 4>;

/// t[i,j] = Tr(sigma_i T(sigma_j)) / 2 for i, j in 1..3.
Matrix3 pauli_transfer(const ChannelRep& channel);

SignedSvd signed_svd_so3(const Matrix3& t);

/// Bloch rotation of the unitary conjugation X -> V X V^dagger:
/// R[i,j] = Tr(sigma_i V sigma_j V^dagger) / 2.
Matrix3 adjoint_action(const ComplexMatrix& v);

/// Lifts R in SO(3) to V in SU(2) with adjoint_action(V) = R. The global
/// phase follows fix_global_phase.
ComplexMatrix su2_from_so3(const Matrix3& r);

PauliProbabilities pauli_probabilities(const Vector3& lambdas);

PauliTransferMatrix canonical_form(const ChannelRep& channel);

/// Mixed-unitary decomposition with at most four terms
/// U_k = V_L sigma_k V_R; zero-weight terms are dropped.
MixedUnitaryDecomposition mixed_unitary_decomposition(const ChannelRep& channel);

/// Splits the largest weight (lowest index on ties) in half, duplicating its
/// unitary right after it, until the decomposition has k terms.
MixedUnitaryDecomposition pad_decomposition(const MixedUnitaryDecomposition& m, std::size_t k);

/// Multiplies u by a phase so its first entry (row-major) with modulus above
/// 1e-8 is real and positive.
void fix_global_phase(ComplexMatrix& u);

}  // namespace qdilate

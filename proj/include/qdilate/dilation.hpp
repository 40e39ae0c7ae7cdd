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

#include "qdilate/channel.hpp"

namespace qdilate {

/// Joint unitary on system (x) environment. Flat index of |s>|e> is
/// s * env_dim + e.
struct DilationUnitary {
  Index env_dim = 0;
  ComplexMatrix matrix;
};

/// U = sum_i V_i (x) |i><i| for a decomposition with uniform weights 1/k.
DilationUnitary build_dilation(const MixedUnitaryDecomposition& m);

/// Choi matrix of X -> Tr_E(U (X (x) 1_n / n) U^dagger), assembled from the
/// images of the d^2 matrix units.
ChoiMatrix noisy_operation_channel(const DilationUnitary& u, Index d, Index n);

/// Choi distance between `channel` and the n-noisy operation generated by u.
double verify_noisy_representation(const ChannelRep& channel, const DilationUnitary& u, Index n);

}  // namespace qdilate

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

#include "qdilate/canonical.hpp"
#include "qdilate/dilation.hpp"
#include "qdilate/rebalance.hpp"

namespace qdilate {

struct DilationReport {
  std::size_t kraus_rank = 0;
  MixedUnitaryDecomposition canonical;  // straight from the canonical form
  MixedUnitaryDecomposition uniform;    // k terms, weights 1/k
  DilationUnitary dilation;
  double distance = 0.0;
};

/// Throws NotCP, NotTracePreserving or NotUnital (checked in that order)
/// unless `channel` is a unital qubit channel.
void require_unital_qubit(const ChannelRep& channel);

/// Brings a decomposition to exactly k terms: weights below the rank
/// threshold are dropped when there are too many, then the largest weights
/// are split. Throws KTooSmall if a non-negligible weight would be lost.
MixedUnitaryDecomposition fit_decomposition(const MixedUnitaryDecomposition& m, std::size_t k);

/// decompose -> fit to k -> uniformize -> dilate -> verify. Throws KTooSmall
/// when k is below the Kraus rank.
DilationReport dilate_channel(const ChannelRep& channel, std::size_t k);

}  // namespace qdilate

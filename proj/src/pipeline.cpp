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

#include "qdilate/pipeline.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qdilate/errors.hpp"

namespace qdilate {

void require_unital_qubit(const ChannelRep& channel) {
  if (channel_dim(channel) != 2) {
    fail(ErrorCode::DimensionMismatch, "expected a qubit channel, got dimension " + std::to_string(channel_dim(channel)));
  }
  const ValidationReport report = validate(channel);
  if (!report.completely_positive) {
    fail(ErrorCode::NotCP, "Choi matrix has a negative eigenvalue of magnitude " + std::to_string(report.cp_violation));
  }
  if (!report.trace_preserving) {
    fail(ErrorCode::NotTracePreserving, "trace-preservation violation " + std::to_string(report.tp_violation));
  }
  if (!report.unital) fail(ErrorCode::NotUnital, "unitality violation " + std::to_string(report.unital_violation));
}

MixedUnitaryDecomposition fit_decomposition(const MixedUnitaryDecomposition& m, std::size_t k) {
  if (k == 0) fail(ErrorCode::KTooSmall, "k must be at least 1");
  if (m.size() <= k) return pad_decomposition(m, k);

  std::vector<std::size_t> order(m.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return m.weights[x] > m.weights[y]; });
  const double largest = m.weights[order.front()];
  for (std::size_t i = k; i < order.size(); ++i) {
    if (m.weights[order[i]] > tol::kRank * largest) {
      fail(ErrorCode::KTooSmall, "decomposition needs " + std::to_string(i + 1) + " terms, k = " + std::to_string(k));
    }
  }
  std::vector<std::size_t> keep(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(keep.begin(), keep.end());
  MixedUnitaryDecomposition out;
  double total = 0.0;
  for (std::size_t i : keep) total += m.weights[i];
  for (std::size_t i : keep) {
    out.weights.push_back(m.weights[i] / total);
    out.unitaries.push_back(m.unitaries[i]);
  }
  return out;
}

DilationReport dilate_channel(const ChannelRep& channel, std::size_t k) {
  require_unital_qubit(channel);
  DilationReport report;
  report.kraus_rank = kraus_rank(channel);
  if (k < report.kraus_rank) {
    fail(ErrorCode::KTooSmall, "k = " + std::to_string(k) + " is below the Kraus rank " +
                                   std::to_string(report.kraus_rank));
  }
  report.canonical = mixed_unitary_decomposition(channel);
  report.uniform = uniformize(fit_decomposition(report.canonical, k));
  report.dilation = build_dilation(report.uniform);
  report.distance = verify_noisy_representation(channel, report.dilation, static_cast<Index>(k));
  return report;
}

}  // namespace qdilate

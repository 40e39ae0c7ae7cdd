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

#include "qdilate/dilation.hpp"

#include <cmath>
#include <string>

#include "qdilate/errors.hpp"

namespace qdilate {

namespace {
constexpr double kUniformTol = 1e-12;
}

DilationUnitary build_dilation(const MixedUnitaryDecomposition& m) {
  check_mixed_unitary(m);
  const auto k = static_cast<Index>(m.size());
  const double uniform = 1.0 / static_cast<double>(k);
  for (double w : m.weights) {
    if (std::abs(w - uniform) > kUniformTol) {
      fail(ErrorCode::NonUniformWeights, "weight " + std::to_string(w) + " differs from 1/" + std::to_string(k));
    }
  }
  const Index d = m.unitaries.front().rows();
  DilationUnitary out{k, ComplexMatrix::Zero(d * k, d * k)};
  for (Index i = 0; i < k; ++i) {
    const ComplexMatrix& v = m.unitaries[static_cast<std::size_t>(i)];
    for (Index a = 0; a < d; ++a) {
      for (Index b = 0; b < d; ++b) out.matrix(a * k + i, b * k + i) = v(a, b);
    }
  }
  return out;
}

ChoiMatrix noisy_operation_channel(const DilationUnitary& u, Index d, Index n) {
  if (u.matrix.rows() != d * n || u.matrix.cols() != d * n) {
    fail(ErrorCode::DimensionMismatch, "dilation side " + std::to_string(u.matrix.rows()) + " != " +
                                           std::to_string(d) + "*" + std::to_string(n));
  }
  if (!is_unitary(u.matrix)) fail(ErrorCode::NotUnitary, "dilation matrix is not unitary");

  // U (|i><j| (x) 1/n) U^dagger = (1/n) sum_e U[:, i n + e] U[:, j n + e]^dagger
  ChoiMatrix out{d, ComplexMatrix::Zero(d * d, d * d)};
  const double inv_n = 1.0 / static_cast<double>(n);
  const double inv_d = 1.0 / static_cast<double>(d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      ComplexMatrix joint = ComplexMatrix::Zero(d * n, d * n);
      for (Index e = 0; e < n; ++e) {
        joint.noalias() += u.matrix.col(i * n + e) * u.matrix.col(j * n + e).adjoint();
      }
      const ComplexMatrix image = inv_n * partial_trace_env(joint, d, n);
      for (Index a = 0; a < d; ++a) {
        for (Index b = 0; b < d; ++b) out.matrix(a * d + i, b * d + j) = inv_d * image(a, b);
      }
    }
  }
  return out;
}

double verify_noisy_representation(const ChannelRep& channel, const DilationUnitary& u, Index n) {
  return choi_distance(channel, noisy_operation_channel(u, channel_dim(channel), n));
}

}  // namespace qdilate

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

#include "qdilate/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qdilate/errors.hpp"

namespace qdilate {

namespace {

constexpr double kRotationTol = 1e-8;
constexpr double kNearPi = 1e-6;
constexpr double kPhaseEntryThreshold = 1e-8;

}  // namespace

Matrix3 pauli_transfer(const ChannelRep& channel) {
  if (channel_dim(channel) != 2) fail(ErrorCode::DimensionMismatch, "Pauli transfer needs a qubit channel");
  const ValidationReport report = validate(channel);
  if (!report.trace_preserving) {
    fail(ErrorCode::NotTracePreserving, "trace-preservation violation " + std::to_string(report.tp_violation));
  }
  if (!report.unital) fail(ErrorCode::NotUnital, "unitality violation " + std::to_string(report.unital_violation));

  Matrix3 t;
  double imag = 0.0;
  for (int j = 0; j < 3; ++j) {
    const ComplexMatrix image = apply_channel(channel, pauli(j + 1));
    for (int i = 0; i < 3; ++i) {
      const Complex entry = 0.5 * (pauli(i + 1) * image).trace();
      t(i, j) = entry.real();
      imag = std::max(imag, std::abs(entry.imag()));
    }
  }
  if (imag > 1e-12) {
    fail(ErrorCode::NotCP, "channel does not preserve Hermiticity (imaginary transfer entry " +
                               std::to_string(imag) + ")");
  }
  return t;
}

SignedSvd signed_svd_so3(const Matrix3& t) {
  const SingularValueDecomposition s = svd(t.cast<Complex>());
  SignedSvd out{s.left.real(), s.singulars, s.right.real().transpose()};
  if (out.left.determinant() < 0.0) {
    out.left.col(2) *= -1.0;
    out.lambdas(2) *= -1.0;
  }
  if (out.right.determinant() < 0.0) {
    out.right.row(2) *= -1.0;
    out.lambdas(2) *= -1.0;
  }
  return out;
}

Matrix3 adjoint_action(const ComplexMatrix& v) {
  Matrix3 r;
  for (int j = 0; j < 3; ++j) {
    const ComplexMatrix image = v * pauli(j + 1) * v.adjoint();
    for (int i = 0; i < 3; ++i) r(i, j) = 0.5 * (pauli(i + 1) * image).trace().real();
  }
  return r;
}

ComplexMatrix su2_from_so3(const Matrix3& r) {
  const double orth = (r.transpose() * r - Matrix3::Identity()).norm();
  const double det = r.determinant();
  if (orth > kRotationTol || std::abs(det - 1.0) > kRotationTol) {
    fail(ErrorCode::NotRotation, "||R^T R - 1|| = " + std::to_string(orth) + ", det = " + std::to_string(det));
  }

  // Antisymmetric part encodes 2 sin(angle) * axis.
  const Vector3 w(r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1));
  const double cos_angle = std::clamp((r.trace() - 1.0) / 2.0, -1.0, 1.0);
  const double angle = std::atan2(w.norm() / 2.0, cos_angle);

  Vector3 axis = Vector3::UnitZ();
  if (std::numbers::pi - angle < kNearPi) {
    // Symmetric part is cos(angle) 1 + (1 - cos(angle)) n n^T.
    const Matrix3 b = 0.5 * (0.5 * (r + r.transpose()) + Matrix3::Identity());
    Index j = 0;
    b.diagonal().maxCoeff(&j);
    axis = b.col(j).normalized();
    if (axis.dot(w) < 0.0) axis = -axis;
  } else if (w.norm() > 0.0) {
    axis = w.normalized();
  }

  const double half = angle / 2.0;
  ComplexMatrix v = std::cos(half) * pauli(0);
  for (int i = 0; i < 3; ++i) v -= Complex(0.0, std::sin(half) * axis(i)) * pauli(i + 1);
  fix_global_phase(v);
  return v;
}

PauliProbabilities pauli_probabilities(const Vector3& l) {
  return {
      (1.0 + l(0) + l(1) + l(2)) / 4.0,
      (1.0 + l(0) - l(1) - l(2)) / 4.0,
      (1.0 - l(0) + l(1) - l(2)) / 4.0,
      (1.0 - l(0) - l(1) + l(2)) / 4.0,
  };
}

PauliTransferMatrix canonical_form(const ChannelRep& channel) {
  const Matrix3 t = pauli_transfer(channel);
  const SignedSvd s = signed_svd_so3(t);
  return {t, su2_from_so3(s.left), su2_from_so3(s.right), s.lambdas};
}

MixedUnitaryDecomposition mixed_unitary_decomposition(const ChannelRep& channel) {
  const PauliTransferMatrix form = canonical_form(channel);
  PauliProbabilities p = pauli_probabilities(form.lambdas);
  double total = 0.0;
  for (double& x : p) {
    if (x < -tol::kClamp) {
      fail(ErrorCode::NotCP, "axis scalings outside the CP tetrahedron (Pauli weight " + std::to_string(x) + ")");
    }
    if (x <= tol::kDropWeight) x = 0.0;
    total += x;
  }

  MixedUnitaryDecomposition out;
  for (int k = 0; k < 4; ++k) {
    if (p[static_cast<std::size_t>(k)] == 0.0) continue;
    ComplexMatrix u = form.u_left * pauli(k) * form.u_right;
    fix_global_phase(u);
    out.weights.push_back(p[static_cast<std::size_t>(k)] / total);
    out.unitaries.push_back(std::move(u));
  }
  return out;
}

MixedUnitaryDecomposition pad_decomposition(const MixedUnitaryDecomposition& m, std::size_t k) {
  if (k < m.size()) {
    fail(ErrorCode::KTooSmall, "cannot pad a " + std::to_string(m.size()) + "-term decomposition to " +
                                   std::to_string(k) + " terms");
  }
  MixedUnitaryDecomposition out = m;
  while (out.size() < k) {
    const auto largest = std::max_element(out.weights.begin(), out.weights.end());
    const auto idx = static_cast<std::size_t>(largest - out.weights.begin());
    const double half = out.weights[idx] / 2.0;
    out.weights[idx] = half;
    out.weights.insert(out.weights.begin() + static_cast<std::ptrdiff_t>(idx) + 1, half);
    out.unitaries.insert(out.unitaries.begin() + static_cast<std::ptrdiff_t>(idx) + 1, out.unitaries[idx]);
  }
  return out;
}

void fix_global_phase(ComplexMatrix& u) {
  for (Index r = 0; r < u.rows(); ++r) {
    for (Index c = 0; c < u.cols(); ++c) {
      const double mag = std::abs(u(r, c));
      if (mag > kPhaseEntryThreshold) {
        u *= std::conj(u(r, c)) / mag;
        u(r, c) = mag;
        return;
      }
    }
  }
}

}  // namespace qdilate

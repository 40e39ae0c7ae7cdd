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
#include <variant>
#include <vector>

#include "qdilate/linalg.hpp"

namespace qdilate {

namespace tol {
inline constexpr double kPsd = 1e-9;
// Trace-preservation and unitality violations, Frobenius norm.
inline constexpr double kChannel = 1e-8;
inline constexpr double kWeightSum = 1e-12;
}  // namespace tol

struct KrausDecomposition {
  Index dim = 0;
  std::vector<ComplexMatrix> operators;
};

/// Normalized Choi matrix C = (T (x) id)(|Omega><Omega|) with
/// |Omega> = d^{-1/2} sum_i |i>|i>. The channel acts on the first factor:
///   C[a*d + i, b*d + j] = T(|i><j|)[a, b] / d.
struct ChoiMatrix {
  Index dim = 0;
  ComplexMatrix matrix;
};

/// T(X) = sum_i weights[i] * U_i X U_i^dagger
struct MixedUnitaryDecomposition {
  std::vector<double> weights;
  std::vector<ComplexMatrix> unitaries;

  std::size_t size() const { return weights.size(); }
};

using ChannelRep = std::variant<KrausDecomposition, ChoiMatrix, MixedUnitaryDecomposition>;

struct ValidationReport {
  bool completely_positive = false;
  bool trace_preserving = false;
  bool unital = false;
  // Worst violations; all non-negative.
  double cp_violation = 0.0;       // max(0, -min Choi eigenvalue), or Choi anti-Hermitian mass
  double tp_violation = 0.0;       // ||sum A^dagger A - 1||_F
  double unital_violation = 0.0;   // ||sum A A^dagger - 1||_F

  bool is_unital_channel() const { return completely_positive && trace_preserving && unital; }
};

/// Row-major vectorization matching the Choi convention above:
/// vec(A)[a*d + i] = A[a, i], so (A (x) 1)|Omega> = d^{-1/2} vec(A).
ComplexVector vec(const ComplexMatrix& a);
ComplexMatrix unvec(const ComplexVector& v, Index d);

Index channel_dim(const ChannelRep& rep);

/// Throws InvalidDecomposition unless weights are a probability vector and
/// every unitary is d x d and unitary.
void check_mixed_unitary(const MixedUnitaryDecomposition& m);

ChoiMatrix choi_from_kraus(const KrausDecomposition& k);
KrausDecomposition kraus_from_choi(const ChoiMatrix& c);

/// Choi matrix of any representation without validating it.
ChoiMatrix to_choi(const ChannelRep& rep);

ComplexMatrix apply_channel(const ChannelRep& rep, const ComplexMatrix& x);

ValidationReport validate(const ChannelRep& rep);

/// Number of Choi eigenvalues above tol::kRank times the largest one.
/// Throws NotCP / NotTracePreserving for invalid channels.
std::size_t kraus_rank(const ChannelRep& rep);

/// Frobenius distance between normalized Choi matrices.
double choi_distance(const ChannelRep& lhs, const ChannelRep& rhs);

}  // namespace qdilate

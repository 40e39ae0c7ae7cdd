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

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace qdilate {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Default tolerances. Hermiticity and eigen tolerances are relative to the
// Frobenius norm of the input; unitarity is absolute on U^dagger U - 1.
namespace tol {
inline constexpr double kHermitian = 1e-10;
inline constexpr double kEig = 1e-10;
inline constexpr double kUnitary = 1e-10;
inline constexpr double kRank = 1e-8;
}  // namespace tol

struct EigenDecomposition {
  RealVector values;      // descending
  ComplexMatrix vectors;  // orthonormal columns
};

struct SingularValueDecomposition {
  ComplexMatrix left;   // rows x rows, unitary
  RealVector singulars; // min(rows, cols) entries, descending, non-negative
  ComplexMatrix right;  // cols x cols, unitary
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Throws NotHermitian when ||H - H^dagger||_F exceeds
/// herm_tol * ||H||_F.
EigenDecomposition hermitian_eig(const ComplexMatrix& h, double herm_tol = tol::kHermitian);

/// Full SVD by one-sided (Hestenes) Jacobi. M = left * diag(singulars) * right^dagger
/// restricted to the leading min(rows, cols) columns.
SingularValueDecomposition svd(const ComplexMatrix& m);

/// kron(A,B)[i*rB + k, j*cB + l] = A[i,j] * B[k,l]
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trace over the second (environment) factor of a (d*n) x (d*n) operator.
ComplexMatrix partial_trace_env(const ComplexMatrix& y, Index d, Index n);

/// Trace over the first (system) factor; returns n x n.
ComplexMatrix partial_trace_sys(const ComplexMatrix& y, Index d, Index n);

/// Hilbert-Schmidt inner product Tr(A^dagger B).
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_unitary(const ComplexMatrix& u, double tolerance = tol::kUnitary);

bool all_finite(const ComplexMatrix& m);

/// Pauli matrices: 0 is the 2x2 identity, 1..3 are sigma_x, sigma_y, sigma_z.
const ComplexMatrix& pauli(int index);

/// Reconstructs V diag(values) V^dagger.
ComplexMatrix reconstruct(const EigenDecomposition& eig);

/// Reconstructs the leading-singular-value part of an SVD.
ComplexMatrix reconstruct(const SingularValueDecomposition& s);

}  // namespace qdilate

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

#include "qdilate/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "qdilate/errors.hpp"

namespace qdilate {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTarget = 1e-14;
constexpr double kOrthogonalityTarget = 1e-15;

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    fail(ErrorCode::DimensionMismatch, std::string(what) + ": matrix is " + std::to_string(m.rows()) +
                                           "x" + std::to_string(m.cols()) + ", expected square");
  }
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

std::vector<Index> descending_order(const RealVector& v) {
  std::vector<Index> order(static_cast<std::size_t>(v.size()));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index x, Index y) { return v(x) > v(y); });
  return order;
}

// Appends orthonormal columns to `basis` (first `filled` columns valid) until
// it is square. Candidates are the standard basis vectors; the one with the
// largest residual after two projection passes wins.
void complete_orthonormal(ComplexMatrix& basis, Index filled) {
  const Index dim = basis.rows();
  for (Index col = filled; col < dim; ++col) {
    ComplexVector best;
    double best_norm = -1.0;
    for (Index e = 0; e < dim; ++e) {
      ComplexVector v = ComplexVector::Unit(dim, e);
      for (int pass = 0; pass < 2; ++pass) {
        for (Index k = 0; k < col; ++k) v -= basis.col(k) * basis.col(k).dot(v);
      }
      const double nv = v.norm();
      if (nv > best_norm) {
        best_norm = nv;
        best = v;
      }
    }
    basis.col(col) = best / best_norm;
  }
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& h, double herm_tol) {
  require_square(h, "hermitian_eig");
  const double scale = h.norm();
  const double asym = (h - h.adjoint()).norm();
  if (asym > herm_tol * scale) {
    fail(ErrorCode::NotHermitian, "||H - H^dagger||_F = " + std::to_string(asym));
  }

  const Index n = h.rows();
  ComplexMatrix a = 0.5 * (h + h.adjoint());
  ComplexMatrix v = ComplexMatrix::Identity(n, n);
  const double target = kOffDiagonalTarget * scale;

  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= target) {
      converged = true;
      break;
    }
    for (Index p = 0; p < n - 1; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        const Complex phase = a(p, q) / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double zeta = (aqq - app) / (2.0 * mag);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        const Complex cph = std::conj(phase);

        // A <- A G with G = [[c, s], [-s conj(ph), c conj(ph)]] on (p, q).
        for (Index r = 0; r < n; ++r) {
          const Complex ap = a(r, p);
          const Complex aq = a(r, q);
          a(r, p) = c * ap - s * cph * aq;
          a(r, q) = s * ap + c * cph * aq;
        }
        // A <- G^dagger A
        for (Index r = 0; r < n; ++r) {
          const Complex ap = a(p, r);
          const Complex aq = a(q, r);
          a(p, r) = c * ap - s * phase * aq;
          a(q, r) = s * ap + c * phase * aq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (Index r = 0; r < n; ++r) {
          const Complex vp = v(r, p);
          const Complex vq = v(r, q);
          v(r, p) = c * vp - s * cph * vq;
          v(r, q) = s * vp + c * cph * vq;
        }
      }
    }
  }
  if (!converged && off_diagonal_norm(a) > target) {
    fail(ErrorCode::ConvergenceFailure, "Jacobi eigensolver did not converge in 100 sweeps");
  }

  RealVector diag = a.diagonal().real();
  const auto order = descending_order(diag);
  EigenDecomposition out{RealVector(n), ComplexMatrix(n, n)};
  for (Index k = 0; k < n; ++k) {
    out.values(k) = diag(order[static_cast<std::size_t>(k)]);
    out.vectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
  }
  return out;
}

SingularValueDecomposition svd(const ComplexMatrix& m) {
  if (m.rows() < m.cols()) {
    SingularValueDecomposition t = svd(m.adjoint());
    return {std::move(t.right), std::move(t.singulars), std::move(t.left)};
  }

  const Index rows = m.rows();
  const Index cols = m.cols();
  ComplexMatrix a = m;
  ComplexMatrix v = ComplexMatrix::Identity(cols, cols);

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (Index p = 0; p < cols - 1; ++p) {
      for (Index q = p + 1; q < cols; ++q) {
        const double alpha = a.col(p).squaredNorm();
        const double beta = a.col(q).squaredNorm();
        const Complex gamma = a.col(p).dot(a.col(q));
        const double mag = std::abs(gamma);
        if (mag == 0.0 || mag <= kOrthogonalityTarget * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const Complex cph = std::conj(gamma / mag);
        const double zeta = (beta - alpha) / (2.0 * mag);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (Index r = 0; r < rows; ++r) {
          const Complex ap = a(r, p);
          const Complex aq = a(r, q) * cph;
          a(r, p) = c * ap - s * aq;
          a(r, q) = s * ap + c * aq;
        }
        for (Index r = 0; r < cols; ++r) {
          const Complex vp = v(r, p);
          const Complex vq = v(r, q) * cph;
          v(r, p) = c * vp - s * vq;
          v(r, q) = s * vp + c * vq;
        }
      }
    }
    if (!rotated) break;
  }

  RealVector norms(cols);
  for (Index j = 0; j < cols; ++j) norms(j) = a.col(j).norm();
  const auto order = descending_order(norms);

  SingularValueDecomposition out{ComplexMatrix::Zero(rows, rows), RealVector(cols),
                                 ComplexMatrix(cols, cols)};
  Index filled = 0;
  for (Index k = 0; k < cols; ++k) {
    const Index j = order[static_cast<std::size_t>(k)];
    out.singulars(k) = norms(j);
    out.right.col(k) = v.col(j);
    if (norms(j) > 0.0) {
      out.left.col(k) = a.col(j) / norms(j);
      filled = k + 1;
    }
  }
  complete_orthonormal(out.left, filled);
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace_env(const ComplexMatrix& y, Index d, Index n) {
  if (y.rows() != d * n || y.cols() != d * n) {
    fail(ErrorCode::DimensionMismatch, "partial_trace_env: operator side " + std::to_string(y.rows()) +
                                           " != " + std::to_string(d) + "*" + std::to_string(n));
  }
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      for (Index k = 0; k < n; ++k) out(i, j) += y(i * n + k, j * n + k);
    }
  }
  return out;
}

ComplexMatrix partial_trace_sys(const ComplexMatrix& y, Index d, Index n) {
  if (y.rows() != d * n || y.cols() != d * n) {
    fail(ErrorCode::DimensionMismatch, "partial_trace_sys: operator side " + std::to_string(y.rows()) +
                                           " != " + std::to_string(d) + "*" + std::to_string(n));
  }
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (Index k = 0; k < n; ++k) {
    for (Index l = 0; l < n; ++l) {
      for (Index i = 0; i < d; ++i) out(k, l) += y(i * n + k, i * n + l);
    }
  }
  return out;
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail(ErrorCode::DimensionMismatch, "hs_inner: operand shapes differ");
  }
  // Tr(A^dagger B) = sum_ij conj(A_ij) B_ij
  return (a.conjugate().cwiseProduct(b)).sum();
}

bool is_unitary(const ComplexMatrix& u, double tolerance) {
  if (u.rows() != u.cols()) return false;
  const Index n = u.rows();
  return (u.adjoint() * u - ComplexMatrix::Identity(n, n)).norm() <= tolerance;
}

bool all_finite(const ComplexMatrix& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
    }
  }
  return true;
}

const ComplexMatrix& pauli(int index) {
  static const ComplexMatrix kPaulis[4] = {
      (ComplexMatrix(2, 2) << 1.0, 0.0, 0.0, 1.0).finished(),
      (ComplexMatrix(2, 2) << 0.0, 1.0, 1.0, 0.0).finished(),
      (ComplexMatrix(2, 2) << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0).finished(),
      (ComplexMatrix(2, 2) << 1.0, 0.0, 0.0, -1.0).finished(),
  };
  if (index < 0 || index > 3) {
    fail(ErrorCode::DimensionMismatch, "pauli index must be in 0..3");
  }
  return kPaulis[index];
}

ComplexMatrix reconstruct(const EigenDecomposition& eig) {
  return eig.vectors * eig.values.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
}

ComplexMatrix reconstruct(const SingularValueDecomposition& s) {
  const Index r = s.singulars.size();
  return s.left.leftCols(r) * s.singulars.cast<Complex>().asDiagonal() * s.right.leftCols(r).adjoint();
}

}  // namespace qdilate

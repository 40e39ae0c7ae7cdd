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

#include "qdilate/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qdilate/errors.hpp"

namespace qdilate {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

void require_shape(const ComplexMatrix& m, Index rows, Index cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols) {
    fail(ErrorCode::DimensionMismatch, std::string(what) + ": got " + std::to_string(m.rows()) + "x" +
                                           std::to_string(m.cols()) + ", expected " +
                                           std::to_string(rows) + "x" + std::to_string(cols));
  }
}

// sum_k w_k vec(A_k) vec(A_k)^dagger / d
ComplexMatrix choi_of_operators(Index d, const std::vector<ComplexMatrix>& ops,
                                const std::vector<double>* weights) {
  ComplexMatrix c = ComplexMatrix::Zero(d * d, d * d);
  for (std::size_t k = 0; k < ops.size(); ++k) {
    require_shape(ops[k], d, d, "channel operator");
    const ComplexVector v = vec(ops[k]);
    const double w = weights ? (*weights)[k] : 1.0;
    c.noalias() += (w / static_cast<double>(d)) * (v * v.adjoint());
  }
  return c;
}

void fill_operator_sums(ValidationReport& report, Index d, const std::vector<ComplexMatrix>& ops,
                        const std::vector<double>* weights = nullptr) {
  ComplexMatrix tp = -ComplexMatrix::Identity(d, d);
  ComplexMatrix un = -ComplexMatrix::Identity(d, d);
  for (std::size_t k = 0; k < ops.size(); ++k) {
    const auto& a = ops[k];
    const double w = weights ? (*weights)[k] : 1.0;
    tp.noalias() += w * (a.adjoint() * a);
    un.noalias() += w * (a * a.adjoint());
  }
  report.tp_violation = tp.norm();
  report.unital_violation = un.norm();
}

}  // namespace

ComplexVector vec(const ComplexMatrix& a) {
  ComplexVector v(a.rows() * a.cols());
  for (Index r = 0; r < a.rows(); ++r) {
    for (Index c = 0; c < a.cols(); ++c) v(r * a.cols() + c) = a(r, c);
  }
  return v;
}

ComplexMatrix unvec(const ComplexVector& v, Index d) {
  if (v.size() != d * d) fail(ErrorCode::DimensionMismatch, "unvec: length is not d^2");
  ComplexMatrix a(d, d);
  for (Index r = 0; r < d; ++r) {
    for (Index c = 0; c < d; ++c) a(r, c) = v(r * d + c);
  }
  return a;
}

Index channel_dim(const ChannelRep& rep) {
  return std::visit(Overloaded{
                        [](const KrausDecomposition& k) { return k.dim; },
                        [](const ChoiMatrix& c) { return c.dim; },
                        [](const MixedUnitaryDecomposition& m) {
                          return m.unitaries.empty() ? Index{0} : m.unitaries.front().rows();
                        },
                    },
                    rep);
}

void check_mixed_unitary(const MixedUnitaryDecomposition& m) {
  if (m.weights.size() != m.unitaries.size()) {
    fail(ErrorCode::InvalidDecomposition, "weights and unitaries differ in length");
  }
  if (m.weights.empty()) fail(ErrorCode::InvalidDecomposition, "empty decomposition");
  const Index d = m.unitaries.front().rows();
  double total = 0.0;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (!(m.weights[k] >= 0.0)) {
      fail(ErrorCode::InvalidDecomposition, "negative weight at index " + std::to_string(k));
    }
    total += m.weights[k];
    const auto& u = m.unitaries[k];
    if (u.rows() != d || u.cols() != d) {
      fail(ErrorCode::InvalidDecomposition, "unitary " + std::to_string(k) + " has wrong shape");
    }
    if (!is_unitary(u)) fail(ErrorCode::InvalidDecomposition, "operator " + std::to_string(k) + " is not unitary");
  }
  if (std::abs(total - 1.0) > tol::kWeightSum) {
    fail(ErrorCode::InvalidDecomposition, "weights sum to " + std::to_string(total));
  }
}

ChoiMatrix choi_from_kraus(const KrausDecomposition& k) {
  if (k.operators.empty()) fail(ErrorCode::InvalidKraus, "no Kraus operators");
  ValidationReport report;
  for (const auto& a : k.operators) require_shape(a, k.dim, k.dim, "Kraus operator");
  fill_operator_sums(report, k.dim, k.operators);
  if (report.tp_violation > tol::kChannel) {
    fail(ErrorCode::InvalidKraus, "sum A^dagger A deviates from identity by " + std::to_string(report.tp_violation));
  }
  return {k.dim, choi_of_operators(k.dim, k.operators, nullptr)};
}

KrausDecomposition kraus_from_choi(const ChoiMatrix& c) {
  const Index d = c.dim;
  require_shape(c.matrix, d * d, d * d, "Choi matrix");
  const EigenDecomposition eig = hermitian_eig(c.matrix);
  const double lmin = eig.values(eig.values.size() - 1);
  if (lmin < -tol::kPsd) fail(ErrorCode::NotPSD, "minimum Choi eigenvalue " + std::to_string(lmin));
  const double tp = (static_cast<double>(d) * partial_trace_sys(c.matrix, d, d) - ComplexMatrix::Identity(d, d)).norm();
  if (tp > tol::kChannel) fail(ErrorCode::NotTracePreserving, "output marginal deviates by " + std::to_string(tp));

  KrausDecomposition out{d, {}};
  const double lmax = eig.values(0);
  for (Index i = 0; i < eig.values.size(); ++i) {
    const double p = eig.values(i);
    if (p <= tol::kRank * lmax) break;
    out.operators.push_back(std::sqrt(static_cast<double>(d) * p) * unvec(eig.vectors.col(i), d));
  }
  return out;
}

ChoiMatrix to_choi(const ChannelRep& rep) {
  return std::visit(Overloaded{
                        [](const KrausDecomposition& k) {
                          return ChoiMatrix{k.dim, choi_of_operators(k.dim, k.operators, nullptr)};
                        },
                        [](const ChoiMatrix& c) {
                          require_shape(c.matrix, c.dim * c.dim, c.dim * c.dim, "Choi matrix");
                          return c;
                        },
                        [](const MixedUnitaryDecomposition& m) {
                          if (m.weights.size() != m.unitaries.size()) {
                            fail(ErrorCode::InvalidDecomposition, "weights and unitaries differ in length");
                          }
                          const Index d = m.unitaries.empty() ? Index{0} : m.unitaries.front().rows();
                          return ChoiMatrix{d, choi_of_operators(d, m.unitaries, &m.weights)};
                        },
                    },
                    rep);
}

ComplexMatrix apply_channel(const ChannelRep& rep, const ComplexMatrix& x) {
  const Index d = channel_dim(rep);
  require_shape(x, d, d, "apply_channel input");
  return std::visit(Overloaded{
                        [&](const KrausDecomposition& k) {
                          ComplexMatrix y = ComplexMatrix::Zero(d, d);
                          for (const auto& a : k.operators) y.noalias() += a * x * a.adjoint();
                          return y;
                        },
                        [&](const ChoiMatrix& c) {
                          require_shape(c.matrix, d * d, d * d, "Choi matrix");
                          // T(X)[a,b] = d * sum_ij C[a*d+i, b*d+j] X[i,j]
                          ComplexMatrix y = ComplexMatrix::Zero(d, d);
                          for (Index a = 0; a < d; ++a) {
                            for (Index b = 0; b < d; ++b) {
                              y(a, b) = static_cast<double>(d) *
                                        c.matrix.block(a * d, b * d, d, d).cwiseProduct(x).sum();
                            }
                          }
                          return y;
                        },
                        [&](const MixedUnitaryDecomposition& m) {
                          ComplexMatrix y = ComplexMatrix::Zero(d, d);
                          for (std::size_t k = 0; k < m.size(); ++k) {
                            y.noalias() += m.weights[k] * (m.unitaries[k] * x * m.unitaries[k].adjoint());
                          }
                          return y;
                        },
                    },
                    rep);
}

ValidationReport validate(const ChannelRep& rep) {
  ValidationReport report;
  const ChoiMatrix c = to_choi(rep);
  const Index d = c.dim;

  const double asym = (c.matrix - c.matrix.adjoint()).norm();
  if (asym > tol::kHermitian * std::max(c.matrix.norm(), 1.0)) {
    report.cp_violation = asym;
  } else {
    const EigenDecomposition eig = hermitian_eig(c.matrix);
    report.cp_violation = std::max(0.0, -eig.values(eig.values.size() - 1));
  }

  if (const auto* k = std::get_if<KrausDecomposition>(&rep)) {
    fill_operator_sums(report, d, k->operators);
  } else if (const auto* mu = std::get_if<MixedUnitaryDecomposition>(&rep)) {
    fill_operator_sums(report, d, mu->unitaries, &mu->weights);
  } else {
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    report.tp_violation = (static_cast<double>(d) * partial_trace_sys(c.matrix, d, d) - id).norm();
    report.unital_violation = (static_cast<double>(d) * partial_trace_env(c.matrix, d, d) - id).norm();
  }

  report.completely_positive = report.cp_violation <= tol::kPsd;
  report.trace_preserving = report.tp_violation <= tol::kChannel;
  report.unital = report.unital_violation <= tol::kChannel;
  return report;
}

std::size_t kraus_rank(const ChannelRep& rep) {
  const ValidationReport report = validate(rep);
  if (!report.completely_positive) {
    fail(ErrorCode::NotCP, "Choi matrix has negative eigenvalue of magnitude " + std::to_string(report.cp_violation));
  }
  if (!report.trace_preserving) {
    fail(ErrorCode::NotTracePreserving, "trace-preservation violation " + std::to_string(report.tp_violation));
  }
  const EigenDecomposition eig = hermitian_eig(to_choi(rep).matrix);
  const double lmax = eig.values(0);
  std::size_t rank = 0;
  for (Index i = 0; i < eig.values.size(); ++i) {
    if (eig.values(i) > tol::kRank * lmax) ++rank;
  }
  return rank;
}

double choi_distance(const ChannelRep& lhs, const ChannelRep& rhs) {
  const ChoiMatrix a = to_choi(lhs);
  const ChoiMatrix b = to_choi(rhs);
  if (a.dim != b.dim) fail(ErrorCode::DimensionMismatch, "channels act on different dimensions");
  return (a.matrix - b.matrix).norm();
}

}  // namespace qdilate

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

#include "qdilate/schmidt.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>
#include <thread>

#include "qdilate/errors.hpp"
#include "qdilate/random.hpp"

namespace qdilate {

ComplexMatrix realign(const ComplexMatrix& y, Index d1, Index d2) {
  if (y.rows() != d1 * d2 || y.cols() != d1 * d2) {
    fail(ErrorCode::DimensionMismatch, "realign: operator side " + std::to_string(y.rows()) + " != " +
                                           std::to_string(d1) + "*" + std::to_string(d2));
  }
  ComplexMatrix r(d1 * d1, d2 * d2);
  for (Index i = 0; i < d1; ++i) {
    for (Index j = 0; j < d1; ++j) {
      for (Index k = 0; k < d2; ++k) {
        for (Index l = 0; l < d2; ++l) r(i * d1 + j, k * d2 + l) = y(i * d2 + k, j * d2 + l);
      }
    }
  }
  return r;
}

ComplexMatrix unrealign(const ComplexMatrix& r, Index d1, Index d2) {
  if (r.rows() != d1 * d1 || r.cols() != d2 * d2) {
    fail(ErrorCode::DimensionMismatch, "unrealign: expected a d1^2 x d2^2 matrix");
  }
  ComplexMatrix y(d1 * d2, d1 * d2);
  for (Index i = 0; i < d1; ++i) {
    for (Index j = 0; j < d1; ++j) {
      for (Index k = 0; k < d2; ++k) {
        for (Index l = 0; l < d2; ++l) y(i * d2 + k, j * d2 + l) = r(i * d1 + j, k * d2 + l);
      }
    }
  }
  return y;
}

OperatorSchmidtDecomposition operator_schmidt_decomposition(const ComplexMatrix& y, Index d1, Index d2) {
  const SingularValueDecomposition s = svd(realign(y, d1, d2));
  OperatorSchmidtDecomposition out;
  out.singulars = s.singulars;
  const double smax = s.singulars.size() > 0 ? s.singulars(0) : 0.0;
  for (Index i = 0; i < s.singulars.size(); ++i) {
    if (!(s.singulars(i) > tol::kRank * smax)) break;
    out.coefficients.push_back(s.singulars(i));
    out.left_ops.push_back(unvec(s.left.col(i), d1));
    out.right_ops.push_back(unvec(s.right.col(i).conjugate(), d2));
  }
  return out;
}

std::size_t operator_schmidt_rank(const ComplexMatrix& y, Index d1, Index d2) {
  return operator_schmidt_decomposition(y, d1, d2).rank();
}

RankEqualityCheck check_rank_equality(const DilationUnitary& u, Index d, Index n) {
  const ChoiMatrix channel = noisy_operation_channel(u, d, n);
  const OperatorSchmidtDecomposition osd = operator_schmidt_decomposition(u.matrix, d, n);

  RankEqualityCheck out;
  out.kraus_rank = kraus_rank(channel);
  out.schmidt_rank = osd.rank();
  out.equal = out.kraus_rank == out.schmidt_rank;
  const double smax = osd.singulars.size() > 0 ? osd.singulars(0) : 0.0;
  for (Index i = 0; i < osd.singulars.size(); ++i) {
    const double r = smax > 0.0 ? osd.singulars(i) / smax : 0.0;
    if (r > tol::kRank && r * r <= tol::kRank) out.ambiguous = true;
  }

  // Rescaling B_i -> sqrt(n) B_i moves 1/sqrt(n) onto the system side, and
  // the system operators become Kraus operators as they stand.
  KrausDecomposition kraus{d, {}};
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t i = 0; i < osd.rank(); ++i) {
    kraus.operators.push_back(osd.coefficients[i] * inv_sqrt_n * osd.left_ops[i]);
  }
  out.schmidt_kraus_distance = choi_distance(kraus, channel);
  return out;
}

namespace {

void census_range(Index d, Index n, std::uint64_t seed, std::size_t begin, std::size_t end, RankHistogram& h) {
  for (std::size_t t = begin; t < end; ++t) {
    Rng rng(seed, t);
    const DilationUnitary u{n, haar_unitary(d * n, rng)};
    const std::size_t rank = kraus_rank(noisy_operation_channel(u, d, n));
    ++h.counts[rank];

    const OperatorSchmidtDecomposition osd = operator_schmidt_decomposition(u.matrix, d, n);
    if (osd.rank() != rank) ++h.rank_mismatches;
    const double smallest = osd.coefficients.back() / osd.coefficients.front();
    h.min_gap = std::min(h.min_gap, smallest);
    if (osd.rank() < static_cast<std::size_t>(osd.singulars.size())) {
      h.max_dropped = std::max(h.max_dropped, osd.singulars(static_cast<Index>(osd.rank())) / osd.coefficients.front());
    }
  }
}

}  // namespace

RankHistogram rank_census(Index d, Index n, std::size_t trials, std::uint64_t seed, unsigned threads) {
  if (trials == 0) fail(ErrorCode::InvalidArgument, "census needs at least one trial");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, trials));

  std::vector<RankHistogram> parts(threads);
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (trials + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::size_t begin = std::min(trials, w * chunk);
      const std::size_t end = std::min(trials, begin + chunk);
      workers.emplace_back([=, &parts, &errors] {
        try {
          census_range(d, n, seed, begin, end, parts[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  RankHistogram out;
  out.trials = trials;
  out.seed = seed;
  for (const auto& part : parts) {
    for (const auto& [rank, count] : part.counts) out.counts[rank] += count;
    out.min_gap = std::min(out.min_gap, part.min_gap);
    out.max_dropped = std::max(out.max_dropped, part.max_dropped);
    out.rank_mismatches += part.rank_mismatches;
  }
  return out;
}

}  // namespace qdilate

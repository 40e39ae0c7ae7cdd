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

#include "qdilate/rebalance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "qdilate/errors.hpp"

namespace qdilate {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kOrderTol = 1e-12;
constexpr double kModulusTol = 1e-9;
// Entries of p within this of their target count as matched.
constexpr double kMatchTol = 1e-13;
// Largest leftover mismatch absorbed by snapping once no T-transform applies.
constexpr double kLeftoverTol = 1e-10;
constexpr int kMaxBisection = 200;

double wrap_angle(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

std::vector<double> sorted_desc(std::span<const double> v) {
  std::vector<double> out(v.begin(), v.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

ComplexMatrix phase_diag(double angle) {
  ComplexMatrix w = ComplexMatrix::Identity(2, 2);
  w(0, 0) = std::polar(1.0, angle);
  return w;
}

}  // namespace

void check_prob_vector(std::span<const double> p) {
  if (p.empty()) fail(ErrorCode::InvalidWeights, "empty probability vector");
  double total = 0.0;
  for (double x : p) {
    if (!(x >= 0.0) || !std::isfinite(x)) fail(ErrorCode::InvalidWeights, "entry " + std::to_string(x) + " is not a probability");
    total += x;
  }
  if (std::abs(total - 1.0) > tol::kWeightSum) {
    fail(ErrorCode::InvalidWeights, "probabilities sum to " + std::to_string(total));
  }
}

void check_rebalance_weights(const RebalanceWeights& w) {
  const bool ordered = w.a + kOrderTol >= w.b && w.b + kOrderTol >= w.c && w.c + kOrderTol >= w.d && w.d >= 0.0;
  if (!ordered) fail(ErrorCode::InvalidWeights, "weights must satisfy a >= b >= c >= d >= 0");
  if (std::abs((w.a + w.d) - (w.b + w.c)) > kOrderTol) {
    fail(ErrorCode::InvalidWeights, "weights must satisfy a + d = b + c");
  }
}

bool majorizes(std::span<const double> p, std::span<const double> q) {
  check_prob_vector(p);
  check_prob_vector(q);
  const auto ps = sorted_desc(p);
  const auto qs = sorted_desc(q);
  const std::size_t len = std::max(ps.size(), qs.size());
  double sp = 0.0;
  double sq = 0.0;
  for (std::size_t j = 0; j < len; ++j) {
    sp += j < ps.size() ? ps[j] : 0.0;
    sq += j < qs.size() ? qs[j] : 0.0;
    if (sp < sq - tol::kWeightSum) return false;
  }
  return true;
}

RelativeDiagonalization diagonalize_relative(const ComplexMatrix& u1, const ComplexMatrix& u2) {
  if (u1.rows() != 2 || u1.cols() != 2 || u2.rows() != 2 || u2.cols() != 2) {
    fail(ErrorCode::DimensionMismatch, "relative diagonalization is defined for 2x2 unitaries");
  }
  if (!is_unitary(u1) || !is_unitary(u2)) fail(ErrorCode::NotUnitary, "relative diagonalization needs unitaries");

  const ComplexMatrix w = u1.adjoint() * u2;
  const Complex mean = 0.5 * w.trace();
  const Complex disc = std::sqrt(mean * mean - w.determinant());

  ComplexMatrix s = ComplexMatrix::Identity(2, 2);
  if (std::abs(disc) > 1e-14) {
    // W - mean has eigenvalues +-disc; rotating by conj(disc)/|disc| makes
    // it Hermitian with a spectral gap of 2|disc|.
    ComplexMatrix h = (std::conj(disc) / std::abs(disc)) * (w - mean * ComplexMatrix::Identity(2, 2));
    h = (0.5 * (h + h.adjoint())).eval();
    s = hermitian_eig(h).vectors;
  }
  const ComplexMatrix dm = s.adjoint() * w * s;
  RelativeDiagonalization out;
  out.s = s;
  out.z1 = dm(0, 0) / std::abs(dm(0, 0));
  out.z2 = dm(1, 1) / std::abs(dm(1, 1));
  out.theta = wrap_angle(std::arg(out.z1 * std::conj(out.z2)));
  return out;
}

double phase_residual(const RebalanceWeights& w, double theta, double alpha) {
  const auto [a, b, c, d] = w;
  return a * a + b * b - c * c + d * d + 2.0 * a * d * std::cos(theta) - 2.0 * a * b * std::cos(alpha) -
         2.0 * d * b * std::cos(theta - alpha);
}

double solve_alpha(const RebalanceWeights& w, double theta) {
  check_rebalance_weights(w);
  if (w.a <= 0.0) fail(ErrorCode::DegenerateWeights, "all weights are zero");
  if (theta == 0.0) return 0.0;

  const double scale = w.a * w.a + w.b * w.b + w.c * w.c + w.d * w.d + 1.0;
  double lo = 0.0;
  double hi = theta;
  double flo = phase_residual(w, theta, lo);
  double fhi = phase_residual(w, theta, hi);
  if (flo > 1e-12 * scale || fhi < -1e-12 * scale) {
    fail(ErrorCode::ConvergenceFailure, "phase equation has no sign change on [0, theta]");
  }
  if (flo >= 0.0) return lo;
  if (fhi <= 0.0) return hi;

  // Bisect to full double resolution.
  for (int it = 0; it < kMaxBisection; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fmid = phase_residual(w, theta, mid);
    if (fmid == 0.0) return mid;
    if (fmid < 0.0) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
      fhi = fmid;
    }
  }
  return std::abs(flo) <= std::abs(fhi) ? lo : hi;
}

double solve_beta(const RebalanceWeights& w, double theta, double alpha) {
  const Complex rest = w.a + w.d * std::polar(1.0, theta) - w.b * std::polar(1.0, alpha);
  if (std::abs(std::abs(rest) - w.c) > kModulusTol) {
    fail(ErrorCode::InconsistentAlpha, "|a + d e^{i theta} - b e^{i alpha}| = " + std::to_string(std::abs(rest)) +
                                           " but c = " + std::to_string(w.c));
  }
  if (w.c == 0.0) return 0.0;
  return wrap_angle(std::arg(rest));
}

std::pair<ComplexMatrix, ComplexMatrix> rebalance_pair(const RebalanceWeights& w, const ComplexMatrix& u1,
                                                         const ComplexMatrix& u2) {
  check_rebalance_weights(w);
  if (!is_unitary(u1) || !is_unitary(u2)) fail(ErrorCode::NotUnitary, "weight exchange needs unitaries");
  if (w.d <= 0.0) return {u1, u1};
  if (w.a == w.b) return {u1, u2};

  const RelativeDiagonalization rel = diagonalize_relative(u1, u2);
  const double alpha = solve_alpha(w, rel.theta);
  const double beta = solve_beta(w, rel.theta, alpha);
  const ComplexMatrix base = u1 * rel.s;
  return {base * phase_diag(alpha) * rel.s.adjoint(), base * phase_diag(beta) * rel.s.adjoint()};
}

ReweightResult reweight(const MixedUnitaryDecomposition& m, std::span<const double> q) {
  check_mixed_unitary(m);
  check_prob_vector(q);
  if (!majorizes(m.weights, q)) fail(ErrorCode::NotMajorized, "source weights do not majorize the target");

  const Index dim = m.unitaries.front().rows();
  const std::size_t k = std::max(m.size(), q.size());

  // Stable descending order of the source, zero-padded with inert identities.
  std::vector<std::size_t> order(m.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return m.weights[x] > m.weights[y]; });
  std::vector<double> p(k, 0.0);
  std::vector<ComplexMatrix> units(k, ComplexMatrix::Identity(dim, dim));
  for (std::size_t i = 0; i < m.size(); ++i) {
    p[i] = m.weights[order[i]];
    units[i] = m.unitaries[order[i]];
  }
  std::vector<double> target = sorted_desc(q);
  target.resize(k, 0.0);

  auto snap_matched = [&] {
    for (std::size_t i = 0; i < k; ++i) {
      if (std::abs(p[i] - target[i]) <= kMatchTol) p[i] = target[i];
    }
  };
  snap_matched();

  ReweightResult result;
  while (true) {
    std::size_t n = k;
    for (std::size_t i = k; i-- > 0;) {
      if (target[i] < p[i]) {
        n = i;
        break;
      }
    }
    std::size_t mm = k;
    if (n < k) {
      for (std::size_t i = n + 1; i < k; ++i) {
        if (target[i] > p[i]) {
          mm = i;
          break;
        }
      }
    }
    if (n == k || mm == k) break;
    if (result.steps.size() + 1 > k - 1) {
      fail(ErrorCode::ConvergenceFailure, "T-transform schedule exceeded k - 1 steps");
    }

    const double surplus = p[n] - target[n];
    const double deficit = target[mm] - p[mm];
    const double delta = std::min(surplus, deficit);
    RebalanceWeights w{p[n], p[n] - delta, p[mm] + delta, p[mm]};
    if (surplus <= deficit) w.b = target[n];
    if (deficit <= surplus) w.c = target[mm];

    auto [v, u] = rebalance_pair(w, units[n], units[mm]);
    p[n] = w.b;
    p[mm] = w.c;
    units[n] = v;
    units[mm] = u;
    snap_matched();
    result.steps.push_back(TTransformStep{n, mm, delta, std::move(v), std::move(u), p});
  }

  double leftover = 0.0;
  for (std::size_t i = 0; i < k; ++i) leftover = std::max(leftover, std::abs(p[i] - target[i]));
  if (leftover > kLeftoverTol) {
    fail(ErrorCode::ConvergenceFailure, "weights differ from target by " + std::to_string(leftover));
  }
  result.decomposition.weights = std::move(target);
  result.decomposition.unitaries = std::move(units);
  return result;
}

MixedUnitaryDecomposition uniformize(const MixedUnitaryDecomposition& m) {
  const std::vector<double> q(m.size(), 1.0 / static_cast<double>(m.size()));
  return reweight(m, q).decomposition;
}

}  // namespace qdilate

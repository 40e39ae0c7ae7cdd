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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qdilate/canonical.hpp"
#include "qdilate/errors.hpp"
#include "qdilate/random.hpp"
#include "qdilate/rebalance.hpp"

using namespace qdilate;

namespace {

const ComplexMatrix kId = ComplexMatrix::Identity(2, 2);
constexpr double kPi = std::numbers::pi;

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::AssertionFailure;
}

double two_term_distance(const RebalanceWeights& w, const ComplexMatrix& u1, const ComplexMatrix& u2,
                         const ComplexMatrix& v1, const ComplexMatrix& v2) {
  return oracle::frobenius_distance(oracle::choi_of({u1, u2}, {w.a, w.d}), oracle::choi_of({v1, v2}, {w.b, w.c}));
}

double mixture_distance(const MixedUnitaryDecomposition& x, const MixedUnitaryDecomposition& y) {
  return oracle::frobenius_distance(oracle::choi_of(x.unitaries, x.weights), oracle::choi_of(y.unitaries, y.weights));
}

RebalanceWeights random_weights(Rng& rng) {
  // a >= b >= c >= d with a + d = b + c, then normalized
  const double a = rng.uniform();
  const double d = rng.uniform() * a;
  const double b = d + rng.uniform() * (a - d);
  const double c = a + d - b;
  RebalanceWeights w{a, std::max(b, c), std::min(b, c), d};
  const double s = w.a + w.d;
  return {w.a / s, w.b / s, w.c / s, w.d / s};
}

MixedUnitaryDecomposition random_mixture(Rng& rng, std::size_t k) {
  MixedUnitaryDecomposition m;
  m.weights = rng.dirichlet(k);
  for (std::size_t i = 0; i < k; ++i) m.unitaries.push_back(haar_unitary(2, rng));
  return m;
}

}  // namespace

TEST_CASE("check_prob_vector and check_rebalance_weights") {
  CHECK_NOTHROW(check_prob_vector(std::vector<double>{0.5, 0.5}));
  CHECK(code_of([] { check_prob_vector(std::vector<double>{0.5, 0.6}); }) == ErrorCode::InvalidWeights);
  CHECK(code_of([] { check_prob_vector(std::vector<double>{1.5, -0.5}); }) == ErrorCode::InvalidWeights);
  CHECK(code_of([] { check_prob_vector(std::vector<double>{}); }) == ErrorCode::InvalidWeights);
  CHECK_NOTHROW(check_rebalance_weights({0.7, 0.5, 0.5, 0.3}));
  CHECK(code_of([] { check_rebalance_weights({0.7, 0.5, 0.4, 0.3}); }) == ErrorCode::InvalidWeights);
  CHECK(code_of([] { check_rebalance_weights({0.5, 0.7, 0.3, 0.5}); }) == ErrorCode::InvalidWeights);
}

TEST_CASE("majorizes") {
  CHECK(majorizes(std::vector<double>{0.7, 0.3}, std::vector<double>{0.5, 0.5}));
  CHECK_FALSE(majorizes(std::vector<double>{0.5, 0.5}, std::vector<double>{0.7, 0.3}));
  CHECK(majorizes(std::vector<double>{0.5, 0.25, 0.25}, std::vector<double>{1.0 / 3, 1.0 / 3, 1.0 / 3}));
  CHECK(majorizes(std::vector<double>{0.3, 0.7}, std::vector<double>{0.5, 0.5}));
  CHECK(majorizes(std::vector<double>{1.0}, std::vector<double>{0.25, 0.25, 0.25, 0.25}));
  CHECK_FALSE(majorizes(std::vector<double>{0.25, 0.25, 0.25, 0.25}, std::vector<double>{1.0}));

  Rng rng(1);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t kp = 1 + rng.below(5);
    const std::size_t kq = 1 + rng.below(5);
    const auto p = rng.dirichlet(kp);
    const auto q = rng.dirichlet(kq);
    CHECK(majorizes(p, q) == oracle::majorizes(p, q));
  }
}

TEST_CASE("diagonalize_relative") {
  const auto trivial = diagonalize_relative(kId, kId);
  CHECK(trivial.theta == 0.0);
  CHECK(std::abs(trivial.z1 - 1.0) < 1e-15);
  CHECK(std::abs(trivial.z2 - 1.0) < 1e-15);
  CHECK(is_unitary(trivial.s));

  const auto z = diagonalize_relative(kId, pauli(3));
  CHECK(z.theta == doctest::Approx(kPi));
  CHECK(std::abs(std::abs(z.s(0, 0)) - 1.0) < 1e-14);

  const auto x = diagonalize_relative(kId, pauli(1));
  CHECK(x.theta == doctest::Approx(kPi));
  CHECK(std::abs(std::abs(x.s(0, 0)) - std::sqrt(0.5)) < 1e-14);
  CHECK(std::abs(std::abs(x.s(1, 0)) - std::sqrt(0.5)) < 1e-14);

  Rng rng(2);
  for (int t = 0; t < 500; ++t) {
    const ComplexMatrix u1 = haar_unitary(2, rng);
    ComplexMatrix u2 = haar_unitary(2, rng);
    if (t % 10 == 0) u2 = std::polar(1.0, rng.uniform()) * u1;
    const auto r = diagonalize_relative(u1, u2);
    CHECK(is_unitary(r.s, 1e-12));
    ComplexMatrix dm = ComplexMatrix::Zero(2, 2);
    dm(0, 0) = r.z1;
    dm(1, 1) = r.z2;
    CHECK((r.s.adjoint() * u1.adjoint() * u2 * r.s - dm).norm() < 1e-12);
    CHECK(r.theta >= 0.0);
    CHECK(r.theta < 2 * kPi);
    CHECK(std::abs(std::polar(1.0, r.theta) - r.z1 * std::conj(r.z2)) < 1e-12);
  }
  CHECK(code_of([] { diagonalize_relative(kId, 2.0 * kId); }) == ErrorCode::NotUnitary);
}

TEST_CASE("solve_alpha and solve_beta on the worked instance") {
  const RebalanceWeights w{0.7, 0.5, 0.5, 0.3};
  // f(alpha) reduces to 0.16 - 0.4 cos(alpha)
  CHECK(phase_residual(w, kPi, 0.3) == doctest::Approx(0.16 - 0.4 * std::cos(0.3)));
  const double alpha = solve_alpha(w, kPi);
  CHECK(alpha == doctest::Approx(std::acos(0.4)).epsilon(1e-14));
  CHECK(alpha == doctest::Approx(1.159279).epsilon(1e-6));
  CHECK(std::abs(oracle::phase_mismatch(0.7, 0.5, 0.5, 0.3, kPi, alpha)) < 1e-14);

  const double beta = solve_beta(w, kPi, alpha);
  CHECK(beta == doctest::Approx(5.123906).epsilon(1e-6));
  CHECK(beta == doctest::Approx(std::arg(Complex(0.2, -0.5 * std::sin(alpha))) + 2 * kPi).epsilon(1e-14));
}

TEST_CASE("solve_alpha edge cases") {
  CHECK(solve_alpha({0.6, 0.5, 0.4, 0.3}, 0.0) == 0.0);
  // a = b, c = d: alpha = 0 is admissible
  const RebalanceWeights eq{0.6, 0.6, 0.4, 0.4};
  const double a = solve_alpha(eq, 1.0);
  CHECK(std::abs(phase_residual(eq, 1.0, a)) < 1e-14);
  CHECK(code_of([] { solve_alpha({0.0, 0.0, 0.0, 0.0}, 1.0); }) == ErrorCode::DegenerateWeights);
  CHECK(code_of([] { solve_alpha({0.7, 0.5, 0.4, 0.3}, 1.0); }) == ErrorCode::InvalidWeights);

  CHECK(solve_beta({0.5, 0.5, 0.0, 0.0}, 1.0, 0.0) == 0.0);
  CHECK(solve_beta({0.6, 0.5, 0.4, 0.3}, 0.0, 0.0) == 0.0);
  CHECK(code_of([] { solve_beta({0.7, 0.5, 0.5, 0.3}, kPi, 0.1); }) == ErrorCode::InconsistentAlpha);
}

TEST_CASE("solve_alpha brackets a root for random instances") {
  Rng rng(3);
  for (int t = 0; t < 5000; ++t) {
    const RebalanceWeights w = random_weights(rng);
    const double theta = 2 * kPi * rng.uniform();
    const double scale = 1.0 + w.a * w.a + w.b * w.b + w.c * w.c + w.d * w.d;
    CHECK(phase_residual(w, theta, 0.0) <= 1e-12 * scale);
    CHECK(phase_residual(w, theta, theta) >= -1e-12 * scale);
    const double alpha = solve_alpha(w, theta);
    CHECK(alpha >= 0.0);
    CHECK(alpha <= theta);
    CHECK(std::abs(oracle::phase_mismatch(w.a, w.b, w.c, w.d, theta, alpha)) < 1e-12);
  }
}

TEST_CASE("rebalance_pair") {
  Rng rng(4);
  const ComplexMatrix u1 = haar_unitary(2, rng);
  const ComplexMatrix u2 = haar_unitary(2, rng);
  const auto [t1, t2] = rebalance_pair({1.0, 0.5, 0.5, 0.0}, u1, u2);
  CHECK((t1 - u1).norm() == 0.0);
  CHECK((t2 - u1).norm() == 0.0);

  const RebalanceWeights w{0.7, 0.5, 0.5, 0.3};
  const auto [v1, v2] = rebalance_pair(w, kId, pauli(3));
  const double alpha = std::acos(0.4);
  const double beta = solve_beta(w, kPi, alpha);
  ComplexMatrix e1 = kId;
  ComplexMatrix e2 = kId;
  e1(0, 0) = std::polar(1.0, alpha);
  e2(0, 0) = std::polar(1.0, beta);
  CHECK((v1 - e1).norm() < 1e-12);
  CHECK((v2 - e2).norm() < 1e-12);
  CHECK(two_term_distance(w, kId, pauli(3), v1, v2) <= 1e-10);

  const RebalanceWeights eq{0.6, 0.6, 0.4, 0.4};
  const auto [s1, s2] = rebalance_pair(eq, u1, u2);
  CHECK(two_term_distance(eq, u1, u2, s1, s2) <= 1e-12);

  for (int t = 0; t < 2000; ++t) {
    const RebalanceWeights r = random_weights(rng);
    const ComplexMatrix a = haar_unitary(2, rng);
    ComplexMatrix b = haar_unitary(2, rng);
    if (t % 20 == 0) b = a;
    if (t % 20 == 1) b = a * pauli(1 + static_cast<int>(rng.below(3)));
    const auto [x, y] = rebalance_pair(r, a, b);
    CHECK(is_unitary(x, 1e-12));
    CHECK(is_unitary(y, 1e-12));
    CHECK(two_term_distance(r, a, b, x, y) <= 1e-10);
  }
}

TEST_CASE("reweight examples") {
  const MixedUnitaryDecomposition m{{0.7, 0.3}, {kId, pauli(3)}};
  const auto same = reweight(m, std::vector<double>{0.7, 0.3});
  CHECK(same.steps.empty());
  CHECK(same.decomposition.weights == m.weights);
  CHECK((same.decomposition.unitaries[1] - pauli(3)).norm() == 0.0);

  const auto half = reweight(m, std::vector<double>{0.5, 0.5});
  REQUIRE(half.steps.size() == 1);
  CHECK(half.steps[0].n == 0);
  CHECK(half.steps[0].m == 1);
  CHECK(half.steps[0].delta == doctest::Approx(0.2));
  CHECK(half.decomposition.weights == std::vector<double>{0.5, 0.5});
  CHECK(mixture_distance(half.decomposition, m) <= 1e-10);

  Rng rng(5);
  MixedUnitaryDecomposition three{{0.5, 0.3, 0.2}, {haar_unitary(2, rng), haar_unitary(2, rng), haar_unitary(2, rng)}};
  const auto r3 = reweight(three, std::vector<double>{0.4, 0.35, 0.25});
  CHECK(r3.steps.size() <= 2);
  CHECK(mixture_distance(r3.decomposition, three) <= 1e-9);

  CHECK(code_of([&] { reweight(m, std::vector<double>{0.8, 0.2}); }) == ErrorCode::NotMajorized);
  CHECK(code_of([&] { reweight(m, std::vector<double>{0.8, 0.3}); }) == ErrorCode::InvalidWeights);
}

TEST_CASE("reweight follows the T-transform schedule") {
  Rng rng(6);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t k = 2 + rng.below(5);
    const auto m = random_mixture(rng, k);
    // q: convex mixture of permutations of p
    std::vector<double> q(k, 0.0);
    const auto mix = rng.dirichlet(3);
    for (double lam : mix) {
      std::vector<double> perm = m.weights;
      for (std::size_t i = k; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
      for (std::size_t i = 0; i < k; ++i) q[i] += lam * perm[i];
    }
    double s = 0.0;
    for (double x : q) s += x;
    for (double& x : q) x /= s;
    REQUIRE(oracle::majorizes(m.weights, q, 1e-12));

    const auto r = reweight(m, q);
    CHECK(r.steps.size() <= k - 1);
    CHECK(mixture_distance(r.decomposition, m) <= 1e-9);
    std::vector<double> sorted_q = q;
    std::sort(sorted_q.begin(), sorted_q.end(), std::greater<>());
    CHECK(r.decomposition.weights == sorted_q);
    for (const auto& step : r.steps) {
      CHECK(step.n < step.m);
      CHECK(step.delta > 0.0);
      CHECK(is_unitary(step.v, 1e-12));
      CHECK(is_unitary(step.w, 1e-12));
    }
  }
}

TEST_CASE("uniformize") {
  const MixedUnitaryDecomposition u{{0.5, 0.5}, {kId, pauli(1)}};
  const auto same = uniformize(u);
  CHECK(same.weights == u.weights);
  CHECK((same.unitaries[1] - pauli(1)).norm() == 0.0);

  const MixedUnitaryDecomposition m{{0.7, 0.3}, {kId, pauli(3)}};
  const auto two = uniformize(m);
  CHECK(two.weights == std::vector<double>{0.5, 0.5});
  CHECK(mixture_distance(two, m) <= 1e-10);

  const MixedUnitaryDecomposition pauli_example{{1.0 / 3, 1.0 / 3, 1.0 / 3}, {pauli(1), pauli(2), pauli(3)}};
  const auto four = uniformize(pad_decomposition(pauli_example, 4));
  CHECK(four.weights == std::vector<double>{0.25, 0.25, 0.25, 0.25});
  CHECK(mixture_distance(four, pauli_example) <= 1e-10);

  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    const auto r = random_mixture(rng, 1 + rng.below(6));
    const auto uni = uniformize(r);
    for (double w : uni.weights) CHECK(w == 1.0 / static_cast<double>(r.size()));
    CHECK(mixture_distance(uni, r) <= 1e-9);
  }
}

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

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qdilate/errors.hpp"
#include "qdilate/linalg.hpp"
#include "qdilate/random.hpp"

using namespace qdilate;

namespace {

ComplexMatrix diag2(Complex a, Complex b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST_CASE("hermitian_eig on diagonal and Pauli inputs") {
  auto e = hermitian_eig(diag2(2.0, -1.0));
  CHECK(e.values(0) == doctest::Approx(2.0));
  CHECK(e.values(1) == doctest::Approx(-1.0));
  CHECK((e.vectors.cwiseAbs() - RealMatrix::Identity(2, 2)).norm() < 1e-14);

  auto x = hermitian_eig(pauli(1));
  CHECK(x.values(0) == doctest::Approx(1.0));
  CHECK(x.values(1) == doctest::Approx(-1.0));
  // eigenvector (1,1)/sqrt2 up to phase
  const Complex overlap = (x.vectors.col(0).adjoint() * (ComplexVector(2) << 1.0, 1.0).finished())(0) / std::sqrt(2.0);
  CHECK(std::abs(overlap) == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eig reconstructs random Hermitian matrices") {
  Rng rng(11);
  for (Index n : {1, 2, 3, 4, 6, 8}) {
    for (int t = 0; t < 20; ++t) {
      const ComplexMatrix h = random_hermitian(n, rng);
      const auto e = hermitian_eig(h);
      CHECK((reconstruct(e) - h).norm() <= 1e-12 * std::max(1.0, h.norm()));
      CHECK((e.vectors.adjoint() * e.vectors - ComplexMatrix::Identity(n, n)).norm() < 1e-12);
      Eigen::VectorXd ref = oracle::eigenvalues(h).reverse();
      CHECK((ref - e.values).norm() < 1e-12 * std::max(1.0, h.norm()));
    }
  }
}

TEST_CASE("hermitian_eig handles degenerate spectra") {
  Rng rng(3);
  const ComplexMatrix u = haar_unitary(4, rng);
  ComplexMatrix d = ComplexMatrix::Zero(4, 4);
  d.diagonal() << 1.0, 1.0, 1.0, 0.0;
  const ComplexMatrix h = u * d * u.adjoint();
  const auto e = hermitian_eig(h);
  CHECK((reconstruct(e) - h).norm() < 1e-13);
  CHECK(std::abs(e.values(3)) < 1e-14);
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  ComplexMatrix m(2, 2);
  m << 1, 2, 0, 1;
  CHECK_THROWS_AS(hermitian_eig(m), Error);
  try {
    hermitian_eig(m);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHermitian);
  }
  CHECK_THROWS_AS(hermitian_eig(ComplexMatrix::Zero(2, 3)), Error);
}

TEST_CASE("svd on simple inputs") {
  auto s = svd(ComplexMatrix::Identity(2, 2));
  CHECK(s.singulars(0) == doctest::Approx(1.0));
  CHECK(s.singulars(1) == doctest::Approx(1.0));
  auto z = svd(diag2(3.0, 0.0));
  CHECK(z.singulars(0) == doctest::Approx(3.0));
  CHECK(z.singulars(1) == doctest::Approx(0.0));
  CHECK(is_unitary(z.left));
  CHECK(is_unitary(z.right));
  CHECK((reconstruct(z) - diag2(3.0, 0.0)).norm() < 1e-14);
}

TEST_CASE("svd reconstructs random and rank-deficient matrices of any shape") {
  Rng rng(5);
  for (auto [r, c] : std::vector<std::pair<Index, Index>>{{4, 4}, {2, 5}, {5, 2}, {16, 4}, {4, 16}, {1, 3}, {9, 9}}) {
    for (int t = 0; t < 10; ++t) {
      ComplexMatrix m = ginibre(r, c, rng);
      if (t % 2 == 1 && std::min(r, c) > 1) {
        // force rank 1
        m = ginibre(r, 1, rng) * ginibre(1, c, rng);
      }
      const auto s = svd(m);
      CHECK(s.left.rows() == r);
      CHECK(s.right.rows() == c);
      CHECK(s.singulars.size() == std::min(r, c));
      CHECK(is_unitary(s.left, 1e-12));
      CHECK(is_unitary(s.right, 1e-12));
      CHECK((reconstruct(s) - m).norm() <= 1e-12 * std::max(1.0, m.norm()));
      for (Index i = 1; i < s.singulars.size(); ++i) CHECK(s.singulars(i) <= s.singulars(i - 1));
      CHECK((oracle::singular_values(m) - s.singulars).norm() < 1e-12 * std::max(1.0, m.norm()));
    }
  }
}

TEST_CASE("kron") {
  CHECK((kron(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)) - ComplexMatrix::Identity(4, 4)).norm() == 0.0);
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected.diagonal() << 1, 1, -1, -1;
  CHECK((kron(pauli(3), ComplexMatrix::Identity(2, 2)) - expected).norm() == 0.0);

  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix a = random_hermitian(2, rng);
    const ComplexMatrix b = random_hermitian(2, rng);
    const Eigen::VectorXd ea = oracle::eigenvalues(a);
    const Eigen::VectorXd eb = oracle::eigenvalues(b);
    std::vector<double> products;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) products.push_back(ea(i) * eb(j));
    }
    std::sort(products.begin(), products.end());
    const Eigen::VectorXd ek = oracle::eigenvalues(kron(a, b));
    for (int i = 0; i < 4; ++i) CHECK(ek(i) == doctest::Approx(products[static_cast<std::size_t>(i)]).epsilon(1e-12));
  }
  const ComplexMatrix a = ginibre(2, 3, rng);
  const ComplexMatrix b = ginibre(3, 2, rng);
  const ComplexMatrix k = kron(a, b);
  CHECK(k.rows() == 6);
  CHECK(k.cols() == 6);
  CHECK(k(1 * 3 + 2, 2 * 2 + 1) == a(1, 2) * b(2, 1));
}

TEST_CASE("partial traces") {
  Rng rng(2);
  const ComplexMatrix a = ginibre(2, 2, rng);
  CHECK((partial_trace_env(kron(a, ComplexMatrix::Identity(2, 2) / 2.0), 2, 2) - a).norm() < 1e-15);
  for (Index n : {2, 3, 4}) {
    const ComplexMatrix b = ginibre(n, n, rng);
    const ComplexMatrix y = kron(a, b);
    CHECK((partial_trace_env(y, 2, n) - b.trace() * a).norm() < 1e-13);
    CHECK((partial_trace_sys(y, 2, n) - a.trace() * b).norm() < 1e-13);
    const ComplexMatrix r = ginibre(2 * n, 2 * n, rng);
    CHECK(std::abs(partial_trace_env(r, 2, n).trace() - r.trace()) < 1e-13);
  }
  CHECK((partial_trace_env(ComplexMatrix::Identity(4, 4), 2, 2) - 2.0 * ComplexMatrix::Identity(2, 2)).norm() == 0.0);
  CHECK_THROWS_AS(partial_trace_env(ComplexMatrix::Identity(5, 5), 2, 2), Error);
}

TEST_CASE("hs_inner") {
  CHECK(std::abs(hs_inner(pauli(1), pauli(2))) < 1e-15);
  CHECK(hs_inner(pauli(1), pauli(1)) == Complex(2.0, 0.0));
  Rng rng(4);
  const ComplexMatrix a = ginibre(3, 3, rng);
  const ComplexMatrix b = ginibre(3, 3, rng);
  double sq = 0.0;
  for (Index i = 0; i < 3; ++i) {
    for (Index j = 0; j < 3; ++j) sq += std::norm(a(i, j));
  }
  CHECK(hs_inner(a, a).real() == doctest::Approx(sq));
  CHECK(std::abs(hs_inner(a, b) - std::conj(hs_inner(b, a))) < 1e-14);
  CHECK(std::abs(hs_inner(a, b) - (a.adjoint() * b).trace()) < 1e-13);
  CHECK_THROWS_AS(hs_inner(a, ComplexMatrix::Zero(2, 2)), Error);
}

TEST_CASE("is_unitary") {
  CHECK(is_unitary(pauli(2)));
  CHECK_FALSE(is_unitary(diag2(1.0, 2.0)));
  CHECK_FALSE(is_unitary(ComplexMatrix::Identity(2, 3)));
  Rng rng(6);
  ComplexMatrix p = ComplexMatrix::Identity(4, 4);
  for (int i = 0; i < 5; ++i) p = p * haar_unitary(4, rng);
  CHECK(is_unitary(p, 1e-10));
}

TEST_CASE("pauli algebra") {
  const Complex i(0.0, 1.0);
  CHECK((pauli(1) * pauli(2) - i * pauli(3)).norm() < 1e-15);
  for (int k = 0; k < 4; ++k) CHECK((pauli(k) - oracle::sigma(k)).norm() == 0.0);
  CHECK_THROWS_AS(pauli(4), Error);
}

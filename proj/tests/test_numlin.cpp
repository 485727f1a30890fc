// Copyright 2026 The dqdsim Authors
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


#include "dqd/numlin.hpp"
#include "test_support.hpp"

#include <catch_amalgamated.hpp>

#include <array>
#include <cmath>

using namespace dqd;
using Catch::Approx;

TEST_CASE("expm of sigma_x matches cos/sin closed form") {
  for (double theta : {0.0, 0.3, kPi / 4, 1.7, -2.2, 10.0}) {
    const CMatrix expected =
        std::cos(theta) * CMatrix::Identity(2, 2) - cplx(0, std::sin(theta)) * pauli_x();
    CHECK(max_abs(expm_hermitian(pauli_x(), theta) - expected) <= 1e-14);
  }
}

TEST_CASE("expm of a diagonal generator is elementwise") {
  Eigen::VectorXd lambda(4);
  lambda << -1.5, 0.0, 0.25, 3.0;
  const CMatrix h = lambda.cast<cplx>().asDiagonal();
  const double theta = 0.77;
  const CMatrix u = expm_hermitian(h, theta);
  for (int k = 0; k < 4; ++k) CHECK(std::abs(u(k, k) - std::polar(1.0, -theta * lambda(k))) <= 1e-14);
  CHECK(max_abs(u - CMatrix(u.diagonal().asDiagonal())) == 0.0);
}

TEST_CASE("expm rejects bad generators") {
  CMatrix nh = pauli_x();
  nh(0, 1) = 2;
  CHECK_THROWS_AS(expm_hermitian(nh, 1.0), NotHermitian);
  CHECK_THROWS_AS(expm_hermitian(CMatrix::Zero(2, 3), 1.0), DimensionMismatch);
  CHECK(max_abs(expm_hermitian(pauli_z(), 0.0) - CMatrix::Identity(2, 2)) == 0.0);
}

TEST_CASE("expm is additive in the angle and unitary (property)") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.integer(2, 6);
    const CMatrix h = rng.hermitian(n);
    const double a = rng.uniform(-2, 2), b = rng.uniform(-2, 2);
    const CMatrix ua = expm_hermitian(h, a), ub = expm_hermitian(h, b);
    CHECK(max_abs(ua * ub - expm_hermitian(h, a + b)) <= 1e-12);
    CHECK(unitarity_defect(ua) <= 1e-12);
    const CVector psi = rng.state(n);
    CHECK(std::abs((ua * psi).norm() - 1) <= 1e-12);
  }
}

TEST_CASE("expm works for single precision") {
  CMatrixT<float> h = CMatrixT<float>::Zero(2, 2);
  h(0, 1) = h(1, 0) = 1;
  const CMatrixT<float> u = expm_hermitian(h, 0.5f);
  CHECK(std::abs(u(0, 0) - std::complex<float>(std::cos(0.5f), 0)) <= 1e-6f);
  CHECK(unitarity_defect(u) <= 1e-6f);
}

TEST_CASE("dist_up_to_global_phase") {
  testing::Rng rng(5);
  SECTION("zero for phase multiples, symmetric") {
    for (int trial = 0; trial < 30; ++trial) {
      const CMatrix u = rng.unitary(4);
      const cplx c = std::polar(1.0, rng.uniform(-kPi, kPi));
      CHECK(dist_up_to_global_phase(CMatrix(c * u), u) <= 1e-14);
      const CMatrix v = rng.unitary(4);
      CHECK(dist_up_to_global_phase(u, v) == Approx(dist_up_to_global_phase(v, u)).margin(1e-12));
    }
  }
  SECTION("identity vs sigma_z is sqrt2 at c = +-i") {
    CHECK(dist_up_to_global_phase(CMatrix::Identity(2, 2), pauli_z()) ==
          Approx(std::sqrt(2.0)).margin(1e-9));
  }
  SECTION("shape mismatch") {
    CHECK_THROWS_AS(dist_up_to_global_phase(CMatrix::Identity(2, 2), CMatrix::Identity(3, 3)),
                    DimensionMismatch);
  }
}

TEST_CASE("kron, restrict_to and matmul") {
  const CMatrix k = kron(pauli_x(), pauli_z());
  CMatrix expected = CMatrix::Zero(4, 4);
  expected(0, 2) = 1;
  expected(1, 3) = -1;
  expected(2, 0) = 1;
  expected(3, 1) = -1;
  CHECK(max_abs(k - expected) == 0.0);
  const std::array<int, 2> idx{0, 2};
  const CMatrix r = restrict_to(k, idx);
  CHECK(r.rows() == 2);
  CHECK(r(0, 1) == cplx(1, 0));
  CHECK_THROWS_AS(matmul(CMatrix::Identity(2, 3), CMatrix::Identity(2, 2)), DimensionMismatch);
  CHECK(state_fidelity(CVector::Unit(2, 0), CVector::Unit(2, 1)) == 0.0);
}

TEST_CASE("hermiticity and unitarity predicates") {
  CHECK(is_hermitian(pauli_y()));
  CHECK_FALSE(is_hermitian(CMatrix(cplx(0, 1) * pauli_y())));
  CHECK(is_unitary(pauli_y()));
  CHECK_FALSE(is_unitary(CMatrix(2.0 * pauli_x())));
  CHECK(is_normalized(CVector::Unit(3, 1)));
}

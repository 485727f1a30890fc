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


#include "dqd/basis.hpp"
#include "test_support.hpp"

#include <catch_amalgamated.hpp>

using namespace dqd;
using Catch::Approx;

TEST_CASE("extended basis layout") {
  CHECK(ExtendedBasis::labels(0) == std::pair<std::string, std::string>{"+-", "+-"});
  CHECK(ExtendedBasis::labels(1) == std::pair<std::string, std::string>{"++", "--"});
  CHECK(ExtendedBasis::labels(2) == std::pair<std::string, std::string>{"+-", "-+"});
  CHECK(ExtendedBasis::labels(3) == std::pair<std::string, std::string>{"-+", "+-"});
  CHECK(ExtendedBasis::labels(4) == std::pair<std::string, std::string>{"--", "++"});
  CHECK(ExtendedBasis::label(5) == "-+,-+");
  CHECK(ExtendedBasis::computational_row(0, 0) == 0);
  CHECK(ExtendedBasis::computational_row(0, 1) == 2);
  CHECK(ExtendedBasis::computational_row(1, 0) == 3);
  CHECK(ExtendedBasis::computational_row(1, 1) == 5);
  CHECK(ExtendedBasis::is_leakage_row(1));
  CHECK(ExtendedBasis::is_leakage_row(4));
  CHECK_FALSE(ExtendedBasis::is_leakage_row(0));
  for (int r = 0; r < ExtendedBasis::kDim; ++r) {
    CHECK(ExtendedBasis::row_of(ExtendedBasis::configuration(r)) == r);
  }
  using L = DqdLevel;
  CHECK(ExtendedBasis::row_of({L::Plus, L::Plus, L::Plus, L::Plus}) == -1);
}

TEST_CASE("every configuration has two electrons per qubit pair balanced") {
  // Each row holds exactly two |+> and two |-> DQDs.
  for (int r = 0; r < ExtendedBasis::kDim; ++r) {
    int plus = 0;
    for (DqdLevel l : ExtendedBasis::configuration(r)) plus += l == DqdLevel::Plus;
    CHECK(plus == 2);
  }
}

TEST_CASE("TwoQubitState validation") {
  CHECK_THROWS(TwoQubitState(CVector::Zero(5)));
  CHECK(TwoQubitState::basis_state(3)[3] == cplx(1, 0));
  CHECK_THROWS(TwoQubitState::basis_state(6));
}

TEST_CASE("embed and project are inverse on the computational rows (property)") {
  testing::Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const CVector v = rng.state(4);
    const TwoQubitState s = embed_computational(v);
    CHECK((project_computational(s) - v).norm() <= 1e-14);
    CHECK(leakage_population(s) == 0.0);
    CHECK(s.is_normalized());
  }
  CHECK_THROWS(embed_computational(CVector::Zero(4)));
  CVector unnormalized = CVector::Zero(4);
  unnormalized(1) = 3;
  CHECK(embed_computational(unnormalized)[2] == cplx(1, 0));
}

TEST_CASE("dot occupation of single DQD levels") {
  const auto plus = dot_occupation_probability(CVector::Unit(2, 0));
  CHECK(plus.first == Approx(0.5));
  CHECK(plus.second == Approx(0.5));
  const auto minus = dot_occupation_probability(CVector::Unit(2, 1));
  CHECK(minus.first == Approx(0.5));
  CVector left(2);
  left << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  const auto l = dot_occupation_probability(left);
  CHECK(l.first == Approx(1.0).margin(1e-15));
  CHECK(l.second == Approx(0.0).margin(1e-15));
  CHECK_THROWS(dot_occupation_probability(CVector::Constant(2, 1.0)));
}

TEST_CASE("no charge transfer: every DQD stays at (0.5, 0.5) (property)") {
  testing::Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const TwoQubitState s(rng.state(6));
    for (int d = 0; d < 4; ++d) {
      const auto [p1, p2] = dqd_dot_occupation(s, d);
      CHECK(p1 == Approx(0.5).margin(1e-12));
      CHECK(p2 == Approx(0.5).margin(1e-12));
      CHECK(std::abs(reduced_dqd_density(s, d).trace() - 1.0) <= 1e-12);
    }
  }
  CHECK_THROWS(reduced_dqd_density(TwoQubitState::basis_state(0), 4));
}

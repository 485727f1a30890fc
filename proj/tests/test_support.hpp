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


#pragma once

#include "dqd/numlin.hpp"

#include <random>

namespace dqd::testing {

/// Fixed-seed generator for property tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  cplx gaussian() {
    std::normal_distribution<double> n;
    return {n(gen_), n(gen_)};
  }

  CMatrix hermitian(int n) {
    CMatrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = gaussian();
    return (a + a.adjoint()) / 2.0;
  }

  CVector state(int n) {
    CVector v(n);
    for (int i = 0; i < n; ++i) v(i) = gaussian();
    return v / v.norm();
  }

  CMatrix unitary(int n) { return expm_hermitian(hermitian(n), uniform(0.1, 3.0)); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace dqd::testing

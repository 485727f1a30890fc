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

#include <algorithm>
#include <stdexcept>

namespace dqd {
namespace {

constexpr DqdLevel P = DqdLevel::Plus;
constexpr DqdLevel M = DqdLevel::Minus;

constexpr std::array<Configuration, 6> kConfigs{{
    {P, M, P, M},
    {P, P, M, M},
    {P, M, M, P},
    {M, P, P, M},
    {M, M, P, P},
    {M, P, M, P},
}};

void check_row(int row) {
  if (row < 0 || row >= ExtendedBasis::kDim) {
    throw std::out_of_range("extended basis row " + std::to_string(row));
  }
}

}  // namespace

char level_char(DqdLevel l) { return l == DqdLevel::Plus ? '+' : '-'; }

const Configuration& ExtendedBasis::configuration(int row) {
  check_row(row);
  return kConfigs[row];
}

int ExtendedBasis::row_of(const Configuration& c) {
  const auto it = std::find(kConfigs.begin(), kConfigs.end(), c);
  return it == kConfigs.end() ? -1 : static_cast<int>(it - kConfigs.begin());
}

int ExtendedBasis::computational_row(int q1, int q2) {
  if ((q1 != 0 && q1 != 1) || (q2 != 0 && q2 != 1)) {
    throw std::invalid_argument("computational_row: qubit values must be 0 or 1");
  }
  return kComputationalRows[2 * q1 + q2];
}

bool ExtendedBasis::is_leakage_row(int row) {
  check_row(row);
  return row == kLeakageRows[0] || row == kLeakageRows[1];
}

std::pair<std::string, std::string> ExtendedBasis::labels(int row) {
  const auto& c = configuration(row);
  return {std::string{level_char(c[0]), level_char(c[1])},
          std::string{level_char(c[2]), level_char(c[3])}};
}

std::string ExtendedBasis::label(int row) {
  auto [a, b] = labels(row);
  return a + "," + b;
}

TwoQubitState::TwoQubitState(CVector amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() != ExtendedBasis::kDim) {
    throw DimensionMismatch("TwoQubitState needs 6 amplitudes, got " +
                            std::to_string(amps_.size()));
  }
}

TwoQubitState TwoQubitState::basis_state(int row) {
  check_row(row);
  CVector v = CVector::Zero(ExtendedBasis::kDim);
  v(row) = 1;
  return TwoQubitState(std::move(v));
}

TwoQubitState embed_computational(const CVector& v4) {
  if (v4.size() != 4) throw DimensionMismatch("embed_computational: need 4 amplitudes");
  const double n = v4.norm();
  if (!(n > 0)) throw std::invalid_argument("embed_computational: zero vector");
  CVector out = CVector::Zero(ExtendedBasis::kDim);
  for (int k = 0; k < 4; ++k) out(ExtendedBasis::kComputationalRows[k]) = v4(k) / n;
  return TwoQubitState(std::move(out));
}

CVector project_computational(const TwoQubitState& s) {
  CVector out(4);
  for (int k = 0; k < 4; ++k) out(k) = s[ExtendedBasis::kComputationalRows[k]];
  return out;
}

double leakage_population(const TwoQubitState& s) {
  return std::norm(s[ExtendedBasis::kLeakageRows[0]]) +
         std::norm(s[ExtendedBasis::kLeakageRows[1]]);
}

std::pair<double, double> dot_occupation_probability(const CVector& psi) {
  if (psi.size() != 2) throw DimensionMismatch("dot_occupation_probability: need 2 amplitudes");
  if (!is_normalized(psi)) {
    throw std::invalid_argument("dot_occupation_probability: amplitudes not normalized");
  }
  const double r = 1 / std::sqrt(2.0);
  // <L|psi> = (alpha + beta)/sqrt2, <R|psi> = (alpha - beta)/sqrt2 for real |L>, |R>.
  return {std::norm(r * (psi(0) + psi(1))), std::norm(r * (psi(0) - psi(1)))};
}

CMatrix reduced_dqd_density(const TwoQubitState& s, int dqd) {
  if (dqd < 0 || dqd > 3) throw std::out_of_range("dqd index " + std::to_string(dqd));
  CMatrix rho = CMatrix::Zero(2, 2);
  const auto level_index = [](DqdLevel l) { return l == DqdLevel::Plus ? 0 : 1; };
  for (int a = 0; a < ExtendedBasis::kDim; ++a) {
    for (int b = 0; b < ExtendedBasis::kDim; ++b) {
      const auto& ca = ExtendedBasis::configuration(a);
      const auto& cb = ExtendedBasis::configuration(b);
      bool others_agree = true;
      for (int k = 0; k < 4; ++k) {
        if (k != dqd && ca[k] != cb[k]) others_agree = false;
      }
      if (!others_agree) continue;
      rho(level_index(ca[dqd]), level_index(cb[dqd])) += s[a] * std::conj(s[b]);
    }
  }
  return rho;
}

std::pair<double, double> dqd_dot_occupation(const TwoQubitState& s, int dqd) {
  const CMatrix rho = reduced_dqd_density(s, dqd);
  CVector left(2), right(2);
  const double r = 1 / std::sqrt(2.0);
  left << r, r;
  right << r, -r;
  return {(left.adjoint() * rho * left)(0).real(), (right.adjoint() * rho * right)(0).real()};
}

}  // namespace dqd

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

#include <array>
#include <string>
#include <utility>

namespace dqd {

/// Lowest two levels of one double quantum dot: |+> symmetric, |-> antisymmetric.
enum class DqdLevel { Plus, Minus };

char level_char(DqdLevel l);

/// Levels of the four DQDs (D1 D2 | D3 D4); D1, D2 form qubit 1.
using Configuration = std::array<DqdLevel, 4>;

/// The ordered 6-configuration two-qubit space. Rows are 0-based here:
///   0:(+-,+-) 1:(++,--) 2:(+-,-+) 3:(-+,+-) 4:(--,++) 5:(-+,-+)
/// Computational rows are {0,2,3,5} (|00>,|01>,|10>,|11>), leakage rows {1,4}.
struct ExtendedBasis {
  static constexpr int kDim = 6;
  static constexpr std::array<int, 4> kComputationalRows{0, 2, 3, 5};
  static constexpr std::array<int, 2> kLeakageRows{1, 4};

  static const Configuration& configuration(int row);
  /// Row of a configuration, or -1 when it is outside the extended space.
  static int row_of(const Configuration& c);
  /// Row holding computational state |q1 q2>.
  static int computational_row(int q1, int q2);
  static bool is_leakage_row(int row);
  /// Qubit labels such as {"+-", "-+"} for row 2.
  static std::pair<std::string, std::string> labels(int row);
  static std::string label(int row);
};

/// Amplitudes over ExtendedBasis.
class TwoQubitState {
 public:
  explicit TwoQubitState(CVector amplitudes);

  static TwoQubitState basis_state(int row);

  const CVector& amplitudes() const { return amps_; }
  cplx operator[](int row) const { return amps_(row); }
  double norm() const { return amps_.norm(); }
  bool is_normalized(double tol = kAlgebraTol) const { return dqd::is_normalized(amps_, tol); }

 private:
  CVector amps_;
};

/// Embeds |00>,|01>,|10>,|11> amplitudes into rows {0,2,3,5} and normalizes.
TwoQubitState embed_computational(const CVector& v4);

/// Inverse of embed_computational on the computational rows (no renormalization).
CVector project_computational(const TwoQubitState& s);

/// |s_1|^2 + |s_4|^2 (0-based leakage rows).
double leakage_population(const TwoQubitState& s);

/// Probabilities of finding the electron in dot 1 / dot 2 for amplitudes
/// (alpha, beta) over {|+>, |->}; |L> = (|+>+|->)/sqrt2, |R> = (|+>-|->)/sqrt2.
std::pair<double, double> dot_occupation_probability(const CVector& level_superposition);

/// Reduced {|+>,|->} density matrix of DQD `dqd` (0..3) in a two-qubit state.
CMatrix reduced_dqd_density(const TwoQubitState& s, int dqd);

/// Dot occupation (dot 1, dot 2) of one DQD, from its reduced density.
std::pair<double, double> dqd_dot_occupation(const TwoQubitState& s, int dqd);

}  // namespace dqd

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

#include "dqd/basis.hpp"
#include "dqd/gates.hpp"
#include "dqd/numlin.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dqd {

/// Reduced Planck constant in ueV*ns. Amplitudes are energies in ueV and
/// durations in ns, so a segment's rotation angle is amplitude*duration/kHbar.
inline constexpr double kHbar = 0.6582119569;

struct InvalidSchedule : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A control electrode. E1/E2 tune the exchange between the two DQDs of
/// qubit 1/2, E12 the exchange between the adjacent DQDs of different
/// qubits, T1..T4 the tunnel coupling inside DQD j.
struct Electrode {
  enum class Kind { IntraExchange, InterExchange, Tunnel };
  Kind kind = Kind::InterExchange;
  int index = 0;  ///< qubit (1..2) for IntraExchange, DQD (1..4) for Tunnel

  static Electrode intra(int qubit) { return {Kind::IntraExchange, qubit}; }
  static Electrode inter() { return {Kind::InterExchange, 0}; }
  static Electrode tunnel(int dqd) { return {Kind::Tunnel, dqd}; }

  bool valid() const;
  std::string name() const;
  /// Parses "E1", "E2", "E12", "T1".."T4"; throws InvalidSchedule otherwise.
  static Electrode parse(std::string_view s);

  auto operator<=>(const Electrode&) const = default;
};

struct PulseSegment {
  Electrode electrode;
  double amplitude_ueV = 0;
  double duration_ns = 0;
};

/// Rectangular pulses applied in list order (first element acts first).
struct PulseSchedule {
  std::vector<PulseSegment> segments;

  bool empty() const { return segments.empty(); }
  std::size_t size() const { return segments.size(); }
  double total_duration_ns() const;
  /// `*this` followed by `next`.
  PulseSchedule then(const PulseSchedule& next) const;
};

/// H = A sigma_x + P sigma_z on {|0>, |1>}: [[P, A], [A, -P]].
CMatrix single_qubit_hamiltonian(double amplitude, double phase);

/// Lifts a 2x2 Hermitian qubit operator to the extended space. On the
/// computational rows it acts as h2 on `qubit` (1 or 2) and as identity on the
/// other qubit. The exchange-symmetric leakage configurations (++,--) and
/// (--,++) are decoupled and receive <s|h2|s> with s = (|0>+|1>)/sqrt2, so
/// sigma_x lifts to NOT_k and sigma_z to (T_{2k-1} - T_{2k})/2.
CMatrix extend_generator(const CMatrix& h2, int qubit);

/// The exchange generator between adjacent DQDs of the two qubits: E itself.
CMatrix inter_qubit_generator();

/// Tunnel-electrode generator of DQD j (1..4): +1 on configurations where
/// that DQD is |+>, -1 where it is |->.
CMatrix tunnel_generator(int dqd);

/// Unit-amplitude generators per electrode. The default model is
/// E_k -> extend_generator(sigma_x, k), T_j -> tunnel_generator(j),
/// E12 -> inter_qubit_generator().
class HamiltonianModel {
 public:
  HamiltonianModel();

  /// Replaces an electrode's generator; must be a 6x6 Hermitian matrix.
  void set_generator(const Electrode& e, CMatrix generator);
  const CMatrix& generator(const Electrode& e) const;
  /// amplitude * generator, in ueV.
  CMatrix hamiltonian(const PulseSegment& s) const;
  /// exp(-i H tau / hbar) of one segment.
  CMatrix segment_unitary(const PulseSegment& s) const;

 private:
  std::map<Electrode, CMatrix> generators_;
};

/// Ordered product of the segment exponentials (the identity for an empty
/// schedule).
CMatrix evolve(const PulseSchedule& schedule, const HamiltonianModel& model);
TwoQubitState evolve(const PulseSchedule& schedule, const HamiltonianModel& model,
                     const TwoQubitState& initial);
CMatrix evolve(const PulseSchedule& schedule, const HamiltonianModel& model,
               const CMatrix& initial);

/// Calibrated single-pulse (Not1, Not2, SqrtNot1, SqrtNot2, E, Identity6) or
/// composite (Swap, SqrtSwap as E.X1.X2.E) schedules for a gate at the given
/// positive amplitude. NOT takes t = pi*hbar/(2A); sqrtNOT takes half of that
/// with the amplitude sign reversed, which reproduces the transcribed
/// sqrtNOT rather than its adjoint.
PulseSchedule calibrate(GateId gate, double amplitude_ueV);

/// Phase flip on DQD j: T_j at amplitude P for pi*hbar/(2P).
PulseSchedule calibrate_phase_flip(int dqd, double amplitude_ueV);

}  // namespace dqd

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

#include "dqd/pulses.hpp"

#include <cmath>
#include <numeric>
#include <utility>

namespace dqd {

bool Electrode::valid() const {
  switch (kind) {
    case Kind::IntraExchange: return index == 1 || index == 2;
    case Kind::InterExchange: return index == 0;
    case Kind::Tunnel: return index >= 1 && index <= 4;
  }
  return false;
}

std::string Electrode::name() const {
  switch (kind) {
    case Kind::IntraExchange: return "E" + std::to_string(index);
    case Kind::InterExchange: return "E12";
    case Kind::Tunnel: return "T" + std::to_string(index);
  }
  return "?";
}

Electrode Electrode::parse(std::string_view s) {
  if (s == "E12") return inter();
  if (s == "E1" || s == "E2") return intra(s[1] - '0');
  if (s.size() == 2 && s[0] == 'T' && s[1] >= '1' && s[1] <= '4') return tunnel(s[1] - '0');
  throw InvalidSchedule("unknown electrode '" + std::string(s) + "'");
}

double PulseSchedule::total_duration_ns() const {
  return std::accumulate(segments.begin(), segments.end(), 0.0,
                         [](double acc, const PulseSegment& s) { return acc + s.duration_ns; });
}

PulseSchedule PulseSchedule::then(const PulseSchedule& next) const {
  PulseSchedule out = *this;
  out.segments.insert(out.segments.end(), next.segments.begin(), next.segments.end());
  return out;
}

CMatrix single_qubit_hamiltonian(double amplitude, double phase) {
  CMatrix h(2, 2);
  h << phase, amplitude, amplitude, -phase;
  return h;
}

CMatrix extend_generator(const CMatrix& h2, int qubit) {
  if (h2.rows() != 2 || h2.cols() != 2) throw DimensionMismatch("extend_generator: need 2x2");
  if (qubit != 1 && qubit != 2) throw std::invalid_argument("extend_generator: qubit must be 1 or 2");
  if (!is_hermitian(h2, kAlgebraTol * std::max(1.0, max_abs(h2)))) {
    throw NotHermitian("extend_generator: generator is not Hermitian");
  }
  const CMatrix id2 = CMatrix::Identity(2, 2);
  const CMatrix h4 = qubit == 1 ? kron(h2, id2) : kron(id2, h2);
  CMatrix h6 = CMatrix::Zero(6, 6);
  const auto& rows = ExtendedBasis::kComputationalRows;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) h6(rows[i], rows[j]) = h4(i, j);
  }
  const double leak = 0.5 * (h2(0, 0) + h2(1, 1)).real() + h2(0, 1).real();
  for (int r : ExtendedBasis::kLeakageRows) h6(r, r) = leak;
  return h6;
}

CMatrix inter_qubit_generator() { return gate_matrix(GateId::E); }

CMatrix tunnel_generator(int dqd) {
  if (dqd < 1 || dqd > 4) throw std::invalid_argument("tunnel_generator: DQD index must be 1..4");
  CMatrix h = CMatrix::Zero(6, 6);
  for (int r = 0; r < ExtendedBasis::kDim; ++r) {
    h(r, r) = ExtendedBasis::configuration(r)[dqd - 1] == DqdLevel::Plus ? 1.0 : -1.0;
  }
  return h;
}

HamiltonianModel::HamiltonianModel() {
  generators_[Electrode::intra(1)] = extend_generator(pauli_x(), 1);
  generators_[Electrode::intra(2)] = extend_generator(pauli_x(), 2);
  generators_[Electrode::inter()] = inter_qubit_generator();
  for (int j = 1; j <= 4; ++j) generators_[Electrode::tunnel(j)] = tunnel_generator(j);
}

void HamiltonianModel::set_generator(const Electrode& e, CMatrix generator) {
  if (!e.valid()) throw InvalidSchedule("invalid electrode " + e.name());
  if (generator.rows() != 6 || generator.cols() != 6) {
    throw DimensionMismatch("HamiltonianModel: generator must be 6x6");
  }
  if (!is_hermitian(generator, kAlgebraTol * std::max(1.0, max_abs(generator)))) {
    throw NotHermitian("HamiltonianModel: generator for " + e.name() + " is not Hermitian");
  }
  generators_[e] = std::move(generator);
}

const CMatrix& HamiltonianModel::generator(const Electrode& e) const {
  auto it = generators_.find(e);
  if (!e.valid() || it == generators_.end()) {
    throw InvalidSchedule("invalid electrode target " + e.name());
  }
  return it->second;
}

CMatrix HamiltonianModel::hamiltonian(const PulseSegment& s) const {
  return s.amplitude_ueV * generator(s.electrode);
}

CMatrix HamiltonianModel::segment_unitary(const PulseSegment& s) const {
  if (!(s.duration_ns >= 0) || !std::isfinite(s.duration_ns) || !std::isfinite(s.amplitude_ueV)) {
    throw InvalidSchedule("segment on " + s.electrode.name() + " has invalid duration/amplitude");
  }
  return expm_hermitian(generator(s.electrode), s.amplitude_ueV * s.duration_ns / kHbar);
}

CMatrix evolve(const PulseSchedule& schedule, const HamiltonianModel& model) {
  CMatrix u = CMatrix::Identity(6, 6);
  for (const auto& seg : schedule.segments) u = model.segment_unitary(seg) * u;
  return u;
}

TwoQubitState evolve(const PulseSchedule& schedule, const HamiltonianModel& model,
                     const TwoQubitState& initial) {
  if (!initial.is_normalized()) throw std::invalid_argument("evolve: initial state not normalized");
  CVector psi = initial.amplitudes();
  for (const auto& seg : schedule.segments) psi = model.segment_unitary(seg) * psi;
  return TwoQubitState(std::move(psi));
}

CMatrix evolve(const PulseSchedule& schedule, const HamiltonianModel& model,
               const CMatrix& initial) {
  if (initial.rows() != 6 || initial.cols() != 6) throw DimensionMismatch("evolve: need 6x6");
  if (!is_unitary(initial)) throw std::invalid_argument("evolve: initial matrix not unitary");
  return evolve(schedule, model) * initial;
}

namespace {

void require_positive(double amplitude) {
  if (!(amplitude > 0) || !std::isfinite(amplitude)) {
    throw std::invalid_argument("calibrate: amplitude must be positive");
  }
}

PulseSegment quarter_turn(Electrode e, double a) { return {e, a, kPi * kHbar / (2 * a)}; }

}  // namespace

PulseSchedule calibrate(GateId gate, double a) {
  require_positive(a);
  const auto sqrt_not = [a](int q) {
    return PulseSegment{Electrode::intra(q), -a, kPi * kHbar / (4 * a)};
  };
  switch (gate) {
    case GateId::Not1: return {{quarter_turn(Electrode::intra(1), a)}};
    case GateId::Not2: return {{quarter_turn(Electrode::intra(2), a)}};
    case GateId::SqrtNot1: return {{sqrt_not(1)}};
    case GateId::SqrtNot2: return {{sqrt_not(2)}};
    case GateId::E: return {{quarter_turn(Electrode::inter(), a)}};
    case GateId::Identity6: return {{{Electrode::inter(), 0.0, 0.0}}};
    case GateId::Swap:
      return {{quarter_turn(Electrode::inter(), a), quarter_turn(Electrode::intra(2), a),
               quarter_turn(Electrode::intra(1), a), quarter_turn(Electrode::inter(), a)}};
    case GateId::SqrtSwap:
      return {{quarter_turn(Electrode::inter(), a), sqrt_not(2), sqrt_not(1),
               quarter_turn(Electrode::inter(), a)}};
    default:
      throw std::invalid_argument("calibrate: no pulse realization for " +
                                  std::string(gate_name(gate)));
  }
}

PulseSchedule calibrate_phase_flip(int dqd, double a) {
  require_positive(a);
  if (dqd < 1 || dqd > 4) throw std::invalid_argument("calibrate_phase_flip: DQD must be 1..4");
  return {{quarter_turn(Electrode::tunnel(dqd), a)}};
}

}  // namespace dqd

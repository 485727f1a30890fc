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

#include "dqd/gates.hpp"
#include "dqd/numlin.hpp"
#include "dqd/pulses.hpp"

#include <cstddef>
#include <string>

namespace dqd {

/// Phase of one Z gate on the two leakage rows: exp(i (k * theta/2 + offset)).
struct LeakagePhase {
  int k_row1 = 0;  ///< multiplier for leakage row 1, configuration (++,--)
  int k_row4 = 0;  ///< multiplier for leakage row 4, configuration (--,++)
  double offset = 0;

  cplx phase(int leakage_row, double theta) const;
  bool operator==(const LeakagePhase&) const = default;
};

/// How the 4x4 phase-shift gate Z(theta) = diag(e^{-i theta/2}, e^{+i theta/2})
/// extends to the leakage rows, separately for Z on qubit 1 and on qubit 2.
struct PhaseEmbedding {
  LeakagePhase z1;
  LeakagePhase z2;

  /// Leakage rows untouched.
  static PhaseEmbedding trivial() { return {}; }
  /// What a single tunnel-electrode pulse on DQD 1 (resp. 3) would imprint.
  static PhaseEmbedding tunnel_electrode();
  std::string describe() const;
  bool operator==(const PhaseEmbedding&) const = default;
};

/// Diagonal Z(theta) on `qubit` (1 or 2) in the extended space.
CMatrix z_gate(int qubit, double theta, const PhaseEmbedding& emb);

/// [(Z1(pi/2) Z2(-pi/2)) sqrtSWAP]^2 (Z1(pi)) sqrtSWAP with the catalog sqrtSWAP.
CMatrix build_pi(const PhaseEmbedding& emb, const GateCatalog& catalog = GateCatalog{});

/// (1 x H) . build_pi(emb) . (1 x H).
CMatrix build_cnot(const PhaseEmbedding& emb, const GateCatalog& catalog = GateCatalog{});

struct EmbeddingSearchResult {
  PhaseEmbedding best;
  double residual = 0;           ///< dist_up_to_global_phase(build_pi(best), Pi)
  double trivial_residual = 0;   ///< same for PhaseEmbedding::trivial()
  double tunnel_residual = 0;    ///< same for PhaseEmbedding::tunnel_electrode()
  std::size_t evaluated = 0;
  bool reproduced = false;       ///< residual <= 1e-10
};

/// Exhaustive search over k in {-2..2} for each leakage row of Z1 and Z2 and
/// offsets {0, grid, 2 grid, ...} < 2 pi for each gate. Among residuals within
/// 1e-12 of the minimum the lexicographically smallest tuple
/// (k1(Z1), k4(Z1), k1(Z2), k4(Z2), offset(Z1), offset(Z2)) wins.
/// Throws std::invalid_argument unless grid divides 2 pi.
EmbeddingSearchResult search_embedding(double grid, const GateCatalog& catalog = GateCatalog{});

struct XorCheck {
  double residual = 0;          ///< min over the two conventions
  double residual_minus = 0;    ///< Z(theta) = diag(e^{-i theta/2}, e^{+i theta/2})
  double residual_plus = 0;     ///< the conjugate convention
  double unitarity_defect = 0;  ///< of the product in the winning convention
  std::string convention;
  CMatrix product;              ///< 4x4 product in the winning convention
};

/// The 4x4 XOR construction with the standard sqrtSWAP, compared with
/// diag(1,1,1,-1) up to global phase.
XorCheck verify_xor_4dim();

/// Gates reproduced from calibrated schedules under `model`, compared with
/// the catalog up to global phase at kPulseTol, plus leakage invariance of
/// intra-qubit schedules.
DecompositionReport verify_pulse_gates(const HamiltonianModel& model, double amplitude_ueV,
                                       const GateCatalog& catalog = GateCatalog{});

/// Pi, XOR and CNOT constructions with the embedding found at `grid`.
DecompositionReport verify_compiled_constructions(double grid,
                                                  const GateCatalog& catalog = GateCatalog{});

}  // namespace dqd

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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dqd {

/// Every 6x6 operator of the two-qubit extended space that the catalog knows.
enum class GateId {
  Not1,
  Not2,
  E,
  Swap,
  SqrtNot1,
  SqrtNot2,
  SqrtSwap,
  Pi,
  HadamardOnQ2,
  Cnot,
  Identity6,
};

inline constexpr std::array<GateId, 11> kAllGates{
    GateId::Not1,     GateId::Not2,     GateId::E,  GateId::Swap,         GateId::SqrtNot1,
    GateId::SqrtNot2, GateId::SqrtSwap, GateId::Pi, GateId::HadamardOnQ2, GateId::Cnot,
    GateId::Identity6};

std::string_view gate_name(GateId g);
/// Inverse of gate_name; std::nullopt for unknown names.
std::optional<GateId> parse_gate_id(std::string_view name);

/// The transcribed literal. Entries are exact in binary floating point
/// except the 1/sqrt2 of the Hadamard factor.
CMatrix gate_matrix(GateId g);

/// One line of a verification report.
struct ReportEntry {
  std::string name;
  double residual = 0;
  /// Required bound; empty for diagnostics that carry no claim.
  std::optional<double> tolerance;
  /// "algebra", "pulse", "compiled" or "diagnostic".
  std::string kind;

  bool passed() const { return !tolerance || residual <= *tolerance; }
};

/// Named residuals of gate-identity checks.
struct DecompositionReport {
  std::vector<ReportEntry> entries;
  std::map<std::string, std::string> notes;

  void add(std::string name, double residual, std::optional<double> tol, std::string kind);
  const ReportEntry* find(std::string_view name) const;
  bool all_passed() const;
  std::vector<std::string> failing() const;
  /// Re-applies one tolerance to every entry that carries a requirement.
  void retolerance(double tol);
  void append(const DecompositionReport& other);
};

/// Gate matrices keyed by id, defaulting to the transcribed literals.
/// Entries can be replaced (e.g. by user-supplied transcriptions).
class GateCatalog {
 public:
  GateCatalog();
  const CMatrix& operator[](GateId g) const { return gates_.at(g); }
  void set(GateId g, CMatrix m);

 private:
  std::map<GateId, CMatrix> gates_;
};

/// Checks, at tolerance kAlgebraTol: E^2 = I, [NOT1,NOT2] = 0,
/// [sqrtNOT1,sqrtNOT2] = 0, (sqrtNOT_k)^2 = NOT_k, E.NOT1.NOT2.E = SWAP,
/// E.sqrtNOT1.sqrtNOT2.E = sqrtSWAP, sqrtSWAP^2 = SWAP,
/// (1x H).Pi.(1x H) = CNOT, plus unitarity of each catalog entry.
DecompositionReport verify_gate_identities(const GateCatalog& catalog = GateCatalog{});

}  // namespace dqd

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

#include "dqd/gates.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace dqd {
namespace {

constexpr cplx I{0, 1};

CMatrix permutation(std::initializer_list<std::pair<int, int>> ones) {
  CMatrix m = CMatrix::Zero(6, 6);
  for (auto [r, c] : ones) m(r, c) = 1;
  return m;
}

CMatrix sqrt_not(int qubit) {
  // 1/sqrt(2i) on the principal branch is (1 - i)/2 and sqrt(2i) = 1 + i,
  // so the leakage diagonal is exactly 1.
  const cplx s{0.5, -0.5};
  const cplx r2i{1, 1};
  CMatrix m(6, 6);
  if (qubit == 1) {
    m << 1, 0, 0, I, 0, 0,
         0, r2i, 0, 0, 0, 0,
         0, 0, 1, 0, 0, I,
         I, 0, 0, 1, 0, 0,
         0, 0, 0, 0, r2i, 0,
         0, 0, I, 0, 0, 1;
  } else {
    m << 1, 0, I, 0, 0, 0,
         0, r2i, 0, 0, 0, 0,
         I, 0, 1, 0, 0, 0,
         0, 0, 0, 1, 0, I,
         0, 0, 0, 0, r2i, 0,
         0, 0, 0, I, 0, 1;
  }
  return s * m;
}

}  // namespace

std::string_view gate_name(GateId g) {
  switch (g) {
    case GateId::Not1: return "not1";
    case GateId::Not2: return "not2";
    case GateId::E: return "e";
    case GateId::Swap: return "swap";
    case GateId::SqrtNot1: return "sqrt_not1";
    case GateId::SqrtNot2: return "sqrt_not2";
    case GateId::SqrtSwap: return "sqrt_swap";
    case GateId::Pi: return "pi";
    case GateId::HadamardOnQ2: return "hadamard_q2";
    case GateId::Cnot: return "cnot";
    case GateId::Identity6: return "identity6";
  }
  return "?";
}

std::optional<GateId> parse_gate_id(std::string_view name) {
  for (GateId g : kAllGates) {
    if (gate_name(g) == name) return g;
  }
  return std::nullopt;
}

CMatrix gate_matrix(GateId g) {
  switch (g) {
    case GateId::Not1:
      return permutation({{0, 3}, {1, 1}, {2, 5}, {3, 0}, {4, 4}, {5, 2}});
    case GateId::Not2:
      return permutation({{0, 2}, {1, 1}, {2, 0}, {3, 5}, {4, 4}, {5, 3}});
    case GateId::E:
      return permutation({{0, 1}, {1, 0}, {2, 2}, {3, 3}, {4, 5}, {5, 4}});
    case GateId::Swap:
      return permutation({{0, 0}, {1, 4}, {2, 3}, {3, 2}, {4, 1}, {5, 5}});
    case GateId::SqrtNot1:
      return sqrt_not(1);
    case GateId::SqrtNot2:
      return sqrt_not(2);
    case GateId::SqrtSwap: {
      CMatrix m(6, 6);
      m << 2.0 * I, 0, 0, 0, 0, 0,
           0, 1, I, I, -1, 0,
           0, I, 1, -1, I, 0,
           0, I, -1, 1, I, 0,
           0, -1, I, I, 1, 0,
           0, 0, 0, 0, 0, 2.0 * I;
      // 1/(2i) = -i/2
      return cplx(0, -0.5) * m;
    }
    case GateId::Pi: {
      CMatrix m = CMatrix::Identity(6, 6);
      m(5, 5) = -1;
      return m;
    }
    case GateId::HadamardOnQ2: {
      const double r = 1 / std::sqrt(2.0);
      CMatrix m(6, 6);
      m << r, 0, r, 0, 0, 0,
           0, 1, 0, 0, 0, 0,
           r, 0, -r, 0, 0, 0,
           0, 0, 0, r, 0, r,
           0, 0, 0, 0, 1, 0,
           0, 0, 0, r, 0, -r;
      return m;
    }
    case GateId::Cnot:
      // Control qubit 1: |10> (row 3) <-> |11> (row 5); leakage rows fixed.
      return permutation({{0, 0}, {1, 1}, {2, 2}, {3, 5}, {4, 4}, {5, 3}});
    case GateId::Identity6:
      return CMatrix::Identity(6, 6);
  }
  throw std::invalid_argument("gate_matrix: unknown gate id");
}

void DecompositionReport::add(std::string name, double residual, std::optional<double> tol,
                              std::string kind) {
  entries.push_back({std::move(name), residual, tol, std::move(kind)});
}

const ReportEntry* DecompositionReport::find(std::string_view name) const {
  auto it = std::find_if(entries.begin(), entries.end(),
                         [&](const ReportEntry& e) { return e.name == name; });
  return it == entries.end() ? nullptr : &*it;
}

bool DecompositionReport::all_passed() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const ReportEntry& e) { return e.passed(); });
}

std::vector<std::string> DecompositionReport::failing() const {
  std::vector<std::string> out;
  for (const auto& e : entries) {
    if (!e.passed()) out.push_back(e.name);
  }
  return out;
}

void DecompositionReport::retolerance(double tol) {
  for (auto& e : entries) {
    if (e.tolerance) e.tolerance = tol;
  }
}

void DecompositionReport::append(const DecompositionReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  for (const auto& [k, v] : other.notes) notes[k] = v;
}

GateCatalog::GateCatalog() {
  for (GateId g : kAllGates) gates_.emplace(g, gate_matrix(g));
}

void GateCatalog::set(GateId g, CMatrix m) {
  if (m.rows() != 6 || m.cols() != 6) {
    throw DimensionMismatch("GateCatalog::set: " + std::string(gate_name(g)) + " must be 6x6");
  }
  gates_[g] = std::move(m);
}

DecompositionReport verify_gate_identities(const GateCatalog& cat) {
  using G = GateId;
  DecompositionReport rep;
  const CMatrix id = CMatrix::Identity(6, 6);
  const auto& e = cat[G::E];
  const auto& n1 = cat[G::Not1];
  const auto& n2 = cat[G::Not2];
  const auto& s1 = cat[G::SqrtNot1];
  const auto& s2 = cat[G::SqrtNot2];
  const auto& sw = cat[G::Swap];
  const auto& ssw = cat[G::SqrtSwap];
  const auto& h2 = cat[G::HadamardOnQ2];

  auto check = [&](std::string name, const CMatrix& lhs, const CMatrix& rhs) {
    rep.add(std::move(name), max_abs(lhs - rhs), kAlgebraTol, "algebra");
  };

  check("e_squared_is_identity", e * e, id);
  check("not1_not2_commute", n1 * n2, n2 * n1);
  check("sqrt_not1_sqrt_not2_commute", s1 * s2, s2 * s1);
  check("sqrt_not1_squared_is_not1", s1 * s1, n1);
  check("sqrt_not2_squared_is_not2", s2 * s2, n2);
  check("swap_from_e_not1_not2_e", e * n1 * n2 * e, sw);
  check("sqrt_swap_from_e_sqrt_nots_e", e * s1 * s2 * e, ssw);
  check("sqrt_swap_squared_is_swap", ssw * ssw, sw);
  check("cnot_from_hadamard_pi_hadamard", h2 * cat[G::Pi] * h2, cat[G::Cnot]);
  check("cnot_squared_is_identity", cat[G::Cnot] * cat[G::Cnot], id);

  for (GateId g : kAllGates) {
    rep.add("unitary_" + std::string(gate_name(g)), unitarity_defect(cat[g]), kAlgebraTol,
            "algebra");
  }
  return rep;
}

}  // namespace dqd

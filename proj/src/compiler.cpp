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

#include "dqd/compiler.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace dqd {
namespace {

constexpr double kPiTol = 1e-10;
constexpr double kTieTol = 1e-12;

CMatrix pi_product(const PhaseEmbedding& emb, const CMatrix& sqrt_swap) {
  const CMatrix a = z_gate(1, kPi / 2, emb) * z_gate(2, -kPi / 2, emb);
  const CMatrix b = z_gate(1, kPi, emb);
  return a * sqrt_swap * a * sqrt_swap * b * sqrt_swap;
}

CMatrix z4(double theta, int sign) {
  CMatrix z = CMatrix::Zero(2, 2);
  z(0, 0) = std::polar(1.0, -sign * theta / 2);
  z(1, 1) = std::polar(1.0, sign * theta / 2);
  return z;
}

CMatrix standard_sqrt_swap_4() {
  const cplx p{0.5, 0.5}, m{0.5, -0.5};
  CMatrix s(4, 4);
  s << 1, 0, 0, 0,
       0, p, m, 0,
       0, m, p, 0,
       0, 0, 0, 1;
  return s;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

cplx LeakagePhase::phase(int leakage_row, double theta) const {
  const int k = leakage_row == ExtendedBasis::kLeakageRows[0] ? k_row1 : k_row4;
  return std::polar(1.0, k * theta / 2 + offset);
}

PhaseEmbedding PhaseEmbedding::tunnel_electrode() {
  // T1 splits DQD 1: (++,--) carries D1 = +, like |0> of qubit 1.
  // T3 splits DQD 3: (++,--) carries D3 = -, like |1> of qubit 2.
  return {{-1, +1, 0}, {+1, -1, 0}};
}

std::string PhaseEmbedding::describe() const {
  std::ostringstream os;
  os << "Z1 leak k=(" << z1.k_row1 << "," << z1.k_row4 << ") offset=" << fmt(z1.offset)
     << "; Z2 leak k=(" << z2.k_row1 << "," << z2.k_row4 << ") offset=" << fmt(z2.offset);
  return os.str();
}

CMatrix z_gate(int qubit, double theta, const PhaseEmbedding& emb) {
  if (qubit != 1 && qubit != 2) throw std::invalid_argument("z_gate: qubit must be 1 or 2");
  CMatrix z = CMatrix::Zero(6, 6);
  for (int q1 = 0; q1 < 2; ++q1) {
    for (int q2 = 0; q2 < 2; ++q2) {
      const int bit = qubit == 1 ? q1 : q2;
      z(ExtendedBasis::computational_row(q1, q2), ExtendedBasis::computational_row(q1, q2)) =
          std::polar(1.0, bit ? theta / 2 : -theta / 2);
    }
  }
  const LeakagePhase& lp = qubit == 1 ? emb.z1 : emb.z2;
  for (int r : ExtendedBasis::kLeakageRows) z(r, r) = lp.phase(r, theta);
  return z;
}

CMatrix build_pi(const PhaseEmbedding& emb, const GateCatalog& catalog) {
  return pi_product(emb, catalog[GateId::SqrtSwap]);
}

CMatrix build_cnot(const PhaseEmbedding& emb, const GateCatalog& catalog) {
  const CMatrix& h = catalog[GateId::HadamardOnQ2];
  return h * build_pi(emb, catalog) * h;
}

EmbeddingSearchResult search_embedding(double grid, const GateCatalog& catalog) {
  const double steps = 2 * kPi / grid;
  if (!(grid > 0) || std::abs(steps - std::round(steps)) > 1e-9) {
    throw std::invalid_argument("search_embedding: grid must divide 2*pi");
  }
  const int n_off = static_cast<int>(std::round(steps));
  const CMatrix& ssw = catalog[GateId::SqrtSwap];
  const CMatrix& target = catalog[GateId::Pi];

  // Enumerated in lexicographic order of the parameter tuple.
  struct Candidate {
    PhaseEmbedding emb;
    double residual;
  };
  std::vector<Candidate> all;
  all.reserve(625 * static_cast<std::size_t>(n_off) * n_off);
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c)
        for (int d = -2; d <= 2; ++d)
          for (int o1 = 0; o1 < n_off; ++o1)
            for (int o2 = 0; o2 < n_off; ++o2) {
              const PhaseEmbedding emb{{a, b, o1 * grid}, {c, d, o2 * grid}};
              all.push_back({emb, dist_up_to_global_phase(pi_product(emb, ssw), target)});
            }

  double min_res = std::numeric_limits<double>::infinity();
  for (const auto& c : all) min_res = std::min(min_res, c.residual);
  EmbeddingSearchResult out;
  for (const auto& c : all) {
    if (c.residual <= min_res + kTieTol) {
      out.best = c.emb;
      out.residual = c.residual;
      break;
    }
  }
  out.evaluated = all.size();
  out.reproduced = out.residual <= kPiTol;
  out.trivial_residual =
      dist_up_to_global_phase(pi_product(PhaseEmbedding::trivial(), ssw), target);
  out.tunnel_residual =
      dist_up_to_global_phase(pi_product(PhaseEmbedding::tunnel_electrode(), ssw), target);
  return out;
}

XorCheck verify_xor_4dim() {
  const CMatrix s = standard_sqrt_swap_4();
  const CMatrix id2 = CMatrix::Identity(2, 2);
  CMatrix cz = CMatrix::Identity(4, 4);
  cz(3, 3) = -1;
  auto product = [&](int sign) {
    return CMatrix(kron(z4(kPi / 2, sign), z4(-kPi / 2, sign)) * s * kron(z4(kPi, sign), id2) * s);
  };
  const CMatrix minus = product(+1);
  const CMatrix plus = product(-1);
  XorCheck out;
  out.residual_minus = dist_up_to_global_phase(minus, cz);
  out.residual_plus = dist_up_to_global_phase(plus, cz);
  const bool use_minus = out.residual_minus <= out.residual_plus;
  out.residual = use_minus ? out.residual_minus : out.residual_plus;
  out.product = use_minus ? minus : plus;
  out.convention = use_minus ? "Z(theta)=diag(exp(-i*theta/2),exp(+i*theta/2))"
                             : "Z(theta)=diag(exp(+i*theta/2),exp(-i*theta/2))";
  out.unitarity_defect = unitarity_defect(out.product);
  return out;
}

DecompositionReport verify_pulse_gates(const HamiltonianModel& model, double amplitude,
                                       const GateCatalog& catalog) {
  DecompositionReport rep;
  for (GateId g : {GateId::Not1, GateId::Not2, GateId::SqrtNot1, GateId::SqrtNot2, GateId::E,
                   GateId::Swap, GateId::SqrtSwap}) {
    const CMatrix u = evolve(calibrate(g, amplitude), model);
    rep.add("pulse_" + std::string(gate_name(g)), dist_up_to_global_phase(u, catalog[g]),
            kPulseTol, "pulse");
  }
  const CMatrix ssw = evolve(calibrate(GateId::SqrtSwap, amplitude), model);
  rep.add("pulse_sqrt_swap_squared_is_swap", dist_up_to_global_phase(ssw * ssw, catalog[GateId::Swap]),
          kPulseTol, "pulse");

  // Every intra-qubit electrode keeps the leakage block decoupled.
  double worst = 0;
  for (const Electrode& e : {Electrode::intra(1), Electrode::intra(2), Electrode::tunnel(1),
                             Electrode::tunnel(2), Electrode::tunnel(3), Electrode::tunnel(4)}) {
    const CMatrix u = evolve({{{e, amplitude, 0.37}}}, model);
    for (int r : ExtendedBasis::kLeakageRows) {
      for (int c = 0; c < 6; ++c) {
        if (c != r) worst = std::max({worst, std::abs(u(r, c)), std::abs(u(c, r))});
      }
    }
  }
  rep.add("intra_qubit_leakage_coupling", worst, kAlgebraTol, "pulse");
  return rep;
}

DecompositionReport verify_compiled_constructions(double grid, const GateCatalog& catalog) {
  DecompositionReport rep;
  const EmbeddingSearchResult search = search_embedding(grid, catalog);
  rep.add("pi_from_sqrt_swap_best_embedding", search.residual, kPiTol, "compiled");
  rep.add("pi_from_sqrt_swap_trivial_embedding", search.trivial_residual, std::nullopt,
          "diagnostic");
  rep.add("pi_from_sqrt_swap_tunnel_embedding", search.tunnel_residual, std::nullopt,
          "diagnostic");
  rep.notes["pi_embedding"] = search.best.describe();
  rep.notes["pi_embedding_grid"] = fmt(grid);
  rep.notes["pi_embedding_candidates"] = std::to_string(search.evaluated);
  rep.notes["pi_identity"] = search.reproduced ? "reproduced" : "identity not reproduced";

  const CMatrix pi6 = build_pi(search.best, catalog);
  const std::array<int, 4> comp{0, 2, 3, 5};
  CMatrix cz = CMatrix::Identity(4, 4);
  cz(3, 3) = -1;
  rep.add("pi_restricted_is_cz", dist_up_to_global_phase(restrict_to(pi6, comp), cz), kPiTol,
          "compiled");

  const XorCheck xor4 = verify_xor_4dim();
  rep.add("xor_4dim_is_cz", xor4.residual, kPiTol, "compiled");
  rep.add("xor_4dim_unitary", xor4.unitarity_defect, kAlgebraTol, "compiled");
  rep.notes["xor_convention"] = xor4.convention;

  const CMatrix cnot = build_cnot(search.best, catalog);
  rep.add("cnot_compiled_vs_catalog", dist_up_to_global_phase(cnot, catalog[GateId::Cnot]),
          kPulseTol, "compiled");
  rep.add("cnot_compiled_squared_is_identity",
          dist_up_to_global_phase(cnot * cnot, CMatrix::Identity(6, 6)), kPulseTol, "compiled");
  rep.add("compiled_products_unitary", std::max(unitarity_defect(pi6), unitarity_defect(cnot)),
          kAlgebraTol, "compiled");
  return rep;
}

}  // namespace dqd

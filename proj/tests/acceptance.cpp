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


// Acceptance gate: one PASS/FAIL line per criterion at the required
// tolerances. Exit status is nonzero when any criterion fails.

#include "dqd/compiler.hpp"
#include "dqd/decoherence.hpp"
#include "dqd/gates.hpp"
#include "dqd/pulses.hpp"
#include "dqd/readout.hpp"
#include "dqd/report.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace dqd;

namespace {

int failures = 0;

void verdict(int id, bool ok, const std::string& what) {
  std::printf("%s [%d] %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

template <typename F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double max_required_residual(const DecompositionReport& r) {
  double m = 0;
  for (const auto& e : r.entries) {
    if (e.tolerance) m = std::max(m, e.residual);
  }
  return m;
}

void criterion_algebra() {
  DecompositionReport rep;
  const double t = seconds([&] { rep = verify_gate_identities(); });
  const double worst = max_required_residual(rep);
  verdict(1, rep.all_passed() && worst <= 1e-12 && t < 1.0,
          "gate algebra suite: " + std::to_string(rep.entries.size()) + " identities, max residual " +
              g(worst) + " (<= 1e-12), runtime " + g(t) + " s (< 1 s)");
}

void criterion_pulses() {
  const HamiltonianModel model;
  const DecompositionReport rep = verify_pulse_gates(model, 1.0);
  double worst_gate = 0;
  for (const auto& e : rep.entries) {
    if (e.kind == "pulse" && e.name != "intra_qubit_leakage_coupling") worst_gate = std::max(worst_gate, e.residual);
  }
  double worst_fid = 1;
  const PulseSchedule swap = calibrate(GateId::Swap, 1.0);
  for (int q1 = 0; q1 < 2; ++q1) {
    for (int q2 = 0; q2 < 2; ++q2) {
      const auto out = evolve(swap, model, TwoQubitState::basis_state(ExtendedBasis::computational_row(q1, q2)));
      const auto want = TwoQubitState::basis_state(ExtendedBasis::computational_row(q2, q1));
      worst_fid = std::min(worst_fid, state_fidelity(want.amplitudes(), out.amplitudes()));
    }
  }
  // Random intra-qubit-only schedules from random computational states.
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> amp(-3, 3), dur(0, 2);
  std::normal_distribution<double> n01;
  const std::array<Electrode, 6> intra{Electrode::intra(1),  Electrode::intra(2),  Electrode::tunnel(1),
                                       Electrode::tunnel(2), Electrode::tunnel(3), Electrode::tunnel(4)};
  double worst_leak = 0;
  for (int trial = 0; trial < 200; ++trial) {
    PulseSchedule s;
    for (int k = 0; k < 25; ++k) s.segments.push_back({intra[rng() % intra.size()], amp(rng), dur(rng)});
    CVector v(4);
    for (int i = 0; i < 4; ++i) v(i) = cplx(n01(rng), n01(rng));
    worst_leak = std::max(worst_leak, leakage_population(evolve(s, model, embed_computational(v))));
  }
  verdict(2, worst_gate <= 1e-9 && 1 - worst_fid <= 1e-9 && worst_leak <= 1e-12,
          "pulse engine: max gate residual " + g(worst_gate) + " (<= 1e-9), four-pulse SWAP infidelity " +
              g(1 - worst_fid) + " (<= 1e-9), intra-qubit leakage " + g(worst_leak) + " (<= 1e-12)");
}

void criterion_embedding() {
  const EmbeddingSearchResult s = search_embedding(kPi / 4);
  const XorCheck x = verify_xor_4dim();
  const DecompositionReport rep = verify_compiled_constructions(kPi / 4);
  const std::string note = rep.notes.at("pi_identity");
  const bool honest = s.reproduced ? note == "reproduced" : note == "identity not reproduced";
  verdict(3, x.residual <= 1e-10 && honest,
          "embedding search: Pi residual " + g(s.residual) + " (" + note + ", " + s.best.describe() +
              "); 4x4 XOR residual " + g(x.residual) + " (<= 1e-10) with " + x.convention);
}

void criterion_decoherence() {
  bool tau_ok = true;
  std::string tau_text;
  for (const PhononBranch& b : {PhononBranch::deformation(), PhononBranch::piezoelectric()}) {
    std::vector<std::pair<double, double>> pts;
    for (double deps : {1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0}) pts.push_back({deps, single_phonon_tau(deps, b)});
    const double e = fit_scaling_exponent(pts);
    tau_ok = tau_ok && std::abs(e + b.tau_exponent()) <= 1e-10;
    tau_text += b.name() + " " + g(e) + " ";
  }
  bool rate_ok = true, regime_ok = true;
  std::string rate_text;
  const double t = seconds([&] {
    for (const PhononBranch& b : {PhononBranch::deformation(), PhononBranch::piezoelectric()}) {
      std::vector<std::pair<double, double>> pts;
      for (int k = 0; k <= 5; ++k) {
        Environment env;
        env.temperature_K = 0.01 * std::pow(10.0, k / 5.0);
        const RateResult r = two_phonon_rate({}, b, env, {}, DenominatorMode::Reduced);
        regime_ok = regime_ok && !r.regime_warning;
        pts.push_back({env.temperature_K, r.rate_per_s});
      }
      const ScalingFit fit = fit_scaling(pts);
      const double expected = b.kind == PhononBranch::Kind::Deformation ? 6 : 2;
      rate_ok = rate_ok && std::abs(fit.exponent - expected) <= 0.1;
      rate_text += b.name() + " " + g(fit.exponent) + "+-" + g(fit.std_error) + " (want " + g(expected) +
                   "+-0.1) ";
    }
  });
  verdict(4, tau_ok && rate_ok && regime_ok && t < 60,
          "decoherence scaling: tau exponents " + tau_text + "(-5/-3 within 1e-10); W(T) exponents " +
              rate_text + "over T in [0.01, 0.1] K, runtime " + g(t) +
              " s; tau at 10 ueV is a configuration anchor (1e-6 s / 1e-2 s), not derived");
}

void criterion_selection() {
  SelectionRuleTable t;
  const double secs = seconds([&] { t = coulomb_selection_rule(DotGeometry{}); });
  const SelectionRuleTable fine = coulomb_selection_rule(DotGeometry{}, 1024);
  // Below ~1e-14 the forbidden elements are floating-point noise.
  const bool shrinking = fine.forbidden_ratio() <= std::max(t.forbidden_ratio(), 1e-14);
  verdict(5, t.forbidden_ratio() <= 1e-3 && shrinking && secs < 30,
          "selection rule: forbidden/allowed " + g(t.forbidden_ratio()) + " (<= 1e-3), at 2x resolution " +
              g(fine.forbidden_ratio()) + ", allowed " + g(t.minus_plus) + "+-" + g(t.error_bound) +
              ", runtime " + g(secs) + " s (< 30 s)");
}

void criterion_readout() {
  const BiasScan scan = scan_bias(1.0);
  double conservation = 0;
  for (const auto& p : scan.sweep) {
    for (DqdLevel l : {DqdLevel::Plus, DqdLevel::Minus}) {
      if (p.bias_ueV != scan.best.bias_ueV && p.bias_ueV != 1.0) continue;
      const ReadoutTrace tr = readout_trace(level_state(l), config_for(1.0, p.bias_ueV));
      for (std::size_t k = 0; k < tr.times.size(); ++k) {
        conservation = std::max(conservation, std::abs(tr.p_left[k] + tr.p_right[k] - 1));
      }
    }
  }
  const double occ = thermal_occupancy(9.3 * kBoltzmann * 0.1, 0.1);
  double init_gap = 0;
  const ReadoutConfig cfg = config_for(1.0, scan.best.bias_ueV);
  for (DqdLevel l : {DqdLevel::Plus, DqdLevel::Minus}) {
    const InitResult r = init_by_reversed_readout(l, cfg);
    init_gap = std::max(init_gap, std::abs(r.fidelity - r.forward_bound));
  }
  verdict(6, conservation <= 1e-12 && scan.best.window.distinguishability >= 0.99 && occ <= 1e-4 &&
                 init_gap <= 1e-12,
          "read-out/init: conservation defect " + g(conservation) + ", best distinguishability " +
              g(scan.best.window.distinguishability) + " at bias " + g(scan.best.bias_ueV) +
              " ueV (t_c = 1 ueV), occupancy at 9.3 kT " + g(occ) + ", |fidelity - (1+D)/2| " + g(init_gap));
}

std::string fingerprint() {
  Json j;
  DecompositionReport rep = verify_gate_identities();
  rep.append(verify_pulse_gates(HamiltonianModel{}, 1.0));
  rep.append(verify_compiled_constructions(kPi / 4));
  j["verify"] = to_json(rep);
  Json rates = Json::array();
  for (const PhononBranch& b : {PhononBranch::deformation(), PhononBranch::piezoelectric()}) {
    for (auto mode : {DenominatorMode::Reduced, DenominatorMode::Exact}) {
      Environment env;
      env.temperature_K = 0.03;
      rates.push_back(two_phonon_rate({}, b, env, {}, mode).rate_per_s);
    }
  }
  j["rates"] = rates;
  j["selection"] = coulomb_selection_rule(DotGeometry{}).minus_plus;
  const ReadoutTrace tr = readout_trace(level_state(DqdLevel::Plus), config_for(1.0, 2.0));
  j["trace"] = tr.p_left;
  return dump(j);
}

void criterion_determinism() {
  const std::string a = fingerprint(), b = fingerprint();
  verdict(7, a == b, "determinism: two runs of verify/rates/selection/trace give " +
                         std::string(a == b ? "byte-identical" : "different") + " output (" +
                         std::to_string(a.size()) + " bytes)");
}

}  // namespace

int main() {
  criterion_algebra();
  criterion_pulses();
  criterion_embedding();
  criterion_decoherence();
  criterion_selection();
  criterion_readout();
  criterion_determinism();
  std::printf("%d of 7 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

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
#include "dqd/numlin.hpp"

#include <Eigen/Dense>

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dqd {

/// Boltzmann constant in ueV/K.
inline constexpr double kBoltzmann = 86.17333262;

struct NonConvergent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Acoustic phonon coupling channel. |F_q|^2 = coupling_constant * q^{+1}
/// (deformation) or q^{-1} (piezoelectric). Single-phonon lifetimes follow
/// tau = tau_prefactor * deps^{-5} (deformation) or deps^{-3} (piezoelectric)
/// with deps in ueV and tau in s; the prefactor is a configuration anchor.
struct PhononBranch {
  enum class Kind { Deformation, Piezoelectric };
  Kind kind = Kind::Deformation;
  double coupling_constant = 1;
  double tau_prefactor = 1;

  /// Power of q in |F_q|^2.
  int coupling_power() const { return kind == Kind::Deformation ? 1 : -1; }
  /// Magnitude of the deps exponent of the single-phonon lifetime.
  int tau_exponent() const { return kind == Kind::Deformation ? 5 : 3; }
  std::string name() const;

  /// Prefactor fixed so that tau(deps_ref) = tau_ref.
  static PhononBranch anchored(Kind kind, double deps_ref_ueV, double tau_ref_s,
                               double coupling_constant = 1);
  /// tau = 1e-6 s at the reference splitting.
  static PhononBranch deformation();
  /// tau = 1e-2 s at the reference splitting.
  static PhononBranch piezoelectric();
};

/// Reference splitting of the default lifetime anchors, ueV.
inline constexpr double kAnchorSplitting = 10.0;

struct Environment {
  double temperature_K = 0.01;
  double sound_speed_m_s = 5000;
  /// Upper wavevector bound, 1/nm.
  double spectral_cutoff_per_nm = 4.0;
  /// Gauss-Legendre nodes per radial panel and per angular dimension.
  int resolution = 24;
  /// Broadening of resonant intermediate states in the exact-denominator
  /// mode, as a fraction of kT.
  double level_width_kT = 0.05;

  double kT_ueV() const { return kBoltzmann * temperature_K; }
  /// hbar * c_s in ueV*nm.
  double hbar_c_ueV_nm() const;
};

/// Dot separation d and Gaussian orbital width a, both nm.
struct DotGeometry {
  double separation_nm = 22;
  double localization_nm = 5;

  /// <phi_1|phi_2> = exp(-d^2 / (4 a^2)).
  double overlap() const;
};

/// Levels of the two DQDs (A, B) that carry the qubit's two electrons.
struct PairState {
  DqdLevel a = DqdLevel::Plus;
  DqdLevel b = DqdLevel::Minus;

  std::string label() const;
  /// Parses "+-", "-+", "++", "--".
  static PairState parse(std::string_view s);
  bool operator==(const PairState&) const = default;
};

enum class DenominatorMode { Reduced, Exact };

/// Second-order transition |initial> -> |final> through `intermediates`.
/// Each DQD has levels eps_+ = -deps/2 and eps_- = +deps/2.
struct TransitionSpec {
  PairState initial{DqdLevel::Plus, DqdLevel::Minus};
  PairState final_state{DqdLevel::Plus, DqdLevel::Plus};
  std::vector<PairState> intermediates{{DqdLevel::Plus, DqdLevel::Minus},
                                       {DqdLevel::Minus, DqdLevel::Plus},
                                       {DqdLevel::Plus, DqdLevel::Plus},
                                       {DqdLevel::Minus, DqdLevel::Minus}};
  double splitting_ueV = 1e-3;

  double energy(const PairState& s) const;
};

/// n(eps) = 1 / (exp(eps/kT) - 1). Throws for eps <= 0 or T <= 0.
double bose_einstein(double eps_ueV, double temperature_K);

/// Spontaneous single-phonon lifetime, seconds.
double single_phonon_tau(double splitting_ueV, const PhononBranch& branch);

/// Lifetime shortened by stimulated emission: tau * deps / kT.
double stimulated_tau(double splitting_ueV, double temperature_K, const PhononBranch& branch);

/// Wavevector in 1/nm; the DQD axis is x and its centre the origin.
using Wavevector = Eigen::Vector3d;

/// <bra| exp(i q.r) |ket> for one electron in the DQD, Gaussian orbitals of
/// width a centred at -d/2 and +d/2, exact overlap included.
cplx dqd_form_factor(DqdLevel bra, DqdLevel ket, const Wavevector& q, const DotGeometry& geom);

/// <bra| exp(i q.r_A) + exp(i q.r_B) |ket> for the two-electron pair state.
cplx pair_form_factor(const PairState& bra, const PairState& ket, const Wavevector& q,
                      const DotGeometry& geom);

struct RateResult {
  double rate_per_s = 0;
  /// |W(resolution) - W(2 resolution)|.
  double est_error = 0;
  /// kT < 10 deps.
  bool regime_warning = false;
};

/// Two-phonon (absorb q, emit q') transition rate from the second-order
/// formula with 3-dimensional acoustic phonons, w = c_s q, the energy delta
/// resolved against the q' radial integral. The result is in 1/s per unit
/// coupling_constant^2 in (ueV^2 nm^{3 + coupling_power})^2 units. Throws
/// NonConvergent when doubling the resolution moves the result by > 1%.
RateResult two_phonon_rate(const TransitionSpec& spec, const PhononBranch& branch,
                           const Environment& env, const DotGeometry& geom,
                           DenominatorMode mode = DenominatorMode::Reduced);

struct ScalingFit {
  double exponent = 0;
  /// Standard error of the slope; 0 for two samples.
  double std_error = 0;
};

/// Least-squares fit of log y against log x.
ScalingFit fit_scaling(std::span<const std::pair<double, double>> samples);
/// fit_scaling(samples).exponent
double fit_scaling_exponent(std::span<const std::pair<double, double>> samples);

struct SelectionRuleTable {
  double plus_plus = 0;    ///< |<++|U_C|+->|
  double minus_minus = 0;  ///< |<--|U_C|+->|
  double minus_plus = 0;   ///< |<-+|U_C|+->|
  /// |allowed(resolution) - allowed(2 resolution)|.
  double error_bound = 0;
  int resolution = 0;

  double forbidden_ratio() const;
};

/// Coulomb matrix elements from |+-> in a reduced 1-D two-electron model:
/// electron A on DQD A's axis, electron B on DQD B's, Gaussian orbitals and
/// the softened kernel 1/sqrt((x1-x2)^2 + w^2), w = a/10. Tensor-grid
/// quadrature with `resolution` nodes per axis. Throws NonConvergent when the
/// allowed element moves by more than 1% under doubling.
SelectionRuleTable coulomb_selection_rule(const DotGeometry& geom, int resolution = 512);

}  // namespace dqd

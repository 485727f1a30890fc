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

#include <string>
#include <utility>
#include <vector>

namespace dqd {

/// Biased resonant tunneling of one electron in a DQD, dot basis {L, R}:
/// H = t_c sigma_x + (bias/2) sigma_z, |+-> = (|L> +- |R>)/sqrt2.
struct ReadoutConfig {
  double tunnel_coupling_ueV = 1;  ///< half-splitting t_c, >= 0
  double bias_ueV = 2;             ///< dot detuning, either sign
  double duration_ns = 10;
  double timestep_ns = 0.01;

  /// Throws std::invalid_argument when the window or grid is degenerate.
  void validate() const;
  /// |h| = sqrt(t_c^2 + bias^2/4).
  double field_ueV() const;
  /// Period of P_L(t), pi*hbar/|h|; infinite for |h| = 0.
  double rabi_period_ns() const;
};

struct ReadoutTrace {
  std::vector<double> times;
  std::vector<double> p_left;
  std::vector<double> p_right;
};

/// exp(-i H t / hbar) in the dot basis, closed form.
CMatrix readout_propagator(const ReadoutConfig& cfg, double t_ns);

/// Amplitudes over {|+>, |->} for a level.
CVector level_state(DqdLevel l);

/// P_L, P_R on the grid t_k = k * timestep, t_k <= duration. `initial` holds
/// amplitudes over {|+>, |->} and must be normalized.
ReadoutTrace readout_trace(const CVector& initial, const ReadoutConfig& cfg);

/// |P_L^+(t) - P_L^-(t)|.
double distinguishability_at(const ReadoutConfig& cfg, double t_ns);

struct MeasurementWindow {
  double t_star_ns = 0;
  double distinguishability = 0;
  bool degenerate = false;  ///< distinguishability vanishes on the whole grid
};

/// Grid point maximizing the distinguishability, earliest on ties.
MeasurementWindow optimal_measurement_time(const ReadoutConfig& cfg);

struct BiasScanPoint {
  double bias_ueV = 0;
  MeasurementWindow window;
};

/// Scans bias over (0, 4 t_c] in n_bias equal steps; each bias gets a window of
/// `periods` Rabi periods sampled `samples_per_period` times. Returns the
/// best point (earliest bias on ties) and the full sweep.
struct BiasScan {
  BiasScanPoint best;
  std::vector<BiasScanPoint> sweep;
};
BiasScan scan_bias(double tunnel_coupling_ueV, int n_bias = 400, int samples_per_period = 400,
                   double periods = 10);

/// Config for the best point of a scan, with the window used by the scan.
ReadoutConfig config_for(double tunnel_coupling_ueV, double bias_ueV, int samples_per_period = 400,
                         double periods = 10);

/// Largest drop of the distinguishability when the freeze moment t* shifts
/// by up to +-jitter (sampled at 64 offsets).
double timing_jitter_loss(const ReadoutConfig& cfg, double t_star_ns, double jitter_ns);

/// Upper-level occupancy e^{-x}/(1+e^{-x}), x = deps/kT.
double thermal_occupancy(double deps_ueV, double temperature_K);

struct InitResult {
  char start_dot = 'L';
  double window_ns = 0;
  /// The reversed window runs with -t_c and -bias.
  double reversed_tunnel_ueV = 0;
  double reversed_bias_ueV = 0;
  double fidelity = 0;
  /// (1 + D)/2 with D from the forward optimal window.
  double forward_bound = 0;
  std::string description;
};

/// Prepares `target` by running the forward read-out backwards: the electron
/// starts in the dot the forward window sends `target` to most strongly and
/// evolves under -H for t*.
InitResult init_by_reversed_readout(DqdLevel target, const ReadoutConfig& cfg);

}  // namespace dqd

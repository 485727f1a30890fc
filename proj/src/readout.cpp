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

#include "dqd/readout.hpp"

#include "dqd/decoherence.hpp"
#include "dqd/pulses.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace dqd {
namespace {

constexpr double kTieTol = 1e-12;

/// Dot-basis amplitudes of a level superposition.
CVector to_dots(const CVector& levels) {
  const double r = 1 / std::sqrt(2.0);
  CVector d(2);
  d << r * (levels(0) + levels(1)), r * (levels(0) - levels(1));
  return d;
}

std::size_t grid_size(const ReadoutConfig& cfg) {
  return static_cast<std::size_t>(std::floor(cfg.duration_ns / cfg.timestep_ns * (1 + 1e-12))) + 1;
}

double p_left(const ReadoutConfig& cfg, const CVector& levels, double t) {
  return std::norm((readout_propagator(cfg, t) * to_dots(levels))(0));
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

void ReadoutConfig::validate() const {
  if (!(tunnel_coupling_ueV >= 0) || !std::isfinite(tunnel_coupling_ueV)) {
    throw std::invalid_argument("ReadoutConfig: tunnel_coupling must be >= 0");
  }
  if (!std::isfinite(bias_ueV)) throw std::invalid_argument("ReadoutConfig: bias must be finite");
  if (!(duration_ns > 0) || !std::isfinite(duration_ns)) {
    throw std::invalid_argument("ReadoutConfig: duration must be positive");
  }
  if (!(timestep_ns > 0) || !(timestep_ns < duration_ns)) {
    throw std::invalid_argument("ReadoutConfig: need 0 < timestep < duration");
  }
}

double ReadoutConfig::field_ueV() const {
  return std::hypot(tunnel_coupling_ueV, bias_ueV / 2);
}

double ReadoutConfig::rabi_period_ns() const {
  const double h = field_ueV();
  return h > 0 ? kPi * kHbar / h : std::numeric_limits<double>::infinity();
}

CMatrix readout_propagator(const ReadoutConfig& cfg, double t) {
  const double h = cfg.field_ueV();
  CMatrix u = CMatrix::Identity(2, 2);
  if (h == 0) return u;
  const double phi = h * t / kHbar;
  const double nx = cfg.tunnel_coupling_ueV / h, nz = cfg.bias_ueV / (2 * h);
  const cplx c = std::cos(phi), s{0, -std::sin(phi)};
  u << c + s * nz, s * nx, s * nx, c - s * nz;
  return u;
}

CVector level_state(DqdLevel l) {
  CVector v = CVector::Zero(2);
  v(l == DqdLevel::Plus ? 0 : 1) = 1;
  return v;
}

ReadoutTrace readout_trace(const CVector& initial, const ReadoutConfig& cfg) {
  cfg.validate();
  if (initial.size() != 2) throw DimensionMismatch("readout_trace: need 2 amplitudes");
  if (!is_normalized(initial)) throw std::invalid_argument("readout_trace: initial not normalized");
  const CVector dots = to_dots(initial);
  const std::size_t n = grid_size(cfg);
  ReadoutTrace tr;
  tr.times.resize(n);
  tr.p_left.resize(n);
  tr.p_right.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = k * cfg.timestep_ns;
    const CVector psi = readout_propagator(cfg, t) * dots;
    tr.times[k] = t;
    tr.p_left[k] = std::norm(psi(0));
    tr.p_right[k] = std::norm(psi(1));
  }
  return tr;
}

double distinguishability_at(const ReadoutConfig& cfg, double t) {
  return std::abs(p_left(cfg, level_state(DqdLevel::Plus), t) -
                  p_left(cfg, level_state(DqdLevel::Minus), t));
}

MeasurementWindow optimal_measurement_time(const ReadoutConfig& cfg) {
  cfg.validate();
  MeasurementWindow w;
  w.distinguishability = -1;
  const std::size_t n = grid_size(cfg);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = k * cfg.timestep_ns;
    const double d = distinguishability_at(cfg, t);
    if (d > w.distinguishability + kTieTol) {
      w.distinguishability = d;
      w.t_star_ns = t;
    }
  }
  w.distinguishability = std::min(1.0, w.distinguishability);
  w.degenerate = w.distinguishability <= kTieTol;
  return w;
}

ReadoutConfig config_for(double tc, double bias, int samples_per_period, double periods) {
  ReadoutConfig cfg{tc, bias, 1, 0.1};
  const double period = cfg.rabi_period_ns();
  if (!std::isfinite(period)) throw std::invalid_argument("config_for: zero field");
  cfg.duration_ns = periods * period;
  cfg.timestep_ns = period / samples_per_period;
  return cfg;
}

BiasScan scan_bias(double tc, int n_bias, int samples_per_period, double periods) {
  if (!(tc > 0)) throw std::invalid_argument("scan_bias: tunnel coupling must be positive");
  if (n_bias < 1 || samples_per_period < 2 || !(periods > 0)) {
    throw std::invalid_argument("scan_bias: degenerate scan");
  }
  BiasScan scan;
  scan.best.window.distinguishability = -1;
  for (int k = 1; k <= n_bias; ++k) {
    const double bias = 4 * tc * k / n_bias;
    const BiasScanPoint p{bias, optimal_measurement_time(config_for(tc, bias, samples_per_period, periods))};
    scan.sweep.push_back(p);
    if (p.window.distinguishability > scan.best.window.distinguishability + kTieTol) scan.best = p;
  }
  return scan;
}

double timing_jitter_loss(const ReadoutConfig& cfg, double t_star, double jitter) {
  if (!(jitter >= 0)) throw std::invalid_argument("timing_jitter_loss: jitter must be >= 0");
  const double d0 = distinguishability_at(cfg, t_star);
  double loss = 0;
  for (int k = -32; k <= 32; ++k) {
    loss = std::max(loss, d0 - distinguishability_at(cfg, t_star + jitter * k / 32));
  }
  return loss;
}

double thermal_occupancy(double deps, double temperature) {
  if (!(temperature > 0)) throw std::invalid_argument("thermal_occupancy: T must be positive");
  const double x = deps / (kBoltzmann * temperature);
  if (x >= 0) {
    const double e = std::exp(-x);
    return e / (1 + e);
  }
  return 1 / (1 + std::exp(x));
}

InitResult init_by_reversed_readout(DqdLevel target, const ReadoutConfig& cfg) {
  const MeasurementWindow w = optimal_measurement_time(cfg);
  const CMatrix u = readout_propagator(cfg, w.t_star_ns);
  const CVector target_dots = to_dots(level_state(target));
  const CVector forward = u * target_dots;
  InitResult r;
  r.start_dot = std::norm(forward(0)) >= std::norm(forward(1)) ? 'L' : 'R';
  CVector start = CVector::Zero(2);
  start(r.start_dot == 'L' ? 0 : 1) = 1;
  const CVector psi = u.adjoint() * start;
  r.fidelity = std::norm(target_dots.dot(psi));
  r.window_ns = w.t_star_ns;
  r.reversed_tunnel_ueV = -cfg.tunnel_coupling_ueV;
  r.reversed_bias_ueV = -cfg.bias_ueV;
  r.forward_bound = (1 + w.distinguishability) / 2;
  r.description = std::string("electron in dot ") + r.start_dot + "; tunnel " +
                  fmt(r.reversed_tunnel_ueV) + " ueV, bias " + fmt(r.reversed_bias_ueV) +
                  " ueV for " + fmt(r.window_ns) + " ns; tunneling off";
  return r;
}

}  // namespace dqd

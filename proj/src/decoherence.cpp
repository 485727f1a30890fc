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

#include "dqd/decoherence.hpp"

#include "dqd/pulses.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <thread>

namespace dqd {
namespace {

struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes and weights on [-1, 1] by Newton iteration on P_n.
GaussLegendre gauss_legendre(int n) {
  GaussLegendre gl;
  gl.nodes.resize(n);
  gl.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1, p1 = x;
      dp = n * (x * p1 - p0) / (x * x - 1);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    gl.nodes[i] = -x;
    gl.nodes[n - 1 - i] = x;
    gl.weights[i] = gl.weights[n - 1 - i] = 2 / ((1 - x * x) * dp * dp);
  }
  return gl;
}

/// Runs body(i) for i in [0, n) across hardware threads. Each index writes its
/// own slot, so the caller's reduction order stays fixed.
template <typename F>
void parallel_for(int n, F&& body) {
  const int workers =
      std::max(1, std::min<int>(n, static_cast<int>(std::thread::hardware_concurrency())));
  if (workers == 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::jthread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < n; i += workers) body(i);
    });
  }
}

/// Sum in a fixed pairwise order.
double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double s = 0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t h = v.size() / 2;
  return pairwise_sum(v.first(h)) + pairwise_sum(v.subspan(h));
}

double level_energy(DqdLevel l, double deps) { return l == DqdLevel::Plus ? -deps / 2 : deps / 2; }

double rate_at_resolution(const TransitionSpec& spec, const PhononBranch& branch,
                          const Environment& env, const DotGeometry& geom, DenominatorMode mode,
                          int res) {
  const double kT = env.kT_ueV();
  const double hc = env.hbar_c_ueV_nm();
  const double eps_i = spec.energy(spec.initial);
  const double eps_f = spec.energy(spec.final_state);
  // delta(eps_f + hc q' - eps_i - hc q) fixes q' = q + shift.
  const double shift = (eps_i - eps_f) / hc;
  const double q_lo = std::max(0.0, -shift);
  const double q_hi = std::min(env.spectral_cutoff_per_nm, q_lo + 50 * kT / hc);
  if (q_hi <= q_lo) return 0;
  const double gamma = env.level_width_kT * kT;

  std::vector<double> breaks{q_lo, q_hi};
  for (double x : {1.0, 5.0, 15.0}) breaks.push_back(q_lo + x * kT / hc);
  if (mode == DenominatorMode::Exact) {
    for (const auto& z : spec.intermediates) {
      const double pole = (spec.energy(z) - eps_i) / hc;
      for (double m : {-16.0, -4.0, -1.0, 0.0, 1.0, 4.0, 16.0}) {
        breaks.push_back(pole + m * gamma / hc);
      }
    }
  }
  std::erase_if(breaks, [&](double b) { return b < q_lo || b > q_hi; });
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end(),
                           [&](double a, double b) { return b - a < 1e-12 * (q_hi - q_lo); }),
               breaks.end());

  const GaussLegendre gl = gauss_legendre(res);
  std::vector<double> radial_q, radial_w;
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const double mid = 0.5 * (breaks[p] + breaks[p + 1]);
    const double half = 0.5 * (breaks[p + 1] - breaks[p]);
    for (int k = 0; k < res; ++k) {
      radial_q.push_back(mid + half * gl.nodes[k]);
      radial_w.push_back(half * gl.weights[k]);
    }
  }

  const auto nz = spec.intermediates.size();
  const int s = branch.coupling_power();
  std::vector<double> contrib(radial_q.size());
  parallel_for(static_cast<int>(radial_q.size()), [&](int r) {
    const double q = radial_q[r];
    const double qp = q + shift;
    if (q <= 0 || qp <= 0) {
      contrib[r] = 0;
      return;
    }
    // emit[z][j] = <z|O_{-q}|i>, absorb[z][j] = <f|O_{q'}|z> at mu_j.
    std::vector<cplx> emit(nz * res), absorb(nz * res);
    for (int j = 0; j < res; ++j) {
      const double mu = gl.nodes[j];
      const double perp = std::sqrt(std::max(0.0, 1 - mu * mu));
      const Wavevector qv(-q * mu, -q * perp, 0);
      const Wavevector qpv(qp * mu, qp * perp, 0);
      for (std::size_t z = 0; z < nz; ++z) {
        emit[z * res + j] = pair_form_factor(spec.intermediates[z], spec.initial, qv, geom);
        absorb[z * res + j] = pair_form_factor(spec.final_state, spec.intermediates[z], qpv, geom);
      }
    }
    std::vector<cplx> inv_den(nz);
    for (std::size_t z = 0; z < nz; ++z) {
      inv_den[z] = mode == DenominatorMode::Reduced
                       ? cplx(1 / kT, 0)
                       : 1.0 / cplx(spec.energy(spec.intermediates[z]) - eps_i - hc * q, gamma);
    }
    double angular = 0;
    for (int j = 0; j < res; ++j) {
      for (int jp = 0; jp < res; ++jp) {
        cplx amp = 0;
        for (std::size_t z = 0; z < nz; ++z) {
          amp += absorb[z * res + jp] * emit[z * res + j] * inv_den[z];
        }
        angular += gl.weights[j] * gl.weights[jp] * std::norm(amp);
      }
    }
    const double occupation = (bose_einstein(hc * q, env.temperature_K) + 1) *
                              bose_einstein(hc * qp, env.temperature_K);
    contrib[r] = radial_w[r] * q * q * std::pow(q, s) * qp * qp * std::pow(qp, s) * occupation *
                 angular;
  });

  const double integral = pairwise_sum(contrib);
  const double lambda2 = branch.coupling_constant * branch.coupling_constant;
  // (2 pi / hbar) lambda^2 / (2 pi)^6 * (2 pi)^2 [azimuths] / (hbar c) [delta]
  const double per_ns =
      2 * kPi / kHbar * lambda2 / std::pow(2 * kPi, 6) * std::pow(2 * kPi, 2) / hc * integral;
  return per_ns * 1e9;
}

/// Normalized 1-D Gaussian orbital of width a centred at c.
double orbital_1d(double x, double c, double a) {
  const double u = (x - c) / a;
  return std::exp(-0.5 * u * u) / std::sqrt(std::sqrt(kPi) * a);
}

struct SelectionElements {
  double pp, mm, mp;
};

SelectionElements selection_elements(const DotGeometry& geom, int n) {
  const double d = geom.separation_nm;
  const double a = geom.localization_nm;
  const double w = a / 10;
  const double s = geom.overlap();
  const double half = d / 2 + 8 * a;
  const double h = 2 * half / n;
  std::vector<double> plus(n), minus(n);
  for (int k = 0; k < n; ++k) {
    // Quarter-cell offset: the node set is not mirror symmetric.
    const double x = -half + (k + 0.25) * h;
    const double l = orbital_1d(x, -d / 2, a);
    const double r = orbital_1d(x, d / 2, a);
    plus[k] = (l + r) / std::sqrt(2 * (1 + s));
    minus[k] = (l - r) / std::sqrt(2 * (1 - s));
  }
  // Electron A starts in |+>, electron B in |->.
  std::vector<double> a_to_plus(n), a_to_minus(n), b_to_plus(n), b_to_minus(n);
  for (int k = 0; k < n; ++k) {
    a_to_plus[k] = plus[k] * plus[k];
    a_to_minus[k] = minus[k] * plus[k];
    b_to_plus[k] = plus[k] * minus[k];
    b_to_minus[k] = minus[k] * minus[k];
  }
  std::vector<double> kernel(n);
  for (int m = 0; m < n; ++m) kernel[m] = 1 / std::sqrt((m * h) * (m * h) + w * w);
  // (K b)(i) = sum_j K(|i - j|) b(j)
  auto convolve = [&](const std::vector<double>& b) {
    std::vector<double> out(n);
    parallel_for(n, [&](int i) {
      double acc = 0;
      for (int j = 0; j < n; ++j) acc += kernel[std::abs(i - j)] * b[j];
      out[i] = acc;
    });
    return out;
  };
  const auto kb_plus = convolve(b_to_plus);
  const auto kb_minus = convolve(b_to_minus);
  auto element = [&](const std::vector<double>& pa, const std::vector<double>& kb) {
    std::vector<double> terms(n);
    for (int i = 0; i < n; ++i) terms[i] = pa[i] * kb[i];
    return pairwise_sum(terms) * h * h;
  };
  return {std::abs(element(a_to_plus, kb_plus)), std::abs(element(a_to_minus, kb_minus)),
          std::abs(element(a_to_minus, kb_plus))};
}

}  // namespace

std::string PhononBranch::name() const {
  return kind == Kind::Deformation ? "deformation" : "piezoelectric";
}

PhononBranch PhononBranch::anchored(Kind kind, double deps_ref, double tau_ref, double coupling) {
  if (!(deps_ref > 0) || !(tau_ref > 0) || !(coupling >= 0)) {
    throw std::invalid_argument("PhononBranch::anchored: anchors must be positive");
  }
  PhononBranch b;
  b.kind = kind;
  b.coupling_constant = coupling;
  b.tau_prefactor = tau_ref * std::pow(deps_ref, b.tau_exponent());
  return b;
}

PhononBranch PhononBranch::deformation() {
  return anchored(Kind::Deformation, kAnchorSplitting, 1e-6);
}

PhononBranch PhononBranch::piezoelectric() {
  return anchored(Kind::Piezoelectric, kAnchorSplitting, 1e-2);
}

double Environment::hbar_c_ueV_nm() const {
  // c in m/s equals c in nm/ns.
  return kHbar * sound_speed_m_s;
}

double DotGeometry::overlap() const {
  return std::exp(-separation_nm * separation_nm / (4 * localization_nm * localization_nm));
}

std::string PairState::label() const { return {level_char(a), level_char(b)}; }

PairState PairState::parse(std::string_view s) {
  auto lv = [&](char c) {
    if (c == '+') return DqdLevel::Plus;
    if (c == '-') return DqdLevel::Minus;
    throw std::invalid_argument("PairState: bad label '" + std::string(s) + "'");
  };
  if (s.size() != 2) throw std::invalid_argument("PairState: bad label '" + std::string(s) + "'");
  return {lv(s[0]), lv(s[1])};
}

double TransitionSpec::energy(const PairState& s) const {
  return level_energy(s.a, splitting_ueV) + level_energy(s.b, splitting_ueV);
}

double bose_einstein(double eps, double temperature) {
  if (!(eps > 0)) throw std::invalid_argument("bose_einstein: energy must be positive");
  if (!(temperature > 0)) throw std::invalid_argument("bose_einstein: temperature must be positive");
  return 1 / std::expm1(eps / (kBoltzmann * temperature));
}

double single_phonon_tau(double deps, const PhononBranch& branch) {
  if (!(deps > 0)) throw std::invalid_argument("single_phonon_tau: splitting must be positive");
  return branch.tau_prefactor * std::pow(deps, -branch.tau_exponent());
}

double stimulated_tau(double deps, double temperature, const PhononBranch& branch) {
  if (!(temperature > 0)) throw std::invalid_argument("stimulated_tau: temperature must be positive");
  return single_phonon_tau(deps, branch) * deps / (kBoltzmann * temperature);
}

cplx dqd_form_factor(DqdLevel bra, DqdLevel ket, const Wavevector& q, const DotGeometry& geom) {
  const double a = geom.localization_nm;
  const double s = geom.overlap();
  const double g = std::exp(-q.squaredNorm() * a * a / 4);
  const double arg = q.x() * geom.separation_nm / 2;
  if (bra == DqdLevel::Plus && ket == DqdLevel::Plus) return g * (std::cos(arg) + s) / (1 + s);
  if (bra == DqdLevel::Minus && ket == DqdLevel::Minus) return g * (std::cos(arg) - s) / (1 - s);
  return cplx(0, -g * std::sin(arg) / std::sqrt(1 - s * s));
}

cplx pair_form_factor(const PairState& bra, const PairState& ket, const Wavevector& q,
                      const DotGeometry& geom) {
  cplx out = 0;
  if (bra.b == ket.b) out += dqd_form_factor(bra.a, ket.a, q, geom);
  if (bra.a == ket.a) out += dqd_form_factor(bra.b, ket.b, q, geom);
  return out;
}

RateResult two_phonon_rate(const TransitionSpec& spec, const PhononBranch& branch,
                           const Environment& env, const DotGeometry& geom, DenominatorMode mode) {
  if (!(env.temperature_K > 0) || !(env.sound_speed_m_s > 0) || !(env.spectral_cutoff_per_nm > 0)) {
    throw std::invalid_argument("two_phonon_rate: environment values must be positive");
  }
  if (env.resolution < 2) throw std::invalid_argument("two_phonon_rate: resolution too small");
  if (spec.intermediates.empty()) {
    throw std::invalid_argument("two_phonon_rate: intermediate set is empty");
  }
  if (!(spec.splitting_ueV > 0)) throw std::invalid_argument("two_phonon_rate: splitting must be positive");

  RateResult out;
  out.regime_warning = env.kT_ueV() < 10 * spec.splitting_ueV;
  if (branch.coupling_constant == 0) return out;
  const double coarse = rate_at_resolution(spec, branch, env, geom, mode, env.resolution);
  const double fine = rate_at_resolution(spec, branch, env, geom, mode, 2 * env.resolution);
  out.rate_per_s = fine;
  out.est_error = std::abs(fine - coarse);
  if (out.est_error > 0.01 * std::abs(fine)) {
    throw NonConvergent("two_phonon_rate: doubling resolution " + std::to_string(env.resolution) +
                        " changed the rate by more than 1%");
  }
  return out;
}

ScalingFit fit_scaling(std::span<const std::pair<double, double>> samples) {
  if (samples.size() < 2) throw std::invalid_argument("fit_scaling_exponent: need >= 2 samples");
  double mx = 0, my = 0;
  for (auto [x, y] : samples) {
    if (!(x > 0) || !(y > 0)) {
      throw std::invalid_argument("fit_scaling_exponent: samples must be positive");
    }
    mx += std::log(x);
    my += std::log(y);
  }
  mx /= samples.size();
  my /= samples.size();
  double sxx = 0, sxy = 0;
  for (auto [x, y] : samples) {
    const double dx = std::log(x) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(y) - my);
  }
  if (sxx <= 0) throw std::invalid_argument("fit_scaling_exponent: need two distinct x values");
  ScalingFit fit;
  fit.exponent = sxy / sxx;
  if (samples.size() > 2) {
    double ssr = 0;
    for (auto [x, y] : samples) {
      const double r = std::log(y) - my - fit.exponent * (std::log(x) - mx);
      ssr += r * r;
    }
    fit.std_error = std::sqrt(ssr / (samples.size() - 2) / sxx);
  }
  return fit;
}

double fit_scaling_exponent(std::span<const std::pair<double, double>> samples) {
  return fit_scaling(samples).exponent;
}

double SelectionRuleTable::forbidden_ratio() const {
  return std::max(plus_plus, minus_minus) / minus_plus;
}

SelectionRuleTable coulomb_selection_rule(const DotGeometry& geom, int resolution) {
  if (!(geom.separation_nm > 0) || !(geom.localization_nm > 0)) {
    throw std::invalid_argument("coulomb_selection_rule: geometry must be positive");
  }
  if (resolution < 16) throw std::invalid_argument("coulomb_selection_rule: resolution too small");
  const SelectionElements coarse = selection_elements(geom, resolution);
  const SelectionElements fine = selection_elements(geom, 2 * resolution);
  SelectionRuleTable t;
  t.plus_plus = fine.pp;
  t.minus_minus = fine.mm;
  t.minus_plus = fine.mp;
  t.error_bound = std::abs(fine.mp - coarse.mp);
  t.resolution = 2 * resolution;
  if (t.error_bound > 0.01 * fine.mp) {
    throw NonConvergent("coulomb_selection_rule: allowed element not converged at resolution " +
                        std::to_string(resolution));
  }
  return t;
}

}  // namespace dqd

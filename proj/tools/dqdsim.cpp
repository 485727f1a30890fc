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
#include "dqd/decoherence.hpp"
#include "dqd/gates.hpp"
#include "dqd/pulses.hpp"
#include "dqd/readout.hpp"
#include "dqd/report.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace dqd;

constexpr int kChecksFailed = 1;
constexpr int kError = 2;

struct Common {
  std::string config;
  std::string out;
  std::string format = "json";
  double tolerance = 1e-9;
  int resolution = 0;
  int seed = 0;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--config", c.config, "JSON file of option defaults");
  sub->add_option("--out", c.out, "output path (stdout when omitted)");
  sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--tolerance", c.tolerance, "required residual bound");
  sub->add_option("--resolution", c.resolution, "quadrature resolution (0 = module default)");
  sub->add_option("--seed", c.seed, "reserved; all algorithms are deterministic");
}

/// Config keys become "--key value" arguments placed before the user's own,
/// so the command line wins.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  for (std::size_t i = 1; i + 1 < args.size(); ++i) {
    if (args[i] != "--config") continue;
    const Json cfg = read_json_file(args[i + 1]);
    if (!cfg.is_object()) throw ReportError("--config: expected a JSON object");
    std::vector<std::string> extra;
    for (const auto& [key, value] : cfg.items()) {
      extra.push_back("--" + key);
      if (value.is_string()) {
        extra.push_back(value.get<std::string>());
      } else if (value.is_number_float()) {
        extra.push_back(fmt17(value.get<double>()));
      } else if (value.is_boolean()) {
        if (!value.get<bool>()) extra.pop_back();
      } else {
        extra.push_back(value.dump());
      }
    }
    args.insert(args.begin() + 2, extra.begin(), extra.end());
    break;
  }
  return args;
}

GateCatalog load_catalog(const std::string& path) {
  GateCatalog catalog;
  if (!path.empty()) apply_catalog_overrides(catalog, read_json_file(path));
  return catalog;
}

void emit(const Common& c, const Json& j, const CsvTable& csv) {
  write_text(c.out, c.format == "csv" ? csv.str() : dump(j));
}

// verify ----------------------------------------------------------------

struct VerifyOpts {
  std::string gates;
  double amplitude = 1.0;
  double grid = kPi / 4;
};

int cmd_verify(const Common& c, const VerifyOpts& o) {
  const GateCatalog catalog = load_catalog(o.gates);
  DecompositionReport rep = verify_gate_identities(catalog);
  rep.append(verify_pulse_gates(HamiltonianModel{}, o.amplitude, catalog));
  rep.append(verify_compiled_constructions(o.grid, catalog));
  rep.retolerance(c.tolerance);
  Json j = to_json(rep);
  j["tolerance"] = c.tolerance;
  CsvTable csv({"name", "kind", "residual", "tolerance", "passed"});
  for (const auto& e : rep.entries) {
    csv.add_row({e.name, e.kind, e.residual,
                 e.tolerance ? CsvTable::Cell(*e.tolerance) : CsvTable::Cell(std::string("")),
                 std::string(e.passed() ? "true" : "false")});
  }
  emit(c, j, csv);
  for (const auto& name : rep.failing()) std::cerr << "FAILED " << name << "\n";
  return rep.all_passed() ? 0 : kChecksFailed;
}

// compile ---------------------------------------------------------------

struct CompileOpts {
  std::string gate = "swap";
  double amplitude = 1.0;
  int repeat = 1;
};

int cmd_compile(const Common& c, const CompileOpts& o) {
  const auto id = parse_gate_id(o.gate);
  if (!id) throw std::invalid_argument("unknown gate '" + o.gate + "'");
  if (o.repeat < 1) throw std::invalid_argument("--repeat must be >= 1");
  const PulseSchedule one = calibrate(*id, o.amplitude);
  PulseSchedule s;
  for (int i = 0; i < o.repeat; ++i) s = s.then(one);
  CsvTable csv({"electrode", "amplitude_ueV", "duration_ns"});
  for (const auto& p : s.segments) csv.add_row({p.electrode.name(), p.amplitude_ueV, p.duration_ns});
  emit(c, to_json(s), csv);
  return 0;
}

// evolve ----------------------------------------------------------------

struct EvolveOpts {
  std::string schedule;
  std::string initial = "00";
  std::string target;
  int target_repeat = 1;
};

TwoQubitState parse_initial(const std::string& s) {
  if (s.size() == 2 && (s[0] == '0' || s[0] == '1') && (s[1] == '0' || s[1] == '1')) {
    return TwoQubitState::basis_state(ExtendedBasis::computational_row(s[0] - '0', s[1] - '0'));
  }
  if (s.rfind("row:", 0) == 0) {
    const int row = std::stoi(s.substr(4));
    if (row < 0 || row >= ExtendedBasis::kDim) throw std::invalid_argument("row out of range");
    return TwoQubitState::basis_state(row);
  }
  throw std::invalid_argument("--initial must be 00, 01, 10, 11 or row:<0..5>");
}

int cmd_evolve(const Common& c, const EvolveOpts& o) {
  const PulseSchedule s = schedule_from_json(read_json_file(o.schedule));
  const HamiltonianModel model;
  const TwoQubitState psi0 = parse_initial(o.initial);
  const TwoQubitState psi = evolve(s, model, psi0);
  Json j{{"segments", s.size()},
         {"total_duration_ns", s.total_duration_ns()},
         {"initial", o.initial},
         {"final_amplitudes", to_json(psi.amplitudes())},
         {"leakage_population", leakage_population(psi)}};
  CsvTable csv({"row", "label", "re", "im", "probability"});
  for (int r = 0; r < ExtendedBasis::kDim; ++r) {
    csv.add_row({double(r), ExtendedBasis::label(r), psi[r].real(), psi[r].imag(), std::norm(psi[r])});
  }
  bool ok = true;
  if (!o.target.empty()) {
    const auto id = parse_gate_id(o.target);
    if (!id) throw std::invalid_argument("unknown gate '" + o.target + "'");
    CMatrix g = CMatrix::Identity(6, 6);
    for (int i = 0; i < o.target_repeat; ++i) g = gate_matrix(*id) * g;
    const double fidelity = state_fidelity(CVector(g * psi0.amplitudes()), psi.amplitudes());
    const double residual = dist_up_to_global_phase(evolve(s, model), g);
    ok = 1 - fidelity <= c.tolerance;
    j["target"] = o.target;
    j["target_repeat"] = o.target_repeat;
    j["state_fidelity"] = fidelity;
    j["unitary_residual"] = residual;
    j["passed"] = ok;
  }
  emit(c, j, csv);
  return ok ? 0 : kChecksFailed;
}

// decohere --------------------------------------------------------------

struct DecohereOpts {
  std::string branch = "both";
  std::string mode = "reduced";
  std::string sweep = "all";
  double t_min = 0.01, t_max = 0.1;
  double deps_min = 1, deps_max = 100;
  double splitting = 1e-3;
  int points = 6;
  double rate_exp_deformation = 6, rate_exp_piezoelectric = 2;
  double rate_exp_tolerance = 0.1;
  double separation = 22, localization = 5;
  int selection_resolution = 512;
};

int cmd_decohere(const Common& c, const DecohereOpts& o) {
  if (!(o.t_min > 0) || !(o.t_max > o.t_min) || !(o.deps_min > 0) || !(o.deps_max > o.deps_min) ||
      o.points < 2) {
    throw std::invalid_argument("decohere: degenerate range");
  }
  std::vector<PhononBranch> branches;
  if (o.branch == "both" || o.branch == "deformation") branches.push_back(PhononBranch::deformation());
  if (o.branch == "both" || o.branch == "piezoelectric") branches.push_back(PhononBranch::piezoelectric());
  const DenominatorMode mode = o.mode == "exact" ? DenominatorMode::Exact : DenominatorMode::Reduced;
  const DotGeometry geom{o.separation, o.localization};
  auto grid = [&](double lo, double hi, int k) {
    return lo * std::pow(hi / lo, double(k) / (o.points - 1));
  };

  Json j = Json::object();
  std::vector<std::string> failing;
  CsvTable csv({"quantity", "T_K_or_deps_ueV", "branch", "mode", "rate_or_tau", "est_error"});

  if (o.sweep == "all" || o.sweep == "tau") {
    Json tau = Json::object();
    for (const auto& b : branches) {
      std::vector<std::pair<double, double>> pts;
      Json jp = Json::array();
      for (int k = 0; k < o.points; ++k) {
        const double deps = grid(o.deps_min, o.deps_max, k);
        pts.push_back({deps, single_phonon_tau(deps, b)});
        jp.push_back({deps, pts.back().second});
        csv.add_row({std::string("tau"), deps, b.name(), std::string("analytic"), pts.back().second, 0.0});
      }
      const ScalingFit fit = fit_scaling(pts);
      const double expected = -b.tau_exponent();
      const bool ok = std::abs(fit.exponent - expected) <= 1e-10;
      if (!ok) failing.push_back("tau_exponent_" + b.name());
      tau[b.name()] = {{"points", jp},          {"exponent", fit.exponent},
                       {"std_error", fit.std_error}, {"expected", expected},
                       {"tolerance", 1e-10},     {"passed", ok}};
    }
    j["tau_sweep"] = tau;
    Json anchors{{"note", "configuration anchors, not derived: tau at the reference splitting"},
                 {"reference_splitting_ueV", kAnchorSplitting}};
    for (const auto& b : branches) anchors[b.name() + "_tau_s"] = single_phonon_tau(kAnchorSplitting, b);
    j["anchors"] = anchors;
  }

  if (o.sweep == "all" || o.sweep == "rate") {
    Json rate = Json::object();
    for (const auto& b : branches) {
      std::vector<std::pair<double, double>> pts;
      Json jp = Json::array();
      bool warn = false;
      for (int k = 0; k < o.points; ++k) {
        Environment env;
        env.temperature_K = grid(o.t_min, o.t_max, k);
        if (c.resolution > 0) env.resolution = c.resolution;
        TransitionSpec spec;
        spec.splitting_ueV = o.splitting;
        const RateResult r = two_phonon_rate(spec, b, env, geom, mode);
        warn = warn || r.regime_warning;
        pts.push_back({env.temperature_K, r.rate_per_s});
        jp.push_back({env.temperature_K, r.rate_per_s, r.est_error});
        csv.add_row({std::string("rate"), env.temperature_K, b.name(), o.mode, r.rate_per_s, r.est_error});
      }
      const ScalingFit fit = fit_scaling(pts);
      const double expected = b.kind == PhononBranch::Kind::Deformation ? o.rate_exp_deformation
                                                                        : o.rate_exp_piezoelectric;
      const bool ok = std::abs(fit.exponent - expected) <= o.rate_exp_tolerance;
      if (!ok) failing.push_back("rate_exponent_" + b.name());
      rate[b.name()] = {{"points", jp},          {"exponent", fit.exponent},
                        {"std_error", fit.std_error}, {"expected", expected},
                        {"tolerance", o.rate_exp_tolerance}, {"regime_warning", warn},
                        {"passed", ok}};
    }
    j["rate_sweep"] = rate;
    j["rate_mode"] = o.mode;
    j["rate_units"] = "1/s per unit coupling_constant^2";
  }

  if (o.sweep == "all" || o.sweep == "selection") {
    const SelectionRuleTable t = coulomb_selection_rule(geom, o.selection_resolution);
    const bool ok = t.forbidden_ratio() <= 1e-3;
    if (!ok) failing.push_back("selection_rule");
    j["selection_rule"] = {{"plus_plus", t.plus_plus},     {"minus_minus", t.minus_minus},
                           {"minus_plus", t.minus_plus},   {"error_bound", t.error_bound},
                           {"resolution", t.resolution},   {"forbidden_ratio", t.forbidden_ratio()},
                           {"tolerance", 1e-3},            {"passed", ok}};
  }

  j["failing"] = failing;
  j["all_passed"] = failing.empty();
  emit(c, j, csv);
  for (const auto& f : failing) std::cerr << "FAILED " << f << "\n";
  return failing.empty() ? 0 : kChecksFailed;
}

// readout / init --------------------------------------------------------

struct ReadoutOpts {
  double tunnel = 1;
  double bias = std::nan("");
  double duration = 0, timestep = 0;
  std::string level = "plus";
  double temperature = 0.01;
  double jitter = 0.01;
};

DqdLevel parse_level(const std::string& s) {
  if (s == "plus" || s == "+") return DqdLevel::Plus;
  if (s == "minus" || s == "-") return DqdLevel::Minus;
  throw std::invalid_argument("level must be plus or minus");
}

/// Explicit bias and window when given; otherwise the best point of the scan.
ReadoutConfig resolve_config(const ReadoutOpts& o, Json& j) {
  ReadoutConfig cfg;
  if (std::isnan(o.bias)) {
    const BiasScan scan = scan_bias(o.tunnel);
    cfg = config_for(o.tunnel, scan.best.bias_ueV);
    j["bias_source"] = "scan over (0, 4 t_c]";
  } else {
    cfg.tunnel_coupling_ueV = o.tunnel;
    cfg.bias_ueV = o.bias;
    const double period = ReadoutConfig{o.tunnel, o.bias, 1, 0.1}.rabi_period_ns();
    cfg.duration_ns = std::isfinite(period) ? 10 * period : 10;
    cfg.timestep_ns = cfg.duration_ns / 4000;
    j["bias_source"] = "explicit";
  }
  if (o.duration > 0) cfg.duration_ns = o.duration;
  if (o.timestep > 0) cfg.timestep_ns = o.timestep;
  cfg.validate();
  j["config"] = {{"tunnel_coupling_ueV", cfg.tunnel_coupling_ueV}, {"bias_ueV", cfg.bias_ueV},
                 {"duration_ns", cfg.duration_ns},                 {"timestep_ns", cfg.timestep_ns}};
  return cfg;
}

int cmd_readout(const Common& c, const ReadoutOpts& o) {
  Json j = Json::object();
  const ReadoutConfig cfg = resolve_config(o, j);
  const MeasurementWindow w = optimal_measurement_time(cfg);
  const ReadoutTrace tr = readout_trace(level_state(parse_level(o.level)), cfg);
  double conservation = 0;
  for (std::size_t k = 0; k < tr.times.size(); ++k) {
    conservation = std::max(conservation, std::abs(tr.p_left[k] + tr.p_right[k] - 1));
  }
  j["t_star_ns"] = w.t_star_ns;
  j["distinguishability"] = w.distinguishability;
  j["degenerate"] = w.degenerate;
  j["timing_jitter_ns"] = o.jitter;
  j["timing_jitter_loss"] = timing_jitter_loss(cfg, w.t_star_ns, o.jitter);
  j["probability_conservation_defect"] = conservation;
  Json thermal = Json::array();
  const double kT = kBoltzmann * o.temperature;
  for (double x : {1.0, 5.0, 9.3}) {
    thermal.push_back({{"deps_over_kT", x}, {"occupancy", thermal_occupancy(x * kT, o.temperature)}});
  }
  j["thermal_occupancy"] = thermal;
  if (w.degenerate) std::cerr << "degenerate: distinguishability vanishes (zero bias?)\n";
  CsvTable csv({"t_ns", "p_left", "p_right"});
  for (std::size_t k = 0; k < tr.times.size(); ++k) csv.add_row({tr.times[k], tr.p_left[k], tr.p_right[k]});
  emit(c, j, csv);
  return conservation <= 1e-12 ? 0 : kChecksFailed;
}

int cmd_init(const Common& c, const ReadoutOpts& o) {
  Json j = Json::object();
  const ReadoutConfig cfg = resolve_config(o, j);
  const InitResult r = init_by_reversed_readout(parse_level(o.level), cfg);
  const bool ok = std::abs(r.fidelity - r.forward_bound) <= 1e-12;
  j["target"] = o.level;
  j["start_dot"] = std::string(1, r.start_dot);
  j["window_ns"] = r.window_ns;
  j["reversed_tunnel_ueV"] = r.reversed_tunnel_ueV;
  j["reversed_bias_ueV"] = r.reversed_bias_ueV;
  j["schedule"] = r.description;
  j["fidelity"] = r.fidelity;
  j["forward_bound"] = r.forward_bound;
  j["passed"] = ok;
  CsvTable csv({"target", "start_dot", "window_ns", "fidelity", "forward_bound"});
  csv.add_row({o.level, std::string(1, r.start_dot), r.window_ns, r.fidelity, r.forward_bound});
  emit(c, j, csv);
  return ok ? 0 : kChecksFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dqdsim: double-quantum-dot charge qubit simulator"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  Common common;
  VerifyOpts vo;
  CompileOpts co;
  EvolveOpts eo;
  DecohereOpts dopt;
  ReadoutOpts ro;

  auto* verify = app.add_subcommand("verify", "gate identities, pulse and compiled constructions");
  add_common(verify, common);
  verify->add_option("--gates", vo.gates, "JSON overriding catalog entries");
  verify->add_option("--amplitude", vo.amplitude, "pulse amplitude, ueV");
  verify->add_option("--grid", vo.grid, "embedding search offset grid, rad");

  auto* compile = app.add_subcommand("compile", "calibrated schedule for a gate");
  add_common(compile, common);
  compile->add_option("--gate", co.gate, "gate name");
  compile->add_option("--amplitude", co.amplitude, "pulse amplitude, ueV");
  compile->add_option("--repeat", co.repeat, "repetitions");

  auto* evolve_cmd = app.add_subcommand("evolve", "apply a schedule to a basis state");
  add_common(evolve_cmd, common);
  evolve_cmd->add_option("--schedule", eo.schedule, "schedule JSON")->required();
  evolve_cmd->add_option("--initial", eo.initial, "00|01|10|11|row:<n>");
  evolve_cmd->add_option("--target", eo.target, "expected gate");
  evolve_cmd->add_option("--target-repeat", eo.target_repeat, "target gate power");

  auto* decohere = app.add_subcommand("decohere", "lifetime and two-phonon sweeps");
  add_common(decohere, common);
  decohere->add_option("--branch", dopt.branch)->check(CLI::IsMember({"both", "deformation", "piezoelectric"}));
  decohere->add_option("--mode", dopt.mode)->check(CLI::IsMember({"reduced", "exact"}));
  decohere->add_option("--sweep", dopt.sweep)->check(CLI::IsMember({"all", "tau", "rate", "selection"}));
  decohere->add_option("--t-min", dopt.t_min, "K");
  decohere->add_option("--t-max", dopt.t_max, "K");
  decohere->add_option("--deps-min", dopt.deps_min, "ueV");
  decohere->add_option("--deps-max", dopt.deps_max, "ueV");
  decohere->add_option("--splitting", dopt.splitting, "qubit splitting in the rate sweep, ueV");
  decohere->add_option("--points", dopt.points);
  decohere->add_option("--rate-exponent-deformation", dopt.rate_exp_deformation);
  decohere->add_option("--rate-exponent-piezoelectric", dopt.rate_exp_piezoelectric);
  decohere->add_option("--rate-exponent-tolerance", dopt.rate_exp_tolerance);
  decohere->add_option("--separation", dopt.separation, "nm");
  decohere->add_option("--localization", dopt.localization, "nm");
  decohere->add_option("--selection-resolution", dopt.selection_resolution);

  auto add_readout = [&](CLI::App* sub) {
    add_common(sub, common);
    sub->add_option("--tunnel", ro.tunnel, "t_c, ueV");
    sub->add_option("--bias", ro.bias, "ueV (scanned when omitted)");
    sub->add_option("--duration", ro.duration, "ns");
    sub->add_option("--timestep", ro.timestep, "ns");
    sub->add_option("--level", ro.level, "plus|minus");
    sub->add_option("--temperature", ro.temperature, "K");
    sub->add_option("--jitter", ro.jitter, "ns");
  };
  auto* readout = app.add_subcommand("readout", "biased-tunneling read-out");
  add_readout(readout);
  auto* init = app.add_subcommand("init", "initialization by reversed read-out");
  add_readout(init);

  try {
    std::vector<std::string> args(argv, argv + argc);
    args = expand_config(std::move(args));
    std::vector<const char*> cargs;
    for (const auto& a : args) cargs.push_back(a.c_str());
    app.parse(static_cast<int>(cargs.size()), const_cast<char**>(cargs.data()));
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }

  try {
    if (*verify) return cmd_verify(common, vo);
    if (*compile) return cmd_compile(common, co);
    if (*evolve_cmd) return cmd_evolve(common, eo);
    if (*decohere) return cmd_decohere(common, dopt);
    if (*readout) return cmd_readout(common, ro);
    if (*init) return cmd_init(common, ro);
  } catch (const NonConvergent& e) {
    std::cerr << "non-convergent: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

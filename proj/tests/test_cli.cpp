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


#include "dqd/report.hpp"

#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using dqd::Json;

namespace {

struct Run {
  int exit_code;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("dqdsim_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Run dqdsim(const std::string& args) {
  const fs::path out = scratch() / "stdout.txt", err = scratch() / "stderr.txt";
  const std::string cmd =
      std::string(DQDSIM_EXE) + " " + args + " >" + out.string() + " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p;
}

const Json* entry(const Json& report, const std::string& name) {
  for (const auto& e : report["entries"]) {
    if (e["name"] == name) return &e;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("verify: default run passes") {
  const Run r = dqdsim("verify");
  REQUIRE(r.exit_code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["all_passed"] == true);
  CHECK(j["notes"]["pi_identity"] == "reproduced");
}

TEST_CASE("verify: corrupted literal fails and is named") {
  const Run r = dqdsim("verify --gates " + std::string(TEST_DATA_DIR) + "/corrupted_sqrt_swap.json");
  CHECK(r.exit_code == 1);
  const Json j = Json::parse(r.out);
  const auto failing = j["failing"].get<std::vector<std::string>>();
  CHECK(std::ranges::find(failing, "sqrt_swap_from_e_sqrt_nots_e") != failing.end());
  CHECK(r.err.find("sqrt_swap_from_e_sqrt_nots_e") != std::string::npos);
}

TEST_CASE("verify: tolerance ladder separates transcription from integration error") {
  const Run r = dqdsim("verify --tolerance 1e-15");
  CHECK(r.exit_code == 1);
  const Json j = Json::parse(r.out);
  CHECK((*entry(j, "pulse_sqrt_swap_squared_is_swap"))["passed"] == false);
  for (const auto& e : j["entries"]) {
    if (e["kind"] == "algebra") CHECK(e["passed"] == true);
  }
  const fs::path cfg = write_file("tol.json", R"({"tolerance": 1e-15})");
  CHECK(dqdsim("verify --config " + cfg.string()).exit_code == 1);
  CHECK(dqdsim("verify --config " + cfg.string() + " --tolerance 1e-9").exit_code == 0);
}

TEST_CASE("verify: csv format") {
  const Run r = dqdsim("verify --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("name,kind,residual,tolerance,passed\n", 0) == 0);
}

TEST_CASE("evolve: four-pulse SWAP on |01>") {
  const Run c = dqdsim("compile --gate swap");
  REQUIRE(c.exit_code == 0);
  const fs::path sched = write_file("swap.json", c.out);
  const Run r = dqdsim("evolve --schedule " + sched.string() + " --initial 01 --target swap");
  REQUIRE(r.exit_code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["state_fidelity"].get<double>() >= 1 - 1e-9);
  const auto amp = j["final_amplitudes"][3];  // |10>
  CHECK(std::norm(std::complex<double>(amp[0], amp[1])) >= 1 - 1e-9);
  CHECK(j["leakage_population"].get<double>() <= 1e-12);
}

TEST_CASE("evolve: empty schedule leaves the state unchanged") {
  const fs::path sched = write_file("empty.json", "[]");
  const Run r = dqdsim("evolve --schedule " + sched.string() + " --initial 10");
  REQUIRE(r.exit_code == 0);
  const Json j = Json::parse(r.out);
  for (int row = 0; row < 6; ++row) {
    const double re = j["final_amplitudes"][row][0], im = j["final_amplitudes"][row][1];
    CHECK(re == (row == 3 ? 1.0 : 0.0));
    CHECK(im == 0.0);
  }
}

TEST_CASE("evolve: sqrtSWAP twice is SWAP") {
  const Run c = dqdsim("compile --gate sqrt_swap --repeat 2 --amplitude 2.5");
  REQUIRE(c.exit_code == 0);
  const fs::path sched = write_file("ssw2.json", c.out);
  for (const char* in : {"00", "01", "10", "11"}) {
    const Run r = dqdsim("evolve --schedule " + sched.string() + " --initial " + in + " --target swap");
    CHECK(r.exit_code == 0);
    CHECK(Json::parse(r.out)["state_fidelity"].get<double>() >= 1 - 1e-9);
  }
}

TEST_CASE("evolve: malformed schedules name the segment") {
  const fs::path bad = write_file(
      "bad.json", R"([{"electrode":"E1","amplitude_ueV":1,"duration_ns":1},{"electrode":"E1","duration_ns":1}])");
  const Run r = dqdsim("evolve --schedule " + bad.string());
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("segment 1") != std::string::npos);
  CHECK(r.err.find("amplitude_ueV") != std::string::npos);
  const fs::path junk = write_file("junk.json", "{not json");
  CHECK(dqdsim("evolve --schedule " + junk.string()).exit_code == 2);
  CHECK(dqdsim("evolve --schedule /nonexistent/file.json").exit_code == 2);
}

TEST_CASE("decohere: sweeps and declared exponents") {
  const Run r = dqdsim("decohere");
  const Json j = Json::parse(r.out);
  CHECK(j["tau_sweep"]["deformation"]["passed"] == true);
  CHECK(std::abs(j["tau_sweep"]["deformation"]["exponent"].get<double>() + 5) <= 1e-10);
  CHECK(std::abs(j["tau_sweep"]["piezoelectric"]["exponent"].get<double>() + 3) <= 1e-10);
  CHECK(j["selection_rule"]["passed"] == true);
  CHECK(j["anchors"]["note"].get<std::string>().find("configuration anchors") != std::string::npos);
  // The declared targets are 6 and 2; the quadrature gives 7 and 3.
  CHECK(r.exit_code == 1);
  CHECK(j["rate_sweep"]["deformation"]["exponent"].get<double>() == Catch::Approx(7).margin(0.05));
  CHECK(j["rate_sweep"]["piezoelectric"]["exponent"].get<double>() == Catch::Approx(3).margin(0.05));
  const Run ok = dqdsim(
      "decohere --sweep rate --rate-exponent-deformation 7 --rate-exponent-piezoelectric 3");
  CHECK(ok.exit_code == 0);
  const Run csv = dqdsim("decohere --sweep tau --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.rfind("quantity,T_K_or_deps_ueV,branch,mode,rate_or_tau,est_error\n", 0) == 0);
  CHECK(dqdsim("decohere --t-min 0.1 --t-max 0.01").exit_code == 2);
  CHECK(dqdsim("decohere --sweep rate --resolution 2 --t-min 1 --t-max 2").exit_code == 2);
}

TEST_CASE("readout and init") {
  const Run r = dqdsim("readout");
  REQUIRE(r.exit_code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["distinguishability"].get<double>() >= 0.99);
  CHECK(j["probability_conservation_defect"].get<double>() <= 1e-12);
  CHECK(j["thermal_occupancy"][2]["occupancy"].get<double>() <= 1e-4);
  const Run zero = dqdsim("readout --bias 0");
  CHECK(Json::parse(zero.out)["degenerate"] == true);
  CHECK(zero.err.find("degenerate") != std::string::npos);
  const Run trace = dqdsim("readout --format csv --bias 1 --duration 2 --timestep 0.5");
  CHECK(trace.out.rfind("t_ns,p_left,p_right\n0,", 0) == 0);
  CHECK(std::ranges::count(trace.out, '\n') == 6);
  const Run init = dqdsim("init --level minus");
  CHECK(init.exit_code == 0);
  const Json ji = Json::parse(init.out);
  CHECK(ji["fidelity"].get<double>() >= 0.99);
  CHECK(ji["passed"] == true);
  CHECK(dqdsim("readout --bias 1 --duration 1 --timestep 2").exit_code == 2);
  CHECK(dqdsim("readout --level sideways").exit_code == 2);
}

TEST_CASE("output goes to --out and runs are byte-identical") {
  for (const std::string args : {"verify", "decohere", "readout --format csv", "init",
                                 "compile --gate sqrt_swap"}) {
    const fs::path a = scratch() / "a.out", b = scratch() / "b.out";
    dqdsim(args + " --out " + a.string());
    dqdsim(args + " --out " + b.string());
    const std::string sa = slurp(a);
    CHECK_FALSE(sa.empty());
    CHECK(sa == slurp(b));
  }
}

TEST_CASE("usage errors") {
  CHECK(dqdsim("").exit_code != 0);
  CHECK(dqdsim("frobnicate").exit_code != 0);
  CHECK(dqdsim("verify --format xml").exit_code != 0);
}

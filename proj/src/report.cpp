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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace dqd {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json to_json(const DecompositionReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json je{{"name", e.name}, {"kind", e.kind}, {"residual", e.residual}};
    je["tolerance"] = e.tolerance ? Json(*e.tolerance) : Json(nullptr);
    je["passed"] = e.passed();
    entries.push_back(std::move(je));
  }
  Json notes = Json::object();
  for (const auto& [k, v] : r.notes) notes[k] = v;
  return {{"all_passed", r.all_passed()},
          {"failing", r.failing()},
          {"entries", std::move(entries)},
          {"notes", std::move(notes)}};
}

PulseSchedule schedule_from_json(const Json& j) {
  const Json& list = j.is_object() && j.contains("segments") ? j["segments"] : j;
  if (!list.is_array()) throw InvalidSchedule("schedule: expected a list of segments");
  PulseSchedule s;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "segment " + std::to_string(i);
    const Json& seg = list[i];
    try {
      if (!seg.is_object()) throw InvalidSchedule("not an object");
      for (const char* key : {"electrode", "amplitude_ueV", "duration_ns"}) {
        if (!seg.contains(key)) throw InvalidSchedule(std::string("missing '") + key + "'");
      }
      if (!seg["electrode"].is_string()) throw InvalidSchedule("electrode must be a string");
      if (!seg["amplitude_ueV"].is_number() || !seg["duration_ns"].is_number()) {
        throw InvalidSchedule("amplitude_ueV and duration_ns must be numbers");
      }
      PulseSegment p{Electrode::parse(seg["electrode"].get<std::string>()),
                     seg["amplitude_ueV"].get<double>(), seg["duration_ns"].get<double>()};
      if (!(p.duration_ns >= 0) || !std::isfinite(p.amplitude_ueV)) {
        throw InvalidSchedule("duration must be >= 0 and amplitude finite");
      }
      s.segments.push_back(p);
    } catch (const InvalidSchedule& e) {
      throw InvalidSchedule(where + ": " + e.what());
    }
  }
  return s;
}

Json to_json(const PulseSchedule& s) {
  Json out = Json::array();
  for (const auto& p : s.segments) {
    out.push_back(
        {{"electrode", p.electrode.name()}, {"amplitude_ueV", p.amplitude_ueV}, {"duration_ns", p.duration_ns}});
  }
  return out;
}

namespace {

cplx entry_from_json(const Json& e) {
  if (e.is_number()) return {e.get<double>(), 0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
    return {e[0].get<double>(), e[1].get<double>()};
  }
  throw ReportError("matrix entry must be a number or [re, im]");
}

Json entry_to_json(cplx c) { return Json::array({c.real(), c.imag()}); }

}  // namespace

CMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw ReportError("matrix: expected row lists");
  const auto rows = j.size(), cols = j[0].size();
  CMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw ReportError("matrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry_from_json(j[r][c]);
  }
  return m;
}

Json to_json(const CMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(entry_to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const CVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(entry_to_json(v(i)));
  return out;
}

void apply_catalog_overrides(GateCatalog& catalog, const Json& j) {
  if (!j.is_object()) throw ReportError("gate overrides: expected an object keyed by gate name");
  for (const auto& [name, value] : j.items()) {
    const auto id = parse_gate_id(name);
    if (!id) throw ReportError("gate overrides: unknown gate '" + name + "'");
    try {
      catalog.set(*id, matrix_from_json(value));
    } catch (const std::exception& e) {
      throw ReportError("gate overrides: " + name + ": " + e.what());
    }
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ReportError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ReportError("'" + path + "': " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw ReportError("cannot write '" + path + "'");
}

namespace {

void dump_into(std::ostringstream& os, const Json& j, int depth) {
  const std::string pad(2 * (depth + 1), ' '), close(2 * depth, ' ');
  if (j.is_number_float()) {
    os << fmt17(j.get<double>());
  } else if (j.is_array() && !j.empty()) {
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << pad;
      dump_into(os, j[i], depth + 1);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << close << "]";
  } else if (j.is_object() && !j.empty()) {
    os << "{\n";
    std::size_t i = 0;
    for (const auto& [k, v] : j.items()) {
      os << pad << Json(k).dump() << ": ";
      dump_into(os, v, depth + 1);
      os << (++i < j.size() ? ",\n" : "\n");
    }
    os << close << "}";
  } else {
    os << j.dump();
  }
}

}  // namespace

std::string dump(const Json& j) {
  std::ostringstream os;
  dump_into(os, j, 0);
  os << "\n";
  return os.str();
}

void CsvTable::add_row(std::vector<Cell> row) {
  if (row.size() != header_.size()) throw ReportError("csv: row width mismatch");
  rows_.push_back(std::move(row));
}

std::string CsvTable::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < header_.size(); ++i) os << (i ? "," : "") << header_[i];
  os << "\n";
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ",";
      if (const double* d = std::get_if<double>(&row[i])) {
        os << fmt17(*d);
      } else {
        os << std::get<std::string>(row[i]);
      }
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace dqd

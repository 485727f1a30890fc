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

#include "dqd/gates.hpp"
#include "dqd/pulses.hpp"

#include <json.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace dqd {

using Json = nlohmann::ordered_json;

struct ReportError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// %.17g
std::string fmt17(double v);

Json to_json(const DecompositionReport& r);

/// A schedule is a list of {"electrode", "amplitude_ueV", "duration_ns"}.
/// Errors name the offending segment index.
PulseSchedule schedule_from_json(const Json& j);
Json to_json(const PulseSchedule& s);

/// Complex matrices are row lists whose entries are numbers or [re, im].
CMatrix matrix_from_json(const Json& j);
Json to_json(const CMatrix& m);
Json to_json(const CVector& v);

/// {"<gate name>": matrix, ...} replacing catalog entries.
void apply_catalog_overrides(GateCatalog& catalog, const Json& j);

Json read_json_file(const std::string& path);
/// Writes to `path`, or stdout when empty. Throws ReportError on I/O failure.
void write_text(const std::string& path, const std::string& text);
/// Indented JSON, floats as fmt17, trailing newline.
std::string dump(const Json& j);

/// Comma-separated table; numbers printed with fmt17.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}
  using Cell = std::variant<double, std::string>;
  void add_row(std::vector<Cell> row);
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<Cell>> rows_;
};

}  // namespace dqd

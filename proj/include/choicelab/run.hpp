// Copyright 2026 The Choicelab Authors
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

// Command dispatch for the frontend: load an input file, run one command,
// emit a report, translate failures into exit codes.

#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>

#include "choicelab/report.hpp"

namespace choicelab {

struct RunConfig {
  // choice-eval | hierarchy | nonred | embed | rationalize | verify
  std::string command;
  std::string input_path;         // required by every command except verify
  std::size_t levels = 2;         // hierarchy depth bound
  std::size_t act_cap = 4096;     // exhaustive act-enumeration cap
  std::size_t menu_cap = 4;       // largest sampled menu size
  std::size_t samples = 64;       // random acts / menus per size
  std::size_t grid = 8;           // belief-grid denominator for default families
  std::uint64_t seed = 0;
  ReportFormat format = ReportFormat::Table;
  bool parallel = true;
};

// Executes one command. Reports go to `out`, diagnostics to `err`.
// Exit status: 0 on success, 1 when a verification fails (a re-checked claim
// does not replay, or the verify suite reports a failing check), 2 on input
// errors (bad config, unreadable file, malformed spec).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace choicelab

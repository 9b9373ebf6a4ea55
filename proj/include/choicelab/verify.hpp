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

// Built-in self-checks: eight deterministic correctness checks over the
// library's own worked fixtures, exposed both to the CLI (`choicelab verify`)
// and to the acceptance harness.  Each check recomputes its claim from
// scratch — pinned choice tables are re-derived from the evaluators, search
// verdicts are replayed against raw attitudes, and the categorical laws are
// exercised on randomly generated instances with fixed seeds — so a pass
// certifies the build rather than echoing stored expectations.

#ifndef CHOICELAB_VERIFY_HPP
#define CHOICELAB_VERIFY_HPP

#include <ostream>
#include <string>
#include <vector>

#include "choicelab/report.hpp"

namespace choicelab {

// Outcome of one self-check.  `seconds` is measured wall time; `pass`
// already accounts for the time budget, so a functionally correct check that
// overruns its budget reports as failed with a note saying so.
struct CheckResult {
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::string detail;              // one line: what was established
  std::vector<std::string> notes;  // extra observations (ties, caveats)
};

// Run the eight checks in their fixed order:
//
//   regret-menus            pinned minimax-regret choice table (worked game)
//   column-attitudes        maxmin vs expected-utility column separation
//   rationalize-fixpoints   elimination fixpoints for all three criteria
//   non-redundancy          behavioral partition verdicts, worked structures
//   functor-laws            identity/composition for the four transports
//   maximization-embedding  injectivity + naturality of poset maximization
//   lift-factor-colimit     lifting, factorization, and gluing laws
//   hierarchy-coherence     generated hierarchies project consistently
//
// All inputs are in-library fixtures and seeded generators, so results are
// deterministic.  `parallel` is forwarded to the scan kernels; it changes
// running time, never verdicts.
std::vector<CheckResult> run_all_checks(bool parallel = true);

bool all_passed(const std::vector<CheckResult>& checks);

// One line per check plus indented notes.  Measured wall times are
// deliberately omitted so identical inputs render byte-identical output;
// callers that want timings (the acceptance harness does) read `seconds`
// from the results directly.
void render_checks(const std::vector<CheckResult>& checks, std::ostream& out,
                   ReportFormat fmt);

}  // namespace choicelab

#endif  // CHOICELAB_VERIFY_HPP

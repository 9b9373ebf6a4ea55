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

// Acceptance gate: runs the eight built-in correctness checks and prints one
// PASS/FAIL line per check with the measured wall time against its budget.
// The process exits 0 only when every check passes (functionally correct and
// inside its time budget), which is what CI keys on.

#include <cstdio>
#include <vector>

#include "choicelab/verify.hpp"

int main() {
  const std::vector<choicelab::CheckResult> checks = choicelab::run_all_checks(true);
  std::size_t passed = 0;
  for (const auto& c : checks) {
    std::printf("[%s] %-24s %7.3fs / %gs budget  %s\n", c.pass ? "PASS" : "FAIL",
                c.name.c_str(), c.seconds, c.budget_seconds, c.detail.c_str());
    for (const auto& n : c.notes) {
      std::printf("       note: %s\n", n.c_str());
    }
    passed += c.pass ? 1 : 0;
  }
  std::printf("acceptance: %zu/%zu checks passed\n", passed, checks.size());
  return passed == checks.size() ? 0 : 1;
}

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

// choicelab — command-line front end.
//
//   choicelab choice-eval  --input x.structure   full choice tables per type
//   choicelab hierarchy    --input x.structure   finite-level hierarchy image
//   choicelab nonred       --input x.structure   behavioral partition verdict
//   choicelab embed        --input x.structure   preference-to-choice embedding
//   choicelab rationalize  --input x.game        iterated elimination trace
//   choicelab verify                             built-in self-checks
//
// Exit codes: 0 on success, 1 when a verification or internal consistency
// check fails, 2 on input errors (bad files, bad flags).  Output is
// deterministic: identical inputs and flags produce byte-identical bytes.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "choicelab/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "choicelab: choice functions over acts, type structures, hierarchies, "
      "and rationalizability"};
  app.require_subcommand(1);

  choicelab::RunConfig cfg;
  std::string format = "table";

  const auto add_common = [&](CLI::App* cmd, bool needs_input) {
    auto* input = cmd->add_option("--input", cfg.input_path,
                                  "input description file (text format)");
    if (needs_input) input->required();
    cmd->add_option("--levels", cfg.levels,
                    "hierarchy depth to generate (hierarchy command)");
    cmd->add_option("--act-cap", cfg.act_cap,
                    "largest act universe a bounded search may enumerate");
    cmd->add_option("--menu-cap", cfg.menu_cap,
                    "largest menu size a bounded search may enumerate");
    cmd->add_option("--samples", cfg.samples,
                    "sampled menus per pair once exhaustive search is capped");
    cmd->add_option("--grid", cfg.grid,
                    "denominator of the belief grid (rationalize command)");
    cmd->add_option("--seed", cfg.seed, "seed for sampled menu draws");
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "machine"}));
  };

  struct Command {
    const char* name;
    const char* help;
    bool needs_input;
  };
  const Command commands[] = {
      {"choice-eval", "evaluate every type's choice function on all menus over its basis",
       true},
      {"hierarchy", "generate the finite-level hierarchy image and check coherence",
       true},
      {"nonred", "refine the behavioral partition and report the non-redundancy verdict",
       true},
      {"embed", "embed an order-based structure and report separating menus", true},
      {"rationalize", "run iterated elimination under each player's criterion", true},
      {"verify", "run the built-in self-checks against the worked fixtures", false},
  };
  for (const Command& c : commands) {
    CLI::App* cmd = app.add_subcommand(c.name, c.help);
    add_common(cmd, c.needs_input);
    cmd->callback([&cfg, name = std::string(c.name)] { cfg.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version requests exit cleanly; everything else is an input
    // error under the documented exit-code contract.
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cfg.format = choicelab::parse_format(format);
  return choicelab::run(cfg, std::cout, std::cerr);
}

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

#include "choicelab/run.hpp"

#include <utility>
#include <variant>
#include <vector>

#include "choicelab/errors.hpp"
#include "choicelab/hierarchy.hpp"
#include "choicelab/textio.hpp"
#include "choicelab/verify.hpp"

namespace choicelab {
namespace {

void validate(const RunConfig& c) {
  static const std::vector<std::string> commands{"choice-eval", "hierarchy", "nonred",
                                                 "embed",       "rationalize", "verify"};
  bool known = false;
  for (const auto& k : commands) known = known || k == c.command;
  if (!known)
    throw InputError("unknown command '" + c.command +
                     "' (choice-eval, hierarchy, nonred, embed, rationalize, verify)");
  if (c.command != "verify" && c.input_path.empty())
    throw InputError("the " + c.command + " command needs --input <file>");
  if (c.levels == 0) throw InputError("--levels must be positive");
  if (c.act_cap == 0) throw InputError("--act-cap must be positive");
  if (c.menu_cap == 0) throw InputError("--menu-cap must be positive");
  if (c.samples == 0) throw InputError("--samples must be positive");
  if (c.grid == 0) throw InputError("--grid must be positive");
}

RefineBounds bounds_from(const RunConfig& c) {
  RefineBounds b;
  b.act_cap = c.act_cap;
  b.menu_cap = c.menu_cap;
  b.sample_count = c.samples;
  b.seed = c.seed;
  b.parallel = c.parallel;
  return b;
}

bool same_family(const std::vector<BeliefFamily>& a, const std::vector<BeliefFamily>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].kind != b[i].kind || a[i].grid != b[i].grid ||
        a[i].max_vertices != b[i].max_vertices)
      return false;
  }
  return true;
}

// Applies the --grid override to players whose family is the default for
// their criterion; explicitly declared families are kept as written.
GameSpec apply_grid(const GameSpec& g, std::size_t grid) {
  PlayerSetup setups[2];
  bool changed = false;
  for (Player p : {Player::I, Player::J}) {
    PlayerSetup s{g.criterion(p), g.family(p)};
    if (same_family(s.family, default_family(s.criterion))) {
      for (BeliefFamily& slice : s.family) {
        if (slice.grid != grid) changed = true;
        slice.grid = grid;
      }
    }
    setups[p == Player::I ? 0 : 1] = std::move(s);
  }
  if (!changed) return g;
  std::vector<std::vector<std::pair<Rat, Rat>>> payoff;
  for (std::size_t a = 0; a < g.actions(Player::I).size(); ++a) {
    std::vector<std::pair<Rat, Rat>> row;
    for (std::size_t b = 0; b < g.actions(Player::J).size(); ++b) {
      const std::size_t z = g.outcome_index(a, b);
      row.emplace_back(g.outcomes().utility(z, 0), g.outcomes().utility(z, 1));
    }
    payoff.push_back(std::move(row));
  }
  return GameSpec(g.actions(Player::I), g.actions(Player::J), std::move(payoff),
                  std::move(setups[0]), std::move(setups[1]));
}

ChoiceStructure load_structure(const std::string& text) {
  auto parsed = parse_structure_spec(text);
  if (auto* cs = std::get_if<ChoiceStructure>(&parsed)) return std::move(*cs);
  return embed_preference_structure(std::get<PreferenceStructure>(parsed));
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);

    if (config.command == "verify") {
      const auto checks = run_all_checks(config.parallel);
      render_checks(checks, out, config.format);
      return all_passed(checks) ? 0 : 1;
    }

    const std::string text = read_text_file(config.input_path);

    if (config.command == "rationalize") {
      const GameSpec g = apply_grid(parse_game_spec(text), config.grid);
      RationalizeOptions options;
      options.parallel = config.parallel;
      report_rationalize(g, options, out, config.format);
      return 0;
    }

    if (config.command == "embed") {
      auto parsed = parse_structure_spec(text);
      auto* pref = std::get_if<PreferenceStructure>(&parsed);
      if (!pref)
        throw InputError("the embed command needs a preference structure ('pref' lines)");
      report_embed(*pref, out, config.format);
      return 0;
    }

    // The remaining commands read any structure; preference structures are
    // embedded as maximization first.
    const ChoiceStructure x = load_structure(text);
    if (config.command == "choice-eval") {
      report_choice_eval(x, out, config.format);
    } else if (config.command == "hierarchy") {
      report_hierarchy(x, config.levels, bounds_from(config), out, config.format);
    } else {
      report_nonred(x, bounds_from(config), out, config.format);
    }
    return 0;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "verification failure: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace choicelab

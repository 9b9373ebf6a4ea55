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

// End-to-end coverage for the text formats and the command dispatcher: the
// parsers round-trip the shipped fixtures onto the in-library worked
// structures, diagnostics carry line numbers and useful context, every
// command renders deterministically, and exit codes follow the contract
// (0 ok, 1 verification failure, 2 input error).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "choicelab/act.hpp"
#include "choicelab/choice.hpp"
#include "choicelab/errors.hpp"
#include "choicelab/game.hpp"
#include "choicelab/rational.hpp"
#include "choicelab/report.hpp"
#include "choicelab/run.hpp"
#include "choicelab/structure.hpp"
#include "choicelab/textio.hpp"

using namespace choicelab;

namespace {

std::string fixture(const std::string& name) {
  return std::string(CHOICELAB_FIXTURE_DIR) + "/" + name;
}

// Parse `text` as a structure and expect an InputError whose message
// contains every needle (diagnostics carry line numbers plus context).
void expect_structure_error(const std::string& text,
                            const std::vector<std::string>& needles) {
  try {
    parse_structure_spec(text);
    FAIL_CHECK("expected an InputError, parse succeeded");
  } catch (const InputError& e) {
    const std::string msg = e.what();
    for (const auto& n : needles) {
      INFO("message: " << msg);
      CHECK(msg.find(n) != std::string::npos);
    }
  }
}

std::string run_to_string(const RunConfig& cfg, int expected_rc) {
  std::ostringstream out;
  std::ostringstream err;
  const int rc = run(cfg, out, err);
  INFO("stderr: " << err.str());
  CHECK(rc == expected_rc);
  return expected_rc == 0 ? out.str() : err.str();
}

// The minimal well-formed structure text, used as a base for corruptions.
const char* kTinyStructure =
    "structure\n"
    "actions i u m\n"
    "actions j l r\n"
    "payoffs\n"
    "5;1 0;0\n"
    "3;2 0;1\n"
    "types i t\n"
    "types j s\n"
    "theta i t maxmin full-simplex\n"
    "theta j s maxmin full-simplex\n";

}  // namespace

TEST_CASE("rational literals accept fractions and reject decimals") {
  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("-2/6") == Rat(-1, 3));
  CHECK(parse_rational("0") == Rat(0));
  CHECK(parse_rational("17") == Rat(17));
  CHECK_THROWS_AS(parse_rational("0.25"), InputError);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
  try {
    parse_rational("0.25");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("decimals are rejected") != std::string::npos);
  }
}

TEST_CASE("the game fixtures parse onto the in-library worked game") {
  const GameSpec parsed = parse_game_spec(read_text_file(fixture("worked_regret.game")));
  const GameSpec lib = worked_game(Criterion::Regret);
  CHECK(parsed.actions(Player::I).points() == lib.actions(Player::I).points());
  CHECK(parsed.actions(Player::J).points() == lib.actions(Player::J).points());
  CHECK(parsed.criterion(Player::I) == Criterion::Regret);
  CHECK(parsed.criterion(Player::J) == Criterion::Regret);
  REQUIRE(parsed.outcomes().size() == lib.outcomes().size());
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      const std::size_t zp = parsed.outcome_index(a, b);
      const std::size_t zl = lib.outcome_index(a, b);
      for (std::size_t pl = 0; pl < 2; ++pl) {
        CHECK(parsed.outcomes().utility(zp, pl) == lib.outcomes().utility(zl, pl));
      }
    }
  }
  // The other two criterion variants parse with the right attitudes.
  CHECK(parse_game_spec(read_text_file(fixture("worked_eu.game"))).criterion(Player::I) ==
        Criterion::EU);
  CHECK(parse_game_spec(read_text_file(fixture("worked_maxmin.game")))
            .criterion(Player::J) == Criterion::Maxmin);
}

TEST_CASE("the structure fixture reproduces the worked structure exactly") {
  const auto parsed_var = parse_structure_spec(read_text_file(fixture("worked.structure")));
  REQUIRE(std::holds_alternative<ChoiceStructure>(parsed_var));
  const ChoiceStructure& got = std::get<ChoiceStructure>(parsed_var);
  const ChoiceStructure want = example_structure();

  for (const Player p : {Player::I, Player::J}) {
    REQUIRE(got.types(p).points() == want.types(p).points());
    REQUIRE(got.basis(p).size() == want.basis(p).size());
    for (std::size_t a = 0; a < got.basis(p).size(); ++a) {
      CHECK(got.basis(p)[a].table() == want.basis(p)[a].table());
    }
    for (const auto& type : got.types(p).points()) {
      for (const auto& k : all_submenus(want.basis_menu(p))) {
        // The carriers are structurally equal, so menus transfer directly.
        CHECK(got.theta(p, type).evaluate(k) == want.theta(p, type).evaluate(k));
      }
    }
  }
}

TEST_CASE("the duplicated-type fixture matches its in-library twin") {
  const auto parsed_var =
      parse_structure_spec(read_text_file(fixture("worked_dup.structure")));
  REQUIRE(std::holds_alternative<ChoiceStructure>(parsed_var));
  const ChoiceStructure& got = std::get<ChoiceStructure>(parsed_var);
  const ChoiceStructure want = duplicate_type_structure();
  CHECK(got.types(Player::J).points() == want.types(Player::J).points());
  for (const auto& type : got.types(Player::J).points()) {
    for (const auto& k : all_submenus(want.basis_menu(Player::J))) {
      CHECK(got.theta(Player::J, type).evaluate(k) ==
            want.theta(Player::J, type).evaluate(k));
    }
  }
}

TEST_CASE("preference structures parse and embed") {
  const auto parsed_var =
      parse_structure_spec(read_text_file(fixture("ordered.structure")));
  REQUIRE(std::holds_alternative<PreferenceStructure>(parsed_var));
  const PreferenceStructure& p = std::get<PreferenceStructure>(parsed_var);
  const ChoiceStructure emb = embed_preference_structure(p);
  const Menu<Act> rows = emb.basis_menu(Player::I);
  const Act& f_u = emb.basis(Player::I)[0];
  const Act& f_m = emb.basis(Player::I)[1];
  CHECK(emb.theta(Player::I, "t_lo").evaluate(rows) == Menu<Act>::singleton(f_u));
  CHECK(emb.theta(Player::I, "t_hi").evaluate(rows) == Menu<Act>::singleton(f_m));
}

TEST_CASE("structure diagnostics name the line and the offender") {
  SUBCASE("short payoff row") {
    std::string text = kTinyStructure;
    text.replace(text.find("5;1 0;0"), 7, "5;1");
    expect_structure_error(text, {"line 5", "payoff row for action 'u'", "expected 2"});
  }
  SUBCASE("decimal payoff cell") {
    std::string text = kTinyStructure;
    text.replace(text.find("0;0"), 3, "0.5;0");
    expect_structure_error(text, {"line 5", "decimals are rejected"});
  }
  SUBCASE("theta for an undeclared type") {
    std::string text = kTinyStructure;
    text += "theta i ghost maxmin full-simplex\n";
    expect_structure_error(text, {"theta names undeclared type 'ghost'", "line 11"});
  }
  SUBCASE("two thetas for the same type") {
    std::string text = kTinyStructure;
    text += "theta i t eu point 1/2 1/2\n";
    expect_structure_error(text, {"duplicate theta for type 't'", "line 11"});
  }
  SUBCASE("a table choice that leaves its menu violates contraction") {
    std::string text = kTinyStructure;
    text.replace(text.find("theta i t maxmin full-simplex"), 29, "theta i t table");
    text += "choose i t f_u -> f_m\n";
    expect_structure_error(text, {"line 11", "leaves its menu"});
  }
  SUBCASE("a missing table entry names the uncovered menu") {
    std::string text = kTinyStructure;
    text.replace(text.find("theta i t maxmin full-simplex"), 29, "theta i t table");
    expect_structure_error(text, {"type 't'", "no table entry for menu {f_u, f_m}"});
  }
  SUBCASE("cyclic preferences are rejected as non-partial orders") {
    std::string text = kTinyStructure;
    text.replace(text.find("theta i t maxmin full-simplex"), 29,
                 "pref i t f_u<=f_m f_m<=f_u");
    text.replace(text.find("theta j s maxmin full-simplex"), 29, "pref j s");
    expect_structure_error(text, {"preference pairs for type 't'", "partial order"});
  }
  SUBCASE("mixing pref and theta is rejected") {
    std::string text = kTinyStructure;
    text.replace(text.find("theta j s maxmin full-simplex"), 29, "pref j s f_l<=f_r");
    expect_structure_error(text, {"either thetas or prefs, not both"});
  }
  SUBCASE("unknown directives and headers") {
    expect_structure_error("game\n", {"expected a 'structure' header"});
    std::string text = kTinyStructure;
    text += "frobnicate i\n";
    expect_structure_error(text, {"unknown structure directive 'frobnicate'"});
  }
  SUBCASE("belief points must cover the opponent state space") {
    std::string text = kTinyStructure;
    text.replace(text.find("theta i t maxmin full-simplex"), 29,
                 "theta i t eu point 1/2 1/2 0");
    expect_structure_error(text, {"belief point needs 2 entries"});
  }
}

TEST_CASE("game diagnostics name the line and the offender") {
  const char* base =
      "game\n"
      "players i j\n"
      "actions i u m\n"
      "actions j l r\n"
      "payoffs\n"
      "5;1 0;0\n"
      "3;2 0;1\n"
      "criterion i eu\n"
      "criterion j eu\n";
  SUBCASE("well-formed text parses") {
    const GameSpec g = parse_game_spec(base);
    CHECK(g.actions(Player::I).size() == 2);
  }
  SUBCASE("missing header") {
    CHECK_THROWS_AS(parse_game_spec("structure\n"), InputError);
  }
  SUBCASE("unknown criterion") {
    std::string text = base;
    text.replace(text.find("criterion i eu"), 14, "criterion i zz");
    try {
      parse_game_spec(text);
      FAIL_CHECK("expected an InputError");
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find("line 8") != std::string::npos);
    }
  }
  SUBCASE("unknown player in a directive") {
    std::string text = base;
    text.replace(text.find("criterion j eu"), 14, "criterion k eu");
    try {
      parse_game_spec(text);
      FAIL_CHECK("expected an InputError");
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find("unknown player 'k'") != std::string::npos);
    }
  }
}

TEST_CASE("rationalize renders the fixpoint and re-verifies the trace") {
  RunConfig cfg;
  cfg.command = "rationalize";
  cfg.input_path = fixture("worked_regret.game");
  const std::string out = run_to_string(cfg, 0);
  CHECK(out.find("round 1  eliminated i: d | j: -") != std::string::npos);
  CHECK(out.find("(fixpoint)") != std::string::npos);
  CHECK(out.find("survivors  i: u | j: l") != std::string::npos);

  RunConfig mm = cfg;
  mm.input_path = fixture("worked_maxmin.game");
  CHECK(run_to_string(mm, 0).find("survivors  i: u c d | j: l r") != std::string::npos);

  RunConfig eu = cfg;
  eu.input_path = fixture("worked_eu.game");
  CHECK(run_to_string(eu, 0).find("survivors  i: u | j: l") != std::string::npos);
}

TEST_CASE("nonred reports the verdict with a replayed separator") {
  RunConfig cfg;
  cfg.command = "nonred";
  cfg.input_path = fixture("worked.structure");
  const std::string out = run_to_string(cfg, 0);
  CHECK(out.find("verdict NonRedundant") != std::string::npos);
  CHECK(out.find("t_Mm vs t_EU") != std::string::npos);
  CHECK(out.find("{f_l, f_r}") != std::string::npos);

  RunConfig dup = cfg;
  dup.input_path = fixture("worked_dup.structure");
  const std::string dout = run_to_string(dup, 0);
  CHECK(dout.find("verdict Redundant") != std::string::npos);
  CHECK(dout.find("t_Mm ~ t_Mm2") != std::string::npos);
}

TEST_CASE("hierarchy and choice-eval render coherent tables") {
  RunConfig cfg;
  cfg.command = "hierarchy";
  cfg.input_path = fixture("worked.structure");
  cfg.levels = 2;
  const std::string out = run_to_string(cfg, 0);
  CHECK(out.find("coherence ok (levels 1..2)") != std::string::npos);
  CHECK(out.find("{f_u, f_m, f_c, f_d} -> {f_u, f_m, f_c}") != std::string::npos);

  RunConfig ce;
  ce.command = "choice-eval";
  ce.input_path = fixture("worked.structure");
  const std::string cout_ = run_to_string(ce, 0);
  CHECK(cout_.find("player j type t_Mm") != std::string::npos);
  CHECK(cout_.find("{f_l, f_r} -> {f_l}") != std::string::npos);
  CHECK(cout_.find("{f_l, f_r} -> {f_l, f_r}") != std::string::npos);
}

TEST_CASE("embed separates the two row types by their shared menu") {
  RunConfig cfg;
  cfg.command = "embed";
  cfg.input_path = fixture("ordered.structure");
  const std::string out = run_to_string(cfg, 0);
  CHECK(out.find("pair i: t_lo vs t_hi  separated by {f_u, f_m}") != std::string::npos);
}

TEST_CASE("identical inputs and flags produce byte-identical output") {
  for (const char* fmt : {"table", "machine"}) {
    RunConfig cfg;
    cfg.command = "rationalize";
    cfg.input_path = fixture("worked_regret.game");
    cfg.format = parse_format(fmt);
    cfg.grid = 4;
    std::ostringstream a;
    std::ostringstream b;
    std::ostringstream err;
    REQUIRE(run(cfg, a, err) == 0);
    REQUIRE(run(cfg, b, err) == 0);
    CHECK(a.str() == b.str());
  }
  // The nonred scan samples menus above its caps; the same seed must give
  // the same bytes, serial or parallel.
  RunConfig nr;
  nr.command = "nonred";
  nr.input_path = fixture("worked_dup.structure");
  nr.seed = 11;
  std::ostringstream a;
  std::ostringstream b;
  std::ostringstream err;
  REQUIRE(run(nr, a, err) == 0);
  nr.parallel = false;
  REQUIRE(run(nr, b, err) == 0);
  CHECK(a.str() == b.str());
}

TEST_CASE("machine format emits one record per line with a leading kind") {
  RunConfig cfg;
  cfg.command = "rationalize";
  cfg.input_path = fixture("worked_regret.game");
  cfg.format = ReportFormat::Machine;
  const std::string out = run_to_string(cfg, 0);
  CHECK(out.rfind("record=rationalize", 0) == 0);
  CHECK(out.find("record=survivors\ti=u\tj=l") != std::string::npos);
  std::istringstream lines(out);
  std::string line;
  while (std::getline(lines, line)) {
    CHECK(line.rfind("record=", 0) == 0);
  }
}

TEST_CASE("exit codes follow the documented contract") {
  SUBCASE("missing input file") {
    RunConfig cfg;
    cfg.command = "rationalize";
    cfg.input_path = fixture("nonexistent.game");
    std::ostringstream out;
    std::ostringstream err;
    CHECK(run(cfg, out, err) == 2);
    CHECK(err.str().find("cannot read") != std::string::npos);
  }
  SUBCASE("unknown command") {
    RunConfig cfg;
    cfg.command = "frobnicate";
    std::ostringstream out;
    std::ostringstream err;
    CHECK(run(cfg, out, err) == 2);
  }
  SUBCASE("embed requires a preference structure") {
    RunConfig cfg;
    cfg.command = "embed";
    cfg.input_path = fixture("worked.structure");
    std::ostringstream out;
    std::ostringstream err;
    CHECK(run(cfg, out, err) == 2);
    CHECK(err.str().find("preference structure") != std::string::npos);
  }
  SUBCASE("caps must be positive") {
    RunConfig cfg;
    cfg.command = "rationalize";
    cfg.input_path = fixture("worked_regret.game");
    cfg.grid = 0;
    std::ostringstream out;
    std::ostringstream err;
    CHECK(run(cfg, out, err) == 2);
    CHECK(err.str().find("--grid") != std::string::npos);
  }
  SUBCASE("a game file given to a structure command") {
    RunConfig cfg;
    cfg.command = "choice-eval";
    cfg.input_path = fixture("worked_regret.game");
    std::ostringstream out;
    std::ostringstream err;
    CHECK(run(cfg, out, err) == 2);
  }
}

TEST_CASE("the self-check battery passes end to end") {
  RunConfig cfg;
  cfg.command = "verify";
  cfg.format = ReportFormat::Machine;
  const std::string out = run_to_string(cfg, 0);
  CHECK(out.find("record=checks\tpass=1\tpassed=8\ttotal=8") != std::string::npos);
}

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

#include "choicelab/textio.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "choicelab/errors.hpp"

namespace choicelab {
namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw InputError("line " + std::to_string(line) + ": " + msg);
}

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::size_t parse_count(std::size_t line, const std::string& token, const std::string& field) {
  if (!all_digits(token)) fail(line, field + " must be a positive integer, got '" + token + "'");
  const unsigned long long v = std::stoull(token);
  if (v == 0) fail(line, field + " must be positive");
  return static_cast<std::size_t>(v);
}

Rat parse_rational_at(std::size_t line, const std::string& token) {
  try {
    return parse_rational(token);
  } catch (const InputError& e) {
    fail(line, e.what());
  }
}

// One "a;b" payoff cell.
std::pair<Rat, Rat> parse_cell(std::size_t line, const std::string& token) {
  const auto semi = token.find(';');
  if (semi == std::string::npos || token.find(';', semi + 1) != std::string::npos)
    fail(line, "payoff cell '" + token + "' is not a 'a;b' rational pair");
  return {parse_rational_at(line, token.substr(0, semi)),
          parse_rational_at(line, token.substr(semi + 1))};
}

// Rational groups separated by ";" tokens, starting at tokens[from].
std::vector<std::vector<Rat>> parse_groups(std::size_t line, const std::vector<std::string>& tokens,
                                           std::size_t from) {
  std::vector<std::vector<Rat>> groups(1);
  for (std::size_t k = from; k < tokens.size(); ++k) {
    if (tokens[k] == ";") {
      if (groups.back().empty()) fail(line, "empty entry in a ';'-separated list");
      groups.emplace_back();
    } else {
      groups.back().push_back(parse_rational_at(line, tokens[k]));
    }
  }
  if (groups.back().empty()) fail(line, "empty entry in a ';'-separated list");
  return groups;
}

BeliefFamily::Kind parse_family_kind(std::size_t line, const std::string& token) {
  if (token == "grid-points") return BeliefFamily::Kind::GridPoints;
  if (token == "full-simplex") return BeliefFamily::Kind::FullSimplex;
  if (token == "grid-intervals") return BeliefFamily::Kind::GridIntervals;
  if (token == "grid-hulls") return BeliefFamily::Kind::GridHulls;
  fail(line, "unknown belief family kind '" + token +
                 "' (grid-points, full-simplex, grid-intervals, grid-hulls)");
}

FinSpace make_actions(std::size_t line, const std::vector<std::string>& tokens) {
  try {
    return FinSpace::discrete({tokens.begin() + 2, tokens.end()});
  } catch (const std::exception& e) {
    fail(line, e.what());
  }
}

// Reads the payoff block that starts at lines[at] (the "payoffs" keyword):
// one row line per row action, one cell per column action. Returns the index
// of the last consumed line.
std::size_t read_payoff_block(const std::vector<Line>& lines, std::size_t at,
                              const FinSpace& rows, const FinSpace& cols,
                              std::vector<std::vector<std::pair<Rat, Rat>>>& payoff) {
  const std::size_t header = lines[at].number;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    ++at;
    if (at >= lines.size())
      fail(header, "payoff block ends before the row for action '" + rows.point(r) + "'");
    const Line& row = lines[at];
    if (row.tokens.size() != cols.size())
      fail(row.number, "payoff row for action '" + rows.point(r) + "' has " +
                           std::to_string(row.tokens.size()) + " cells, expected " +
                           std::to_string(cols.size()));
    std::vector<std::pair<Rat, Rat>> cells;
    cells.reserve(cols.size());
    for (const auto& tok : row.tokens) cells.push_back(parse_cell(row.number, tok));
    payoff.push_back(std::move(cells));
  }
  return at;
}

std::string menu_names(const Menu<Act>& menu, const std::vector<Act>& basis,
                       const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for (const Act& a : menu) {
    if (!first) out += ", ";
    first = false;
    const auto it = std::find(basis.begin(), basis.end(), a);
    out += it == basis.end() ? std::string("?") : names[static_cast<std::size_t>(it - basis.begin())];
  }
  return out + "}";
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

GameSpec parse_game_spec(const std::string& text) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "game")
    fail(lines.empty() ? 1 : lines[0].number, "expected a 'game' header line");
  if (lines[0].tokens.size() != 1) fail(lines[0].number, "the 'game' header takes no arguments");

  std::vector<std::string> names;
  std::optional<FinSpace> acts[2];
  std::vector<std::vector<std::pair<Rat, Rat>>> payoff;
  bool have_payoff = false;
  std::optional<Criterion> crit[2];
  std::vector<BeliefFamily> fams[2];

  const auto player_at = [&](std::size_t line, const std::string& name) -> std::size_t {
    const auto it = std::find(names.begin(), names.end(), name);
    if (names.empty()) fail(line, "a 'players' line must come before per-player fields");
    if (it == names.end())
      fail(line, "unknown player '" + name + "' (players are '" + names[0] + "' and '" +
                     names[1] + "')");
    return static_cast<std::size_t>(it - names.begin());
  };

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& ln = lines[li];
    const auto& t = ln.tokens;
    if (t[0] == "players") {
      if (!names.empty()) fail(ln.number, "duplicate 'players' line");
      if (t.size() != 3) fail(ln.number, "'players' names exactly two players");
      if (t[1] == t[2]) fail(ln.number, "player names must be distinct");
      names = {t[1], t[2]};
    } else if (t[0] == "actions") {
      if (t.size() < 3) fail(ln.number, "'actions' needs a player and at least one action id");
      const std::size_t p = player_at(ln.number, t[1]);
      if (acts[p]) fail(ln.number, "duplicate 'actions' line for player '" + t[1] + "'");
      acts[p] = make_actions(ln.number, t);
    } else if (t[0] == "payoffs") {
      if (t.size() != 1) fail(ln.number, "'payoffs' starts a block and takes no arguments");
      if (have_payoff) fail(ln.number, "duplicate 'payoffs' block");
      if (!acts[0] || !acts[1])
        fail(ln.number, "both 'actions' lines must come before the payoffs block");
      li = read_payoff_block(lines, li, *acts[0], *acts[1], payoff);
      have_payoff = true;
    } else if (t[0] == "criterion") {
      if (t.size() != 3) fail(ln.number, "'criterion' needs a player and a criterion name");
      const std::size_t p = player_at(ln.number, t[1]);
      if (crit[p]) fail(ln.number, "duplicate 'criterion' line for player '" + t[1] + "'");
      try {
        crit[p] = parse_criterion(t[2]);
      } catch (const InputError& e) {
        fail(ln.number, e.what());
      }
    } else if (t[0] == "family") {
      if (t.size() < 3 || t.size() > 5)
        fail(ln.number, "'family' takes a player, a kind, and optional grid / max-vertices");
      const std::size_t p = player_at(ln.number, t[1]);
      BeliefFamily slice;
      slice.kind = parse_family_kind(ln.number, t[2]);
      if (t.size() > 3) slice.grid = parse_count(ln.number, t[3], "grid");
      if (t.size() > 4) slice.max_vertices = parse_count(ln.number, t[4], "max-vertices");
      fams[p].push_back(slice);
    } else {
      fail(ln.number, "unknown game directive '" + t[0] + "'");
    }
  }

  if (names.empty()) throw InputError("game spec is missing its 'players' line");
  for (std::size_t p = 0; p < 2; ++p) {
    if (!acts[p]) throw InputError("game spec is missing 'actions " + names[p] + "'");
    if (!crit[p]) throw InputError("game spec is missing 'criterion " + names[p] + "'");
  }
  if (!have_payoff) throw InputError("game spec is missing its 'payoffs' block");

  return GameSpec(std::move(*acts[0]), std::move(*acts[1]), std::move(payoff),
                  PlayerSetup{*crit[0], std::move(fams[0])},
                  PlayerSetup{*crit[1], std::move(fams[1])});
}

namespace {

struct ThetaDecl {
  std::size_t line = 0;
  std::string type;
  bool table = false;
  Criterion criterion = Criterion::EU;
  std::string form;                     // full-simplex | point | vertices | marginal-vertices
  std::vector<std::vector<Rat>> groups;
};

struct ChooseDecl {
  std::size_t line = 0;
  std::vector<std::string> menu;
  std::vector<std::string> chosen;
};

struct PrefDecl {
  std::size_t line = 0;
  std::vector<std::pair<std::string, std::string>> pairs;  // first <= second
};

std::size_t side_at(std::size_t line, const std::string& token) {
  if (token == "i") return 0;
  if (token == "j") return 1;
  fail(line, "unknown player '" + token + "' (structure players are 'i' and 'j')");
}

}  // namespace

ParsedStructure parse_structure_spec(const std::string& text) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "structure")
    fail(lines.empty() ? 1 : lines[0].number, "expected a 'structure' header line");

  std::optional<FinSpace> acts[2];
  std::optional<FinSpace> types[2];
  std::vector<std::vector<std::pair<Rat, Rat>>> payoff;
  bool have_payoff = false;
  std::map<std::string, ThetaDecl> thetas[2];              // type -> declaration
  std::map<std::string, std::vector<ChooseDecl>> tables[2];  // type -> entries
  std::map<std::string, PrefDecl> prefs[2];

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& ln = lines[li];
    const auto& t = ln.tokens;
    if (t[0] == "actions" || t[0] == "types") {
      if (t.size() < 3) fail(ln.number, "'" + t[0] + "' needs a player and at least one id");
      const std::size_t p = side_at(ln.number, t[1]);
      auto& slot = t[0] == "actions" ? acts[p] : types[p];
      if (slot) fail(ln.number, "duplicate '" + t[0] + "' line for player '" + t[1] + "'");
      slot = make_actions(ln.number, t);
    } else if (t[0] == "payoffs") {
      if (have_payoff) fail(ln.number, "duplicate 'payoffs' block");
      if (!acts[0] || !acts[1])
        fail(ln.number, "both 'actions' lines must come before the payoffs block");
      li = read_payoff_block(lines, li, *acts[0], *acts[1], payoff);
      have_payoff = true;
    } else if (t[0] == "theta") {
      if (t.size() < 4) fail(ln.number, "'theta' needs a player, a type, and an attitude");
      const std::size_t p = side_at(ln.number, t[1]);
      ThetaDecl decl;
      decl.line = ln.number;
      decl.type = t[2];
      if (t[3] == "table") {
        if (t.size() != 4) fail(ln.number, "'theta ... table' takes no further arguments");
        decl.table = true;
      } else {
        try {
          decl.criterion = parse_criterion(t[3]);
        } catch (const InputError& e) {
          fail(ln.number, e.what());
        }
        if (t.size() < 5) fail(ln.number, "criterion attitudes need a belief specification");
        decl.form = t[4];
        if (decl.form == "full-simplex") {
          if (t.size() != 5) fail(ln.number, "'full-simplex' takes no parameters");
        } else if (decl.form == "point" || decl.form == "vertices" ||
                   decl.form == "marginal-vertices") {
          decl.groups = parse_groups(ln.number, t, 5);
          if (decl.form == "point" && decl.groups.size() != 1)
            fail(ln.number, "a point belief is a single distribution");
        } else {
          fail(ln.number, "unknown belief form '" + decl.form +
                              "' (full-simplex, point, vertices, marginal-vertices)");
        }
      }
      if (!thetas[p].emplace(decl.type, std::move(decl)).second)
        fail(ln.number, "duplicate theta for type '" + t[2] + "'");
    } else if (t[0] == "choose") {
      if (t.size() < 5) fail(ln.number, "'choose' needs a player, a type, and menu -> choice");
      const std::size_t p = side_at(ln.number, t[1]);
      const auto arrow = std::find(t.begin(), t.end(), "->");
      if (arrow == t.end() || arrow - t.begin() < 4 || arrow + 1 == t.end())
        fail(ln.number, "'choose' lines read: choose <player> <type> <menu...> -> <choice...>");
      ChooseDecl entry;
      entry.line = ln.number;
      entry.menu.assign(t.begin() + 3, arrow);
      entry.chosen.assign(arrow + 1, t.end());
      tables[p][t[2]].push_back(std::move(entry));
    } else if (t[0] == "pref") {
      if (t.size() < 3) fail(ln.number, "'pref' needs a player and a type");
      const std::size_t p = side_at(ln.number, t[1]);
      PrefDecl decl;
      decl.line = ln.number;
      for (std::size_t k = 3; k < t.size(); ++k) {
        const auto le = t[k].find("<=");
        if (le == std::string::npos || le == 0 || le + 2 >= t[k].size())
          fail(ln.number, "preference pair '" + t[k] + "' is not of the form a<=b");
        decl.pairs.emplace_back(t[k].substr(0, le), t[k].substr(le + 2));
      }
      if (!prefs[p].emplace(t[2], std::move(decl)).second)
        fail(ln.number, "duplicate pref for type '" + t[2] + "'");
    } else {
      fail(ln.number, "unknown structure directive '" + t[0] + "'");
    }
  }

  for (std::size_t p = 0; p < 2; ++p) {
    const std::string side = p == 0 ? "i" : "j";
    if (!acts[p]) throw InputError("structure spec is missing 'actions " + side + "'");
    if (!types[p]) throw InputError("structure spec is missing 'types " + side + "'");
  }
  if (!have_payoff) throw InputError("structure spec is missing its 'payoffs' block");

  // Outcomes are the distinct payoff pairs, row-major, id "a;b" with the
  // pair as the two players' utilities.
  std::vector<std::string> ids;
  std::vector<std::vector<Rat>> utilities;
  std::map<std::string, std::size_t> seen;
  std::vector<std::vector<std::size_t>> cells(acts[0]->size(),
                                              std::vector<std::size_t>(acts[1]->size(), 0));
  for (std::size_t a = 0; a < acts[0]->size(); ++a) {
    for (std::size_t b = 0; b < acts[1]->size(); ++b) {
      const auto& [ui, uj] = payoff[a][b];
      std::string id = to_string(ui) + ";" + to_string(uj);
      const auto [it, inserted] = seen.try_emplace(std::move(id), ids.size());
      if (inserted) {
        ids.push_back(it->first);
        utilities.push_back({ui, uj});
      }
      cells[a][b] = it->second;
    }
  }
  const auto outcomes = std::make_shared<const OutcomeSet>(
      OutcomeSet::with_utilities(std::move(ids), std::move(utilities)));

  // State spaces and named basis acts f_<own action>, mirroring the
  // structure's own derivation.
  const ProductSpace st[2] = {product(*acts[1], *types[1]), product(*acts[0], *types[0])};
  const SpacePtr st_ptr[2] = {std::make_shared<const FinSpace>(st[0].space),
                              std::make_shared<const FinSpace>(st[1].space)};
  std::vector<Act> basis[2];
  std::vector<std::string> basis_names[2];
  for (std::size_t p = 0; p < 2; ++p) {
    const FinSpace& own = *acts[p];
    const FinSpace& opp = *acts[1 - p];
    const FinSpace& opp_types = *types[1 - p];
    for (std::size_t a = 0; a < own.size(); ++a) {
      std::vector<std::size_t> table(st[p].space.size());
      for (std::size_t o = 0; o < opp.size(); ++o)
        for (std::size_t ot = 0; ot < opp_types.size(); ++ot)
          table[st[p].pair_index(o, ot)] = p == 0 ? cells[a][o] : cells[o][a];
      basis[p].emplace_back(st_ptr[p], outcomes, std::move(table));
      basis_names[p].push_back("f_" + own.point(a));
    }
  }
  const auto act_named = [&](std::size_t line, std::size_t p, const std::string& name) -> Act {
    const auto it = std::find(basis_names[p].begin(), basis_names[p].end(), name);
    if (it == basis_names[p].end())
      fail(line, "unknown act '" + name + "' (acts are f_<own action>)");
    return basis[p][static_cast<std::size_t>(it - basis_names[p].begin())];
  };

  const bool any_pref = !prefs[0].empty() || !prefs[1].empty();
  const bool any_theta = !thetas[0].empty() || !tables[0].empty() || !thetas[1].empty() ||
                         !tables[1].empty();
  if (any_pref && any_theta)
    throw InputError("a structure declares either thetas or prefs, not both");

  const auto check_refs = [&](std::size_t p, const std::map<std::string, ThetaDecl>& ths,
                              const std::map<std::string, PrefDecl>& prs) {
    for (const auto& [type, decl] : ths)
      if (!types[p]->find(type))
        fail(decl.line, "theta names undeclared type '" + type + "'");
    for (const auto& [type, decl] : prs)
      if (!types[p]->find(type))
        fail(decl.line, "pref names undeclared type '" + type + "'");
  };
  check_refs(0, thetas[0], prefs[0]);
  check_refs(1, thetas[1], prefs[1]);

  if (any_pref) {
    std::vector<Poset<Act>> posets[2];
    for (std::size_t p = 0; p < 2; ++p) {
      const Menu<Act> carrier = Menu<Act>::of(basis[p]);
      for (std::size_t t = 0; t < types[p]->size(); ++t) {
        const std::string& type = types[p]->point(t);
        const auto it = prefs[p].find(type);
        if (it == prefs[p].end())
          throw InputError("no preference declared for type '" + type + "'");
        std::vector<std::pair<Act, Act>> pairs;
        for (const auto& [lo, hi] : it->second.pairs)
          pairs.emplace_back(act_named(it->second.line, p, lo), act_named(it->second.line, p, hi));
        try {
          posets[p].push_back(Poset<Act>::closure(carrier, pairs));
        } catch (const InvariantError& e) {
          fail(it->second.line, std::string("preference pairs for type '") + type +
                                    "' do not form a partial order: " + e.what());
        }
      }
    }
    try {
      return PreferenceStructure(std::move(*acts[0]), std::move(*acts[1]), std::move(*types[0]),
                                 std::move(*types[1]), outcomes, std::move(cells),
                                 std::move(posets[0]), std::move(posets[1]));
    } catch (const std::exception& e) {
      throw InputError(std::string("structure validation failed: ") + e.what());
    }
  }

  std::vector<ChoiceFunction<Act>> theta[2];
  for (std::size_t p = 0; p < 2; ++p) {
    for (const auto& [type, entries] : tables[p]) {
      const auto it = thetas[p].find(type);
      if (it == thetas[p].end() || !it->second.table)
        fail(entries.front().line,
             "type '" + type + "' has table entries but no 'theta ... table' declaration");
    }
    const Menu<Act> carrier = Menu<Act>::of(basis[p]);
    for (std::size_t t = 0; t < types[p]->size(); ++t) {
      const std::string& type = types[p]->point(t);
      const auto it = thetas[p].find(type);
      if (it == thetas[p].end()) throw InputError("no theta declared for type '" + type + "'");
      const ThetaDecl& decl = it->second;
      const UtilityView uview = UtilityView::of_player(*outcomes, p);

      if (!decl.table) {
        CredalSet belief = [&]() -> CredalSet {
          try {
            if (decl.form == "full-simplex")
              return CredalSet::full_simplex(st[p].space.points());
            if (decl.form == "point") {
              if (decl.groups.front().size() != st[p].space.size())
                fail(decl.line, "belief point needs " + std::to_string(st[p].space.size()) +
                                    " entries (opponent actions x opponent types, product "
                                    "order), got " +
                                    std::to_string(decl.groups.front().size()));
              return CredalSet::point(st[p].space.points(), decl.groups.front());
            }
            if (decl.form == "vertices") return CredalSet(st[p].space.points(), decl.groups);
            // marginal-vertices
            for (const auto& g : decl.groups)
              if (g.size() != acts[1 - p]->size())
                fail(decl.line, "marginal vertices need one entry per opponent action");
            return CredalSet(st[p].space.points(),
                             lift_marginal_vertices(st[p], decl.groups));
          } catch (const InputError&) {
            throw;
          } catch (const std::exception& e) {
            fail(decl.line, e.what());
          }
        }();
        try {
          theta[p].push_back(criterion_choice(decl.criterion, std::move(belief), uview));
        } catch (const InputError& e) {
          fail(decl.line, e.what());
        }
        continue;
      }

      // Explicit table over the basis acts: singleton menus are implied,
      // every larger submenu of the basis must be present.
      ChoiceFunction<Act>::Table table;
      std::set<Menu<Act>> covered;
      for (const Act& a : basis[p]) {
        table.emplace_back(Menu<Act>::singleton(a), Menu<Act>::singleton(a));
        covered.insert(Menu<Act>::singleton(a));
      }
      const auto table_entries = tables[p].find(type);
      if (table_entries != tables[p].end()) {
        for (const ChooseDecl& entry : table_entries->second) {
          std::vector<Act> menu_acts;
          for (const auto& name : entry.menu) menu_acts.push_back(act_named(entry.line, p, name));
          std::vector<Act> chosen_acts;
          for (const auto& name : entry.chosen)
            chosen_acts.push_back(act_named(entry.line, p, name));
          const Menu<Act> menu = Menu<Act>::of(std::move(menu_acts));
          const Menu<Act> chosen = Menu<Act>::of(std::move(chosen_acts));
          if (!is_subset(chosen, menu))
            fail(entry.line, "choice " + menu_names(chosen, basis[p], basis_names[p]) +
                                 " leaves its menu " +
                                 menu_names(menu, basis[p], basis_names[p]));
          if (menu.size() == 1) {
            if (chosen != menu)
              fail(entry.line, "singleton menus choose themselves; drop the entry");
            continue;
          }
          if (!covered.insert(menu).second)
            fail(entry.line,
                 "duplicate table entry for menu " + menu_names(menu, basis[p], basis_names[p]));
          table.emplace_back(menu, chosen);
        }
      }
      for (const auto& k : all_submenus(carrier)) {
        if (!covered.count(k))
          fail(decl.line, "type '" + type + "': no table entry for menu " +
                              menu_names(k, basis[p], basis_names[p]));
      }
      try {
        theta[p].push_back(ChoiceFunction<Act>::extensional(carrier, std::move(table)));
      } catch (const InvariantError& e) {
        fail(decl.line, e.what());
      }
    }
  }

  try {
    return ChoiceStructure(std::move(*acts[0]), std::move(*acts[1]), std::move(*types[0]),
                           std::move(*types[1]), outcomes, std::move(cells),
                           std::move(theta[0]), std::move(theta[1]));
  } catch (const std::exception& e) {
    throw InputError(std::string("structure validation failed: ") + e.what());
  }
}

}  // namespace choicelab

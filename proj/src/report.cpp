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

#include "choicelab/report.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "choicelab/errors.hpp"

namespace choicelab {
namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// Names acts against a designated basis ("f_<action>"); anything outside the
// basis is rendered as its outcome-id table, one id per state in state order.
struct ActNamer {
  std::vector<Act> basis;
  std::vector<std::string> names;
  const OutcomeSet* outcomes = nullptr;

  std::string label(const Act& a) const {
    const auto it = std::find(basis.begin(), basis.end(), a);
    if (it != basis.end()) return names[static_cast<std::size_t>(it - basis.begin())];
    std::vector<std::string> ids;
    ids.reserve(a.table().size());
    for (const std::size_t z : a.table()) ids.push_back(outcomes->id(z));
    return "[" + join(ids, " ") + "]";
  }

  // Members in basis (action) order first, then non-basis acts in menu order.
  std::vector<std::string> labels(const Menu<Act>& m) const {
    std::vector<std::string> out;
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (m.contains(basis[b])) out.push_back(names[b]);
    for (const Act& a : m)
      if (std::find(basis.begin(), basis.end(), a) == basis.end()) out.push_back(label(a));
    return out;
  }

  std::string menu(const Menu<Act>& m) const { return "{" + join(labels(m), ", ") + "}"; }
  std::string menu_machine(const Menu<Act>& m) const { return join(labels(m), ","); }
};

ActNamer basis_namer(const std::vector<Act>& basis, const FinSpace& actions,
                     const OutcomeSet& outcomes) {
  ActNamer n;
  n.basis = basis;
  for (const auto& a : actions.points()) n.names.push_back("f_" + a);
  n.outcomes = &outcomes;
  return n;
}

std::string render_dist(const std::vector<Rat>& p) {
  std::vector<std::string> parts;
  parts.reserve(p.size());
  for (const Rat& x : p) parts.push_back(to_string(x));
  return "(" + join(parts, ",") + ")";
}

std::string names_line(const FinSpace& s) { return join(s.points(), " "); }
std::string names_machine(const FinSpace& s) { return join(s.points(), ","); }

std::string render_family(const std::vector<BeliefFamily>& family) {
  std::vector<std::string> parts;
  for (const BeliefFamily& f : family) {
    switch (f.kind) {
      case BeliefFamily::Kind::GridPoints:
        parts.push_back("grid-points(" + std::to_string(f.grid) + ")");
        break;
      case BeliefFamily::Kind::FullSimplex:
        parts.push_back("full-simplex");
        break;
      case BeliefFamily::Kind::GridIntervals:
        parts.push_back("grid-intervals(" + std::to_string(f.grid) + ")");
        break;
      case BeliefFamily::Kind::GridHulls:
        parts.push_back("grid-hulls(" + std::to_string(f.grid) + "," +
                        std::to_string(f.max_vertices) + ")");
        break;
    }
  }
  return join(parts, " ");
}

std::string render_blocks(const std::vector<std::vector<std::string>>& blocks,
                          bool machine) {
  std::vector<std::string> parts;
  for (const auto& block : blocks)
    parts.push_back(machine ? join(block, ",") : "{" + join(block, ", ") + "}");
  return join(parts, machine ? "|" : " ");
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

// Emits one type's choice table over the given menus, re-checking contraction
// and nonemptiness on every row.
void emit_choice_rows(const ChoiceFunction<Act>& theta, const std::vector<Menu<Act>>& menus,
                      const ActNamer& namer, const std::string& player,
                      const std::string& type, const std::string& record, std::size_t level,
                      std::ostream& out, ReportFormat fmt) {
  for (const Menu<Act>& k : menus) {
    const Menu<Act> chosen = theta.evaluate(k);
    if (chosen.empty() || !is_subset(chosen, k))
      throw InvariantError("re-verification failed: choice on " + namer.menu(k) +
                           " is empty or leaves the menu");
    if (fmt == ReportFormat::Table) {
      out << "  " << namer.menu(k) << " -> " << namer.menu(chosen) << "\n";
    } else {
      out << "record=" << record;
      if (level) out << "\tn=" << level;
      out << "\tplayer=" << player << "\ttype=" << type << "\tmenu=" << namer.menu_machine(k)
          << "\tchoice=" << namer.menu_machine(chosen) << "\n";
    }
  }
}

}  // namespace

std::string to_string(ReportFormat f) {
  return f == ReportFormat::Table ? "table" : "machine";
}

ReportFormat parse_format(const std::string& name) {
  if (name == "table") return ReportFormat::Table;
  if (name == "machine") return ReportFormat::Machine;
  throw InputError("unknown format '" + name + "' (table, machine)");
}

std::string render_credal(const CredalSet& set) {
  if (set.is_point()) return "point" + render_dist(set.extreme_points().front());
  std::vector<std::string> parts;
  for (const auto& p : set.extreme_points()) parts.push_back(render_dist(p));
  return "hull{" + join(parts, ",") + "}";
}

void report_choice_eval(const ChoiceStructure& x, std::ostream& out, ReportFormat fmt) {
  if (fmt == ReportFormat::Table) {
    out << "choice-eval\n";
    for (Player p : {Player::I, Player::J}) {
      out << "actions " << to_string(p) << ": " << names_line(x.actions(p)) << "\n";
      out << "types " << to_string(p) << ": " << names_line(x.types(p)) << "\n";
    }
  } else {
    out << "record=choice-eval\tactions_i=" << names_machine(x.actions(Player::I))
        << "\tactions_j=" << names_machine(x.actions(Player::J))
        << "\ttypes_i=" << names_machine(x.types(Player::I))
        << "\ttypes_j=" << names_machine(x.types(Player::J)) << "\n";
  }
  for (Player p : {Player::I, Player::J}) {
    const ActNamer namer = basis_namer(x.basis(p), x.actions(p), x.outcomes());
    const auto menus = all_submenus(x.basis_menu(p));
    for (std::size_t t = 0; t < x.types(p).size(); ++t) {
      const std::string& type = x.types(p).point(t);
      if (fmt == ReportFormat::Table)
        out << "player " << to_string(p) << " type " << type << "\n";
      emit_choice_rows(x.theta(p, t), menus, namer, to_string(p), type, "choice", 0, out, fmt);
    }
  }
}

void report_hierarchy(const ChoiceStructure& x, std::size_t levels,
                      const RefineBounds& bounds, std::ostream& out, ReportFormat fmt) {
  const HierarchyImage h = hierarchy_map(x, levels, bounds);

  if (fmt == ReportFormat::Table)
    out << "hierarchy  levels " << h.depth() << "\n";
  else
    out << "record=hierarchy\tlevels=" << h.depth() << "\n";

  for (Player p : {Player::I, Player::J}) {
    for (std::size_t n = 1; n <= h.depth(); ++n) {
      const HierarchyLevel& lvl = h.level(p, n);
      if (fmt == ReportFormat::Table) {
        out << "level " << to_string(p) << " " << n << "  base " << lvl.base.size()
            << " points  opponent blocks " << render_blocks(lvl.opp_blocks, false) << "\n";
      } else {
        out << "record=level\tplayer=" << to_string(p) << "\tn=" << n
            << "\tbase=" << lvl.base.size() << "\tblocks=" << render_blocks(lvl.opp_blocks, true)
            << "\n";
      }

      // Lift the player's own-action acts onto the level base: each base
      // point refines a state, and the rows only read the opponent's action,
      // so any preimage state determines the payoff.
      const auto base = std::make_shared<const FinSpace>(lvl.base);
      const auto& to_base = lvl.state_to_base.table();
      const auto& to_opp = x.states(p).pi1.table();
      std::vector<Act> lifted;
      for (std::size_t a = 0; a < x.actions(p).size(); ++a) {
        std::vector<std::size_t> table(lvl.base.size());
        for (std::size_t b = 0; b < lvl.base.size(); ++b) {
          std::size_t state = 0;
          while (to_base[state] != b) ++state;
          const std::size_t o = to_opp[state];
          table[b] = p == Player::I ? x.payoff()[a][o] : x.payoff()[o][a];
        }
        lifted.emplace_back(base, x.outcomes_ptr(), std::move(table));
      }
      ActNamer namer = basis_namer(lifted, x.actions(p), x.outcomes());
      const auto menus = all_submenus(Menu<Act>::of(lifted));

      for (std::size_t t = 0; t < x.types(p).size(); ++t) {
        const std::string& type = x.types(p).point(t);
        const ChoiceFunction<Act>& ups = h.upsilon(p, n, type);
        // Independent re-derivation: pull every lifted menu down to the true
        // state space, evaluate the raw attitude there, and demand that the
        // image choice matches what upsilon reports.
        for (const Menu<Act>& k : menus) {
          std::vector<Act> down;
          for (const Act& f : k) down.push_back(pullback(f, lvl.state_to_base));
          const Menu<Act> chosen_down = x.theta(p, t).evaluate(Menu<Act>::of(down));
          std::vector<Act> expect;
          for (const Act& f : k)
            if (chosen_down.contains(pullback(f, lvl.state_to_base))) expect.push_back(f);
          if (ups.evaluate(k) != Menu<Act>::of(expect))
            throw InvariantError("re-verification failed: level-" + std::to_string(n) +
                                 " attitude of type '" + type +
                                 "' disagrees with the pulled-back evaluation on " +
                                 namer.menu(k));
        }
        if (fmt == ReportFormat::Table)
          out << "player " << to_string(p) << " type " << type << " level " << n << "\n";
        emit_choice_rows(ups, menus, namer, to_string(p), type, "attitude", n, out, fmt);
      }
    }
  }

  const auto bad = coherence_check(h, bounds);
  if (bad)
    throw InvariantError("coherence failed for type '" + bad->type_id + "' at level " +
                         std::to_string(bad->level));
  if (fmt == ReportFormat::Table)
    out << "coherence ok (levels 1.." << h.depth() << ")\n";
  else
    out << "record=coherence\tok=1\tlevels=" << h.depth() << "\n";
}

void report_nonred(const ChoiceStructure& x, const RefineBounds& bounds, std::ostream& out,
                   ReportFormat fmt) {
  const BehavioralPartition part = refine_partition(x, bounds);
  const NonRedundancyVerdict verdict = non_redundancy_verdict(part);

  // Replay every recorded separator against the raw structure before
  // printing anything.
  for (const Separator& s : part.separators) {
    const auto& in_choice = x.theta(s.player, s.type_in).evaluate(s.menu);
    const auto& out_choice = x.theta(s.player, s.type_out).evaluate(s.menu);
    if (in_choice != s.within || is_subset(out_choice, s.within))
      throw InvariantError("re-verification failed: separator for '" + s.type_in + "' vs '" +
                           s.type_out + "' does not replay");
  }

  if (fmt == ReportFormat::Table) {
    out << "nonred  rounds " << part.rounds << "\n";
    out << "blocks i: " << render_blocks(part.blocks_i, false) << "\n";
    out << "blocks j: " << render_blocks(part.blocks_j, false) << "\n";
  } else {
    out << "record=nonred\trounds=" << part.rounds << "\tverdict="
        << to_string(verdict.kind) << "\n";
    out << "record=blocks\tplayer=i\tblocks=" << render_blocks(part.blocks_i, true) << "\n";
    out << "record=blocks\tplayer=j\tblocks=" << render_blocks(part.blocks_j, true) << "\n";
  }

  for (const Separator& s : part.separators) {
    const ActNamer namer =
        basis_namer(x.basis(s.player), x.actions(s.player), x.outcomes());
    if (fmt == ReportFormat::Table) {
      out << "separator " << to_string(s.player) << " round " << s.round << ": " << s.type_in
          << " vs " << s.type_out << "  menu " << namer.menu(s.menu) << "  within "
          << namer.menu(s.within) << "\n";
    } else {
      out << "record=separator\tplayer=" << to_string(s.player) << "\tround=" << s.round
          << "\ttype_in=" << s.type_in << "\ttype_out=" << s.type_out
          << "\tmenu=" << namer.menu_machine(s.menu)
          << "\twithin=" << namer.menu_machine(s.within) << "\n";
    }
  }

  for (Player p : {Player::I, Player::J}) {
    const SearchCoverage& c = p == Player::I ? part.coverage_i : part.coverage_j;
    if (fmt == ReportFormat::Table) {
      out << "coverage " << to_string(p) << ": acts=" << yesno(c.acts_exhaustive)
          << " menus=" << yesno(c.menus_exhaustive) << " pairs=" << yesno(c.pairs_exhaustive)
          << " order-backed=" << yesno(c.order_backed) << "\n";
    } else {
      out << "record=coverage\tplayer=" << to_string(p) << "\tacts=" << c.acts_exhaustive
          << "\tmenus=" << c.menus_exhaustive << "\tpairs=" << c.pairs_exhaustive
          << "\torder_backed=" << c.order_backed << "\n";
    }
  }

  for (Player p : {Player::I, Player::J}) {
    const auto& pairs = p == Player::I ? verdict.witness_pairs_i : verdict.witness_pairs_j;
    for (const auto& [a, b] : pairs) {
      if (fmt == ReportFormat::Table)
        out << "merged " << to_string(p) << ": " << a << " ~ " << b << "\n";
      else
        out << "record=merged\tplayer=" << to_string(p) << "\ta=" << a << "\tb=" << b << "\n";
    }
  }

  if (fmt == ReportFormat::Table)
    out << "verdict " << to_string(verdict.kind) << "  (" << verdict.note << ")\n";
  else
    out << "record=verdict\tkind=" << to_string(verdict.kind) << "\tnote=" << verdict.note
        << "\n";
}

void report_embed(const PreferenceStructure& p, std::ostream& out, ReportFormat fmt) {
  const ChoiceStructure emb = embed_preference_structure(p);

  if (fmt == ReportFormat::Table) {
    out << "embed\n";
    for (Player pl : {Player::I, Player::J}) {
      out << "actions " << to_string(pl) << ": " << names_line(emb.actions(pl)) << "\n";
      out << "types " << to_string(pl) << ": " << names_line(emb.types(pl)) << "\n";
    }
  } else {
    out << "record=embed\tactions_i=" << names_machine(emb.actions(Player::I))
        << "\tactions_j=" << names_machine(emb.actions(Player::J))
        << "\ttypes_i=" << names_machine(emb.types(Player::I))
        << "\ttypes_j=" << names_machine(emb.types(Player::J)) << "\n";
  }

  for (Player pl : {Player::I, Player::J}) {
    const ActNamer namer = basis_namer(emb.basis(pl), emb.actions(pl), emb.outcomes());
    for (std::size_t t = 0; t < emb.types(pl).size(); ++t) {
      const std::string& type = emb.types(pl).point(t);
      const Poset<Act>& order = p.pref(pl, t);
      const auto menus = all_submenus(order.carrier());
      // Re-verify against the raw order: maximal means nothing strictly
      // above within the menu.
      for (const Menu<Act>& k : menus) {
        std::vector<Act> manual;
        for (const Act& a : k) {
          bool dominated = false;
          for (const Act& b : k)
            if (order.le(a, b) && !order.le(b, a)) dominated = true;
          if (!dominated) manual.push_back(a);
        }
        if (emb.theta(pl, t).evaluate(k) != Menu<Act>::of(manual))
          throw InvariantError("re-verification failed: embedded choice of type '" + type +
                               "' disagrees with direct maximization on " + namer.menu(k));
      }
      if (fmt == ReportFormat::Table)
        out << "player " << to_string(pl) << " type " << type << "\n";
      emit_choice_rows(emb.theta(pl, t), menus, namer, to_string(pl), type, "choice", 0, out,
                       fmt);
    }

    // Pairwise distinguishability of the embedded attitudes.
    for (std::size_t a = 0; a < emb.types(pl).size(); ++a) {
      for (std::size_t b = a + 1; b < emb.types(pl).size(); ++b) {
        const Menu<Act> common = intersect(p.pref(pl, a).carrier(), p.pref(pl, b).carrier());
        const auto sep =
            first_disagreement(emb.theta(pl, a), emb.theta(pl, b), all_submenus(common));
        const std::string ta = emb.types(pl).point(a);
        const std::string tb = emb.types(pl).point(b);
        if (fmt == ReportFormat::Table) {
          out << "pair " << to_string(pl) << ": " << ta << " vs " << tb << "  ";
          if (sep)
            out << "separated by " << namer.menu(*sep) << "\n";
          else
            out << "no separating menu\n";
        } else {
          out << "record=pair\tplayer=" << to_string(pl) << "\ta=" << ta << "\tb=" << tb
              << "\tseparating=" << (sep ? namer.menu_machine(*sep) : std::string()) << "\n";
        }
      }
    }
  }
}

namespace {

// Start-of-round survivors for one side, reconstructed from the record in
// the game's canonical action order.
std::vector<std::string> round_start(const GameSpec& g, Player p, const RationalizeRound& r) {
  const auto& justified = p == Player::I ? r.justified_i : r.justified_j;
  const auto& eliminated = p == Player::I ? r.eliminated_i : r.eliminated_j;
  std::vector<std::string> members;
  for (const auto& [a, w] : justified) members.push_back(a);
  members.insert(members.end(), eliminated.begin(), eliminated.end());
  std::vector<std::string> ordered;
  for (const auto& a : g.actions(p).points())
    if (std::find(members.begin(), members.end(), a) != members.end()) ordered.push_back(a);
  if (ordered.size() != members.size())
    throw InvariantError("re-verification failed: a recorded round names unknown or "
                         "duplicate actions");
  return ordered;
}

// Rebuilds the menu of own-action acts over the opponent's surviving states
// and checks each recorded witness still selects its action.
void replay_round_witnesses(const GameSpec& g, Player p, const std::vector<std::string>& own,
                            const std::vector<std::string>& opp,
                            const std::vector<std::pair<std::string, CredalSet>>& justified) {
  const FinSpace& full_opp = g.actions(opponent(p));
  std::vector<std::string> opp_states;
  std::vector<std::size_t> opp_idx;
  for (std::size_t s = 0; s < full_opp.size(); ++s) {
    if (std::find(opp.begin(), opp.end(), full_opp.point(s)) != opp.end()) {
      opp_states.push_back(full_opp.point(s));
      opp_idx.push_back(s);
    }
  }
  const auto space = std::make_shared<const FinSpace>(FinSpace::discrete(opp_states));
  std::vector<Act> acts;
  std::vector<std::string> names;
  for (const auto& a : own) {
    const std::size_t ai = *g.actions(p).find(a);
    std::vector<std::size_t> table(opp_idx.size());
    for (std::size_t s = 0; s < opp_idx.size(); ++s)
      table[s] =
          p == Player::I ? g.outcome_index(ai, opp_idx[s]) : g.outcome_index(opp_idx[s], ai);
    acts.emplace_back(space, g.outcomes_ptr(), std::move(table));
    names.push_back(a);
  }
  const Menu<Act> menu = Menu<Act>::of(acts);
  const UtilityView uv = UtilityView::of_player(g.outcomes(), p == Player::I ? 0 : 1);
  for (const auto& [a, w] : justified) {
    const auto it = std::find(names.begin(), names.end(), a);
    if (it == names.end())
      throw InvariantError("re-verification failed: witness names an action outside its round");
    const Menu<Act> chosen = criterion_choice(g.criterion(p), w, uv).evaluate(menu);
    if (!chosen.contains(acts[static_cast<std::size_t>(it - names.begin())]))
      throw InvariantError("re-verification failed: recorded witness for action '" + a +
                           "' no longer selects it");
  }
}

std::string side_list(const std::vector<std::string>& actions) {
  return actions.empty() ? std::string("-") : join(actions, " ");
}

}  // namespace

void report_rationalize(const GameSpec& g, const RationalizeOptions& options,
                        std::ostream& out, ReportFormat fmt) {
  const RationalizeResult res = rationalize(g, options);

  // Re-verify the whole trace before printing: witnesses are replayed
  // through the raw criterion, eliminations through a fresh justifiability
  // scan, and the survivor sets against the final round.
  for (const RationalizeRound& r : res.rounds) {
    const auto own_i = round_start(g, Player::I, r);
    const auto own_j = round_start(g, Player::J, r);
    replay_round_witnesses(g, Player::I, own_i, own_j, r.justified_i);
    replay_round_witnesses(g, Player::J, own_j, own_i, r.justified_j);
    for (Player p : {Player::I, Player::J}) {
      const auto& own = p == Player::I ? own_i : own_j;
      const auto& opp = p == Player::I ? own_j : own_i;
      const auto& eliminated = p == Player::I ? r.eliminated_i : r.eliminated_j;
      for (const auto& a : eliminated) {
        if (justifiable(g, p, a, opp, g.family(p), own, options.parallel))
          throw InvariantError("re-verification failed: eliminated action '" + a +
                               "' is justifiable after all");
      }
    }
  }
  if (res.rounds.empty())
    throw InvariantError("re-verification failed: empty round trace");
  const RationalizeRound& last = res.rounds.back();
  const auto last_i = round_start(g, Player::I, last);
  const auto last_j = round_start(g, Player::J, last);
  if (!last.eliminated_i.empty() || !last.eliminated_j.empty())
    throw InvariantError("re-verification failed: the final round is not quiet");
  if (last_i != res.survivors_i || last_j != res.survivors_j)
    throw InvariantError("re-verification failed: survivors disagree with the final round");

  if (fmt == ReportFormat::Table) {
    out << "rationalize  game " << g.actions(Player::I).size() << "x"
        << g.actions(Player::J).size() << "  criterion i: " << to_string(g.criterion(Player::I))
        << " | j: " << to_string(g.criterion(Player::J)) << "\n";
    out << "family i: " << render_family(g.family(Player::I)) << "\n";
    out << "family j: " << render_family(g.family(Player::J)) << "\n";
  } else {
    out << "record=rationalize\tactions_i=" << names_machine(g.actions(Player::I))
        << "\tactions_j=" << names_machine(g.actions(Player::J))
        << "\tcriterion_i=" << to_string(g.criterion(Player::I))
        << "\tcriterion_j=" << to_string(g.criterion(Player::J)) << "\n";
    out << "record=family\tplayer=i\tslices=" << render_family(g.family(Player::I)) << "\n";
    out << "record=family\tplayer=j\tslices=" << render_family(g.family(Player::J)) << "\n";
  }

  for (const RationalizeRound& r : res.rounds) {
    const bool quiet = r.eliminated_i.empty() && r.eliminated_j.empty();
    if (fmt == ReportFormat::Table) {
      out << "round " << r.round << "  eliminated i: " << side_list(r.eliminated_i)
          << " | j: " << side_list(r.eliminated_j);
      if (quiet) out << "  (fixpoint)";
      out << "\n";
    } else {
      out << "record=round\tn=" << r.round << "\teliminated_i=" << join(r.eliminated_i, ",")
          << "\teliminated_j=" << join(r.eliminated_j, ",") << "\tquiet=" << quiet << "\n";
    }
  }

  for (Player p : {Player::I, Player::J}) {
    const auto& justified = p == Player::I ? last.justified_i : last.justified_j;
    for (const auto& [a, w] : justified) {
      if (fmt == ReportFormat::Table) {
        out << "witness " << to_string(p) << " " << a << ": " << render_credal(w) << " over {"
            << join(w.support(), ", ") << "}\n";
      } else {
        out << "record=witness\tplayer=" << to_string(p) << "\taction=" << a
            << "\tsupport=" << join(w.support(), ",") << "\tbelief=" << render_credal(w)
            << "\n";
      }
    }
  }

  if (fmt == ReportFormat::Table) {
    out << "survivors  i: " << side_list(res.survivors_i) << " | j: "
        << side_list(res.survivors_j) << "\n";
  } else {
    out << "record=survivors\ti=" << join(res.survivors_i, ",")
        << "\tj=" << join(res.survivors_j, ",") << "\n";
  }
}

}  // namespace choicelab

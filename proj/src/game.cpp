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

#include "choicelab/game.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <utility>

#include "choicelab/errors.hpp"
#include "choicelab/scan.hpp"

namespace choicelab {
namespace {

// Expanding a family past this many credal sets is almost certainly a grid
// or hull parameter typo, not a search anyone will wait for.
constexpr std::size_t kFamilyCap = 200000;

std::size_t player_index(Player p) { return p == Player::I ? 0 : 1; }

// Compositions k_1 + ... + k_parts = n, emitted in descending lexicographic
// order on (k_1, ..., k_parts): the first composition puts everything on the
// first part, so grid enumeration starts from the point mass on the first
// support state and justification witnesses stay easy to read.
void compositions_into(std::size_t n, std::size_t parts, std::vector<std::size_t>& prefix,
                       std::vector<std::vector<std::size_t>>& out) {
  if (parts == 1) {
    prefix.push_back(n);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (std::size_t k = n + 1; k-- > 0;) {
    prefix.push_back(k);
    compositions_into(n - k, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<Rat>> grid_distributions(std::size_t grid, std::size_t states) {
  if (grid == 0) throw InputError("belief grid must be positive");
  std::vector<std::vector<std::size_t>> comps;
  std::vector<std::size_t> prefix;
  compositions_into(grid, states, prefix, comps);
  std::vector<std::vector<Rat>> out;
  out.reserve(comps.size());
  const long long den = static_cast<long long>(grid);
  for (const auto& comp : comps) {
    std::vector<Rat> p;
    p.reserve(states);
    for (std::size_t k : comp) p.emplace_back(static_cast<long long>(k), den);
    out.push_back(std::move(p));
  }
  return out;
}

// Advance idx to the next k-combination of {0, ..., n-1} in lexicographic
// order; false once the last combination has been visited.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t pos = k;
  while (pos-- > 0) {
    if (idx[pos] < n - (k - pos)) {
      ++idx[pos];
      for (std::size_t q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
      return true;
    }
  }
  return false;
}

void guard_family_size(std::size_t size) {
  if (size > kFamilyCap)
    throw CapExceededError("belief family expands past " + std::to_string(kFamilyCap) +
                           " credal sets");
}

}  // namespace

std::string to_string(BeliefFamily::Kind kind) {
  switch (kind) {
    case BeliefFamily::Kind::GridPoints:
      return "grid-points";
    case BeliefFamily::Kind::FullSimplex:
      return "full-simplex";
    case BeliefFamily::Kind::GridIntervals:
      return "grid-intervals";
    case BeliefFamily::Kind::GridHulls:
      return "grid-hulls";
  }
  throw InputError("unknown belief family kind");
}

std::vector<BeliefFamily> default_family(Criterion kind) {
  using K = BeliefFamily::Kind;
  switch (kind) {
    case Criterion::EU:
      return {{K::GridPoints, 8, 2}};
    case Criterion::Maxmin:
      return {{K::GridPoints, 8, 2}, {K::FullSimplex, 8, 2}};
    case Criterion::Regret:
      return {{K::GridPoints, 8, 2}, {K::FullSimplex, 8, 2}, {K::GridIntervals, 8, 2}};
  }
  throw InputError("unknown criterion");
}

GameSpec::GameSpec(FinSpace actions_i, FinSpace actions_j,
                   std::vector<std::vector<std::pair<Rat, Rat>>> payoff, PlayerSetup setup_i,
                   PlayerSetup setup_j)
    : actions_i_(std::move(actions_i)),
      actions_j_(std::move(actions_j)),
      setup_i_(std::move(setup_i)),
      setup_j_(std::move(setup_j)) {
  const std::size_t ni = actions_i_.size();
  const std::size_t nj = actions_j_.size();
  if (payoff.size() != ni)
    throw InputError("payoff must have one row per row-player action");
  std::vector<std::string> ids;
  std::vector<std::vector<Rat>> tables;
  std::map<std::string, std::size_t> seen;
  cell_.assign(ni, std::vector<std::size_t>(nj, 0));
  for (std::size_t a = 0; a < ni; ++a) {
    if (payoff[a].size() != nj)
      throw InputError("payoff row must have one cell per column-player action");
    for (std::size_t b = 0; b < nj; ++b) {
      const auto& [ui, uj] = payoff[a][b];
      std::string id = to_string(ui) + ";" + to_string(uj);
      const auto [it, inserted] = seen.try_emplace(std::move(id), ids.size());
      if (inserted) {
        ids.push_back(it->first);
        tables.push_back({ui, uj});
      }
      cell_[a][b] = it->second;
    }
  }
  outcomes_ = std::make_shared<const OutcomeSet>(
      OutcomeSet::with_utilities(std::move(ids), std::move(tables)));
  if (setup_i_.family.empty()) setup_i_.family = default_family(setup_i_.criterion);
  if (setup_j_.family.empty()) setup_j_.family = default_family(setup_j_.criterion);
}

const FinSpace& GameSpec::actions(Player p) const {
  return p == Player::I ? actions_i_ : actions_j_;
}

std::size_t GameSpec::outcome_index(std::size_t ai, std::size_t aj) const {
  if (ai >= actions_i_.size() || aj >= actions_j_.size())
    throw InputError("action index out of range");
  return cell_[ai][aj];
}

const PlayerSetup& GameSpec::setup(Player p) const {
  return p == Player::I ? setup_i_ : setup_j_;
}

const std::vector<BeliefFamily>& GameSpec::family(Player p) const {
  return setup(p).family;
}

// Three absences in this game hold against every belief whatsoever, so the
// family-relative verdicts below are not artifacts of the default grids:
//
//   - m under EU and maxmin. Writing p for the probability of r, u earns
//     5 - 5p and m earns 3 - 3p, so u beats m at every p < 1, and at p = 1
//     action c earns 3 > 0 = m. No point belief selects m; and over any
//     credal set C the guarantees are min values of the same lines, so u's
//     5 - 5*maxP beats m's 3 - 3*maxP unless maxP = 1, where c's guarantee
//     1 + 2*minP >= 1 > 0 again excludes m.
//
//   - d under regret. On the full menu the expected regrets against p are
//     c: 4 - 4p and d: 4 - 3p, so over any credal set C the worst cases
//     satisfy worst_d - worst_c = minP >= 0, with equality only at
//     minP = 0 -- where both equal 4 while u's worst case 3*maxP <= 3 is
//     strictly smaller. Hence d is never a regret-minimizer, under any
//     credal set, grid or not.
GameSpec worked_game(Criterion both) {
  FinSpace ai = FinSpace::discrete({"u", "m", "c", "d"});
  FinSpace aj = FinSpace::discrete({"l", "r"});
  std::vector<std::vector<std::pair<Rat, Rat>>> payoff = {
      {{Rat(5), Rat(1)}, {Rat(0), Rat(0)}},
      {{Rat(3), Rat(2)}, {Rat(0), Rat(1)}},
      {{Rat(1), Rat(1)}, {Rat(3), Rat(0)}},
      {{Rat(1), Rat(2)}, {Rat(2), Rat(3)}},
  };
  return GameSpec(std::move(ai), std::move(aj), std::move(payoff), PlayerSetup{both, {}},
                  PlayerSetup{both, {}});
}

std::vector<Act> action_acts(const GameSpec& g, Player p) {
  const FinSpace& own = g.actions(p);
  const auto opp = std::make_shared<const FinSpace>(g.actions(opponent(p)));
  std::vector<Act> out;
  out.reserve(own.size());
  for (std::size_t a = 0; a < own.size(); ++a) {
    std::vector<std::size_t> table(opp->size());
    for (std::size_t s = 0; s < opp->size(); ++s)
      table[s] = p == Player::I ? g.outcome_index(a, s) : g.outcome_index(s, a);
    out.emplace_back(opp, g.outcomes_ptr(), std::move(table));
  }
  return out;
}

std::vector<CredalSet> generate_family(const std::vector<BeliefFamily>& family,
                                       const std::vector<std::string>& support) {
  if (support.empty()) throw InputError("belief support must be nonempty");
  std::vector<CredalSet> out;
  for (const auto& slice : family) {
    switch (slice.kind) {
      case BeliefFamily::Kind::GridPoints: {
        for (auto& p : grid_distributions(slice.grid, support.size())) {
          out.push_back(CredalSet::point(support, std::move(p)));
          guard_family_size(out.size());
        }
        break;
      }
      case BeliefFamily::Kind::FullSimplex: {
        out.push_back(CredalSet::full_simplex(support));
        guard_family_size(out.size());
        break;
      }
      case BeliefFamily::Kind::GridIntervals: {
        if (support.size() != 2) break;  // interval sets only make sense there
        if (slice.grid == 0) throw InputError("belief grid must be positive");
        const long long den = static_cast<long long>(slice.grid);
        for (long long a = 0; a < den; ++a) {
          for (long long b = a + 1; b <= den; ++b) {
            out.push_back(CredalSet::interval2(support, Rat(a, den), Rat(b, den)));
            guard_family_size(out.size());
          }
        }
        break;
      }
      case BeliefFamily::Kind::GridHulls: {
        if (slice.max_vertices < 2) break;  // singleton hulls are GridPoints' job
        const auto pts = grid_distributions(slice.grid, support.size());
        const std::size_t top = std::min(slice.max_vertices, pts.size());
        for (std::size_t k = 2; k <= top; ++k) {
          std::vector<std::size_t> idx(k);
          std::iota(idx.begin(), idx.end(), std::size_t{0});
          do {
            std::vector<std::vector<Rat>> verts;
            verts.reserve(k);
            for (std::size_t i : idx) verts.push_back(pts[i]);
            out.emplace_back(support, std::move(verts));
            guard_family_size(out.size());
          } while (next_combination(idx, pts.size()));
        }
        break;
      }
    }
  }
  return out;
}

std::optional<CredalSet> justifiable(const GameSpec& g, Player p, const std::string& action,
                                     const std::vector<std::string>& opp_survivors,
                                     const std::vector<BeliefFamily>& family,
                                     const std::vector<std::string>& own_menu, bool parallel) {
  const FinSpace& own = g.actions(p);
  const FinSpace& full_opp = g.actions(opponent(p));

  if (opp_survivors.empty()) throw InputError("opponent survivor set must be nonempty");
  const std::set<std::string> surv_set(opp_survivors.begin(), opp_survivors.end());
  if (surv_set.size() != opp_survivors.size())
    throw InputError("opponent survivors contain a duplicate");
  std::vector<std::string> surv;  // canonical: the opponent's action order
  std::vector<std::size_t> surv_idx;
  for (std::size_t s = 0; s < full_opp.size(); ++s) {
    if (surv_set.count(full_opp.point(s))) {
      surv.push_back(full_opp.point(s));
      surv_idx.push_back(s);
    }
  }
  if (surv.size() != surv_set.size())
    throw InputError("opponent survivor is not one of their actions");

  const auto target = own.find(action);
  if (!target) throw InputError("action is not one of the player's actions");
  std::vector<std::size_t> menu_idx;
  if (own_menu.empty()) {
    menu_idx.resize(own.size());
    std::iota(menu_idx.begin(), menu_idx.end(), std::size_t{0});
  } else {
    const std::set<std::string> menu_set(own_menu.begin(), own_menu.end());
    if (menu_set.size() != own_menu.size()) throw InputError("player menu contains a duplicate");
    for (std::size_t a = 0; a < own.size(); ++a)
      if (menu_set.count(own.point(a))) menu_idx.push_back(a);
    if (menu_idx.size() != menu_set.size())
      throw InputError("menu entry is not one of the player's actions");
  }
  if (std::find(menu_idx.begin(), menu_idx.end(), *target) == menu_idx.end())
    throw InputError("action must belong to the menu it is judged against");

  const auto space = std::make_shared<const FinSpace>(FinSpace::discrete(surv));
  std::vector<Act> acts;
  acts.reserve(menu_idx.size());
  std::optional<Act> target_act;
  for (std::size_t a : menu_idx) {
    std::vector<std::size_t> table(surv_idx.size());
    for (std::size_t s = 0; s < surv_idx.size(); ++s)
      table[s] =
          p == Player::I ? g.outcome_index(a, surv_idx[s]) : g.outcome_index(surv_idx[s], a);
    acts.emplace_back(space, g.outcomes_ptr(), std::move(table));
    if (a == *target) target_act = acts.back();
  }
  const Menu<Act> menu = Menu<Act>::of(std::move(acts));

  const Criterion kind = g.criterion(p);
  const UtilityView uview = UtilityView::of_player(g.outcomes(), player_index(p));
  const std::vector<CredalSet> beliefs = generate_family(family, surv);

  const auto justifies = [&](std::size_t i) {
    const CredalSet& b = beliefs[i];
    if (kind == Criterion::EU && !b.is_point()) return false;
    return criterion_choice(kind, b, uview).evaluate(menu).contains(*target_act);
  };
  const std::size_t hit = first_index_where(beliefs.size(), justifies, parallel);
  if (hit == kScanNone) return std::nullopt;
  // Replay the winning belief serially before handing it out.
  if (!criterion_choice(kind, beliefs[hit], uview).evaluate(menu).contains(*target_act))
    throw InvariantError("justification witness failed to re-verify");
  return beliefs[hit];
}

RationalizeResult rationalize(const GameSpec& g, const RationalizeOptions& opts) {
  RationalizeResult res;
  std::vector<std::string> surv_i = g.actions(Player::I).points();
  std::vector<std::string> surv_j = g.actions(Player::J).points();
  const std::size_t max_rounds = surv_i.size() + surv_j.size() + 1;
  bool fixed = false;
  for (std::size_t round = 1; round <= max_rounds && !fixed; ++round) {
    RationalizeRound rec;
    rec.round = round;
    const auto run_side = [&](Player p, const std::vector<std::string>& own,
                              const std::vector<std::string>& opp,
                              std::vector<std::pair<std::string, CredalSet>>& justified,
                              std::vector<std::string>& eliminated) {
      for (const auto& a : own) {
        auto witness = justifiable(g, p, a, opp, g.family(p), own, opts.parallel);
        if (witness)
          justified.emplace_back(a, std::move(*witness));
        else
          eliminated.push_back(a);
      }
    };
    run_side(Player::I, surv_i, surv_j, rec.justified_i, rec.eliminated_i);
    run_side(Player::J, surv_j, surv_i, rec.justified_j, rec.eliminated_j);
    fixed = rec.eliminated_i.empty() && rec.eliminated_j.empty();
    std::vector<std::string> next_i;
    std::vector<std::string> next_j;
    for (const auto& [a, w] : rec.justified_i) next_i.push_back(a);
    for (const auto& [a, w] : rec.justified_j) next_j.push_back(a);
    res.rounds.push_back(std::move(rec));
    surv_i = std::move(next_i);
    surv_j = std::move(next_j);
    // A family too small to justify anything can empty a side; there is
    // nothing left to iterate against in that case.
    if (surv_i.empty() || surv_j.empty()) break;
  }
  if (!fixed && !surv_i.empty() && !surv_j.empty())
    throw InvariantError("elimination failed to reach a fixpoint within the round bound");
  res.survivors_i = std::move(surv_i);
  res.survivors_j = std::move(surv_j);
  return res;
}

}  // namespace choicelab

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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "choicelab/act.hpp"
#include "choicelab/criteria.hpp"
#include "choicelab/rational.hpp"
#include "choicelab/structure.hpp"

namespace choicelab {

// One searchable slice of beliefs over an opponent action space. A slice is
// expanded into concrete credal sets by generate_family; absence of a
// justifying belief is always relative to the slices that were searched.
struct BeliefFamily {
  enum class Kind {
    GridPoints,     // all point beliefs with denominator `grid`
    FullSimplex,    // the single credal set of all distributions
    GridIntervals,  // two-state supports only: every interval of grid
                    // probabilities for the second state
    GridHulls,      // hulls of 2..max_vertices distinct grid points
  };

  Kind kind = Kind::GridPoints;
  std::size_t grid = 8;          // denominator for the grid-based kinds
  std::size_t max_vertices = 2;  // GridHulls only: largest hull searched
};

std::string to_string(BeliefFamily::Kind kind);

// The family searched when a player setup leaves it empty. EU only ever
// consults point beliefs, so its default is the probability grid; maxmin adds
// the full simplex (the canonical witness for caution), and regret further
// adds two-state interval sets, whose boundary cases pick out choices no
// point belief reaches.
std::vector<BeliefFamily> default_family(Criterion kind);

// A player's decision attitude: the criterion their choices maximize, plus
// the belief family searched when asking whether an action is justifiable.
// An empty family means default_family(criterion).
struct PlayerSetup {
  Criterion criterion = Criterion::EU;
  std::vector<BeliefFamily> family;
};

// A finite two-player game in normal form. Payoff pairs are deduplicated
// into a shared outcome set (id "a;b" for the pair of utilities), so payoff
// entries and outcomes correspond one-to-one and each player's utility view
// reads their own coordinate.
class GameSpec {
 public:
  GameSpec(FinSpace actions_i, FinSpace actions_j,
           std::vector<std::vector<std::pair<Rat, Rat>>> payoff, PlayerSetup setup_i,
           PlayerSetup setup_j);

  const FinSpace& actions(Player p) const;
  const OutcomeSet& outcomes() const { return *outcomes_; }
  const OutcomesPtr& outcomes_ptr() const { return outcomes_; }

  // Index into outcomes() of the payoff cell for the action pair.
  std::size_t outcome_index(std::size_t ai, std::size_t aj) const;

  const PlayerSetup& setup(Player p) const;
  Criterion criterion(Player p) const { return setup(p).criterion; }
  // The player's search family with defaults already resolved.
  const std::vector<BeliefFamily>& family(Player p) const;

 private:
  FinSpace actions_i_;
  FinSpace actions_j_;
  std::vector<std::vector<std::size_t>> cell_;  // [ai][aj] -> outcome index
  OutcomesPtr outcomes_;
  PlayerSetup setup_i_;
  PlayerSetup setup_j_;
};

// The running 4x2 example: Ida picks among u, m, c, d; Joe between l and r;
// both players evaluate acts with the given criterion under its default
// family.
GameSpec worked_game(Criterion both);

// One act per own action, over the opponent's full action space, in own
// action order. Acting a against opponent state s yields the payoff cell's
// outcome.
std::vector<Act> action_acts(const GameSpec& g, Player p);

// Expand belief-family slices into concrete credal sets over the given
// support states, in a deterministic order: slices in the order given;
// within GridPoints, grid compositions with earlier support states weighted
// first (so the very first set is the point mass on support.front());
// within GridIntervals, lower endpoints ascending, then upper; within
// GridHulls, hull size ascending, then vertex combinations in grid order.
// Slices that do not apply (GridIntervals off two-state supports) contribute
// nothing.
std::vector<CredalSet> generate_family(const std::vector<BeliefFamily>& family,
                                       const std::vector<std::string>& support);

// The first belief in the expanded family under which `action` is among the
// criterion's choices from the player's menu of actions, with beliefs
// ranging over the opponent's surviving actions; nullopt when no searched
// belief justifies it. own_menu empty means all of the player's actions.
// EU players skip non-point credal sets. The scan over the family runs in
// parallel (deterministically, returning the first match) unless disabled.
std::optional<CredalSet> justifiable(const GameSpec& g, Player p, const std::string& action,
                                     const std::vector<std::string>& opp_survivors,
                                     const std::vector<BeliefFamily>& family,
                                     const std::vector<std::string>& own_menu = {},
                                     bool parallel = true);

struct RationalizeOptions {
  bool parallel = true;
};

// One round of simultaneous elimination: every surviving action of both
// players is tested against the opponent's start-of-round survivors, then
// the unjustifiable ones are removed from both sides at once.
struct RationalizeRound {
  std::size_t round = 0;  // 1-based
  // Surviving actions with the first belief that justified them, in action
  // order.
  std::vector<std::pair<std::string, CredalSet>> justified_i;
  std::vector<std::pair<std::string, CredalSet>> justified_j;
  std::vector<std::string> eliminated_i;
  std::vector<std::string> eliminated_j;
};

struct RationalizeResult {
  std::vector<std::string> survivors_i;
  std::vector<std::string> survivors_j;
  // Every round run, including the final one in which nothing was
  // eliminated (whose witnesses certify the fixpoint).
  std::vector<RationalizeRound> rounds;

  const std::vector<std::string>& survivors(Player p) const {
    return p == Player::I ? survivors_i : survivors_j;
  }
};

// Iterated elimination of unjustifiable actions, using each player's own
// criterion and resolved belief family. Survivor sets shrink weakly each
// round and the loop stops at the first round with no eliminations, so at
// most |A_i| + |A_j| + 1 rounds run.
RationalizeResult rationalize(const GameSpec& g, const RationalizeOptions& opts = {});

}  // namespace choicelab

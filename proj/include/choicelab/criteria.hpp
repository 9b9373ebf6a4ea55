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

// Exact-arithmetic decision criteria producing choice functions over acts:
// expected utility, maxmin expected utility over a credal set, and minimax
// expected regret.  Ties are genuine rational equalities and are always
// retained; nothing here breaks a tie or rounds.

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "choicelab/act.hpp"
#include "choicelab/choice.hpp"
#include "choicelab/rational.hpp"

namespace choicelab {

enum class Criterion { EU, Maxmin, Regret };

std::string to_string(Criterion kind);
Criterion parse_criterion(const std::string& name);

// Whether the criterion ranks acts by a menu-independent score, so that its
// choice sets arise from maximizing a fixed order over acts.  Expected
// utility and maxmin do; minimax regret is menu-relative and does not.
bool order_representable(Criterion kind);

// A convex compact set of probability distributions over an ordered list of
// states, represented by its extreme points.
class CredalSet {
 public:
  CredalSet(std::vector<std::string> support,
            std::vector<std::vector<Rat>> extreme_points);

  // The singleton {p}.
  static CredalSet point(std::vector<std::string> support, std::vector<Rat> p);
  // Every distribution over the support; vertices are the unit vectors.
  static CredalSet full_simplex(std::vector<std::string> support);
  // Two states only: the probability of the second state ranges over the
  // closed interval [lo, hi].
  static CredalSet interval2(std::vector<std::string> support, const Rat& lo,
                             const Rat& hi);

  const std::vector<std::string>& support() const { return support_; }
  const std::vector<std::vector<Rat>>& extreme_points() const { return extremes_; }
  bool is_point() const { return extremes_.size() == 1; }

  bool operator==(const CredalSet& other) const {
    return support_ == other.support_ && extremes_ == other.extremes_;
  }
  bool operator!=(const CredalSet& other) const { return !(*this == other); }

 private:
  std::vector<std::string> support_;
  std::vector<std::vector<Rat>> extremes_;
};

// "{(3/4,1/4),(0,1)}" — the extreme points in their stored order.
std::string describe(const CredalSet& set);

// One player's utility for each outcome, indexed by outcome id.
class UtilityView {
 public:
  UtilityView(std::size_t player, std::vector<std::pair<std::string, Rat>> table);

  // Reads the utility column attached to an OutcomeSet.
  static UtilityView of_player(const OutcomeSet& outcomes, std::size_t player);

  std::size_t player() const { return player_; }
  const Rat& at(const std::string& outcome_id) const;
  // True when every outcome of the set has an entry.
  bool covers(const OutcomeSet& outcomes) const;

 private:
  std::size_t player_;
  std::map<std::string, Rat> table_;
};

// Expected utility of one act under a distribution given in the act's
// domain point order.
Rat expected_utility(const Act& f, const std::vector<Rat>& p, const UtilityView& u);

// C(K) = argmax of expected utility.  Requires a single prior.
ChoiceFunction<Act> eu_choice(CredalSet belief, UtilityView u);
// C(K) = argmax of the worst-case expected utility over the extreme points.
ChoiceFunction<Act> maxmin_choice(CredalSet belief, UtilityView u);
// C(K) = argmin of the worst-case expected regret, where the regret of f at
// state s is measured against the best outcome any member of the menu
// achieves at s (menu-relative, ex post).
ChoiceFunction<Act> regret_choice(CredalSet belief, UtilityView u);
// Dispatch on the criterion tag.
ChoiceFunction<Act> criterion_choice(Criterion kind, CredalSet belief, UtilityView u);

}  // namespace choicelab

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

// Two-player choice structures: a pair of type spaces together with maps
// assigning every type a choice function over the acts on its state space
// (opponent actions × opponent types), plus morphism verification between
// structures, the order-based variant, and the worked two-player fixture.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "choicelab/act.hpp"
#include "choicelab/choice.hpp"
#include "choicelab/criteria.hpp"
#include "choicelab/pref.hpp"
#include "choicelab/space.hpp"

namespace choicelab {

enum class Player { I, J };

Player opponent(Player p);
std::string to_string(Player p);  // "i" / "j"

// All vertices of the set of distributions over the (action, type) pairs of
// a product space whose action marginal lies in the convex hull of the given
// marginal vertices.  Every vertex concentrates each action's marginal mass
// on a single opponent type; their hull is exactly the lifted belief set.
std::vector<std::vector<Rat>> lift_marginal_vertices(
    const ProductSpace& states, const std::vector<std::vector<Rat>>& marginal_vertices);

class ChoiceStructure {
 public:
  // payoff[ai][aj] is an outcome index; the own-action act bases are derived
  // from it (an action's act maps every opponent state to that row's or
  // column's payoff outcome, constant in the opponent's type).
  ChoiceStructure(FinSpace actions_i, FinSpace actions_j, FinSpace types_i,
                  FinSpace types_j, OutcomesPtr outcomes,
                  std::vector<std::vector<std::size_t>> payoff,
                  std::vector<ChoiceFunction<Act>> theta_i,
                  std::vector<ChoiceFunction<Act>> theta_j);

  const FinSpace& actions(Player p) const { return p == Player::I ? actions_i_ : actions_j_; }
  const FinSpace& types(Player p) const { return p == Player::I ? types_i_ : types_j_; }
  const OutcomeSet& outcomes() const { return *outcomes_; }
  OutcomesPtr outcomes_ptr() const { return outcomes_; }
  const std::vector<std::vector<std::size_t>>& payoff() const { return payoff_; }

  // Player p's state space: opponent actions × opponent types.
  const ProductSpace& states(Player p) const { return p == Player::I ? states_i_ : states_j_; }
  SpacePtr state_space_ptr(Player p) const {
    return p == Player::I ? states_i_ptr_ : states_j_ptr_;
  }

  const ChoiceFunction<Act>& theta(Player p, std::size_t type_idx) const;
  const ChoiceFunction<Act>& theta(Player p, const std::string& type_id) const;

  // The designated act basis: one act per own action, over states(p).
  const std::vector<Act>& basis(Player p) const { return p == Player::I ? basis_i_ : basis_j_; }
  Menu<Act> basis_menu(Player p) const;

 private:
  FinSpace actions_i_, actions_j_, types_i_, types_j_;
  OutcomesPtr outcomes_;
  std::vector<std::vector<std::size_t>> payoff_;
  ProductSpace states_i_, states_j_;
  SpacePtr states_i_ptr_, states_j_ptr_;
  std::vector<Act> basis_i_, basis_j_;
  std::vector<ChoiceFunction<Act>> theta_i_, theta_j_;
};

// Maps between the type spaces of two structures over the same action
// spaces and outcomes.
struct StructureMorphism {
  MeasurableMap alpha_i;
  MeasurableMap alpha_j;
};

// The menus (over the destination structure's state spaces) on which a
// morphism's commuting squares are checked.
struct MenuUniverse {
  std::vector<Menu<Act>> menus_i;
  std::vector<Menu<Act>> menus_j;
};

// Every nonempty submenu of each of the destination structure's act bases.
MenuUniverse basis_universe(const ChoiceStructure& dst);

struct MorphismFailure {
  Player player;
  std::string src_type;
  Menu<Act> menu;
  Menu<Act> lhs;  // destination side: theta'(alpha(t)) on the menu
  Menu<Act> rhs;  // transported side: the source choice through the lift
};

// Verifies the two commuting squares theta'_p(alpha_p(t)) = (lift along
// id x alpha_opp)(theta_p(t)) on every universe menu for every source type.
// Returns the first failure in deterministic order, or nothing if all hold.
std::optional<MorphismFailure> check_morphism(const ChoiceStructure& src,
                                              const ChoiceStructure& dst,
                                              const StructureMorphism& m,
                                              const MenuUniverse& universe);

// The same shape with a partial order over a finite act carrier per type
// instead of a choice function.  Each carrier must contain the player's own
// act basis so the embedded structure can evaluate basis menus.
class PreferenceStructure {
 public:
  PreferenceStructure(FinSpace actions_i, FinSpace actions_j, FinSpace types_i,
                      FinSpace types_j, OutcomesPtr outcomes,
                      std::vector<std::vector<std::size_t>> payoff,
                      std::vector<Poset<Act>> pref_i, std::vector<Poset<Act>> pref_j);

  const FinSpace& actions(Player p) const { return p == Player::I ? actions_i_ : actions_j_; }
  const FinSpace& types(Player p) const { return p == Player::I ? types_i_ : types_j_; }
  OutcomesPtr outcomes_ptr() const { return outcomes_; }
  const std::vector<std::vector<std::size_t>>& payoff() const { return payoff_; }
  const Poset<Act>& pref(Player p, std::size_t type_idx) const;

 private:
  FinSpace actions_i_, actions_j_, types_i_, types_j_;
  OutcomesPtr outcomes_;
  std::vector<std::vector<std::size_t>> payoff_;
  std::vector<Poset<Act>> pref_i_, pref_j_;
};

// Replaces every poset by maximization over it; type spaces, payoffs and
// outcomes are unchanged.
ChoiceStructure embed_preference_structure(const PreferenceStructure& p);

// The worked 4x2 fixture: row player i with one type whose attitude is
// minimax regret under the lifted interval belief P(second column) in
// [1/4, 1]; column player j with a maxmin type (full simplex) and an
// expected-utility type (equal weight on the first and last row).
ChoiceStructure example_structure();

// The same fixture with the maxmin type duplicated on player j's side;
// the two copies are behaviorally indistinguishable by construction.
ChoiceStructure duplicate_type_structure();

}  // namespace choicelab

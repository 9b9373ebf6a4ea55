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

#include "choicelab/structure.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "choicelab/errors.hpp"

namespace choicelab {

Player opponent(Player p) { return p == Player::I ? Player::J : Player::I; }

std::string to_string(Player p) { return p == Player::I ? "i" : "j"; }

std::vector<std::vector<Rat>> lift_marginal_vertices(
    const ProductSpace& states, const std::vector<std::vector<Rat>>& marginal_vertices) {
  const std::size_t actions = states.left_size;
  const std::size_t types = states.right_size;
  std::vector<std::vector<Rat>> out;
  for (const auto& v : marginal_vertices) {
    if (v.size() != actions)
      throw InputError("marginal vertex length does not match the action count");
    std::vector<std::size_t> carriers;  // actions with positive mass
    for (std::size_t a = 0; a < actions; ++a)
      if (v[a] != Rat(0)) carriers.push_back(a);
    // One lifted vertex per assignment of a single type to each carrier.
    std::vector<std::size_t> pick(carriers.size(), 0);
    while (true) {
      std::vector<Rat> p(actions * types, Rat(0));
      for (std::size_t k = 0; k < carriers.size(); ++k)
        p[states.pair_index(carriers[k], pick[k])] = v[carriers[k]];
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
      std::size_t k = carriers.size();
      while (k > 0 && pick[k - 1] + 1 == types) pick[--k] = 0;
      if (k == 0) break;
      ++pick[k - 1];
    }
  }
  return out;
}

namespace {

struct DerivedBases {
  ProductSpace states_i, states_j;
  SpacePtr states_i_ptr, states_j_ptr;
  std::vector<Act> basis_i, basis_j;
};

DerivedBases derive_bases(const FinSpace& actions_i, const FinSpace& actions_j,
                          const FinSpace& types_i, const FinSpace& types_j,
                          const OutcomesPtr& outcomes,
                          const std::vector<std::vector<std::size_t>>& payoff) {
  for (const auto* acts : {&actions_i, &actions_j})
    if (acts->atom_count() != acts->size())
      throw InvariantError("action spaces must be discrete");
  if (payoff.size() != actions_i.size())
    throw InvariantError("payoff table needs one row per first-player action");
  for (const auto& row : payoff) {
    if (row.size() != actions_j.size())
      throw InvariantError("payoff row length does not match the second player's actions");
    for (const auto z : row)
      if (z >= outcomes->size()) throw InvariantError("payoff entry names no outcome");
  }

  auto st_i = product(actions_j, types_j);
  auto st_j = product(actions_i, types_i);
  auto st_i_ptr = std::make_shared<const FinSpace>(st_i.space);
  auto st_j_ptr = std::make_shared<const FinSpace>(st_j.space);

  std::vector<Act> basis_i, basis_j;
  for (std::size_t ai = 0; ai < actions_i.size(); ++ai) {
    std::vector<std::size_t> table(st_i.space.size());
    for (std::size_t aj = 0; aj < actions_j.size(); ++aj)
      for (std::size_t tj = 0; tj < types_j.size(); ++tj)
        table[st_i.pair_index(aj, tj)] = payoff[ai][aj];
    basis_i.emplace_back(st_i_ptr, outcomes, std::move(table));
  }
  for (std::size_t aj = 0; aj < actions_j.size(); ++aj) {
    std::vector<std::size_t> table(st_j.space.size());
    for (std::size_t ai = 0; ai < actions_i.size(); ++ai)
      for (std::size_t ti = 0; ti < types_i.size(); ++ti)
        table[st_j.pair_index(ai, ti)] = payoff[ai][aj];
    basis_j.emplace_back(st_j_ptr, outcomes, std::move(table));
  }
  return DerivedBases{std::move(st_i), std::move(st_j), std::move(st_i_ptr),
                      std::move(st_j_ptr), std::move(basis_i), std::move(basis_j)};
}

// {t | theta(t)(K) subset of L} must be an event of the type space for every
// choice event (K, L) over the designated basis.
void check_theta_measurable(const FinSpace& types,
                            const std::vector<ChoiceFunction<Act>>& theta,
                            const std::vector<Act>& basis, Player p) {
  const auto basis_menu = Menu<Act>::of(basis);
  for (const auto& k : all_submenus(basis_menu)) {
    std::vector<Menu<Act>> chosen;
    chosen.reserve(types.size());
    for (const auto& c : theta) chosen.push_back(c.evaluate(k));
    for (const auto& l : all_submenus(k, 0)) {
      std::vector<bool> member(types.size());
      for (std::size_t t = 0; t < types.size(); ++t)
        member[t] = is_subset(chosen[t], l);
      if (!types.is_event(member))
        throw InvariantError("theta_" + to_string(p) +
                             " is not measurable: a basis choice event selects a "
                             "non-event set of types");
    }
  }
}

}  // namespace

ChoiceStructure::ChoiceStructure(FinSpace actions_i, FinSpace actions_j,
                                 FinSpace types_i, FinSpace types_j,
                                 OutcomesPtr outcomes,
                                 std::vector<std::vector<std::size_t>> payoff,
                                 std::vector<ChoiceFunction<Act>> theta_i,
                                 std::vector<ChoiceFunction<Act>> theta_j)
    : actions_i_(std::move(actions_i)),
      actions_j_(std::move(actions_j)),
      types_i_(std::move(types_i)),
      types_j_(std::move(types_j)),
      outcomes_(std::move(outcomes)),
      payoff_(std::move(payoff)),
      states_i_(product(actions_j_, types_j_)),
      states_j_(product(actions_i_, types_i_)),
      states_i_ptr_(nullptr),
      states_j_ptr_(nullptr),
      theta_i_(std::move(theta_i)),
      theta_j_(std::move(theta_j)) {
  auto derived = derive_bases(actions_i_, actions_j_, types_i_, types_j_, outcomes_, payoff_);
  states_i_ptr_ = std::move(derived.states_i_ptr);
  states_j_ptr_ = std::move(derived.states_j_ptr);
  basis_i_ = std::move(derived.basis_i);
  basis_j_ = std::move(derived.basis_j);
  if (theta_i_.size() != types_i_.size() || theta_j_.size() != types_j_.size())
    throw InvariantError("theta must assign exactly one choice function per type");
  check_theta_measurable(types_i_, theta_i_, basis_i_, Player::I);
  check_theta_measurable(types_j_, theta_j_, basis_j_, Player::J);
}

const ChoiceFunction<Act>& ChoiceStructure::theta(Player p, std::size_t type_idx) const {
  const auto& list = p == Player::I ? theta_i_ : theta_j_;
  if (type_idx >= list.size()) throw InputError("type index out of range");
  return list[type_idx];
}

const ChoiceFunction<Act>& ChoiceStructure::theta(Player p, const std::string& type_id) const {
  return theta(p, types(p).index_of(type_id));
}

Menu<Act> ChoiceStructure::basis_menu(Player p) const { return Menu<Act>::of(basis(p)); }

MenuUniverse basis_universe(const ChoiceStructure& dst) {
  return MenuUniverse{all_submenus(dst.basis_menu(Player::I)),
                      all_submenus(dst.basis_menu(Player::J))};
}

namespace {

// id_{actions} x alpha on the paired state spaces.
MeasurableMap pair_lift(const ProductSpace& src, const ProductSpace& dst,
                        const MeasurableMap& alpha) {
  std::vector<std::size_t> table(src.space.size());
  for (std::size_t a = 0; a < src.left_size; ++a)
    for (std::size_t t = 0; t < src.right_size; ++t)
      table[src.pair_index(a, t)] = dst.pair_index(a, alpha(t));
  return MeasurableMap(src.space, dst.space, std::move(table));
}

}  // namespace

std::optional<MorphismFailure> check_morphism(const ChoiceStructure& src,
                                              const ChoiceStructure& dst,
                                              const StructureMorphism& m,
                                              const MenuUniverse& universe) {
  for (const auto p : {Player::I, Player::J}) {
    if (!(src.actions(p) == dst.actions(p)))
      throw InputError("morphism endpoints disagree on player " + to_string(p) +
                       "'s action space");
  }
  if (!(src.outcomes() == dst.outcomes()))
    throw InputError("morphism endpoints disagree on the outcome set");
  if (!(m.alpha_i.dom() == src.types(Player::I)) ||
      !(m.alpha_i.cod() == dst.types(Player::I)) ||
      !(m.alpha_j.dom() == src.types(Player::J)) ||
      !(m.alpha_j.cod() == dst.types(Player::J)))
    throw InputError("morphism components do not map the type spaces of src to dst");

  for (const auto p : {Player::I, Player::J}) {
    const auto& alpha_own = p == Player::I ? m.alpha_i : m.alpha_j;
    const auto& alpha_opp = p == Player::I ? m.alpha_j : m.alpha_i;
    const auto lift = pair_lift(src.states(p), dst.states(p), alpha_opp);
    const auto& menus = p == Player::I ? universe.menus_i : universe.menus_j;
    for (std::size_t t = 0; t < src.types(p).size(); ++t) {
      const auto& lhs_fn = dst.theta(p, alpha_own(t));
      const auto rhs_fn = gamma_map(src.theta(p, t), lift);
      for (const auto& k : menus) {
        const auto lhs = lhs_fn.evaluate(k);
        const auto rhs = rhs_fn.evaluate(k);
        if (lhs != rhs)
          return MorphismFailure{p, src.types(p).points()[t], k, lhs, rhs};
      }
    }
  }
  return std::nullopt;
}

PreferenceStructure::PreferenceStructure(FinSpace actions_i, FinSpace actions_j,
                                         FinSpace types_i, FinSpace types_j,
                                         OutcomesPtr outcomes,
                                         std::vector<std::vector<std::size_t>> payoff,
                                         std::vector<Poset<Act>> pref_i,
                                         std::vector<Poset<Act>> pref_j)
    : actions_i_(std::move(actions_i)),
      actions_j_(std::move(actions_j)),
      types_i_(std::move(types_i)),
      types_j_(std::move(types_j)),
      outcomes_(std::move(outcomes)),
      payoff_(std::move(payoff)),
      pref_i_(std::move(pref_i)),
      pref_j_(std::move(pref_j)) {
  if (pref_i_.size() != types_i_.size() || pref_j_.size() != types_j_.size())
    throw InvariantError("preference structure needs exactly one poset per type");
  const auto derived =
      derive_bases(actions_i_, actions_j_, types_i_, types_j_, outcomes_, payoff_);
  for (const auto p : {Player::I, Player::J}) {
    const auto& prefs = p == Player::I ? pref_i_ : pref_j_;
    const auto& basis = p == Player::I ? derived.basis_i : derived.basis_j;
    for (const auto& poset : prefs)
      for (const auto& act : basis)
        if (!poset.carrier().contains(act))
          throw InvariantError("a preference carrier omits one of player " +
                               to_string(p) + "'s own action acts");
  }
}

const Poset<Act>& PreferenceStructure::pref(Player p, std::size_t type_idx) const {
  const auto& list = p == Player::I ? pref_i_ : pref_j_;
  if (type_idx >= list.size()) throw InputError("type index out of range");
  return list[type_idx];
}

ChoiceStructure embed_preference_structure(const PreferenceStructure& p) {
  std::vector<ChoiceFunction<Act>> theta_i, theta_j;
  for (std::size_t t = 0; t < p.types(Player::I).size(); ++t)
    theta_i.push_back(maximize_as_choicefn(p.pref(Player::I, t)));
  for (std::size_t t = 0; t < p.types(Player::J).size(); ++t)
    theta_j.push_back(maximize_as_choicefn(p.pref(Player::J, t)));
  return ChoiceStructure(p.actions(Player::I), p.actions(Player::J),
                         p.types(Player::I), p.types(Player::J), p.outcomes_ptr(),
                         p.payoff(), std::move(theta_i), std::move(theta_j));
}

namespace {

struct WorkedGame {
  FinSpace actions_i = FinSpace::discrete({"u", "m", "c", "d"});
  FinSpace actions_j = FinSpace::discrete({"l", "r"});
  OutcomesPtr outcomes = std::make_shared<const OutcomeSet>(OutcomeSet::with_utilities(
      {"5;1", "0;0", "3;2", "0;1", "1;1", "3;0", "1;2", "2;3"},
      {{Rat(5), Rat(1)},
       {Rat(0), Rat(0)},
       {Rat(3), Rat(2)},
       {Rat(0), Rat(1)},
       {Rat(1), Rat(1)},
       {Rat(3), Rat(0)},
       {Rat(1), Rat(2)},
       {Rat(2), Rat(3)}}));
  std::vector<std::vector<std::size_t>> payoff{{0, 1}, {2, 3}, {4, 5}, {6, 7}};
};

ChoiceStructure build_worked_structure(FinSpace types_j,
                                       std::size_t maxmin_copies) {
  const WorkedGame g;
  const auto types_i = FinSpace::discrete({"t_i"});
  const auto st_i = product(g.actions_j, types_j);
  const auto st_j = product(g.actions_i, types_i);
  const auto u_i = UtilityView::of_player(*g.outcomes, 0);
  const auto u_j = UtilityView::of_player(*g.outcomes, 1);

  // Row player: worst-case regret against every belief whose column marginal
  // puts probability between 1/4 and 1 on r, any split across column types.
  const CredalSet belief_i(
      st_i.space.points(),
      lift_marginal_vertices(st_i, {{Rat(3, 4), Rat(1, 4)}, {Rat(0), Rat(1)}}));
  std::vector<ChoiceFunction<Act>> theta_i{regret_choice(belief_i, u_i)};

  std::vector<ChoiceFunction<Act>> theta_j;
  for (std::size_t copy = 0; copy < maxmin_copies; ++copy)
    theta_j.push_back(maxmin_choice(CredalSet::full_simplex(st_j.space.points()), u_j));
  theta_j.push_back(eu_choice(
      CredalSet::point(st_j.space.points(), {Rat(1, 2), Rat(0), Rat(0), Rat(1, 2)}),
      u_j));

  return ChoiceStructure(g.actions_i, g.actions_j, types_i, std::move(types_j),
                         g.outcomes, g.payoff, std::move(theta_i), std::move(theta_j));
}

}  // namespace

ChoiceStructure example_structure() {
  return build_worked_structure(FinSpace::discrete({"t_Mm", "t_EU"}), 1);
}

ChoiceStructure duplicate_type_structure() {
  return build_worked_structure(FinSpace::discrete({"t_Mm", "t_Mm2", "t_EU"}), 2);
}

}  // namespace choicelab

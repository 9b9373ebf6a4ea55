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

// Finite levels of the universal hierarchy of choice attitudes, and the
// behavioral partition refinement behind the non-redundancy verdict.
//
// Full hierarchy spaces are astronomically large already at level one, so
// nothing here enumerates them. The module works with *generated* images:
// the level-n attitude of a type is represented as a choice function over
// acts on a small base space (the opponent's actions at level one, the
// opponent's actions crossed with a behavioral quotient of their types at
// higher levels), evaluable lazily on any menu of base acts.
//
// Behavioral partition refinement is the observable counterpart: starting
// from trivial partitions, types are split whenever some menu of acts
// measurable with respect to the opponent's current quotient elicits
// different choices. The search is bounded (act cap, menu cap, sampling);
// the bounds and what the search actually covered are surfaced in the
// result so the final verdict can be honest about completeness.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "choicelab/act.hpp"
#include "choicelab/choice.hpp"
#include "choicelab/space.hpp"
#include "choicelab/structure.hpp"

namespace choicelab {

// Search bounds for partition refinement and hierarchy evaluation universes.
struct RefineBounds {
  // Acts over a quotient base are enumerated exhaustively when the number of
  // outcome classes raised to the base size stays within this cap.
  std::size_t act_cap = 4096;
  // Largest menu size tried beyond exhaustive pair scans.
  std::size_t menu_cap = 4;
  // Random acts (when enumeration overflows the act cap) and random menus
  // per size (when combination counts overflow the menu budget).
  std::size_t sample_count = 64;
  // Total menu-combination budget per candidate plan.
  std::size_t menu_budget = 200000;
  std::uint64_t seed = 0;
  // Run the per-candidate separation scan with OpenMP when available.
  bool parallel = true;
};

// A recorded split: the menu K and choice event L witnessing that two types
// behave differently. Menu acts live on the splitting player's state space
// and are measurable with respect to the opponent partition of their round.
// Orientation: theta(type_in)(K) == within, and theta(type_out)(K) is not
// contained in within.
struct Separator {
  Player player = Player::I;
  std::size_t round = 0;  // 1-based refinement round
  std::string type_in;
  std::string type_out;
  Menu<Act> menu;
  Menu<Act> within;
};

// What a candidate plan provably covered. Feeds the completeness certificate:
// agreement on *all* menus over an exhaustively enumerated act pool is full
// behavioral equality; agreement on all pairs suffices when every compared
// attitude is order-backed (an order-maximizer is determined by its pair
// choices).
struct SearchCoverage {
  bool acts_exhaustive = false;   // pool = every act over the quotient base
  bool menus_exhaustive = false;  // every menu of pool acts was evaluated
  bool pairs_exhaustive = false;  // every pair of pool acts was evaluated
  bool order_backed = false;      // every attitude still sharing a block is order-backed
};

// Fixpoint of the bounded refinement. Blocks list type identifiers in
// carrier order; coverage describes the final (stabilizing) round.
struct BehavioralPartition {
  std::vector<std::vector<std::string>> blocks_i;
  std::vector<std::vector<std::string>> blocks_j;
  std::vector<Separator> separators;
  SearchCoverage coverage_i;
  SearchCoverage coverage_j;
  std::size_t rounds = 0;  // rounds executed, including the stabilizing one
};

BehavioralPartition refine_partition(const ChoiceStructure& x,
                                     const RefineBounds& bounds = {});

// Verdict on behavioral distinguishability of types.
//   NonRedundant: both partitions are discrete; every pair of types is
//     separated by a recorded observable event.
//   Redundant: some types remain merged and the search was provably complete
//     for the instance, so no separating menu exists at all.
//   Inconclusive: types remain merged but the bounded search cannot certify
//     completeness; the note spells out which certificate failed.
struct NonRedundancyVerdict {
  enum class Kind { NonRedundant, Redundant, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::vector<std::pair<std::string, std::string>> witness_pairs_i;
  std::vector<std::pair<std::string, std::string>> witness_pairs_j;
  std::string note;
};

std::string to_string(NonRedundancyVerdict::Kind kind);

NonRedundancyVerdict non_redundancy_verdict(const BehavioralPartition& p);

// One computed hierarchy level for one player. The base space carries the
// level's acts: the opponent's action space alone at n = 1, and the product
// of the opponent's actions with the quotient of their types by level-(n-1)
// behavior at n >= 2. state_to_base sends the player's true state space onto
// the base; upsilon[t] is the type's attitude, the image of theta under that
// map, evaluable on any menu of base acts.
struct HierarchyLevel {
  std::size_t n = 0;  // 1-based level index
  FinSpace base;
  MeasurableMap state_to_base;
  // Opponent-type partition behind the base: one block at n = 1, the
  // level-(n-1) behavioral blocks at n >= 2. Block order names the quotient
  // points "B0", "B1", ... of the base.
  std::vector<std::vector<std::string>> opp_blocks;
  std::vector<ChoiceFunction<Act>> upsilon;  // per own type, in carrier order

  HierarchyLevel(std::size_t n_, FinSpace base_, MeasurableMap map_,
                 std::vector<std::vector<std::string>> opp_blocks_,
                 std::vector<ChoiceFunction<Act>> upsilon_)
      : n(n_),
        base(std::move(base_)),
        state_to_base(std::move(map_)),
        opp_blocks(std::move(opp_blocks_)),
        upsilon(std::move(upsilon_)) {}
};

// Levels 1..N of both players' hierarchy maps over one structure.
class HierarchyImage {
 public:
  HierarchyImage(ChoiceStructure structure, std::vector<HierarchyLevel> levels_i,
                 std::vector<HierarchyLevel> levels_j);

  const ChoiceStructure& structure() const { return structure_; }
  std::size_t depth() const { return levels_i_.size(); }

  // n is 1-based; throws InputError outside 1..depth().
  const HierarchyLevel& level(Player p, std::size_t n) const;
  const ChoiceFunction<Act>& upsilon(Player p, std::size_t n,
                                     const std::string& type_id) const;

  // Copy with one attitude replaced (mutation probes for coherence_check).
  HierarchyImage with_upsilon(Player p, std::size_t n, const std::string& type_id,
                              ChoiceFunction<Act> replacement) const;

 private:
  ChoiceStructure structure_;
  std::vector<HierarchyLevel> levels_i_;
  std::vector<HierarchyLevel> levels_j_;
};

// First-level attitudes: theta composed with the projection of the state
// space onto the opponent's actions, one choice function per type in carrier
// order, each evaluable on menus of acts over the opponent's action space.
std::vector<ChoiceFunction<Act>> level_one_map(const ChoiceStructure& x, Player p);

// Levels 1..N for both players. Level n's base quotients the opponent's
// types by the behavior observable through the first n-1 refinement rounds,
// so the image grows exactly as far as behavior distinguishes types.
HierarchyImage hierarchy_map(const ChoiceStructure& x, std::size_t levels,
                             const RefineBounds& bounds = {});

// Witness that the projection of a level-(n+1) attitude down to level n
// disagrees with the stored level-n attitude somewhere on the evaluation
// universe.
struct CoherenceFailure {
  Player player = Player::I;
  std::size_t level = 0;  // the equation checked: project(n+1) == n
  std::string type_id;
  Menu<Act> menu;       // level-n base menu where the sides differ
  Menu<Act> projected;  // from level n+1
  Menu<Act> expected;   // stored at level n
};

// Re-evaluates the coherence equations between consecutive levels on the
// candidate menu universe of each level. Returns the first failure in
// deterministic order (player I first, then level, type, menu), or nullopt
// when every equation holds. Single-level images are vacuously coherent.
std::optional<CoherenceFailure> coherence_check(const HierarchyImage& h,
                                                const RefineBounds& bounds = {});

}  // namespace choicelab

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
#include <memory>
#include <string>
#include <vector>

#include "choicelab/rational.hpp"
#include "choicelab/space.hpp"

namespace choicelab {

// A finite set of outcomes, optionally carrying one rational utility per
// player for every outcome (all-or-nothing: utilities are either absent or
// defined for every outcome and every player index).
class OutcomeSet {
 public:
  static OutcomeSet plain(std::vector<std::string> ids);
  // utilities[outcome][player]; every row must have the same length >= 1.
  static OutcomeSet with_utilities(std::vector<std::string> ids,
                                   std::vector<std::vector<Rat>> utilities);

  std::size_t size() const { return ids_.size(); }
  const std::string& id(std::size_t i) const { return ids_[i]; }
  const std::vector<std::string>& ids() const { return ids_; }
  std::size_t index_of(std::string_view id) const;

  bool has_utilities() const { return !utilities_.empty(); }
  std::size_t player_count() const { return has_utilities() ? utilities_.front().size() : 0; }
  const Rat& utility(std::size_t outcome, std::size_t player) const;

  bool operator==(const OutcomeSet& other) const {
    return ids_ == other.ids_ && utilities_ == other.utilities_;
  }

 private:
  std::vector<std::string> ids_;
  std::vector<std::vector<Rat>> utilities_;
};

using SpacePtr = std::shared_ptr<const FinSpace>;
using OutcomesPtr = std::shared_ptr<const OutcomeSet>;

// A Savage act: a measurable step function from an uncertainty space into the
// discrete space on the outcomes. Measurability (each outcome preimage is an
// atom-union) is checked at construction.
class Act {
 public:
  Act(SpacePtr space, OutcomesPtr outcomes, std::vector<std::size_t> table);

  static Act constant(SpacePtr space, OutcomesPtr outcomes, std::size_t outcome);

  const FinSpace& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  const OutcomeSet& outcomes() const { return *outcomes_; }
  const OutcomesPtr& outcomes_ptr() const { return outcomes_; }
  std::size_t operator()(std::size_t point_idx) const { return table_[point_idx]; }
  const std::vector<std::size_t>& table() const { return table_; }

  // Pointwise equality over a common carrier.
  bool operator==(const Act& other) const;
  bool operator!=(const Act& other) const { return !(*this == other); }
  // Total order by outcome table; acts compared within a menu always share
  // one space, so the table determines the act.
  bool operator<(const Act& other) const { return table_ < other.table_; }

 private:
  SpacePtr space_;
  OutcomesPtr outcomes_;
  std::vector<std::size_t> table_;
};

// Readable one-line rendering "[z(x_0),z(x_1),...]" in point order.
std::string describe(const Act& act);

// The contravariant action on acts: pullback(f, phi) = f o phi.
Act pullback(const Act& f, const MeasurableMap& phi);
// Pulls a whole family back along one map, sharing the domain-space value.
std::vector<Act> pullback_all(const std::vector<Act>& acts, const MeasurableMap& phi);

// All measurable step functions space -> outcomes, i.e. all assignments of
// atoms to outcomes, in ascending mixed-radix order over atom indices.
// Throws CapExceededError when |outcomes|^atoms exceeds the cap.
std::vector<Act> enumerate_acts(const SpacePtr& space, const OutcomesPtr& outcomes,
                                std::size_t cap = 4096);

// Given witnesses E_z (one indicator over phi's codomain per outcome) with
// f^{-1}[{z}] = phi^{-1}[E_z], builds f' over the codomain with f = f' o phi:
// in outcome order, H_n = E_n minus the earlier H_m, and points outside every
// H_n receive the canonically first outcome. Witness equations are checked.
Act factor_through(const Act& f, const MeasurableMap& phi,
                   const std::vector<std::vector<bool>>& witnesses);

struct LevelDescent {
  std::size_t level;
  Act act;  // over cochain level `level`, with f = act o zeta_level
};

// Finds the least level m such that an act on the cochain limit factors
// through the projection zeta_m, and returns the factored act (verified
// pointwise). Always succeeds: the top projection is the identity.
LevelDescent descend_level(const Act& f, const FinCochain& cochain);

}  // namespace choicelab

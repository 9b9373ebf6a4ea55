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

#include "choicelab/act.hpp"

#include <algorithm>
#include <unordered_set>

#include "choicelab/errors.hpp"

namespace choicelab {

OutcomeSet OutcomeSet::plain(std::vector<std::string> ids) {
  if (ids.empty()) throw InvariantError("outcome set must be nonempty");
  std::unordered_set<std::string_view> seen;
  for (const auto& id : ids) {
    if (!seen.insert(id).second) throw InvariantError("duplicate outcome '" + id + "'");
  }
  OutcomeSet z;
  z.ids_ = std::move(ids);
  return z;
}

OutcomeSet OutcomeSet::with_utilities(std::vector<std::string> ids,
                                      std::vector<std::vector<Rat>> utilities) {
  OutcomeSet z = plain(std::move(ids));
  if (utilities.size() != z.ids_.size()) {
    throw InvariantError("utility rows must match outcome count");
  }
  const std::size_t players = utilities.front().size();
  if (players == 0) throw InvariantError("utility rows must cover at least one player");
  for (const auto& row : utilities) {
    if (row.size() != players) throw InvariantError("ragged utility rows");
  }
  z.utilities_ = std::move(utilities);
  return z;
}

std::size_t OutcomeSet::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i] == id) return i;
  }
  throw InvariantError("unknown outcome '" + std::string(id) + "'");
}

const Rat& OutcomeSet::utility(std::size_t outcome, std::size_t player) const {
  if (!has_utilities()) throw InvariantError("outcome set carries no utilities");
  if (player >= player_count()) throw InvariantError("player index out of range");
  return utilities_[outcome][player];
}

Act::Act(SpacePtr space, OutcomesPtr outcomes, std::vector<std::size_t> table)
    : space_(std::move(space)), outcomes_(std::move(outcomes)), table_(std::move(table)) {
  if (!space_ || !outcomes_) throw InvariantError("act needs a space and an outcome set");
  if (table_.size() != space_->size()) throw InvariantError("act table has wrong carrier size");
  for (const std::size_t z : table_) {
    if (z >= outcomes_->size()) throw InvariantError("act table value outside outcome set");
  }
  // Step-function measurability: the outcome is constant on every atom (the
  // codomain is discrete, so this is exactly "every preimage is an event").
  for (const auto& members : space_->atoms()) {
    for (const std::size_t m : members) {
      if (table_[m] != table_[members.front()]) {
        throw InvariantError("act is not measurable: outcome varies inside an atom");
      }
    }
  }
}

Act Act::constant(SpacePtr space, OutcomesPtr outcomes, std::size_t outcome) {
  if (!space) throw InvariantError("act needs a space");
  std::vector<std::size_t> table(space->size(), outcome);
  return Act(std::move(space), std::move(outcomes), std::move(table));
}

bool Act::operator==(const Act& other) const {
  const bool same_space = space_ == other.space_ || *space_ == *other.space_;
  return same_space && table_ == other.table_;
}

std::string describe(const Act& act) {
  std::string out = "[";
  for (std::size_t i = 0; i < act.table().size(); ++i) {
    if (i) out += ",";
    out += act.outcomes().id(act(i));
  }
  out += "]";
  return out;
}

Act pullback(const Act& f, const MeasurableMap& phi) {
  if (!(phi.cod() == f.space())) throw InvariantError("pullback: map codomain is not the act's space");
  std::vector<std::size_t> table(phi.dom().size());
  for (std::size_t x = 0; x < table.size(); ++x) table[x] = f(phi(x));
  return Act(std::make_shared<const FinSpace>(phi.dom()), f.outcomes_ptr(), std::move(table));
}

std::vector<Act> pullback_all(const std::vector<Act>& acts, const MeasurableMap& phi) {
  const auto dom = std::make_shared<const FinSpace>(phi.dom());
  std::vector<Act> out;
  out.reserve(acts.size());
  for (const Act& f : acts) {
    if (!(phi.cod() == f.space())) {
      throw InvariantError("pullback: map codomain is not the act's space");
    }
    std::vector<std::size_t> table(dom->size());
    for (std::size_t x = 0; x < table.size(); ++x) table[x] = f(phi(x));
    out.emplace_back(dom, f.outcomes_ptr(), std::move(table));
  }
  return out;
}

std::vector<Act> enumerate_acts(const SpacePtr& space, const OutcomesPtr& outcomes,
                                std::size_t cap) {
  const std::size_t atoms = space->atom_count();
  const std::size_t z = outcomes->size();
  std::size_t total = 1;
  for (std::size_t a = 0; a < atoms; ++a) {
    if (total > cap / z + 1) {
      throw CapExceededError("act enumeration exceeds cap of " + std::to_string(cap));
    }
    total *= z;
  }
  if (total > cap) {
    throw CapExceededError("act enumeration exceeds cap of " + std::to_string(cap));
  }
  std::vector<Act> out;
  out.reserve(total);
  std::vector<std::size_t> assign(atoms, 0);  // outcome per atom, counted up mixed-radix
  for (std::size_t k = 0; k < total; ++k) {
    std::vector<std::size_t> table(space->size());
    for (std::size_t a = 0; a < atoms; ++a) {
      for (const std::size_t m : space->atoms()[a]) table[m] = assign[a];
    }
    out.emplace_back(space, outcomes, std::move(table));
    for (std::size_t a = atoms; a-- > 0;) {  // increment, last atom least significant
      if (++assign[a] < z) break;
      assign[a] = 0;
    }
  }
  return out;
}

Act factor_through(const Act& f, const MeasurableMap& phi,
                   const std::vector<std::vector<bool>>& witnesses) {
  if (!(phi.dom() == f.space())) throw InvariantError("factor_through: map domain mismatch");
  const FinSpace& y = phi.cod();
  const std::size_t zs = f.outcomes().size();
  if (witnesses.size() != zs) {
    throw InvariantError("factor_through: need one witness event per outcome");
  }
  for (std::size_t z = 0; z < zs; ++z) {
    if (!y.is_event(witnesses[z])) {
      throw InvariantError("factor_through: witness for '" + f.outcomes().id(z) +
                           "' is not an event");
    }
    for (std::size_t x = 0; x < f.space().size(); ++x) {
      if ((f(x) == z) != bool(witnesses[z][phi(x)])) {
        throw InvariantError("factor_through: witness for '" + f.outcomes().id(z) +
                             "' does not pull back to the preimage");
      }
    }
  }
  // Disjointify in outcome order, then send leftover points to the first
  // outcome: H_n = E_n minus the union of the earlier H_m.
  std::vector<std::size_t> table(y.size(), 0);
  std::vector<bool> taken(y.size(), false);
  for (std::size_t z = 0; z < zs; ++z) {
    for (std::size_t p = 0; p < y.size(); ++p) {
      if (witnesses[z][p] && !taken[p]) {
        taken[p] = true;
        table[p] = z;
      }
    }
  }
  Act factored(std::make_shared<const FinSpace>(y), f.outcomes_ptr(), std::move(table));
  for (std::size_t x = 0; x < f.space().size(); ++x) {
    if (factored(phi(x)) != f(x)) {
      throw InvariantError("factor_through: factored act disagrees with the original");
    }
  }
  return factored;
}

LevelDescent descend_level(const Act& f, const FinCochain& cochain) {
  const CochainLimit lim = cochain_limit(cochain);
  if (!(f.space() == lim.carrier)) {
    throw InvariantError("descend_level: act does not live on the cochain limit");
  }
  const std::size_t zs = f.outcomes().size();
  for (std::size_t m = 0; m < cochain.levels.size(); ++m) {
    const MeasurableMap& zeta = lim.project[m];
    const FinSpace& level = cochain.levels[m];
    // E_z = image of the preimage of z under zeta; f factors through level m
    // iff each E_z pulls back to exactly the preimage and is an event there.
    std::vector<std::vector<bool>> images(zs, std::vector<bool>(level.size(), false));
    for (std::size_t x = 0; x < f.space().size(); ++x) images[f(x)][zeta(x)] = true;
    bool ok = true;
    for (std::size_t z = 0; z < zs && ok; ++z) {
      if (!level.is_event(images[z])) ok = false;
      for (std::size_t x = 0; x < f.space().size() && ok; ++x) {
        if (bool(images[z][zeta(x)]) != (f(x) == z)) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<std::size_t> table(level.size(), 0);
    for (std::size_t z = 0; z < zs; ++z) {
      for (std::size_t p = 0; p < level.size(); ++p) {
        if (images[z][p]) table[p] = z;
      }
    }
    Act down(std::make_shared<const FinSpace>(level), f.outcomes_ptr(), std::move(table));
    for (std::size_t x = 0; x < f.space().size(); ++x) {
      if (down(zeta(x)) != f(x)) {
        throw InvariantError("descend_level: factored act disagrees with the original");
      }
    }
    return LevelDescent{m, std::move(down)};
  }
  throw InvariantError("descend_level: unreachable (top projection is the identity)");
}

}  // namespace choicelab

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

#include "choicelab/hierarchy.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "choicelab/errors.hpp"
#include "choicelab/rng.hpp"
#include "choicelab/scan.hpp"

namespace choicelab {
namespace {

constexpr std::size_t kNone = kScanNone;

std::size_t player_index(Player p) { return p == Player::I ? 0 : 1; }

// SplitMix64 step: derives independent deterministic streams per
// (seed, round, player) without correlating neighboring salts.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + (salt + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Partition of type indices. Members ascend within a block; blocks are kept
// sorted by least member, which fixes the "B0", "B1", ... quotient naming.
struct Partition {
  std::vector<std::vector<std::size_t>> blocks;

  static Partition trivial(std::size_t count) {
    Partition p;
    if (count > 0) {
      std::vector<std::size_t> all(count);
      std::iota(all.begin(), all.end(), 0);
      p.blocks.push_back(std::move(all));
    }
    return p;
  }

  bool discrete() const {
    for (const auto& block : blocks) {
      if (block.size() > 1) return false;
    }
    return true;
  }

  std::vector<std::size_t> block_of(std::size_t count) const {
    std::vector<std::size_t> out(count, 0);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (const std::size_t t : blocks[b]) out[t] = b;
    }
    return out;
  }

  void canonicalize() {
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
  }
};

std::vector<std::vector<std::string>> block_names(const Partition& part,
                                                  const FinSpace& types) {
  std::vector<std::vector<std::string>> out;
  out.reserve(part.blocks.size());
  for (const auto& block : part.blocks) {
    std::vector<std::string> ids;
    ids.reserve(block.size());
    for (const std::size_t t : block) ids.push_back(types.point(t));
    out.push_back(std::move(ids));
  }
  return out;
}

Partition partition_from_names(const std::vector<std::vector<std::string>>& names,
                               const FinSpace& types) {
  Partition part;
  for (const auto& block : names) {
    std::vector<std::size_t> idx;
    idx.reserve(block.size());
    for (const auto& id : block) idx.push_back(types.index_of(id));
    std::sort(idx.begin(), idx.end());
    part.blocks.push_back(std::move(idx));
  }
  part.canonicalize();
  return part;
}

// min(C(n, k), cap + 1), overflow-safe for the sizes used here.
std::size_t comb_capped(std::size_t n, std::size_t k, std::size_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long c = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > cap) return cap + 1;
  }
  return static_cast<std::size_t>(c);
}

// min(base^exp, cap + 1), overflow-safe.
std::size_t pow_capped(std::size_t base, std::size_t exp, std::size_t cap) {
  if (base == 0) return exp == 0 ? 1 : 0;
  unsigned long long v = 1;
  for (std::size_t e = 0; e < exp; ++e) {
    if (v > cap) return cap + 1;
    v *= base;
  }
  return v > static_cast<unsigned long long>(cap) ? cap + 1
                                                  : static_cast<std::size_t>(v);
}

void require_discrete_types(const ChoiceStructure& x) {
  for (const Player p : {Player::I, Player::J}) {
    if (x.types(p).atom_count() != x.types(p).size()) {
      throw InputError("behavioral refinement needs discrete type spaces");
    }
  }
}

// Base space of one player's level: the opponent's actions alone while the
// opponent partition is trivial (unless a product is forced, as at levels
// >= 2), else actions x quotient with the cylinder algebra.
struct LevelBase {
  FinSpace space;
  std::vector<std::size_t> to_base;  // state point index -> base point index
  MeasurableMap map;                 // states(p).space -> space
};

LevelBase make_base(const ChoiceStructure& x, Player p, const Partition& opp_part,
                    bool force_product) {
  const FinSpace& a_opp = x.actions(opponent(p));
  const ProductSpace& st = x.states(p);
  if (!force_product && opp_part.blocks.size() <= 1) {
    return LevelBase{a_opp, st.pi1.table(), st.pi1};
  }
  std::vector<std::string> qpoints;
  qpoints.reserve(opp_part.blocks.size());
  for (std::size_t b = 0; b < opp_part.blocks.size(); ++b) {
    qpoints.push_back("B" + std::to_string(b));
  }
  const auto block_of = opp_part.block_of(st.right_size);
  const ProductSpace prod = product(a_opp, FinSpace::discrete(std::move(qpoints)));
  std::vector<std::size_t> table(st.space.size());
  for (std::size_t a = 0; a < st.left_size; ++a) {
    for (std::size_t t = 0; t < st.right_size; ++t) {
      table[st.pair_index(a, t)] = prod.pair_index(a, block_of[t]);
    }
  }
  MeasurableMap map(st.space, prod.space, table);
  return LevelBase{prod.space, std::move(table), std::move(map)};
}

// Descends a state-space act that is constant on base fibers to a base act;
// pre_of holds one preimage state per base point.
Act descend(const Act& act, const SpacePtr& base_ptr,
            const std::vector<std::size_t>& pre_of) {
  std::vector<std::size_t> table(pre_of.size());
  for (std::size_t b = 0; b < pre_of.size(); ++b) table[b] = act(pre_of[b]);
  return Act(base_ptr, act.outcomes_ptr(), std::move(table));
}

bool quotient_measurable(const Act& act, const std::vector<std::size_t>& to_base,
                         std::size_t base_size) {
  std::vector<std::size_t> seen(base_size, kNone);
  for (std::size_t s = 0; s < to_base.size(); ++s) {
    if (seen[to_base[s]] == kNone) {
      seen[to_base[s]] = act(s);
    } else if (seen[to_base[s]] != act(s)) {
      return false;
    }
  }
  return true;
}

// Candidate acts and menus over one level base, in deterministic scan order:
// (A) own-basis submenus first (interpretable separators win ties), then (B)
// all pool pairs, then (C) larger menus up to the cap, exhaustively within
// the budget and sampled beyond it. A pool small enough for its whole
// powerset skips (B)/(C) and enumerates every menu instead.
struct CandidatePlan {
  LevelBase base;
  std::vector<Act> basis;        // own basis acts descended to the base
  std::vector<Menu<Act>> menus;  // base-space menus
  SearchCoverage coverage;
};

CandidatePlan make_plan(const ChoiceStructure& x, Player p, const Partition& opp_part,
                        const RefineBounds& bounds, bool force_product,
                        std::uint64_t salt) {
  CandidatePlan plan{make_base(x, p, opp_part, force_product), {}, {}, {}};
  const FinSpace& base = plan.base.space;
  const auto base_ptr = std::make_shared<const FinSpace>(base);

  // One preimage state per base point (the quotient map is onto).
  std::vector<std::size_t> pre_of(base.size(), kNone);
  for (std::size_t s = 0; s < plan.base.to_base.size(); ++s) {
    if (pre_of[plan.base.to_base[s]] == kNone) pre_of[plan.base.to_base[s]] = s;
  }

  // Declared carriers bound the evaluable universe; intersect across types.
  std::vector<const Menu<Act>*> carrier_ptrs;
  for (std::size_t t = 0; t < x.types(p).size(); ++t) {
    if (x.theta(p, t).carrier()) carrier_ptrs.push_back(&*x.theta(p, t).carrier());
  }
  const bool restricted = !carrier_ptrs.empty();
  const auto in_all_carriers = [&carrier_ptrs](const Act& a) {
    for (const Menu<Act>* c : carrier_ptrs) {
      if (!c->contains(a)) return false;
    }
    return true;
  };

  for (const Act& f : x.basis(p)) {
    if (restricted && !in_all_carriers(f)) continue;
    plan.basis.push_back(descend(f, base_ptr, pre_of));
  }

  std::vector<Act> pool;
  std::set<std::vector<std::size_t>> seen_tables;
  const auto add_act = [&pool, &seen_tables](Act a) {
    if (seen_tables.insert(a.table()).second) pool.push_back(std::move(a));
  };

  const OutcomeSet& zs = x.outcomes();
  if (!restricted) {
    // Outcome classes: outcomes indistinguishable to the deciding player are
    // merged before enumeration; representatives keep the least index.
    std::vector<std::size_t> reps;
    if (zs.has_utilities() && player_index(p) < zs.player_count()) {
      std::map<Rat, std::size_t> classes;
      for (std::size_t z = 0; z < zs.size(); ++z) {
        classes.emplace(zs.utility(z, player_index(p)), z);
      }
      reps.reserve(classes.size());
      for (const auto& [value, z] : classes) reps.push_back(z);
      std::sort(reps.begin(), reps.end());
    } else {
      reps.resize(zs.size());
      std::iota(reps.begin(), reps.end(), 0);
    }
    if (pow_capped(reps.size(), base.size(), bounds.act_cap) <= bounds.act_cap) {
      // Exhaustive mixed-radix enumeration, last base point fastest.
      std::vector<std::size_t> digits(base.size(), 0);
      while (true) {
        std::vector<std::size_t> table(base.size());
        for (std::size_t i = 0; i < base.size(); ++i) table[i] = reps[digits[i]];
        add_act(Act(base_ptr, x.outcomes_ptr(), std::move(table)));
        std::size_t pos = base.size();
        while (pos > 0 && digits[pos - 1] + 1 == reps.size()) {
          digits[pos - 1] = 0;
          --pos;
        }
        if (pos == 0) break;
        ++digits[pos - 1];
      }
      plan.coverage.acts_exhaustive = true;
    } else {
      for (const Act& g : plan.basis) add_act(g);
      Rng rng(mix_seed(bounds.seed, salt));
      const std::size_t target = plan.basis.size() + bounds.sample_count;
      std::size_t attempts = 0;
      while (pool.size() < target && attempts < 32 * (bounds.sample_count + 1)) {
        ++attempts;
        std::vector<std::size_t> table(base.size());
        for (std::size_t i = 0; i < base.size(); ++i) table[i] = reps[rng.below(reps.size())];
        add_act(Act(base_ptr, x.outcomes_ptr(), std::move(table)));
      }
    }
  } else {
    // Preference-style structures: the evaluable universe is the common
    // carrier; keep its acts that are measurable for this quotient.
    for (const Act& g : plan.basis) add_act(g);
    for (const Act& f : *carrier_ptrs.front()) {
      if (!in_all_carriers(f)) continue;
      if (!quotient_measurable(f, plan.base.to_base, base.size())) continue;
      add_act(descend(f, base_ptr, pre_of));
    }
  }

  std::size_t used = 0;
  const Menu<Act> basis_menu = Menu<Act>::of(plan.basis);
  if (basis_menu.size() >= 2 && basis_menu.size() <= 20) {
    for (auto& m : all_submenus(basis_menu, 2, bounds.menu_cap)) {
      plan.menus.push_back(std::move(m));
      ++used;
    }
  }

  const std::size_t s = pool.size();
  if (s >= 2 && s <= 20 && pow_capped(2, s, bounds.menu_budget) <= bounds.menu_budget) {
    for (auto& m : all_submenus(Menu<Act>::of(pool), 2, s)) plan.menus.push_back(std::move(m));
    plan.coverage.menus_exhaustive = true;
    plan.coverage.pairs_exhaustive = true;
    return plan;
  }

  if (s >= 2) {
    const std::size_t budget_left = bounds.menu_budget > used ? bounds.menu_budget - used : 0;
    const std::size_t pair_count = comb_capped(s, 2, bounds.menu_budget);
    std::size_t left = pair_count <= budget_left ? pair_count : budget_left;
    plan.coverage.pairs_exhaustive = pair_count <= budget_left;
    for (std::size_t a = 0; a < s && left > 0; ++a) {
      for (std::size_t b = a + 1; b < s && left > 0; ++b) {
        plan.menus.push_back(Menu<Act>::of({pool[a], pool[b]}));
        ++used;
        --left;
      }
    }
  }

  Rng menu_rng(mix_seed(bounds.seed, salt ^ 0x517cc1b727220a95ULL));
  for (std::size_t k = 3; k <= std::min(bounds.menu_cap, s); ++k) {
    const std::size_t budget_left = bounds.menu_budget > used ? bounds.menu_budget - used : 0;
    if (budget_left == 0) break;
    const std::size_t count = comb_capped(s, k, budget_left);
    if (count <= budget_left) {
      std::vector<std::size_t> idx(k);
      std::iota(idx.begin(), idx.end(), 0);
      while (true) {
        std::vector<Act> items;
        items.reserve(k);
        for (const std::size_t i : idx) items.push_back(pool[i]);
        plan.menus.push_back(Menu<Act>::of(std::move(items)));
        ++used;
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == s - k + pos - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
      }
    } else {
      std::set<std::vector<std::size_t>> sampled;
      std::size_t attempts = 0;
      while (sampled.size() < bounds.sample_count &&
             attempts < 32 * (bounds.sample_count + 1)) {
        ++attempts;
        std::set<std::size_t> pick;
        while (pick.size() < k) pick.insert(menu_rng.below(s));
        std::vector<std::size_t> chosen(pick.begin(), pick.end());
        if (!sampled.insert(chosen).second) continue;
        std::vector<Act> items;
        items.reserve(k);
        for (const std::size_t i : chosen) items.push_back(pool[i]);
        plan.menus.push_back(Menu<Act>::of(std::move(items)));
        ++used;
      }
    }
  }
  return plan;
}

Menu<Act> pull_menu(const Menu<Act>& base_menu, const SpacePtr& state_space,
                    const OutcomesPtr& zs, const std::vector<std::size_t>& to_base) {
  std::vector<Act> acts;
  acts.reserve(base_menu.size());
  for (const Act& g : base_menu) {
    std::vector<std::size_t> table(to_base.size());
    for (std::size_t s = 0; s < to_base.size(); ++s) table[s] = g(to_base[s]);
    acts.emplace_back(state_space, zs, std::move(table));
  }
  return Menu<Act>::of(std::move(acts));
}

struct ScanOutcome {
  Partition next;
  std::vector<Separator> separators;
  bool split = false;
};

// One refinement scan for one player against fixed opponent blocks: every
// own block of two or more types is checked against the candidate menus in
// order; the first splitting menu partitions the block by elicited choice.
ScanOutcome scan_player(const ChoiceStructure& x, Player p, const Partition& own,
                        const CandidatePlan& plan, std::size_t round, bool parallel) {
  ScanOutcome out;
  const SpacePtr st = x.state_space_ptr(p);
  const OutcomesPtr zs = x.outcomes_ptr();
  const auto& to_base = plan.base.to_base;

  for (const auto& block : own.blocks) {
    if (block.size() < 2) {
      out.next.blocks.push_back(block);
      continue;
    }
    std::vector<const ChoiceFunction<Act>*> members;
    members.reserve(block.size());
    for (const std::size_t t : block) members.push_back(&x.theta(p, t));
    const auto splits = [&](std::size_t idx) {
      const Menu<Act> k = pull_menu(plan.menus[idx], st, zs, to_base);
      const Menu<Act> first = members.front()->evaluate(k);
      for (std::size_t m = 1; m < members.size(); ++m) {
        if (members[m]->evaluate(k) != first) return true;
      }
      return false;
    };
    const std::size_t hit = first_index_where(plan.menus.size(), splits, parallel);
    if (hit == kNone) {
      out.next.blocks.push_back(block);
      continue;
    }
    out.split = true;
    const Menu<Act> k = pull_menu(plan.menus[hit], st, zs, to_base);
    std::vector<Menu<Act>> values;
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t m = 0; m < block.size(); ++m) {
      const Menu<Act> v = members[m]->evaluate(k);
      std::size_t g = kNone;
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] == v) {
          g = i;
          break;
        }
      }
      if (g == kNone) {
        values.push_back(v);
        groups.emplace_back();
        g = values.size() - 1;
      }
      groups[g].push_back(block[m]);
    }
    // Orient the witness so the event (K, within) genuinely separates: the
    // out-type's choice must not be contained in the in-type's.
    std::size_t side_in = 0;
    std::size_t side_out = 1;
    if (is_subset(values[side_out], values[side_in])) std::swap(side_in, side_out);
    Separator sep;
    sep.player = p;
    sep.round = round;
    sep.type_in = x.types(p).point(groups[side_in].front());
    sep.type_out = x.types(p).point(groups[side_out].front());
    sep.menu = k;
    sep.within = values[side_in];
    if (!is_subset(x.theta(p, groups[side_in].front()).evaluate(k), sep.within) ||
        is_subset(x.theta(p, groups[side_out].front()).evaluate(k), sep.within)) {
      throw InvariantError("separator re-verification failed");
    }
    out.separators.push_back(std::move(sep));
    for (auto& g : groups) out.next.blocks.push_back(std::move(g));
  }
  out.next.canonicalize();
  return out;
}

// The order_backed certificate only concerns attitudes that still share a
// block: those are the functions whose full equality the verdict must infer
// from bounded evidence.
SearchCoverage finish_coverage(SearchCoverage cov, const ChoiceStructure& x, Player p,
                               const Partition& part) {
  bool backed = true;
  for (const auto& block : part.blocks) {
    if (block.size() < 2) continue;
    for (const std::size_t t : block) backed = backed && x.theta(p, t).order_backed();
  }
  cov.order_backed = backed;
  return cov;
}

bool needs_scan(const Partition& part) {
  for (const auto& block : part.blocks) {
    if (block.size() > 1) return true;
  }
  return false;
}

ScanOutcome pass_through(const Partition& part) {
  ScanOutcome out;
  out.next = part;
  return out;
}

}  // namespace

BehavioralPartition refine_partition(const ChoiceStructure& x, const RefineBounds& bounds) {
  require_discrete_types(x);
  Partition pi = Partition::trivial(x.types(Player::I).size());
  Partition pj = Partition::trivial(x.types(Player::J).size());
  BehavioralPartition out;
  const std::size_t max_rounds = x.types(Player::I).size() + x.types(Player::J).size();
  for (std::size_t round = 1; round <= max_rounds + 1; ++round) {
    // Plans are only built for players that still have a splittable block;
    // partitions already discrete never consult them.
    std::optional<CandidatePlan> plan_i;
    std::optional<CandidatePlan> plan_j;
    if (needs_scan(pi)) plan_i = make_plan(x, Player::I, pj, bounds, false, 2 * round);
    if (needs_scan(pj)) plan_j = make_plan(x, Player::J, pi, bounds, false, 2 * round + 1);
    // Both players scan against the partitions the round started with.
    ScanOutcome ri = plan_i ? scan_player(x, Player::I, pi, *plan_i, round, bounds.parallel)
                            : pass_through(pi);
    ScanOutcome rj = plan_j ? scan_player(x, Player::J, pj, *plan_j, round, bounds.parallel)
                            : pass_through(pj);
    for (auto& s : ri.separators) out.separators.push_back(std::move(s));
    for (auto& s : rj.separators) out.separators.push_back(std::move(s));
    out.rounds = round;
    if (!ri.split && !rj.split) {
      out.coverage_i =
          finish_coverage(plan_i ? plan_i->coverage : SearchCoverage{}, x, Player::I, pi);
      out.coverage_j =
          finish_coverage(plan_j ? plan_j->coverage : SearchCoverage{}, x, Player::J, pj);
      out.blocks_i = block_names(pi, x.types(Player::I));
      out.blocks_j = block_names(pj, x.types(Player::J));
      return out;
    }
    pi = std::move(ri.next);
    pj = std::move(rj.next);
  }
  // A split strictly increases a block count, and block counts are bounded
  // by the type counts, so the loop above always returns.
  throw InvariantError("behavioral refinement failed to stabilize");
}

std::string to_string(NonRedundancyVerdict::Kind kind) {
  switch (kind) {
    case NonRedundancyVerdict::Kind::NonRedundant:
      return "NonRedundant";
    case NonRedundancyVerdict::Kind::Redundant:
      return "Redundant";
    default:
      return "Inconclusive";
  }
}

NonRedundancyVerdict non_redundancy_verdict(const BehavioralPartition& p) {
  NonRedundancyVerdict v;
  const auto discrete = [](const std::vector<std::vector<std::string>>& blocks) {
    for (const auto& block : blocks) {
      if (block.size() > 1) return false;
    }
    return true;
  };
  const auto collect = [](const std::vector<std::vector<std::string>>& blocks) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& block : blocks) {
      for (std::size_t a = 0; a < block.size(); ++a) {
        for (std::size_t b = a + 1; b < block.size(); ++b) {
          pairs.emplace_back(block[a], block[b]);
        }
      }
    }
    return pairs;
  };
  v.witness_pairs_i = collect(p.blocks_i);
  v.witness_pairs_j = collect(p.blocks_j);
  const bool di = discrete(p.blocks_i);
  const bool dj = discrete(p.blocks_j);
  if (di && dj) {
    v.kind = NonRedundancyVerdict::Kind::NonRedundant;
    v.note = "every pair of types is separated by a recorded observable event";
    return v;
  }
  const auto certified = [](const SearchCoverage& c) {
    return c.acts_exhaustive && (c.menus_exhaustive || (c.order_backed && c.pairs_exhaustive));
  };
  const auto gap = [](const SearchCoverage& c) -> std::string {
    if (!c.acts_exhaustive) return "act pool not exhaustive under the act cap";
    if (!c.pairs_exhaustive) return "pair menus not exhausted under the menu budget";
    return "menu universe not exhausted and some merged attitude is not order-backed";
  };
  if ((di || certified(p.coverage_i)) && (dj || certified(p.coverage_j))) {
    v.kind = NonRedundancyVerdict::Kind::Redundant;
    v.note = "bounded search is provably complete for this instance; "
             "merged types are behaviorally identical";
  } else {
    v.kind = NonRedundancyVerdict::Kind::Inconclusive;
    std::string why;
    if (!di && !certified(p.coverage_i)) why += "player i: " + gap(p.coverage_i);
    if (!dj && !certified(p.coverage_j)) {
      if (!why.empty()) why += "; ";
      why += "player j: " + gap(p.coverage_j);
    }
    v.note = "merged types remain and completeness is not certified (" + why + ")";
  }
  return v;
}

std::vector<ChoiceFunction<Act>> level_one_map(const ChoiceStructure& x, Player p) {
  std::vector<ChoiceFunction<Act>> out;
  out.reserve(x.types(p).size());
  for (std::size_t t = 0; t < x.types(p).size(); ++t) {
    out.push_back(gamma_map(x.theta(p, t), x.states(p).pi1));
  }
  return out;
}

HierarchyImage::HierarchyImage(ChoiceStructure structure, std::vector<HierarchyLevel> levels_i,
                               std::vector<HierarchyLevel> levels_j)
    : structure_(std::move(structure)),
      levels_i_(std::move(levels_i)),
      levels_j_(std::move(levels_j)) {
  if (levels_i_.size() != levels_j_.size() || levels_i_.empty()) {
    throw InvariantError("hierarchy image needs matching nonempty level lists");
  }
  for (std::size_t n = 0; n < levels_i_.size(); ++n) {
    if (levels_i_[n].n != n + 1 || levels_j_[n].n != n + 1) {
      throw InvariantError("hierarchy levels must be consecutive from 1");
    }
    if (levels_i_[n].upsilon.size() != structure_.types(Player::I).size() ||
        levels_j_[n].upsilon.size() != structure_.types(Player::J).size()) {
      throw InvariantError("hierarchy level needs one attitude per type");
    }
  }
}

const HierarchyLevel& HierarchyImage::level(Player p, std::size_t n) const {
  const auto& levels = p == Player::I ? levels_i_ : levels_j_;
  if (n == 0 || n > levels.size()) throw InputError("hierarchy level out of range");
  return levels[n - 1];
}

const ChoiceFunction<Act>& HierarchyImage::upsilon(Player p, std::size_t n,
                                                   const std::string& type_id) const {
  return level(p, n).upsilon[structure_.types(p).index_of(type_id)];
}

HierarchyImage HierarchyImage::with_upsilon(Player p, std::size_t n, const std::string& type_id,
                                            ChoiceFunction<Act> replacement) const {
  HierarchyImage copy = *this;
  auto& levels = p == Player::I ? copy.levels_i_ : copy.levels_j_;
  if (n == 0 || n > levels.size()) throw InputError("hierarchy level out of range");
  levels[n - 1].upsilon[structure_.types(p).index_of(type_id)] = std::move(replacement);
  return copy;
}

HierarchyImage hierarchy_map(const ChoiceStructure& x, std::size_t levels,
                             const RefineBounds& bounds) {
  if (levels == 0) throw InputError("hierarchy_map needs at least one level");
  require_discrete_types(x);
  Partition pi = Partition::trivial(x.types(Player::I).size());
  Partition pj = Partition::trivial(x.types(Player::J).size());
  std::vector<HierarchyLevel> li;
  std::vector<HierarchyLevel> lj;
  for (std::size_t n = 1; n <= levels; ++n) {
    const bool force = n >= 2;
    for (const Player p : {Player::I, Player::J}) {
      const Partition& opp = p == Player::I ? pj : pi;
      LevelBase base = make_base(x, p, opp, force);
      std::vector<ChoiceFunction<Act>> ups;
      ups.reserve(x.types(p).size());
      for (std::size_t t = 0; t < x.types(p).size(); ++t) {
        ups.push_back(gamma_map(x.theta(p, t), base.map));
      }
      auto names = block_names(opp, x.types(opponent(p)));
      HierarchyLevel level(n, std::move(base.space), std::move(base.map), std::move(names),
                           std::move(ups));
      (p == Player::I ? li : lj).push_back(std::move(level));
    }
    if (n < levels) {
      // Advance the behavioral partitions by one simultaneous round; the
      // salts match refine_partition's, so the level bases agree with it.
      std::optional<CandidatePlan> plan_i;
      std::optional<CandidatePlan> plan_j;
      if (needs_scan(pi)) plan_i = make_plan(x, Player::I, pj, bounds, false, 2 * n);
      if (needs_scan(pj)) plan_j = make_plan(x, Player::J, pi, bounds, false, 2 * n + 1);
      ScanOutcome ri = plan_i ? scan_player(x, Player::I, pi, *plan_i, n, bounds.parallel)
                              : pass_through(pi);
      ScanOutcome rj = plan_j ? scan_player(x, Player::J, pj, *plan_j, n, bounds.parallel)
                              : pass_through(pj);
      pi = std::move(ri.next);
      pj = std::move(rj.next);
    }
  }
  return HierarchyImage(x, std::move(li), std::move(lj));
}

std::optional<CoherenceFailure> coherence_check(const HierarchyImage& h,
                                                const RefineBounds& bounds) {
  const ChoiceStructure& x = h.structure();
  for (const Player p : {Player::I, Player::J}) {
    const FinSpace& opp_types = x.types(opponent(p));
    const std::size_t a_count = x.actions(opponent(p)).size();
    for (std::size_t n = 1; n + 1 <= h.depth(); ++n) {
      const HierarchyLevel& low = h.level(p, n);
      const HierarchyLevel& up = h.level(p, n + 1);
      // Down map between bases: forget the refinement of the opponent blocks.
      std::map<std::string, std::size_t> low_block_of;
      for (std::size_t b = 0; b < low.opp_blocks.size(); ++b) {
        for (const auto& id : low.opp_blocks[b]) low_block_of[id] = b;
      }
      const std::size_t q_up = up.opp_blocks.size();
      if (up.base.size() != a_count * q_up ||
          (n >= 2 && low.base.size() != a_count * low.opp_blocks.size()) ||
          (n == 1 && low.base.size() != a_count)) {
        throw InvariantError("hierarchy level bases inconsistent with their blocks");
      }
      std::vector<std::size_t> table(up.base.size());
      for (std::size_t a = 0; a < a_count; ++a) {
        for (std::size_t b = 0; b < q_up; ++b) {
          const std::size_t coarse = low_block_of.at(up.opp_blocks[b].front());
          table[a * q_up + b] = n == 1 ? a : a * low.opp_blocks.size() + coarse;
        }
      }
      const MeasurableMap down(up.base, low.base, std::move(table));
      const CandidatePlan plan =
          make_plan(x, p, partition_from_names(low.opp_blocks, opp_types), bounds, n >= 2,
                    0x1000 + 2 * n + player_index(p));
      for (std::size_t t = 0; t < x.types(p).size(); ++t) {
        const ChoiceFunction<Act> projected = gamma_map(up.upsilon[t], down);
        const ChoiceFunction<Act>& expected = low.upsilon[t];
        const auto mismatch = [&](std::size_t idx) {
          return projected.evaluate(plan.menus[idx]) != expected.evaluate(plan.menus[idx]);
        };
        const std::size_t bad = first_index_where(plan.menus.size(), mismatch, bounds.parallel);
        if (bad != kNone) {
          CoherenceFailure f;
          f.player = p;
          f.level = n;
          f.type_id = x.types(p).point(t);
          f.menu = plan.menus[bad];
          f.projected = projected.evaluate(plan.menus[bad]);
          f.expected = expected.evaluate(plan.menus[bad]);
          return f;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace choicelab

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

#include "choicelab/criteria.hpp"

#include <algorithm>
#include <utility>

#include "choicelab/errors.hpp"

namespace choicelab {

std::string to_string(Criterion kind) {
  switch (kind) {
    case Criterion::EU:
      return "eu";
    case Criterion::Maxmin:
      return "maxmin";
    case Criterion::Regret:
      return "regret";
  }
  throw InvariantError("unknown criterion tag");
}

Criterion parse_criterion(const std::string& name) {
  if (name == "eu") return Criterion::EU;
  if (name == "maxmin") return Criterion::Maxmin;
  if (name == "regret") return Criterion::Regret;
  throw InputError("unknown criterion '" + name + "'; expected eu, maxmin, or regret");
}

bool order_representable(Criterion kind) { return kind != Criterion::Regret; }

namespace {

void check_distribution(const std::vector<Rat>& p, std::size_t states) {
  if (p.size() != states)
    throw InvariantError("probability vector has " + std::to_string(p.size()) +
                         " entries for " + std::to_string(states) + " states");
  Rat total(0);
  for (const auto& q : p) {
    if (q < Rat(0)) throw InvariantError("probability vector has a negative entry");
    total += q;
  }
  if (total != Rat(1))
    throw InvariantError("probability vector sums to " + to_string(total) + ", not 1");
}

}  // namespace

CredalSet::CredalSet(std::vector<std::string> support,
                     std::vector<std::vector<Rat>> extreme_points)
    : support_(std::move(support)), extremes_(std::move(extreme_points)) {
  if (support_.empty()) throw InvariantError("credal set needs a nonempty support");
  for (std::size_t a = 0; a < support_.size(); ++a)
    for (std::size_t b = a + 1; b < support_.size(); ++b)
      if (support_[a] == support_[b])
        throw InvariantError("credal set support repeats state '" + support_[a] + "'");
  if (extremes_.empty()) throw InvariantError("credal set needs at least one extreme point");
  for (const auto& p : extremes_) check_distribution(p, support_.size());
  for (std::size_t a = 0; a < extremes_.size(); ++a)
    for (std::size_t b = a + 1; b < extremes_.size(); ++b)
      if (extremes_[a] == extremes_[b])
        throw InvariantError("credal set lists a duplicate extreme point");
}

CredalSet CredalSet::point(std::vector<std::string> support, std::vector<Rat> p) {
  return CredalSet(std::move(support), {std::move(p)});
}

CredalSet CredalSet::full_simplex(std::vector<std::string> support) {
  std::vector<std::vector<Rat>> vertices;
  for (std::size_t s = 0; s < support.size(); ++s) {
    std::vector<Rat> unit(support.size(), Rat(0));
    unit[s] = Rat(1);
    vertices.push_back(std::move(unit));
  }
  return CredalSet(std::move(support), std::move(vertices));
}

CredalSet CredalSet::interval2(std::vector<std::string> support, const Rat& lo,
                               const Rat& hi) {
  if (support.size() != 2)
    throw InputError("interval credal sets need exactly two states");
  if (lo < Rat(0) || hi > Rat(1) || lo > hi)
    throw InputError("interval bounds must satisfy 0 <= lo <= hi <= 1");
  std::vector<std::vector<Rat>> vertices;
  vertices.push_back({Rat(1) - lo, lo});
  if (hi != lo) vertices.push_back({Rat(1) - hi, hi});
  return CredalSet(std::move(support), std::move(vertices));
}

std::string describe(const CredalSet& set) {
  std::string out = "{";
  for (std::size_t e = 0; e < set.extreme_points().size(); ++e) {
    if (e > 0) out += ",";
    out += "(";
    const auto& p = set.extreme_points()[e];
    for (std::size_t s = 0; s < p.size(); ++s) {
      if (s > 0) out += ",";
      out += to_string(p[s]);
    }
    out += ")";
  }
  out += "}";
  return out;
}

UtilityView::UtilityView(std::size_t player,
                         std::vector<std::pair<std::string, Rat>> table)
    : player_(player) {
  for (auto& [id, value] : table) {
    if (!table_.emplace(std::move(id), std::move(value)).second)
      throw InvariantError("utility table repeats an outcome id");
  }
  if (table_.empty()) throw InvariantError("utility table is empty");
}

UtilityView UtilityView::of_player(const OutcomeSet& outcomes, std::size_t player) {
  if (!outcomes.has_utilities())
    throw InputError("outcome set carries no utility vectors");
  if (player >= outcomes.player_count())
    throw InputError("player index " + std::to_string(player) + " out of range");
  std::vector<std::pair<std::string, Rat>> table;
  for (std::size_t z = 0; z < outcomes.size(); ++z)
    table.emplace_back(outcomes.id(z), outcomes.utility(z, player));
  return UtilityView(player, std::move(table));
}

const Rat& UtilityView::at(const std::string& outcome_id) const {
  const auto it = table_.find(outcome_id);
  if (it == table_.end())
    throw InputError("no utility entry for outcome '" + outcome_id + "'");
  return it->second;
}

bool UtilityView::covers(const OutcomeSet& outcomes) const {
  for (std::size_t z = 0; z < outcomes.size(); ++z)
    if (table_.find(outcomes.id(z)) == table_.end()) return false;
  return true;
}

Rat expected_utility(const Act& f, const std::vector<Rat>& p, const UtilityView& u) {
  if (p.size() != f.space().size())
    throw InputError("distribution length does not match the act's domain");
  Rat total(0);
  for (std::size_t s = 0; s < p.size(); ++s)
    total += p[s] * u.at(f.outcomes().id(f(s)));
  return total;
}

namespace {

// Shared evaluator body for the three criteria.  Beliefs are read in the
// domain's canonical point order, so every act in the menu must be defined
// on a space whose point list equals the belief support exactly.
struct CriterionEngine {
  Criterion kind;
  CredalSet belief;
  UtilityView util;

  Menu<Act> operator()(const Menu<Act>& menu) const {
    const std::size_t states = belief.support().size();
    std::vector<std::vector<Rat>> value;  // value[act][state]
    value.reserve(menu.size());
    for (const auto& f : menu) {
      if (f.space().points() != belief.support())
        throw InputError("menu act is defined on states that differ from the belief support");
      if (!util.covers(f.outcomes()))
        throw InputError("utility table does not cover the menu's outcomes");
      std::vector<Rat> row;
      row.reserve(states);
      for (std::size_t s = 0; s < states; ++s)
        row.push_back(util.at(f.outcomes().id(f(s))));
      value.push_back(std::move(row));
    }

    std::vector<Rat> score;  // maximized across the menu
    score.reserve(menu.size());
    switch (kind) {
      case Criterion::EU: {
        const auto& p = belief.extreme_points().front();
        for (const auto& row : value) {
          Rat total(0);
          for (std::size_t s = 0; s < states; ++s) total += p[s] * row[s];
          score.push_back(total);
        }
        break;
      }
      case Criterion::Maxmin: {
        for (const auto& row : value) {
          bool first = true;
          Rat worst(0);
          for (const auto& p : belief.extreme_points()) {
            Rat total(0);
            for (std::size_t s = 0; s < states; ++s) total += p[s] * row[s];
            if (first || total < worst) worst = total;
            first = false;
          }
          score.push_back(worst);
        }
        break;
      }
      case Criterion::Regret: {
        // Ex-post, menu-relative: at each state the shortfall is measured
        // against the best value any act in this menu attains there.
        std::vector<Rat> best(states, Rat(0));
        for (std::size_t s = 0; s < states; ++s) {
          best[s] = value.front()[s];
          for (const auto& row : value) best[s] = std::max(best[s], row[s]);
        }
        for (const auto& row : value) {
          bool first = true;
          Rat worst(0);
          for (const auto& p : belief.extreme_points()) {
            Rat total(0);
            for (std::size_t s = 0; s < states; ++s)
              total += p[s] * (best[s] - row[s]);
            if (first || total > worst) worst = total;
            first = false;
          }
          score.push_back(-worst);  // minimize regret == maximize its negative
        }
        break;
      }
    }

    Rat top = score.front();
    for (const auto& v : score) top = std::max(top, v);
    std::vector<Act> chosen;
    for (std::size_t a = 0; a < menu.size(); ++a)
      if (score[a] == top) chosen.push_back(menu[a]);
    return Menu<Act>::of(std::move(chosen));
  }
};

}  // namespace

ChoiceFunction<Act> eu_choice(CredalSet belief, UtilityView u) {
  if (!belief.is_point())
    throw InputError("expected utility needs a single prior; this credal set has " +
                     std::to_string(belief.extreme_points().size()) + " extreme points");
  return criterion_choice(Criterion::EU, std::move(belief), std::move(u));
}

ChoiceFunction<Act> maxmin_choice(CredalSet belief, UtilityView u) {
  return criterion_choice(Criterion::Maxmin, std::move(belief), std::move(u));
}

ChoiceFunction<Act> regret_choice(CredalSet belief, UtilityView u) {
  return criterion_choice(Criterion::Regret, std::move(belief), std::move(u));
}

ChoiceFunction<Act> criterion_choice(Criterion kind, CredalSet belief, UtilityView u) {
  if (kind == Criterion::EU && !belief.is_point())
    throw InputError("expected utility needs a single prior");
  const bool backed = order_representable(kind);
  return ChoiceFunction<Act>::intensional(
      std::nullopt, CriterionEngine{kind, std::move(belief), std::move(u)},
      /*singleton_law=*/true, backed);
}

}  // namespace choicelab

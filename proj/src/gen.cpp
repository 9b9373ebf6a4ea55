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

#include "choicelab/gen.hpp"

#include <map>
#include <string>
#include <vector>

namespace choicelab {

FinSpace random_space(Rng& rng, std::size_t max_points, std::string_view prefix) {
  const std::size_t n = 1 + rng.below(max_points);
  std::vector<std::string> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    points.push_back(std::string(prefix) + std::to_string(i));
  }
  // Random block labels, compacted so the used blocks are consecutive.
  std::vector<std::size_t> label(n);
  for (auto& l : label) l = rng.below(n);
  std::map<std::size_t, std::size_t> compact;
  for (const auto l : label) compact.emplace(l, compact.size());
  std::vector<std::vector<std::string>> blocks(compact.size());
  for (std::size_t i = 0; i < n; ++i) blocks[compact[label[i]]].push_back(points[i]);
  return FinSpace::with_atoms(points, blocks);
}

MeasurableMap random_measurable_map(Rng& rng, const FinSpace& dom, const FinSpace& cod) {
  std::vector<std::size_t> table(dom.size());
  for (const auto& members : dom.atoms()) {
    const auto& target = cod.atoms()[rng.below(cod.atom_count())];
    for (const std::size_t m : members) table[m] = target[rng.below(target.size())];
  }
  return MeasurableMap(dom, cod, std::move(table));
}

std::vector<ChoiceFunction<std::string>> all_choice_functions(const Menu<std::string>& carrier,
                                                              std::size_t cap) {
  const auto menus = all_submenus(carrier);
  std::vector<std::vector<Menu<std::string>>> options;
  std::size_t total = 1;
  for (const auto& menu : menus) {
    options.push_back(all_submenus(menu, 0));
    if (total > cap / options.back().size()) {
      throw CapExceededError("choice-function enumeration exceeds cap of " +
                             std::to_string(cap));
    }
    total *= options.back().size();
  }
  std::vector<ChoiceFunction<std::string>> out;
  out.reserve(total);
  std::vector<std::size_t> pick(menus.size(), 0);
  for (std::size_t k = 0; k < total; ++k) {
    typename ChoiceFunction<std::string>::Table table;
    table.reserve(menus.size());
    for (std::size_t i = 0; i < menus.size(); ++i) {
      table.emplace_back(menus[i], options[i][pick[i]]);
    }
    out.push_back(ChoiceFunction<std::string>::extensional(carrier, std::move(table),
                                                           /*singleton_law=*/false));
    for (std::size_t i = pick.size(); i-- > 0;) {
      if (++pick[i] < options[i].size()) break;
      pick[i] = 0;
    }
  }
  return out;
}

ChoiceFunction<std::string> random_choice_function(Rng& rng, const Menu<std::string>& carrier,
                                                   bool singleton_law, bool allow_empty) {
  typename ChoiceFunction<std::string>::Table table;
  for (const auto& menu : all_submenus(carrier)) {
    std::vector<std::string> chosen;
    for (const auto& x : menu) {
      if (rng.flip()) chosen.push_back(x);
    }
    if (chosen.empty() && !allow_empty) chosen.push_back(menu[rng.below(menu.size())]);
    if (singleton_law && menu.size() == 1) chosen = {menu[0]};
    table.emplace_back(menu, Menu<std::string>::of(std::move(chosen)));
  }
  return ChoiceFunction<std::string>::extensional(carrier, std::move(table), singleton_law);
}

}  // namespace choicelab

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

#include "choicelab/choice.hpp"

#include <set>

namespace choicelab {

std::function<std::string(const std::string&)> point_fn(const MeasurableMap& f) {
  return [f](const std::string& id) { return f.cod().point(f(f.dom().index_of(id))); };
}

Menu<std::string> point_menu(const FinSpace& space) {
  return Menu<std::string>::of(space.points());
}

ChoiceFunction<std::string> relabel(const ChoiceFunction<std::string>& c,
                                    const MeasurableMap& f) {
  return relabel(c, point_fn(f), point_menu(f.dom()));
}

ChoiceFunction<Act> gamma_map(const ChoiceFunction<Act>& c, const MeasurableMap& phi) {
  const auto dom = std::make_shared<const FinSpace>(phi.dom());
  auto pull = [phi, dom](const Act& g) {
    if (!(phi.cod() == g.space())) {
      throw InvariantError("gamma_map: menu act does not live on the map's codomain");
    }
    std::vector<std::size_t> table(dom->size());
    for (std::size_t x = 0; x < table.size(); ++x) table[x] = g(phi(x));
    return Act(dom, g.outcomes_ptr(), std::move(table));
  };
  return relabel(c, pull);
}

ChoiceFunction<std::string> lift_along_injection(const ChoiceFunction<std::string>& c,
                                                 const MeasurableMap& f) {
  return lift_along_injection(c, point_fn(f), point_menu(f.cod()));
}

ChoiceFunction<std::string> colimit_choice(const FinChain& chain,
                                           const std::vector<ChoiceFunction<std::string>>& family,
                                           std::size_t menu_guard) {
  if (family.size() != chain.levels.size()) {
    throw InvariantError("colimit_choice: one choice function per level required");
  }
  const ChainColimit colimit = chain_colimit(chain);
  for (const FinSpace& level : chain.levels) {
    if (level.size() > menu_guard) {
      throw CapExceededError("colimit_choice: level beyond the menu guard of " +
                             std::to_string(menu_guard) + " points");
    }
  }

  // Compatibility: each level's function is the relabeling of the next one.
  for (std::size_t n = 0; n + 1 < family.size(); ++n) {
    const auto pulled = relabel(family[n + 1], chain.links[n]);
    const auto menus = all_submenus(point_menu(chain.levels[n]));
    if (const auto bad = first_disagreement(family[n], pulled, menus)) {
      throw InvariantError("colimit_choice: family incompatible at level " + std::to_string(n));
    }
  }

  // mu(K) = iota_m[family[m](iota_m^{-1}[K])] for the least level m whose
  // injection image covers K (monotone in m; the top injection is onto the
  // whole carrier, so m always exists).
  struct LevelView {
    std::vector<std::string> points;          // point ids of X_m
    std::vector<std::string> forward;         // iota_m per point, as carrier ids
  };
  auto views = std::make_shared<std::vector<LevelView>>();
  for (std::size_t m = 0; m < chain.levels.size(); ++m) {
    LevelView view;
    view.points = chain.levels[m].points();
    for (std::size_t x = 0; x < chain.levels[m].size(); ++x) {
      view.forward.push_back(colimit.carrier.point(colimit.inject[m](x)));
    }
    views->push_back(std::move(view));
  }

  const std::vector<ChoiceFunction<std::string>> levels = family;
  auto mu = ChoiceFunction<std::string>::intensional(
      point_menu(colimit.carrier),
      [views, levels](const Menu<std::string>& k) {
        for (std::size_t m = 0; m < views->size(); ++m) {
          const LevelView& view = (*views)[m];
          std::set<std::string> covered(view.forward.begin(), view.forward.end());
          bool ok = true;
          for (const std::string& y : k) {
            if (!covered.count(y)) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          std::vector<std::string> pre;
          for (std::size_t x = 0; x < view.points.size(); ++x) {
            if (k.contains(view.forward[x])) pre.push_back(view.points[x]);
          }
          const auto chosen = levels[m].evaluate(Menu<std::string>::of(std::move(pre)));
          std::vector<std::string> pushed;
          for (std::size_t x = 0; x < view.points.size(); ++x) {
            if (chosen.contains(view.points[x])) pushed.push_back(view.forward[x]);
          }
          return Menu<std::string>::of(std::move(pushed));
        }
        throw InvariantError("colimit_choice: no level covers the menu (unreachable)");
      },
      family.back().singleton_law());

  // Re-verify the defining property relabel(mu, iota_n) = family[n].
  for (std::size_t n = 0; n < family.size(); ++n) {
    const auto back = relabel(mu, colimit.inject[n]);
    const auto menus = all_submenus(point_menu(chain.levels[n]));
    if (const auto bad = first_disagreement(family[n], back, menus)) {
      throw InvariantError("colimit_choice: glued function disagrees at level " +
                           std::to_string(n));
    }
  }
  return mu;
}

}  // namespace choicelab

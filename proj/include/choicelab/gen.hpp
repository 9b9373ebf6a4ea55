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

#include <string_view>
#include <vector>

#include "choicelab/choice.hpp"
#include "choicelab/pref.hpp"
#include "choicelab/rng.hpp"
#include "choicelab/space.hpp"

namespace choicelab {

// Deterministic random instances for property tests: a space with 1..max_points
// points under a random atom partition, point ids "<prefix>0", "<prefix>1", ...
FinSpace random_space(Rng& rng, std::size_t max_points, std::string_view prefix = "p");

// A uniformly structured random measurable map: every domain atom is sent into
// a random codomain atom, each point to a random member of that atom. Every
// measurable map between the two spaces arises this way.
MeasurableMap random_measurable_map(Rng& rng, const FinSpace& dom, const FinSpace& cod);

// Every choice function over the carrier, as extensional tables over all
// nonempty submenus, empty choices and singleton-law violations included
// (this is the raw function space the event base lives on). Throws
// CapExceededError when the count would exceed `cap`.
std::vector<ChoiceFunction<std::string>> all_choice_functions(const Menu<std::string>& carrier,
                                                              std::size_t cap = 1u << 20);

// A random extensional choice function over all nonempty submenus of the
// carrier. With allow_empty, non-singleton menus may choose nothing.
ChoiceFunction<std::string> random_choice_function(Rng& rng, const Menu<std::string>& carrier,
                                                   bool singleton_law = true,
                                                   bool allow_empty = false);

// A random labeled poset: edges drawn along a random linear extension (so
// acyclicity is structural), then transitively closed. Every poset arises
// this way. edge_pct is the per-pair edge probability in percent.
template <class T>
Poset<T> random_poset(Rng& rng, const Menu<T>& carrier, std::size_t edge_pct = 30) {
  const std::size_t n = carrier.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  std::vector<std::uint8_t> le(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) le[i * n + i] = 1;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (rng.below(100) < edge_pct) le[perm[a] * n + perm[b]] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!le[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (le[k * n + j]) le[i * n + j] = 1;
      }
    }
  }
  return Poset<T>::from_matrix(carrier, std::move(le));
}

}  // namespace choicelab

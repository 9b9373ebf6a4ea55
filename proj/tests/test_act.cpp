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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "choicelab/act.hpp"
#include "choicelab/errors.hpp"
#include "choicelab/gen.hpp"
#include "choicelab/rng.hpp"

using namespace choicelab;

namespace {

OutcomesPtr outcomes(std::vector<std::string> ids) {
  return std::make_shared<const OutcomeSet>(OutcomeSet::plain(std::move(ids)));
}

SpacePtr share(FinSpace s) { return std::make_shared<const FinSpace>(std::move(s)); }

}  // namespace

TEST_CASE("outcome sets validate their utilities") {
  CHECK_THROWS_AS(OutcomeSet::plain({}), InvariantError);
  CHECK_THROWS_AS(OutcomeSet::plain({"z", "z"}), InvariantError);
  const auto z = OutcomeSet::with_utilities({"a", "b"}, {{Rat(1), Rat(2)}, {Rat(0), Rat(3)}});
  CHECK(z.player_count() == 2);
  CHECK(z.utility(0, 1) == Rat(2));
  CHECK(z.utility(1, 0) == Rat(0));
  CHECK_THROWS_AS(OutcomeSet::with_utilities({"a", "b"}, {{Rat(1)}, {Rat(0), Rat(3)}}),
                  InvariantError);
  CHECK_THROWS_AS(OutcomeSet::with_utilities({"a"}, {{}}), InvariantError);
  CHECK_THROWS_AS(OutcomeSet::plain({"a"}).utility(0, 0), InvariantError);
}

TEST_CASE("acts must be constant on atoms") {
  const auto s = share(FinSpace::with_atoms({"x", "y", "z"}, {{"x", "y"}, {"z"}}));
  const auto z = outcomes({"0", "1"});
  CHECK_NOTHROW(Act(s, z, {0, 0, 1}));
  CHECK_THROWS_AS(Act(s, z, {0, 1, 1}), InvariantError);  // splits the {x,y} atom
  CHECK_THROWS_AS(Act(s, z, {0, 0}), InvariantError);     // short table
  CHECK_THROWS_AS(Act(s, z, {0, 0, 2}), InvariantError);  // unknown outcome
}

TEST_CASE("enumerate_acts counts match the examples") {
  const auto z8 = outcomes({"z0", "z1", "z2", "z3", "z4", "z5", "z6", "z7"});
  const auto one_atom = share(FinSpace::trivial({"a", "b"}));
  CHECK(enumerate_acts(one_atom, z8).size() == 8);  // constant acts only

  const auto z2 = outcomes({"0", "1"});
  const auto two = share(FinSpace::discrete({"a", "b"}));
  CHECK(enumerate_acts(two, z2).size() == 4);

  const auto z3 = outcomes({"0", "1", "2"});
  const auto coarse = share(FinSpace::with_atoms({"x", "y", "z"}, {{"x", "y"}, {"z"}}));
  const auto acts = enumerate_acts(coarse, z3);
  CHECK(acts.size() == 9);
  const std::set<Act> dedup(acts.begin(), acts.end());
  CHECK(dedup.size() == 9);
  for (const auto& f : acts) CHECK(f(0) == f(1));  // constant on the {x,y} atom
}

TEST_CASE("enumerate_acts enforces its cap") {
  const auto z = outcomes({"0", "1"});
  const auto big = share(FinSpace::discrete(
      {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m"}));  // 2^13 > 4096
  CHECK_THROWS_AS(enumerate_acts(big, z), CapExceededError);
  CHECK(enumerate_acts(big, z, 8192).size() == 8192);
}

TEST_CASE("pullback along the identity returns the same act") {
  const auto s = share(FinSpace::with_atoms({"x", "y", "z"}, {{"x", "y"}, {"z"}}));
  const auto z = outcomes({"0", "1"});
  const Act f(s, z, {1, 1, 0});
  CHECK(pullback(f, MeasurableMap::identity(*s)) == f);
}

TEST_CASE("acts constant in a coordinate stay constant under type relabelings") {
  // f over A x T that ignores T keeps that shape under id x (anything).
  const auto aj = FinSpace::discrete({"l", "r"});
  const auto tj = FinSpace::discrete({"tMm", "tEU"});
  const auto prod = product(aj, tj);
  const auto z = outcomes({"(5;1)", "(0;0)"});
  std::vector<std::size_t> table(prod.space.size());
  for (std::size_t i = 0; i < aj.size(); ++i) {
    for (std::size_t j = 0; j < tj.size(); ++j) table[prod.pair_index(i, j)] = i;  // l->z0, r->z1
  }
  const Act f(share(prod.space), z, table);

  // id x swap, and id x collapse-to-tMm.
  for (const std::vector<std::size_t>& ttab : {std::vector<std::size_t>{1, 0}, {0, 0}}) {
    const MeasurableMap tmap(tj, tj, ttab);
    std::vector<std::size_t> ptab(prod.space.size());
    for (std::size_t i = 0; i < aj.size(); ++i) {
      for (std::size_t j = 0; j < tj.size(); ++j) {
        ptab[prod.pair_index(i, j)] = prod.pair_index(i, tmap(j));
      }
    }
    const MeasurableMap phi(prod.space, prod.space, ptab);
    CHECK(pullback(f, phi) == f);
  }
}

TEST_CASE("constant acts pull back to the same constant") {
  Rng rng(7);
  for (int it = 0; it < 25; ++it) {
    const auto y = random_space(rng, 4, "y");
    const auto x = random_space(rng, 4, "x");
    const auto phi = random_measurable_map(rng, x, y);
    const auto z = outcomes({"0", "1", "2"});
    const Act c = Act::constant(share(y), z, rng.below(3));
    const Act back = pullback(c, phi);
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(back(i) == c(0));
  }
}

TEST_CASE("pullback satisfies the functor laws on random instances") {
  Rng rng(11);
  const auto z = outcomes({"0", "1"});
  for (int it = 0; it < 60; ++it) {
    const auto w = random_space(rng, 4, "w");
    const auto y = random_space(rng, 4, "y");
    const auto x = random_space(rng, 4, "x");
    const auto psi = random_measurable_map(rng, y, w);  // Y -> W
    const auto phi = random_measurable_map(rng, x, y);  // X -> Y
    for (const auto& f : enumerate_acts(share(w), z)) {
      CHECK(pullback(f, MeasurableMap::identity(w)) == f);
      CHECK(pullback(pullback(f, psi), phi) == pullback(f, compose(psi, phi)));
    }
  }
}

TEST_CASE("pullback along a surjection is injective on enumerated acts") {
  Rng rng(13);
  const auto z = outcomes({"0", "1"});
  int tried = 0;
  for (int it = 0; it < 80 && tried < 25; ++it) {
    const auto y = random_space(rng, 3, "y");
    const auto x = random_space(rng, 4, "x");
    const auto phi = random_measurable_map(rng, x, y);
    std::vector<bool> hit(y.size(), false);
    for (std::size_t i = 0; i < x.size(); ++i) hit[phi(i)] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) continue;  // not onto
    ++tried;
    std::set<Act> images;
    const auto acts = enumerate_acts(share(y), z);
    for (const auto& f : acts) images.insert(pullback(f, phi));
    CHECK(images.size() == acts.size());
  }
  CHECK(tried == 25);
}

TEST_CASE("pullback along an injection into a discrete space is surjective") {
  // Measurability forces the domain of such an injection to be discrete.
  const auto x = FinSpace::discrete({"a", "b"});
  const auto y = FinSpace::discrete({"0", "1", "2"});
  const auto z = outcomes({"p", "q", "r"});
  const MeasurableMap phi(x, y, {2, 0});
  std::set<Act> images;
  for (const auto& f : enumerate_acts(share(y), z)) images.insert(pullback(f, phi));
  const auto want = enumerate_acts(share(x), z);
  CHECK(images.size() == want.size());
  for (const auto& g : want) CHECK(images.count(g) == 1);
}

TEST_CASE("factor_through recovers an exact factorization") {
  // phi surjective and f = g o phi: witnesses are g's preimages.
  const auto y = FinSpace::with_atoms({"p", "q", "r"}, {{"p", "q"}, {"r"}});
  const auto x = FinSpace::discrete({"a", "b", "c", "d"});
  const MeasurableMap phi(x, y, {0, 1, 2, 2});
  const auto z = outcomes({"0", "1"});
  const Act g(share(y), z, {1, 1, 0});
  const Act f = pullback(g, phi);

  std::vector<std::vector<bool>> wit(z->size(), std::vector<bool>(y.size(), false));
  for (std::size_t p = 0; p < y.size(); ++p) wit[g(p)][p] = true;
  const Act back = factor_through(f, phi, wit);
  CHECK(back == g);
}

TEST_CASE("factor_through along a projection recovers the induced act") {
  const auto y = FinSpace::discrete({"y0", "y1"});
  const auto w = FinSpace::discrete({"w0", "w1", "w2"});
  const auto prod = product(y, w);
  const auto z = outcomes({"0", "1"});
  const Act g(share(y), z, {1, 0});
  const Act f = pullback(g, prod.pi1);  // depends only on the first coordinate

  std::vector<std::vector<bool>> wit(z->size(), std::vector<bool>(y.size(), false));
  wit[1][0] = true;  // E_1 = {y0}
  wit[0][1] = true;  // E_0 = {y1}
  const Act induced = factor_through(f, prod.pi1, wit);
  CHECK(induced == g);
  CHECK(pullback(induced, prod.pi1) == f);
}

TEST_CASE("factor_through leftover points get the first outcome") {
  // phi misses q entirely; q sits outside every H_n.
  const auto y = FinSpace::discrete({"p", "q"});
  const auto x = FinSpace::discrete({"a"});
  const MeasurableMap phi(x, y, {0});
  const auto z = outcomes({"z0", "z1"});
  const Act f(share(x), z, {1});
  std::vector<std::vector<bool>> wit = {{false, false}, {true, false}};
  const Act g = factor_through(f, phi, wit);
  CHECK(g(0) == 1);
  CHECK(g(1) == 0);  // default: canonically first outcome
}

TEST_CASE("factor_through rejects inconsistent witnesses") {
  const auto y = FinSpace::discrete({"p", "q"});
  const auto x = FinSpace::discrete({"a", "b"});
  const MeasurableMap phi(x, y, {0, 1});
  const auto z = outcomes({"0", "1"});
  const Act f(share(x), z, {0, 1});
  // Claims the preimage of outcome 1 is phi^-1[{p}] = {a}, but it is {b}.
  std::vector<std::vector<bool>> bad = {{false, true}, {true, false}};
  CHECK_THROWS_AS(factor_through(f, phi, bad), InvariantError);
  // Witness is not even an event of a coarse codomain.
  const auto coarse = FinSpace::trivial({"p", "q"});
  const MeasurableMap psi(x, coarse, {0, 0});
  const Act c = Act::constant(share(x), z, 0);
  std::vector<std::vector<bool>> split = {{true, false}, {false, true}};
  CHECK_THROWS_AS(factor_through(c, psi, split), InvariantError);
}

TEST_CASE("descend_level finds the least usable level") {
  FinCochain cochain;
  cochain.levels = {FinSpace::trivial({"*"}), FinSpace::discrete({"p", "q"}),
                    FinSpace::discrete({"a", "b", "c", "d"})};
  cochain.links = {MeasurableMap(cochain.levels[1], cochain.levels[0], {0, 0}),
                   MeasurableMap(cochain.levels[2], cochain.levels[1], {0, 0, 1, 1})};
  const auto lim = cochain_limit(cochain);
  const auto carrier = share(lim.carrier);
  const auto z = outcomes({"0", "1"});

  SUBCASE("constant acts live at level 0") {
    const auto d = descend_level(Act::constant(carrier, z, 1), cochain);
    CHECK(d.level == 0);
    CHECK(d.act(0) == 1);
  }
  SUBCASE("acts pulled back from level 1 descend to level 1") {
    const Act f(carrier, z, {0, 0, 1, 1});  // = zeta_1 pullback of (p->0, q->1)
    const auto d = descend_level(f, cochain);
    CHECK(d.level == 1);
    for (std::size_t x = 0; x < lim.carrier.size(); ++x) {
      CHECK(d.act(lim.project[1](x)) == f(x));
    }
  }
  SUBCASE("acts separating only top-level points need the top level") {
    const Act f(carrier, z, {0, 1, 1, 1});  // separates a from b inside p's fiber
    const auto d = descend_level(f, cochain);
    CHECK(d.level == 2);
    CHECK(d.act == f);
  }
}

TEST_CASE("descend_level factorization is pointwise exact on random cochains") {
  Rng rng(17);
  for (int it = 0; it < 40; ++it) {
    FinCochain cochain;
    cochain.levels.push_back(random_space(rng, 3, "a"));
    cochain.levels.push_back(random_space(rng, 4, "b"));
    cochain.levels.push_back(random_space(rng, 4, "c"));
    cochain.links.push_back(
        random_measurable_map(rng, cochain.levels[1], cochain.levels[0]));
    cochain.links.push_back(
        random_measurable_map(rng, cochain.levels[2], cochain.levels[1]));
    const auto lim = cochain_limit(cochain);
    const auto carrier = share(lim.carrier);
    const auto z = outcomes({"0", "1"});
    for (const auto& f : enumerate_acts(carrier, z)) {
      const auto d = descend_level(f, cochain);
      for (std::size_t x = 0; x < lim.carrier.size(); ++x) {
        CHECK(d.act(lim.project[d.level](x)) == f(x));
      }
      // Minimality: no lower level admits a factorization through its zeta.
      for (std::size_t m = 0; m < d.level; ++m) {
        bool fiber_constant = true;
        for (std::size_t x1 = 0; x1 < lim.carrier.size() && fiber_constant; ++x1) {
          for (std::size_t x2 = x1 + 1; x2 < lim.carrier.size(); ++x2) {
            if (lim.project[m](x1) == lim.project[m](x2) && f(x1) != f(x2)) {
              fiber_constant = false;
              break;
            }
          }
        }
        bool images_are_events = true;
        if (fiber_constant) {
          for (std::size_t zi = 0; zi < z->size() && images_are_events; ++zi) {
            std::vector<bool> img(cochain.levels[m].size(), false);
            for (std::size_t x = 0; x < lim.carrier.size(); ++x) {
              if (f(x) == zi) img[lim.project[m](x)] = true;
            }
            if (!cochain.levels[m].is_event(img)) images_are_events = false;
          }
        }
        CHECK_FALSE((fiber_constant && images_are_events));
      }
    }
  }
}

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

#include <string>
#include <vector>

#include "choicelab/criteria.hpp"
#include "choicelab/errors.hpp"
#include "choicelab/pref.hpp"
#include "choicelab/rng.hpp"

using namespace choicelab;

namespace {

Rat rat(long long n, long long d = 1) { return Rat(n, d); }

// The 4x2 worked game.  Row player 0 picks u/m/c/d, column player 1 picks
// l/r; each cell is a payoff pair that doubles as an outcome id "a;b" with
// utility a for player 0 and b for player 1.
OutcomesPtr worked_outcomes() {
  return std::make_shared<const OutcomeSet>(OutcomeSet::with_utilities(
      {"5;1", "0;0", "3;2", "0;1", "1;1", "3;0", "1;2", "2;3"},
      {{rat(5), rat(1)},
       {rat(0), rat(0)},
       {rat(3), rat(2)},
       {rat(0), rat(1)},
       {rat(1), rat(1)},
       {rat(3), rat(0)},
       {rat(1), rat(2)},
       {rat(2), rat(3)}}));
}

struct RowFixture {
  SpacePtr states = std::make_shared<const FinSpace>(FinSpace::discrete({"l", "r"}));
  OutcomesPtr outcomes = worked_outcomes();
  Act fu{states, outcomes, {0, 1}};  // (5;1) on l, (0;0) on r
  Act fm{states, outcomes, {2, 3}};
  Act fc{states, outcomes, {4, 5}};
  Act fd{states, outcomes, {6, 7}};
  UtilityView util = UtilityView::of_player(*outcomes, 0);

  Menu<Act> menu(const std::string& tags) const {
    std::vector<Act> acts;
    for (const char t : tags) {
      if (t == 'u') acts.push_back(fu);
      if (t == 'm') acts.push_back(fm);
      if (t == 'c') acts.push_back(fc);
      if (t == 'd') acts.push_back(fd);
    }
    return Menu<Act>::of(std::move(acts));
  }

  std::string tags(const Menu<Act>& chosen) const {
    std::string out;
    for (const auto& f : chosen) {
      if (f == fu) out += 'u';
      if (f == fm) out += 'm';
      if (f == fc) out += 'c';
      if (f == fd) out += 'd';
    }
    return out;
  }
};

struct ColFixture {
  SpacePtr states =
      std::make_shared<const FinSpace>(FinSpace::discrete({"u", "m", "c", "d"}));
  OutcomesPtr outcomes = worked_outcomes();
  Act fl{states, outcomes, {0, 2, 4, 6}};  // column l read down the rows
  Act fr{states, outcomes, {1, 3, 5, 7}};
  UtilityView util = UtilityView::of_player(*outcomes, 1);
};

}  // namespace

TEST_CASE("credal set construction validates the invariants") {
  CHECK_THROWS_AS(CredalSet({}, {{}}), InvariantError);
  CHECK_THROWS_AS(CredalSet({"l", "l"}, {{rat(1, 2), rat(1, 2)}}), InvariantError);
  CHECK_THROWS_AS(CredalSet({"l", "r"}, {}), InvariantError);
  CHECK_THROWS_AS(CredalSet({"l", "r"}, {{rat(1)}}), InvariantError);
  CHECK_THROWS_AS(CredalSet({"l", "r"}, {{rat(3, 4), rat(1, 2)}}), InvariantError);
  CHECK_THROWS_AS(CredalSet({"l", "r"}, {{rat(3, 2), rat(-1, 2)}}), InvariantError);
  CHECK_THROWS_AS(
      CredalSet({"l", "r"}, {{rat(1, 2), rat(1, 2)}, {rat(1, 2), rat(1, 2)}}),
      InvariantError);
  CHECK_NOTHROW(CredalSet({"l", "r"}, {{rat(1, 2), rat(1, 2)}, {rat(0), rat(1)}}));
}

TEST_CASE("credal factories produce the documented vertex sets") {
  const auto interval = CredalSet::interval2({"l", "r"}, rat(1, 4), rat(1));
  CHECK(interval.extreme_points() ==
        std::vector<std::vector<Rat>>{{rat(3, 4), rat(1, 4)}, {rat(0), rat(1)}});
  CHECK(describe(interval) == "{(3/4,1/4),(0,1)}");
  CHECK(CredalSet::interval2({"l", "r"}, rat(1, 3), rat(1, 3)).is_point());
  CHECK_THROWS_AS(CredalSet::interval2({"a", "b", "c"}, rat(0), rat(1)), InputError);
  CHECK_THROWS_AS(CredalSet::interval2({"l", "r"}, rat(1, 2), rat(1, 4)), InputError);

  const auto simplex = CredalSet::full_simplex({"a", "b", "c"});
  CHECK(simplex.extreme_points().size() == 3);
  CHECK(simplex.extreme_points()[1] == std::vector<Rat>{rat(0), rat(1), rat(0)});

  CHECK(CredalSet::point({"l", "r"}, {rat(1, 2), rat(1, 2)}).is_point());
  CHECK_THROWS_AS(CredalSet::point({"l", "r"}, {rat(1, 4), rat(1, 4)}), InvariantError);
}

TEST_CASE("utility views are total and exact") {
  const auto z = worked_outcomes();
  const auto u0 = UtilityView::of_player(*z, 0);
  const auto u1 = UtilityView::of_player(*z, 1);
  CHECK(u0.at("5;1") == rat(5));
  CHECK(u1.at("5;1") == rat(1));
  CHECK(u0.covers(*z));
  CHECK_THROWS_AS(u0.at("9;9"), InputError);
  CHECK_THROWS_AS(UtilityView::of_player(*z, 2), InputError);
  CHECK_THROWS_AS(UtilityView(0, {{"z", rat(1)}, {"z", rat(2)}}), InvariantError);

  const RowFixture F;
  CHECK(expected_utility(F.fu, {rat(3, 4), rat(1, 4)}, u0) == rat(15, 4));
  CHECK(expected_utility(F.fc, {rat(0), rat(1)}, u0) == rat(3));
}

TEST_CASE("the worked regret table is reproduced exactly") {
  const RowFixture F;
  const auto c = regret_choice(CredalSet::interval2({"l", "r"}, rat(1, 4), rat(1)),
                               F.util);
  CHECK(F.tags(c.evaluate(F.menu("umcd"))) == "umc");
  CHECK(F.tags(c.evaluate(F.menu("umd"))) == "um");
  CHECK(F.tags(c.evaluate(F.menu("mcd"))) == "c");
  CHECK(F.tags(c.evaluate(F.menu("md"))) == "d");
  CHECK(F.tags(c.evaluate(F.menu("cd"))) == "c");
  CHECK(F.tags(c.evaluate(F.menu("um"))) == "u");
  CHECK(F.tags(c.evaluate(F.menu("ud"))) == "u");
  CHECK(F.tags(c.evaluate(F.menu("uc"))) == "uc");
  CHECK(F.tags(c.evaluate(F.menu("mc"))) == "c");
  for (const std::string one : {"u", "m", "c", "d"})
    CHECK(F.tags(c.evaluate(F.menu(one))) == one);
}

TEST_CASE("the two remaining menus are exact ties under the closed interval") {
  // With the probability of r running over the closed interval [1/4, 1],
  // the worst-case expected regrets on {u,m,c} are 3, 3, 3 — a genuine
  // three-way tie (c attains 3 exactly at the lower endpoint 1/4) — and on
  // {u,c,d} they are 3, 3, 13/4, a two-way tie between u and c.  All exact
  // ties are retained; no tie-break rule is applied.
  const RowFixture F;
  const auto c = regret_choice(CredalSet::interval2({"l", "r"}, rat(1, 4), rat(1)),
                               F.util);
  CHECK(F.tags(c.evaluate(F.menu("umc"))) == "umc");
  CHECK(F.tags(c.evaluate(F.menu("ucd"))) == "uc");

  // Diagnosis of the boundary: c's worst regret 4(1-lo) is hit at the lower
  // endpoint, u's and m's at the upper one, and they cross exactly at
  // lo = 1/4.  A lower endpoint just below 1/4 yields the tie-broken sets
  // {u,m} and {u}; just above it, c wins both menus outright.
  const auto below = regret_choice(
      CredalSet::interval2({"l", "r"}, rat(6, 25), rat(1)), F.util);
  CHECK(F.tags(below.evaluate(F.menu("umc"))) == "um");
  CHECK(F.tags(below.evaluate(F.menu("ucd"))) == "u");
  const auto above = regret_choice(
      CredalSet::interval2({"l", "r"}, rat(13, 50), rat(1)), F.util);
  CHECK(F.tags(above.evaluate(F.menu("umc"))) == "c");
  CHECK(F.tags(above.evaluate(F.menu("ucd"))) == "c");
}

TEST_CASE("column player maxmin and expected-utility examples") {
  const ColFixture J;
  const auto both = Menu<Act>::of({J.fl, J.fr});

  const auto mm = maxmin_choice(CredalSet::full_simplex({"u", "m", "c", "d"}), J.util);
  CHECK(mm.evaluate(both) == Menu<Act>::singleton(J.fl));

  const auto eu = eu_choice(
      CredalSet::point({"u", "m", "c", "d"}, {rat(1, 2), rat(0), rat(0), rat(1, 2)}),
      J.util);
  CHECK(eu.evaluate(both) == both);
}

TEST_CASE("row player point-belief and maxmin examples") {
  const RowFixture F;
  const auto all = F.menu("umcd");

  const auto eu_l = eu_choice(CredalSet::point({"l", "r"}, {rat(1), rat(0)}), F.util);
  CHECK(F.tags(eu_l.evaluate(all)) == "u");

  const auto mm = maxmin_choice(CredalSet::full_simplex({"l", "r"}), F.util);
  CHECK(F.tags(mm.evaluate(all)) == "cd");

  const auto rg = regret_choice(CredalSet::full_simplex({"l", "r"}), F.util);
  CHECK(F.tags(rg.evaluate(all)) == "um");
}

TEST_CASE("criteria enforce contraction and the singleton law by construction") {
  const RowFixture F;
  for (const auto kind : {Criterion::EU, Criterion::Maxmin, Criterion::Regret}) {
    const auto belief = kind == Criterion::EU
                            ? CredalSet::point({"l", "r"}, {rat(1, 3), rat(2, 3)})
                            : CredalSet::interval2({"l", "r"}, rat(1, 4), rat(1));
    const auto c = criterion_choice(kind, belief, F.util);
    for (const auto& k : all_submenus(F.menu("umcd"))) {
      const auto chosen = c.evaluate(k);
      CHECK(is_subset(chosen, k));
      CHECK_FALSE(chosen.empty());
      if (k.size() == 1) CHECK(chosen == k);
    }
  }
}

TEST_CASE("eu_choice rejects genuine credal sets") {
  const RowFixture F;
  CHECK_THROWS_AS(eu_choice(CredalSet::full_simplex({"l", "r"}), F.util), InputError);
  CHECK_THROWS_AS(
      criterion_choice(Criterion::EU, CredalSet::full_simplex({"l", "r"}), F.util),
      InputError);
}

TEST_CASE("evaluators reject misaligned menus") {
  const RowFixture F;
  const auto wrong_support =
      eu_choice(CredalSet::point({"a", "b"}, {rat(1, 2), rat(1, 2)}), F.util);
  CHECK_THROWS_AS(wrong_support.evaluate(F.menu("um")), InputError);

  const auto partial = UtilityView(0, {{"5;1", rat(5)}});
  const auto missing =
      eu_choice(CredalSet::point({"l", "r"}, {rat(1, 2), rat(1, 2)}), partial);
  CHECK_THROWS_AS(missing.evaluate(F.menu("u")), InputError);
}

namespace {

// A random scenario over a small discrete state space: plain outcomes with
// random rational utilities and a few random acts.
struct RandomScenario {
  SpacePtr states;
  OutcomesPtr outcomes;
  UtilityView util;
  Menu<Act> acts;
};

RandomScenario random_scenario(Rng& rng) {
  const std::size_t ns = 2 + rng.below(3);
  std::vector<std::string> sid;
  for (std::size_t s = 0; s < ns; ++s) sid.push_back("s" + std::to_string(s));
  auto states = std::make_shared<const FinSpace>(FinSpace::discrete(sid));

  const std::size_t nz = 2 + rng.below(3);
  std::vector<std::string> zid;
  std::vector<std::vector<Rat>> utilities;
  for (std::size_t z = 0; z < nz; ++z) {
    zid.push_back("z" + std::to_string(z));
    utilities.push_back({Rat(static_cast<long long>(rng.below(13)) - 6,
                             1 + static_cast<long long>(rng.below(4)))});
  }
  auto outcomes = std::make_shared<const OutcomeSet>(
      OutcomeSet::with_utilities(zid, utilities));
  auto util = UtilityView::of_player(*outcomes, 0);

  std::vector<Act> acts;
  for (int a = 0; a < 4; ++a) {
    std::vector<std::size_t> table;
    for (std::size_t s = 0; s < ns; ++s) table.push_back(rng.below(nz));
    acts.emplace_back(states, outcomes, table);
  }
  return RandomScenario{states, outcomes, std::move(util), Menu<Act>::of(acts)};
}

std::vector<Rat> random_distribution(Rng& rng, std::size_t states) {
  std::vector<long long> weight(states, 0);
  long long total = 0;
  for (auto& w : weight) {
    w = static_cast<long long>(rng.below(5));
    total += w;
  }
  if (total == 0) {
    weight[0] = 1;
    total = 1;
  }
  std::vector<Rat> p;
  for (const auto& w : weight) p.emplace_back(w, total);
  return p;
}

}  // namespace

TEST_CASE("point beliefs collapse maxmin and regret to expected utility") {
  Rng rng(41);
  for (int it = 0; it < 60; ++it) {
    const auto sc = random_scenario(rng);
    const auto p = random_distribution(rng, sc.states->size());
    const auto belief = CredalSet::point(sc.states->points(), p);
    const auto eu = eu_choice(belief, sc.util);
    const auto mm = maxmin_choice(belief, sc.util);
    const auto rg = regret_choice(belief, sc.util);
    for (const auto& k : all_submenus(sc.acts)) {
      const auto expected = eu.evaluate(k);
      CHECK(mm.evaluate(k) == expected);
      CHECK(rg.evaluate(k) == expected);
    }
  }
}

TEST_CASE("singleton credal sets make maxmin agree with eu on every menu") {
  Rng rng(43);
  const auto sc = random_scenario(rng);
  const auto p = random_distribution(rng, sc.states->size());
  const auto eu = eu_choice(CredalSet::point(sc.states->points(), p), sc.util);
  const auto mm = maxmin_choice(CredalSet(sc.states->points(), {p}), sc.util);
  for (const auto& k : all_submenus(sc.acts)) CHECK(mm.evaluate(k) == eu.evaluate(k));
}

TEST_CASE("maxmin over extremes equals minimization over a dense hull grid") {
  // Two-state supports: the hull is the segment of distributions whose
  // second coordinate lies between the extreme minimum and maximum, so a
  // grid over that segment (endpoints included) must reach the same
  // minimum expected utility as the extreme points — exactly, since the
  // expectation is affine in the second coordinate.
  Rng rng(47);
  for (int it = 0; it < 40; ++it) {
    std::vector<std::string> sid{"s0", "s1"};
    auto states = std::make_shared<const FinSpace>(FinSpace::discrete(sid));
    std::vector<std::vector<Rat>> extremes;
    const std::size_t ne = 2 + rng.below(3);
    for (std::size_t e = 0; e < ne; ++e) {
      const Rat q(static_cast<long long>(rng.below(9)), 8);
      std::vector<Rat> v{Rat(1) - q, q};
      bool seen = false;
      for (const auto& w : extremes) seen = seen || w == v;
      if (!seen) extremes.push_back(std::move(v));
    }
    const CredalSet belief(sid, extremes);

    const std::size_t nz = 3;
    std::vector<std::string> zid{"z0", "z1", "z2"};
    std::vector<std::vector<Rat>> utilities;
    for (std::size_t z = 0; z < nz; ++z)
      utilities.push_back({Rat(static_cast<long long>(rng.below(11)) - 5, 2)});
    auto outcomes = std::make_shared<const OutcomeSet>(
        OutcomeSet::with_utilities(zid, utilities));
    const auto util = UtilityView::of_player(*outcomes, 0);

    Rat lo = extremes.front()[1], hi = extremes.front()[1];
    for (const auto& v : extremes) {
      lo = std::min(lo, v[1]);
      hi = std::max(hi, v[1]);
    }

    for (int a = 0; a < 3; ++a) {
      const Act f(states, outcomes, {rng.below(nz), rng.below(nz)});
      Rat extreme_min = expected_utility(f, extremes.front(), util);
      for (const auto& v : extremes)
        extreme_min = std::min(extreme_min, expected_utility(f, v, util));
      Rat grid_min = extreme_min;
      bool first = true;
      for (int k = 0; k <= 16; ++k) {
        const Rat q = lo + (hi - lo) * Rat(k, 16);
        const Rat eu = expected_utility(f, {Rat(1) - q, q}, util);
        if (first || eu < grid_min) grid_min = eu;
        first = false;
      }
      CHECK(grid_min == extreme_min);
    }
  }
}

TEST_CASE("regret violates independence of irrelevant alternatives") {
  // m is chosen from the full menu but dropped from {m,c,d}, although only
  // u — an alternative unrelated to the comparison of m against c and d —
  // was removed.  Menu-relative regret is therefore not order-based.
  const RowFixture F;
  const auto c = regret_choice(CredalSet::interval2({"l", "r"}, rat(1, 4), rat(1)),
                               F.util);
  CHECK(c.evaluate(F.menu("umcd")).contains(F.fm));
  CHECK_FALSE(c.evaluate(F.menu("mcd")).contains(F.fm));
}

TEST_CASE("order representability splits the criteria as documented") {
  CHECK(order_representable(Criterion::EU));
  CHECK(order_representable(Criterion::Maxmin));
  CHECK_FALSE(order_representable(Criterion::Regret));

  const RowFixture F;
  const auto carrier = F.menu("umcd");
  const auto as_table = [&](const ChoiceFunction<Act>& c) {
    typename ChoiceFunction<Act>::Table table;
    for (const auto& k : all_submenus(carrier)) table.emplace_back(k, c.evaluate(k));
    return ChoiceFunction<Act>::extensional(carrier, std::move(table));
  };

  const auto eu = as_table(
      eu_choice(CredalSet::point({"l", "r"}, {rat(1, 2), rat(1, 2)}), F.util));
  CHECK(is_poset_rationalizable(eu).has_value());

  const auto mm = as_table(maxmin_choice(CredalSet::full_simplex({"l", "r"}), F.util));
  CHECK(is_poset_rationalizable(mm).has_value());

  const auto rg = as_table(regret_choice(
      CredalSet::interval2({"l", "r"}, rat(1, 4), rat(1)), F.util));
  CHECK_FALSE(is_poset_rationalizable(rg).has_value());
}

TEST_CASE("criterion names round-trip") {
  for (const auto kind : {Criterion::EU, Criterion::Maxmin, Criterion::Regret})
    CHECK(parse_criterion(to_string(kind)) == kind);
  CHECK_THROWS_AS(parse_criterion("hurwicz"), InputError);
}

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

// Benchmark: the three scan kernels (poset-rationalizability search,
// behavioral separation search, justifiability search) in their serial
// reference form against the OpenMP path.  Besides timings the harness
// asserts that both paths return identical results, which is the kernels'
// design contract (first-match scans with a min-index merge).
//
// Usage: choicelab_bench [reps]   (default 3; best-of-reps is reported)

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "choicelab/act.hpp"
#include "choicelab/choice.hpp"
#include "choicelab/criteria.hpp"
#include "choicelab/game.hpp"
#include "choicelab/gen.hpp"
#include "choicelab/hierarchy.hpp"
#include "choicelab/pref.hpp"
#include "choicelab/rng.hpp"
#include "choicelab/space.hpp"
#include "choicelab/structure.hpp"

using namespace choicelab;

namespace {

double best_of(int reps, const std::function<void()>& body) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

// --- kernel 1: poset-rationalizability scans ---------------------------------
//
// Mostly non-rationalizable random functions (full 3^10-code scans) plus a
// few order-backed ones (early exits), on five-element carriers.

std::vector<ChoiceFunction<std::string>> rationalizability_workload() {
  Rng rng(9001);
  std::vector<std::string> ids;
  for (char c = 'a'; c <= 'e'; ++c) ids.emplace_back(1, c);
  const auto carrier = Menu<std::string>::of(ids);
  std::vector<ChoiceFunction<std::string>> work;
  for (int i = 0; i < 6; ++i) {
    work.push_back(maximize_as_choicefn(random_poset(rng, carrier, 35)));
  }
  for (int i = 0; i < 18; ++i) {
    work.push_back(random_choice_function(rng, carrier));
  }
  return work;
}

bool run_rationalizability(const std::vector<ChoiceFunction<std::string>>& work,
                           bool parallel,
                           std::vector<std::optional<Poset<std::string>>>* out) {
  out->clear();
  for (const auto& c : work) out->push_back(is_poset_rationalizable(c, 5, parallel));
  return true;
}

// --- kernel 2: behavioral separation search -----------------------------------
//
// A structure over the worked 4x2 payoffs with eight column types (six
// distinct point beliefs plus one duplicated pair) and two row types.  The
// duplicated pair never separates, so every refinement round drives the
// sampled menu search to its full budget.

ChoiceStructure bench_structure() {
  const FinSpace actions_i = FinSpace::discrete({"u", "m", "c", "d"});
  const FinSpace actions_j = FinSpace::discrete({"l", "r"});
  const std::vector<std::string> zid = {"5;1", "0;0", "3;2", "0;1",
                                        "1;1", "3;0", "1;2", "2;3"};
  const std::vector<std::vector<Rat>> zutil = {
      {Rat(5), Rat(1)}, {Rat(0), Rat(0)}, {Rat(3), Rat(2)}, {Rat(0), Rat(1)},
      {Rat(1), Rat(1)}, {Rat(3), Rat(0)}, {Rat(1), Rat(2)}, {Rat(2), Rat(3)}};
  const auto outcomes = std::make_shared<const OutcomeSet>(
      OutcomeSet::with_utilities(zid, zutil));
  const std::vector<std::vector<std::size_t>> payoff = {{0, 1}, {2, 3}, {4, 5}, {6, 7}};

  const FinSpace types_i = FinSpace::discrete({"a_Rg", "a_Mm"});
  std::vector<std::string> jt;
  for (int k = 0; k < 7; ++k) jt.push_back("b" + std::to_string(k));
  jt.push_back("b0twin");  // same belief as b0: a pair that never separates
  const FinSpace types_j = FinSpace::discrete(jt);

  const ProductSpace st_i = product(actions_j, types_j);
  const ProductSpace st_j = product(actions_i, types_i);
  const UtilityView ui = UtilityView::of_player(*outcomes, 0);
  const UtilityView uj = UtilityView::of_player(*outcomes, 1);

  std::vector<ChoiceFunction<Act>> theta_i;
  theta_i.push_back(regret_choice(
      CredalSet(st_i.space.points(),
                lift_marginal_vertices(st_i, {{Rat(3, 4), Rat(1, 4)}, {Rat(0), Rat(1)}})),
      ui));
  theta_i.push_back(maxmin_choice(CredalSet::full_simplex(st_i.space.points()), ui));

  std::vector<ChoiceFunction<Act>> theta_j;
  const std::size_t nstates = st_j.space.size();
  for (std::size_t k = 0; k < types_j.size(); ++k) {
    const std::size_t src = k == types_j.size() - 1 ? 0 : k;  // the twin copies b0
    std::vector<Rat> point(nstates, Rat(0));
    point[src % nstates] = Rat(1, 2);
    point[(3 * src + 1) % nstates] += Rat(1, 2);
    theta_j.push_back(eu_choice(CredalSet::point(st_j.space.points(), point), uj));
  }

  return ChoiceStructure(actions_i, actions_j, types_i, types_j, outcomes, payoff,
                         std::move(theta_i), std::move(theta_j));
}

// --- kernel 3: justifiability search ------------------------------------------
//
// The worked game's dominated row `d` against a large grid-hull belief
// family: no hull justifies it, so the scan always visits the whole family.

std::vector<BeliefFamily> hull_family() {
  BeliefFamily hulls;
  hulls.kind = BeliefFamily::Kind::GridHulls;
  hulls.grid = 64;
  hulls.max_vertices = 3;
  return {hulls};
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  if (reps < 1) {
    std::fprintf(stderr, "usage: choicelab_bench [reps>=1]\n");
    return 2;
  }
#ifdef _OPENMP
  std::printf("openmp enabled, max threads %d, best of %d reps\n",
              omp_get_max_threads(), reps);
#else
  std::printf("openmp disabled (serial build), best of %d reps\n", reps);
#endif

  struct Row {
    std::string name;
    double serial = 0;
    double parallel = 0;
    bool agree = false;
  };
  std::vector<Row> rows;

  {
    const auto work = rationalizability_workload();
    std::vector<std::optional<Poset<std::string>>> rs;
    std::vector<std::optional<Poset<std::string>>> rp;
    Row row;
    row.name = "poset-rationalizability scan";
    row.serial = best_of(reps, [&] { run_rationalizability(work, false, &rs); });
    row.parallel = best_of(reps, [&] { run_rationalizability(work, true, &rp); });
    row.agree = rs.size() == rp.size();
    for (std::size_t i = 0; row.agree && i < rs.size(); ++i) {
      row.agree = rs[i].has_value() == rp[i].has_value() &&
                  (!rs[i] || rs[i]->matrix() == rp[i]->matrix());
    }
    rows.push_back(row);
  }

  {
    const ChoiceStructure x = bench_structure();
    RefineBounds bounds;
    bounds.sample_count = 512;
    BehavioralPartition ps;
    BehavioralPartition pp;
    Row row;
    row.name = "behavioral separation search";
    row.serial = best_of(reps, [&] {
      RefineBounds b = bounds;
      b.parallel = false;
      ps = refine_partition(x, b);
    });
    row.parallel = best_of(reps, [&] {
      RefineBounds b = bounds;
      b.parallel = true;
      pp = refine_partition(x, b);
    });
    row.agree = ps.blocks_i == pp.blocks_i && ps.blocks_j == pp.blocks_j &&
                ps.rounds == pp.rounds;
    rows.push_back(row);
  }

  {
    const GameSpec g = worked_game(Criterion::Regret);
    const auto family = hull_family();
    const std::vector<std::string> opp = {"l", "r"};
    std::optional<CredalSet> js;
    std::optional<CredalSet> jp;
    Row row;
    row.name = "justifiability scan";
    row.serial = best_of(
        reps, [&] { js = justifiable(g, Player::I, "d", opp, family, {}, false); });
    row.parallel = best_of(
        reps, [&] { jp = justifiable(g, Player::I, "d", opp, family, {}, true); });
    row.agree = js.has_value() == jp.has_value() && (!js || *js == *jp);
    rows.push_back(row);
  }

  std::printf("%-32s %10s %10s %9s %7s\n", "kernel", "serial", "parallel", "speedup",
              "agree");
  bool all_agree = true;
  for (const Row& r : rows) {
    std::printf("%-32s %9.3fs %9.3fs %8.2fx %7s\n", r.name.c_str(), r.serial,
                r.parallel, r.serial / r.parallel, r.agree ? "yes" : "NO");
    all_agree = all_agree && r.agree;
  }
  if (!all_agree) {
    std::fprintf(stderr, "serial and parallel paths disagree\n");
    return 1;
  }
  return 0;
}

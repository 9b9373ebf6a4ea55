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

// Deterministic report emission for the command-line frontend.
//
// Two formats: `table` is aligned human-readable text; `machine` is
// line-delimited records of tab-separated key=value fields with a stable
// field order, the first field naming the record kind. Identical inputs
// produce byte-identical output in either format.
//
// Every claim a report emits (a choice set, a separator event, a witness
// belief) is re-verified by an independent evaluation before printing:
// separators and survivors are replayed against the structure or game they
// came from, hierarchy attitudes are re-derived through explicit act
// pullbacks, and embedded choices are recomputed from the raw order. A
// mismatch raises InvariantError, which the frontend reports as a
// verification failure.
//
// Printouts follow the canonical input order throughout: actions and types
// appear in declaration order, menus list basis acts in action order, and
// acts outside the designated basis are rendered as their outcome tables.

#pragma once

#include <cstddef>
#include <ostream>
#include <string>

#include "choicelab/criteria.hpp"
#include "choicelab/game.hpp"
#include "choicelab/hierarchy.hpp"
#include "choicelab/structure.hpp"

namespace choicelab {

enum class ReportFormat { Table, Machine };

std::string to_string(ReportFormat f);                // "table" / "machine"
ReportFormat parse_format(const std::string& name);   // throws InputError

// "point(1,0)" for a single extreme point, "hull{(3/4,1/4),(0,1)}" otherwise.
std::string render_credal(const CredalSet& set);

// Choice tables of every type over the submenus of its own act basis.
void report_choice_eval(const ChoiceStructure& x, std::ostream& out, ReportFormat fmt);

// Hierarchy levels 1..levels: per-level bases, opponent quotient blocks, the
// attitude tables on lifted basis menus, and the coherence verdict.
void report_hierarchy(const ChoiceStructure& x, std::size_t levels,
                      const RefineBounds& bounds, std::ostream& out, ReportFormat fmt);

// Behavioral partition, separators, search coverage, and the verdict.
void report_nonred(const ChoiceStructure& x, const RefineBounds& bounds, std::ostream& out,
                   ReportFormat fmt);

// Preference-to-choice conversion: embedded tables plus a pairwise
// distinguishability report with separating menus.
void report_embed(const PreferenceStructure& p, std::ostream& out, ReportFormat fmt);

// Iterated justifiability: criteria, families, the round trace, final-round
// witness beliefs, and the surviving action sets.
void report_rationalize(const GameSpec& g, const RationalizeOptions& options,
                        std::ostream& out, ReportFormat fmt);

}  // namespace choicelab

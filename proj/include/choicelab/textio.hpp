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

// Line-oriented text formats for games and structures. Files are sequences
// of whitespace-separated tokens; '#' starts a comment; every diagnostic
// names the offending line (and field where one exists). All numerals are
// exact rationals ("a/b" or integers) -- decimal literals are rejected so no
// tie is ever decided by rounding.

#pragma once

#include <string>
#include <variant>

#include "choicelab/game.hpp"
#include "choicelab/rational.hpp"
#include "choicelab/structure.hpp"

namespace choicelab {

// Whole file contents; InputError when the file cannot be read.
std::string read_text_file(const std::string& path);

// Game format:
//   game
//   players <name-i> <name-j>
//   actions <player> <id...>
//   payoffs            (followed by one line per row action, one "a;b"
//                       rational pair per column action)
//   criterion <player> <eu|maxmin|regret>
//   family <player> <grid-points|full-simplex|grid-intervals|grid-hulls>
//          [grid] [max-vertices]           (optional, ordered, repeatable)
// The first named player becomes the row player.
GameSpec parse_game_spec(const std::string& text);

// Structure format (players are literally "i" and "j"):
//   structure
//   actions i <id...>      actions j <id...>
//   payoffs                (as in the game format; outcomes are derived
//                           from the distinct payoff pairs)
//   types i <id...>        types j <id...>
// and one attitude per type, either criterion-backed
//   theta <player> <type> <criterion> full-simplex
//   theta <player> <type> <criterion> point <p...>
//   theta <player> <type> <criterion> vertices <p...> ; <p...> ...
//   theta <player> <type> <criterion> marginal-vertices <m...> ; ...
// (beliefs live on the player's state space, opponent actions x opponent
// types, in product order; marginal vertices are over opponent actions and
// are lifted), or an explicit table over the basis acts f_<action>
//   theta <player> <type> table
//   choose <player> <type> <f_...> -> <f_...>
// (singleton menus are implied by the singleton law; every larger submenu of
// the basis needs an entry), or -- for a preference structure -- generating
// order pairs over the basis acts
//   pref <player> <type> <f_a<=f_b ...>
// A file declares either thetas for every type or prefs for every type.
using ParsedStructure = std::variant<ChoiceStructure, PreferenceStructure>;
ParsedStructure parse_structure_spec(const std::string& text);

}  // namespace choicelab

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

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace choicelab {

// All quantitative values in the library (payoffs, probabilities, expected
// utilities, regrets) are exact rationals. Ties are genuine equalities.
using Rat = boost::rational<long long>;

// Renders "a/b", or just "a" when the denominator is 1.
std::string to_string(const Rat& r);

// Parses an integer literal ("3", "-2") or a fraction ("a/b" with b > 0
// after normalization). Decimal literals are rejected on purpose: silent
// rounding would turn exact ties into noise. Throws InputError.
Rat parse_rational(std::string_view text);

}  // namespace choicelab

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

#include "choicelab/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "choicelab/errors.hpp"

namespace choicelab {

std::string to_string(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

long long parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) {
    throw InputError("empty numeral in rational literal '" + std::string(whole) + "'");
  }
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) {
    throw InputError("sign without digits in rational literal '" + std::string(whole) + "'");
  }
  for (std::size_t k = start; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw InputError("non-rational numeral '" + std::string(whole) +
                       "' (decimals are rejected; write a/b)");
    }
  }
  errno = 0;
  char* end = nullptr;
  const std::string buf(text);
  long long value = std::strtoll(buf.c_str(), &end, 10);
  if (errno != 0 || end != buf.c_str() + buf.size()) {
    throw InputError("integer out of range in rational literal '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rat parse_rational(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rat(parse_integer(text, text));
  }
  if (text.find('/', slash + 1) != std::string_view::npos) {
    throw InputError("multiple '/' in rational literal '" + std::string(text) + "'");
  }
  const long long num = parse_integer(text.substr(0, slash), text);
  const long long den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw InputError("zero denominator in rational literal '" + std::string(text) + "'");
  return Rat(num, den);
}

}  // namespace choicelab

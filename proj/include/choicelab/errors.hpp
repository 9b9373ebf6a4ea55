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

#include <stdexcept>
#include <string>

namespace choicelab {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A construction invariant or operation precondition was violated.
class InvariantError : public Error {
 public:
  using Error::Error;
};

// Malformed input text (spec files, rational literals). CLI exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed its configured cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

// An extensional choice function was evaluated outside its menu universe.
class UniverseError : public Error {
 public:
  using Error::Error;
};

// A relation transport broke anti-symmetry; the caller must normalize the
// resulting preorder explicitly.
class NormalizationNeeded : public Error {
 public:
  using Error::Error;
};

// An internal re-verification failed (claims are re-checked before they are
// reported). CLI exit code 1.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace choicelab

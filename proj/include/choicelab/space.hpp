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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace choicelab {

// A finite uncertainty space: a carrier of named points together with a
// finite algebra of events. Finite algebras correspond exactly to partitions
// of the carrier, so the algebra is stored as its atom partition; a subset is
// an event iff it is a union of atoms. The point sequence order is the
// canonical order used for all deterministic output.
class FinSpace {
 public:
  FinSpace() = default;  // invalid empty placeholder; every operation rejects it

  // Discrete algebra: every singleton is an atom.
  static FinSpace discrete(std::vector<std::string> points);

  // Trivial algebra: one atom spanning the whole carrier.
  static FinSpace trivial(std::vector<std::string> points);

  // General algebra from an explicit atom partition (disjoint, exhaustive).
  static FinSpace with_atoms(std::vector<std::string> points,
                             const std::vector<std::vector<std::string>>& atom_blocks);

  std::size_t size() const { return points_.size(); }
  const std::string& point(std::size_t idx) const { return points_[idx]; }
  const std::vector<std::string>& points() const { return points_; }

  // Index of a point id; throws InvariantError when absent.
  std::size_t index_of(std::string_view id) const;
  std::optional<std::size_t> find(std::string_view id) const;

  std::size_t atom_of(std::size_t point_idx) const { return atom_of_[point_idx]; }
  std::size_t atom_count() const { return atom_members_.size(); }
  const std::vector<std::vector<std::size_t>>& atoms() const { return atom_members_; }

  // True iff the subset (indexed by point) is a union of atoms.
  bool is_event(const std::vector<bool>& subset) const;

  // All events, enumerated as atom-index subsets in canonical order. Intended
  // for oracle tests on small carriers; 2^atom_count entries.
  std::vector<std::vector<bool>> all_events(std::size_t max_atoms = 12) const;

  // Structural equality: same point sequence and same atom partition.
  bool operator==(const FinSpace& other) const;
  bool operator!=(const FinSpace& other) const { return !(*this == other); }

 private:
  std::vector<std::string> points_;
  std::vector<std::size_t> atom_of_;
  std::vector<std::vector<std::size_t>> atom_members_;
};

// True iff every codomain event pulls back to a domain event. Equivalent,
// and checked as: the codomain atom of f(x) is constant on every domain atom.
bool is_measurable(const std::vector<std::size_t>& table, const FinSpace& domain,
                   const FinSpace& codomain);

// A measurable total map between finite uncertainty spaces. Measurability is
// checked at construction.
class MeasurableMap {
 public:
  MeasurableMap(FinSpace domain, FinSpace codomain, std::vector<std::size_t> table);

  static MeasurableMap identity(const FinSpace& space);

  // Builds the table from (domain id -> codomain id) pairs; every domain
  // point must be covered exactly once.
  static MeasurableMap from_pairs(const FinSpace& domain, const FinSpace& codomain,
                                  const std::vector<std::pair<std::string, std::string>>& pairs);

  const FinSpace& dom() const { return dom_; }
  const FinSpace& cod() const { return cod_; }
  std::size_t operator()(std::size_t point_idx) const { return table_[point_idx]; }
  const std::vector<std::size_t>& table() const { return table_; }

  bool operator==(const MeasurableMap& other) const;

 private:
  FinSpace dom_;
  FinSpace cod_;
  std::vector<std::size_t> table_;
};

// g after f; domains must line up.
MeasurableMap compose(const MeasurableMap& g, const MeasurableMap& f);

// Product space with cylinder algebra: carrier = all pairs "(x,y)" in
// x-major order; atoms = products of the factor atoms.
struct ProductSpace {
  FinSpace space;
  MeasurableMap pi1;
  MeasurableMap pi2;
  std::size_t left_size = 0;
  std::size_t right_size = 0;

  std::size_t pair_index(std::size_t left, std::size_t right) const {
    return left * right_size + right;
  }
};

ProductSpace product(const FinSpace& x, const FinSpace& y);

// Finite chain X_0 -> X_1 -> ... -> X_N (links[n] : X_n -> X_{n+1}).
struct FinChain {
  std::vector<FinSpace> levels;
  std::vector<MeasurableMap> links;
};

// Finite cochain X_0 <- X_1 <- ... <- X_N (links[n] : X_{n+1} -> X_n).
struct FinCochain {
  std::vector<FinSpace> levels;
  std::vector<MeasurableMap> links;
};

// Colimit of a finite chain. Identification compares forward images at the
// final level, so every equivalence class has exactly one representative in
// X_N: the carrier is X_N and the injections are the composed forward maps.
struct ChainColimit {
  FinSpace carrier;
  std::vector<MeasurableMap> inject;  // inject[n] : X_n -> carrier
};

ChainColimit chain_colimit(const FinChain& chain);

// Limit of a finite cochain. A coherent sequence (x_0,...,x_N) with
// x_n = links[n](x_{n+1}) is determined by x_N, so the carrier is X_N (whose
// algebra equals the one generated by all projection preimages, since the
// top projection is the identity) and the projections are the composed links.
struct CochainLimit {
  FinSpace carrier;
  std::vector<MeasurableMap> project;  // project[n] : carrier -> X_n
};

CochainLimit cochain_limit(const FinCochain& cochain);

}  // namespace choicelab

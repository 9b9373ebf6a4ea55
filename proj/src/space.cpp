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

#include "choicelab/space.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "choicelab/errors.hpp"

namespace choicelab {

namespace {

void check_points(const std::vector<std::string>& points) {
  if (points.empty()) throw InvariantError("space carrier must be nonempty");
  std::unordered_set<std::string_view> seen;
  for (const auto& p : points) {
    if (!seen.insert(p).second) throw InvariantError("duplicate point identifier '" + p + "'");
  }
}

}  // namespace

FinSpace FinSpace::discrete(std::vector<std::string> points) {
  check_points(points);
  FinSpace s;
  s.points_ = std::move(points);
  s.atom_of_.resize(s.points_.size());
  s.atom_members_.resize(s.points_.size());
  for (std::size_t i = 0; i < s.points_.size(); ++i) {
    s.atom_of_[i] = i;
    s.atom_members_[i] = {i};
  }
  return s;
}

FinSpace FinSpace::trivial(std::vector<std::string> points) {
  check_points(points);
  FinSpace s;
  s.points_ = std::move(points);
  s.atom_of_.assign(s.points_.size(), 0);
  s.atom_members_.resize(1);
  for (std::size_t i = 0; i < s.points_.size(); ++i) s.atom_members_[0].push_back(i);
  return s;
}

FinSpace FinSpace::with_atoms(std::vector<std::string> points,
                              const std::vector<std::vector<std::string>>& atom_blocks) {
  check_points(points);
  FinSpace s;
  s.points_ = std::move(points);
  s.atom_of_.assign(s.points_.size(), SIZE_MAX);
  s.atom_members_.resize(atom_blocks.size());
  for (std::size_t a = 0; a < atom_blocks.size(); ++a) {
    if (atom_blocks[a].empty()) throw InvariantError("empty atom block");
    for (const auto& id : atom_blocks[a]) {
      const std::size_t idx = s.index_of(id);
      if (s.atom_of_[idx] != SIZE_MAX) {
        throw InvariantError("point '" + id + "' listed in two atoms");
      }
      s.atom_of_[idx] = a;
      s.atom_members_[a].push_back(idx);
    }
  }
  for (std::size_t i = 0; i < s.points_.size(); ++i) {
    if (s.atom_of_[i] == SIZE_MAX) {
      throw InvariantError("point '" + s.points_[i] + "' not covered by any atom");
    }
  }
  return s;
}

std::size_t FinSpace::index_of(std::string_view id) const {
  const auto idx = find(id);
  if (!idx) throw InvariantError("unknown point identifier '" + std::string(id) + "'");
  return *idx;
}

std::optional<std::size_t> FinSpace::find(std::string_view id) const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i] == id) return i;
  }
  return std::nullopt;
}

bool FinSpace::is_event(const std::vector<bool>& subset) const {
  if (subset.size() != points_.size()) {
    throw InvariantError("event indicator has wrong carrier size");
  }
  for (const auto& members : atom_members_) {
    bool first = subset[members.front()];
    for (const std::size_t m : members) {
      if (subset[m] != first) return false;  // atom straddles the subset
    }
  }
  return true;
}

std::vector<std::vector<bool>> FinSpace::all_events(std::size_t max_atoms) const {
  if (atom_count() > max_atoms) {
    throw CapExceededError("event enumeration beyond " + std::to_string(max_atoms) + " atoms");
  }
  std::vector<std::vector<bool>> out;
  const std::size_t n = atom_count();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<bool> ev(points_.size(), false);
    for (std::size_t a = 0; a < n; ++a) {
      if (mask & (std::size_t{1} << a)) {
        for (const std::size_t m : atom_members_[a]) ev[m] = true;
      }
    }
    out.push_back(std::move(ev));
  }
  return out;
}

bool FinSpace::operator==(const FinSpace& other) const {
  return points_ == other.points_ && atom_of_ == other.atom_of_;
}

bool is_measurable(const std::vector<std::size_t>& table, const FinSpace& domain,
                   const FinSpace& codomain) {
  if (table.size() != domain.size()) throw InvariantError("map table has wrong domain size");
  for (const std::size_t v : table) {
    if (v >= codomain.size()) throw InvariantError("map table value outside codomain");
  }
  // Preimages commute with unions, so it is enough that the preimage of every
  // codomain *atom* is a union of domain atoms, i.e. that the codomain atom
  // of f(x) is constant on each domain atom.
  for (const auto& members : domain.atoms()) {
    const std::size_t first = codomain.atom_of(table[members.front()]);
    for (const std::size_t m : members) {
      if (codomain.atom_of(table[m]) != first) return false;
    }
  }
  return true;
}

MeasurableMap::MeasurableMap(FinSpace domain, FinSpace codomain, std::vector<std::size_t> table)
    : dom_(std::move(domain)), cod_(std::move(codomain)), table_(std::move(table)) {
  if (!is_measurable(table_, dom_, cod_)) {
    throw InvariantError("map is not measurable: some codomain event pulls back across an atom");
  }
}

MeasurableMap MeasurableMap::identity(const FinSpace& space) {
  std::vector<std::size_t> table(space.size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = i;
  return MeasurableMap(space, space, std::move(table));
}

MeasurableMap MeasurableMap::from_pairs(
    const FinSpace& domain, const FinSpace& codomain,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<std::size_t> table(domain.size(), SIZE_MAX);
  for (const auto& [from, to] : pairs) {
    const std::size_t d = domain.index_of(from);
    if (table[d] != SIZE_MAX) throw InvariantError("point '" + from + "' mapped twice");
    table[d] = codomain.index_of(to);
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] == SIZE_MAX) {
      throw InvariantError("point '" + domain.point(i) + "' has no image");
    }
  }
  return MeasurableMap(domain, codomain, std::move(table));
}

bool MeasurableMap::operator==(const MeasurableMap& other) const {
  return dom_ == other.dom_ && cod_ == other.cod_ && table_ == other.table_;
}

MeasurableMap compose(const MeasurableMap& g, const MeasurableMap& f) {
  if (!(f.cod() == g.dom())) throw InvariantError("compose: codomain/domain mismatch");
  std::vector<std::size_t> table(f.dom().size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = g(f(i));
  return MeasurableMap(f.dom(), g.cod(), std::move(table));
}

ProductSpace product(const FinSpace& x, const FinSpace& y) {
  std::vector<std::string> points;
  points.reserve(x.size() * y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      points.push_back("(" + x.point(i) + "," + y.point(j) + ")");
    }
  }
  // Atoms of the cylinder algebra are exactly the products of factor atoms.
  std::vector<std::vector<std::string>> blocks(x.atom_count() * y.atom_count());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      const std::size_t a = x.atom_of(i) * y.atom_count() + y.atom_of(j);
      blocks[a].push_back(points[i * y.size() + j]);
    }
  }
  FinSpace space = FinSpace::with_atoms(points, blocks);
  std::vector<std::size_t> t1(points.size()), t2(points.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      t1[i * y.size() + j] = i;
      t2[i * y.size() + j] = j;
    }
  }
  MeasurableMap pi1(space, x, std::move(t1));
  MeasurableMap pi2(space, y, std::move(t2));
  return ProductSpace{std::move(space), std::move(pi1), std::move(pi2), x.size(), y.size()};
}

namespace {

void check_chain_shape(const std::vector<FinSpace>& levels, const std::vector<MeasurableMap>& links,
                       bool forward) {
  if (levels.empty()) throw InvariantError("chain must have at least one level");
  if (links.size() + 1 != levels.size()) throw InvariantError("chain link count mismatch");
  for (std::size_t n = 0; n < links.size(); ++n) {
    const FinSpace& from = forward ? levels[n] : levels[n + 1];
    const FinSpace& to = forward ? levels[n + 1] : levels[n];
    if (!(links[n].dom() == from) || !(links[n].cod() == to)) {
      throw InvariantError("chain link " + std::to_string(n) + " does not match its levels");
    }
  }
}

}  // namespace

ChainColimit chain_colimit(const FinChain& chain) {
  check_chain_shape(chain.levels, chain.links, /*forward=*/true);
  const std::size_t top = chain.levels.size() - 1;
  ChainColimit col;
  col.carrier = chain.levels[top];
  // inject[n] is the composed forward map X_n -> X_N; two elements are
  // identified exactly when their forward images at the final level agree,
  // so X_N itself represents every class exactly once.
  std::vector<MeasurableMap> inject;
  MeasurableMap acc = MeasurableMap::identity(chain.levels[top]);
  std::vector<MeasurableMap> rev;
  rev.push_back(acc);
  for (std::size_t n = top; n-- > 0;) {
    acc = compose(acc, chain.links[n]);
    rev.push_back(acc);
  }
  for (std::size_t n = 0; n <= top; ++n) inject.push_back(rev[top - n]);
  col.inject = std::move(inject);
  return col;
}

CochainLimit cochain_limit(const FinCochain& cochain) {
  check_chain_shape(cochain.levels, cochain.links, /*forward=*/false);
  const std::size_t top = cochain.levels.size() - 1;
  CochainLimit lim;
  lim.carrier = cochain.levels[top];
  // project[n] = links[n] o ... o links[N-1] : X_N -> X_n; project[N] = id.
  std::vector<MeasurableMap> project(cochain.levels.size(), MeasurableMap::identity(lim.carrier));
  for (std::size_t n = top; n-- > 0;) {
    project[n] = compose(cochain.links[n], project[n + 1]);
  }
  lim.project = std::move(project);
  return lim;
}

}  // namespace choicelab

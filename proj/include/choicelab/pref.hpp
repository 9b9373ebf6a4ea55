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

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "choicelab/choice.hpp"
#include "choicelab/errors.hpp"

namespace choicelab {

template <class T>
std::size_t menu_index(const Menu<T>& m, const T& x) {
  const auto it = std::lower_bound(m.begin(), m.end(), x);
  if (it == m.end() || !(*it == x)) throw InvariantError("element outside the carrier");
  return static_cast<std::size_t>(it - m.begin());
}

// A reflexive, transitive relation over a finite carrier, stored as a dense
// boolean matrix in carrier order. Both invariants are checked at
// construction.
template <class T>
class Preorder {
 public:
  // The matrix rows/columns follow the carrier's canonical order.
  static Preorder from_matrix(Menu<T> carrier, std::vector<std::uint8_t> le) {
    Preorder p(std::move(carrier), std::move(le));
    p.check_shape();
    p.check_reflexive();
    p.check_transitive();
    return p;
  }

  // `pairs` is the complete list of related pairs besides reflexivity; the
  // relation must already be transitively closed.
  static Preorder from_pairs(Menu<T> carrier, const std::vector<std::pair<T, T>>& pairs) {
    std::vector<std::uint8_t> le(carrier.size() * carrier.size(), 0);
    for (std::size_t i = 0; i < carrier.size(); ++i) le[i * carrier.size() + i] = 1;
    for (const auto& [a, b] : pairs) {
      le[menu_index(carrier, a) * carrier.size() + menu_index(carrier, b)] = 1;
    }
    return from_matrix(std::move(carrier), std::move(le));
  }

  // Reflexive-transitive closure of arbitrary generating pairs.
  static Preorder closure(Menu<T> carrier, const std::vector<std::pair<T, T>>& pairs) {
    const std::size_t n = carrier.size();
    std::vector<std::uint8_t> le(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) le[i * n + i] = 1;
    for (const auto& [a, b] : pairs) {
      le[menu_index(carrier, a) * n + menu_index(carrier, b)] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!le[i * n + k]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (le[k * n + j]) le[i * n + j] = 1;
        }
      }
    }
    return from_matrix(std::move(carrier), std::move(le));
  }

  const Menu<T>& carrier() const { return carrier_; }
  std::size_t size() const { return carrier_.size(); }
  bool le(std::size_t i, std::size_t j) const { return le_[i * carrier_.size() + j]; }
  bool le(const T& a, const T& b) const {
    return le(menu_index(carrier_, a), menu_index(carrier_, b));
  }
  bool lt(std::size_t i, std::size_t j) const { return le(i, j) && !le(j, i); }
  const std::vector<std::uint8_t>& matrix() const { return le_; }

  // All related pairs besides reflexivity, in carrier order.
  std::vector<std::pair<T, T>> pairs() const {
    std::vector<std::pair<T, T>> out;
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < size(); ++j) {
        if (i != j && le(i, j)) out.emplace_back(carrier_[i], carrier_[j]);
      }
    }
    return out;
  }

  bool is_antisymmetric() const {
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = i + 1; j < size(); ++j) {
        if (le(i, j) && le(j, i)) return false;
      }
    }
    return true;
  }

  bool operator==(const Preorder& other) const {
    return carrier_ == other.carrier_ && le_ == other.le_;
  }
  bool operator!=(const Preorder& other) const { return !(*this == other); }

 protected:
  Preorder(Menu<T> carrier, std::vector<std::uint8_t> le)
      : carrier_(std::move(carrier)), le_(std::move(le)) {}

  void check_shape() const {
    if (le_.size() != carrier_.size() * carrier_.size()) {
      throw InvariantError("relation matrix has wrong shape");
    }
    for (const auto v : le_) {
      if (v > 1) throw InvariantError("relation matrix entries must be 0/1");
    }
  }
  void check_reflexive() const {
    for (std::size_t i = 0; i < size(); ++i) {
      if (!le(i, i)) throw InvariantError("relation is not reflexive");
    }
  }
  void check_transitive() const {
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < size(); ++j) {
        if (!le(i, j)) continue;
        for (std::size_t k = 0; k < size(); ++k) {
          if (le(j, k) && !le(i, k)) throw InvariantError("relation is not transitive");
        }
      }
    }
  }

 private:
  Menu<T> carrier_;
  std::vector<std::uint8_t> le_;
};

// A preorder that is additionally anti-symmetric.
template <class T>
class Poset : public Preorder<T> {
 public:
  static Poset from_matrix(Menu<T> carrier, std::vector<std::uint8_t> le) {
    return Poset(Preorder<T>::from_matrix(std::move(carrier), std::move(le)));
  }
  static Poset from_pairs(Menu<T> carrier, const std::vector<std::pair<T, T>>& pairs) {
    return Poset(Preorder<T>::from_pairs(std::move(carrier), pairs));
  }
  static Poset closure(Menu<T> carrier, const std::vector<std::pair<T, T>>& pairs) {
    return Poset(Preorder<T>::closure(std::move(carrier), pairs));
  }
  static Poset antichain(Menu<T> carrier) { return closure(std::move(carrier), {}); }

  explicit Poset(Preorder<T> p) : Preorder<T>(std::move(p)) {
    if (!this->is_antisymmetric()) throw InvariantError("relation is not anti-symmetric");
  }
};

// The maximal elements of k: those m with no k-element strictly above them.
// Nonempty whenever k is (finite carriers always have maximal elements).
template <class T>
Menu<T> maximize(const Preorder<T>& p, const Menu<T>& k) {
  std::vector<std::size_t> idx;
  idx.reserve(k.size());
  for (const T& x : k) idx.push_back(menu_index(p.carrier(), x));
  std::vector<T> out;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < idx.size() && !dominated; ++b) {
      if (p.lt(idx[a], idx[b])) dominated = true;
    }
    if (!dominated) out.push_back(k[a]);
  }
  return Menu<T>::of(std::move(out));
}

// The contravariant transport x1 <= x2 iff f(x1) <= f(x2). Always a preorder;
// anti-symmetry can fail when f identifies points, so the poset-returning
// variant below reports that as a normalization-needed condition.
template <class T, class F>
Preorder<T> prel_map_preorder(const Preorder<T>& p, F f, Menu<T> domain_carrier) {
  const std::size_t n = domain_carrier.size();
  std::vector<std::size_t> to(n);
  for (std::size_t i = 0; i < n; ++i) to[i] = menu_index(p.carrier(), f(domain_carrier[i]));
  std::vector<std::uint8_t> le(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) le[i * n + j] = p.le(to[i], to[j]) ? 1 : 0;
  }
  return Preorder<T>::from_matrix(std::move(domain_carrier), std::move(le));
}

template <class T, class F>
Poset<T> prel_map(const Poset<T>& p, F f, Menu<T> domain_carrier) {
  Preorder<T> q = prel_map_preorder(p, f, std::move(domain_carrier));
  if (!q.is_antisymmetric()) {
    throw NormalizationNeeded(
        "transported relation is not anti-symmetric; normalize_preorder resolves this");
  }
  return Poset<T>(std::move(q));
}

// x <=' y iff x = y, or x <= y and not y <= x. Anti-symmetric by
// construction, and maximization agrees with the original preorder's on
// every menu.
template <class T>
Poset<T> normalize_preorder(const Preorder<T>& q) {
  const std::size_t n = q.size();
  std::vector<std::uint8_t> le(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      le[i * n + j] = (i == j || (q.le(i, j) && !q.le(j, i))) ? 1 : 0;
    }
  }
  return Poset<T>::from_matrix(q.carrier(), std::move(le));
}

// The maximization map as a choice function (lambda = m over the carrier).
template <class T>
ChoiceFunction<T> maximize_as_choicefn(const Poset<T>& p) {
  return ChoiceFunction<T>::intensional(
      p.carrier(), [p](const Menu<T>& k) { return maximize(p, k); },
      /*singleton_law=*/true, /*order_backed=*/true);
}

namespace detail {

// Candidate relation for pair-encoded poset enumeration: pairs (i,j), i<j,
// in lexicographic order; ternary digit 0 = incomparable, 1 = i<=j, 2 = j<=i.
// Reflexivity and anti-symmetry hold by construction; returns whether the
// decoded relation is transitive.
inline bool decode_poset_candidate(unsigned long long code, std::size_t n,
                                   std::vector<std::uint8_t>& le) {
  le.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) le[i * n + i] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      switch (code % 3) {
        case 1:
          le[i * n + j] = 1;
          break;
        case 2:
          le[j * n + i] = 1;
          break;
        default:
          break;
      }
      code /= 3;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!le[i * n + j] || i == j) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (le[j * n + k] && !le[i * n + k]) return false;
      }
    }
  }
  return true;
}

inline unsigned long long pow_ull(unsigned long long base, std::size_t exp) {
  unsigned long long out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace detail

// All labeled posets on the carrier (choice behavior is label-sensitive, so
// isomorphic relabelings are distinct), in candidate-code order.
template <class T>
std::vector<Poset<T>> enumerate_posets(const Menu<T>& carrier, std::size_t cap = 5) {
  const std::size_t n = carrier.size();
  if (n > cap) {
    throw CapExceededError("poset enumeration beyond " + std::to_string(cap) + " elements");
  }
  const unsigned long long total = detail::pow_ull(3, n * (n - 1) / 2);
  std::vector<Poset<T>> out;
  std::vector<std::uint8_t> le;
  for (unsigned long long code = 0; code < total; ++code) {
    if (detail::decode_poset_candidate(code, n, le)) {
      out.push_back(Poset<T>::from_matrix(carrier, le));
    }
  }
  return out;
}

// All labeled preorders on the carrier: every reflexive matrix over the
// 2^(n(n-1)) off-diagonal masks that happens to be transitive.
template <class T>
std::vector<Preorder<T>> enumerate_preorders(const Menu<T>& carrier, std::size_t cap = 4) {
  const std::size_t n = carrier.size();
  if (n > cap) {
    throw CapExceededError("preorder enumeration beyond " + std::to_string(cap) + " elements");
  }
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) slots.emplace_back(i, j);
    }
  }
  std::vector<Preorder<T>> out;
  for (unsigned long long mask = 0; mask < (1ull << slots.size()); ++mask) {
    std::vector<std::uint8_t> le(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) le[i * n + i] = 1;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (mask & (1ull << s)) le[slots[s].first * n + slots[s].second] = 1;
    }
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i) {
      for (std::size_t j = 0; j < n && transitive; ++j) {
        if (!le[i * n + j]) continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (le[j * n + k] && !le[i * n + k]) {
            transitive = false;
            break;
          }
        }
      }
    }
    if (transitive) out.push_back(Preorder<T>::from_matrix(carrier, std::move(le)));
  }
  return out;
}

// Brute-force poset-rationalizability oracle: scans every candidate relation
// on the carrier (3^(n(n-1)/2) codes, transitivity-filtered) for one whose
// maximization reproduces c on every nonempty menu. Matches are unique when
// they exist (maximization is injective on posets), so the first match in
// code order is *the* match. The parallel path splits the code range across
// OpenMP threads with a min-index reduction; the serial path is the
// reference implementation.
template <class T>
std::optional<Poset<T>> is_poset_rationalizable(const ChoiceFunction<T>& c, std::size_t cap = 5,
                                                bool parallel = true) {
  if (!c.carrier()) throw InvariantError("rationalizability needs the function's carrier");
  const Menu<T> carrier = *c.carrier();
  const std::size_t n = carrier.size();
  if (n == 0) throw InvariantError("rationalizability needs a nonempty carrier");
  if (n > cap) {
    throw CapExceededError("rationalizability search beyond " + std::to_string(cap) +
                           " elements");
  }
  const auto menus = all_submenus(carrier);
  std::vector<Menu<T>> targets;
  targets.reserve(menus.size());
  for (const auto& k : menus) targets.push_back(c.evaluate(k));

  const unsigned long long total = detail::pow_ull(3, n * (n - 1) / 2);
  const auto matches = [&](unsigned long long code, std::vector<std::uint8_t>& le) {
    if (!detail::decode_poset_candidate(code, n, le)) return false;
    for (std::size_t m = 0; m < menus.size(); ++m) {
      // Inline maximize over the raw matrix to keep the scan allocation-light.
      std::vector<T> maximal;
      for (std::size_t a = 0; a < menus[m].size(); ++a) {
        const std::size_t ia = menu_index(carrier, menus[m][a]);
        bool dominated = false;
        for (std::size_t b = 0; b < menus[m].size() && !dominated; ++b) {
          const std::size_t ib = menu_index(carrier, menus[m][b]);
          if (le[ia * n + ib] && !le[ib * n + ia]) dominated = true;
        }
        if (!dominated) maximal.push_back(menus[m][a]);
      }
      if (Menu<T>::of(std::move(maximal)) != targets[m]) return false;
    }
    return true;
  };

  unsigned long long found = total;
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel
    {
      std::vector<std::uint8_t> le;
      unsigned long long local = total;
#pragma omp for schedule(static) nowait
      for (long long code = 0; code < static_cast<long long>(total); ++code) {
        if (local == total && matches(static_cast<unsigned long long>(code), le)) {
          local = static_cast<unsigned long long>(code);
        }
      }
#pragma omp critical
      found = std::min(found, local);
    }
#else
    parallel = false;
#endif
  }
  if (!parallel) {
    std::vector<std::uint8_t> le;
    for (unsigned long long code = 0; code < total; ++code) {
      if (matches(code, le)) {
        found = code;
        break;
      }
    }
  }
  if (found == total) return std::nullopt;
  std::vector<std::uint8_t> le;
  detail::decode_poset_candidate(found, n, le);
  return Poset<T>::from_matrix(carrier, std::move(le));
}

}  // namespace choicelab

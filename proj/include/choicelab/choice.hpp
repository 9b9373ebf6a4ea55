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
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "choicelab/act.hpp"
#include "choicelab/errors.hpp"
#include "choicelab/space.hpp"

namespace choicelab {

// A finite menu: canonically ordered, duplicate-free. The empty menu is a
// valid value (choice functions send it to itself).
template <class T>
class Menu {
 public:
  Menu() = default;

  static Menu of(std::vector<T> items) {
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    Menu m;
    m.items_ = std::move(items);
    return m;
  }
  static Menu singleton(T item) { return of({std::move(item)}); }

  const std::vector<T>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const T& operator[](std::size_t i) const { return items_[i]; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  bool contains(const T& x) const {
    return std::binary_search(items_.begin(), items_.end(), x);
  }

  bool operator==(const Menu& other) const { return items_ == other.items_; }
  bool operator!=(const Menu& other) const { return !(*this == other); }
  bool operator<(const Menu& other) const { return items_ < other.items_; }

 private:
  std::vector<T> items_;
};

template <class T>
bool is_subset(const Menu<T>& a, const Menu<T>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

template <class T>
Menu<T> intersect(const Menu<T>& a, const Menu<T>& b) {
  std::vector<T> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Menu<T>::of(std::move(out));
}

template <class T>
Menu<T> menu_union(const Menu<T>& a, const Menu<T>& b) {
  std::vector<T> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Menu<T>::of(std::move(out));
}

template <class T, class F>
auto image(const Menu<T>& menu, F&& f) -> Menu<std::decay_t<decltype(f(menu[0]))>> {
  using U = std::decay_t<decltype(f(menu[0]))>;
  std::vector<U> out;
  out.reserve(menu.size());
  for (const T& x : menu) out.push_back(f(x));
  return Menu<U>::of(std::move(out));
}

// All submenus with min_size <= size <= max_size, enumerated by ascending
// size and, within a size, in lexicographic index order (deterministic).
template <class T>
std::vector<Menu<T>> all_submenus(const Menu<T>& menu, std::size_t min_size = 1,
                                  std::size_t max_size = SIZE_MAX) {
  const std::size_t n = menu.size();
  if (n > 20) throw CapExceededError("submenu enumeration beyond 20 items");
  std::vector<Menu<T>> out;
  if (min_size == 0) out.push_back(Menu<T>());
  max_size = std::min(max_size, n);
  for (std::size_t k = std::max<std::size_t>(min_size, 1); k <= max_size; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::vector<T> items;
      items.reserve(k);
      for (const std::size_t i : idx) items.push_back(menu[i]);
      out.push_back(Menu<T>::of(std::move(items)));
      // Next k-combination in lexicographic order.
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return out;
}

// A choice function: maps every finite menu K to a submenu C(K) of K.
// Extensional bodies are association tables over a declared menu universe
// (evaluation outside it is an error, never a silent default); Intensional
// bodies evaluate any menu through a pure callback. Values are immutable and
// cheap to copy. C([]) = [] always. When the singleton law is on (default),
// C({x}) = {x} is enforced at every evaluation.
//
// The order_backed flag records a provenance fact the evaluator cannot
// express on its own: the function is known to be maximization of one fixed
// preorder. Such functions are determined by their values on pair menus, so
// equality checks may legitimately stop there. The flag is set only where
// that is provable (order maximization itself, and functorial images of
// order-backed functions) and defaults to false everywhere else.
template <class T>
class ChoiceFunction {
 public:
  using Evaluator = std::function<Menu<T>(const Menu<T>&)>;
  using Table = std::vector<std::pair<Menu<T>, Menu<T>>>;

  static ChoiceFunction extensional(std::optional<Menu<T>> carrier, Table table,
                                    bool singleton_law = true,
                                    bool order_backed = false) {
    auto impl = std::make_shared<Impl>();
    impl->carrier = std::move(carrier);
    impl->singleton_law = singleton_law;
    impl->order_backed = order_backed;
    std::sort(table.begin(), table.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < table.size(); ++i) {
      const auto& [key, value] = table[i];
      if (i > 0 && table[i - 1].first == key) {
        throw InvariantError("duplicate menu in choice table");
      }
      if (!is_subset(value, key)) throw InvariantError("choice table violates contraction");
      if (singleton_law && key.size() == 1 && value != key) {
        throw InvariantError("choice table violates the singleton law");
      }
      if (impl->carrier) {
        for (const T& x : key) {
          if (!impl->carrier->contains(x)) {
            throw InvariantError("choice table menu leaves the carrier");
          }
        }
      }
    }
    impl->table = std::move(table);
    impl->extensional = true;
    ChoiceFunction c;
    c.impl_ = std::move(impl);
    return c;
  }

  static ChoiceFunction intensional(std::optional<Menu<T>> carrier, Evaluator evaluate,
                                    bool singleton_law = true,
                                    bool order_backed = false) {
    auto impl = std::make_shared<Impl>();
    impl->carrier = std::move(carrier);
    impl->singleton_law = singleton_law;
    impl->order_backed = order_backed;
    impl->evaluate = std::move(evaluate);
    impl->extensional = false;
    ChoiceFunction c;
    c.impl_ = std::move(impl);
    return c;
  }

  Menu<T> evaluate(const Menu<T>& k) const {
    if (k.empty()) return Menu<T>();
    Menu<T> result;
    if (impl_->extensional) {
      const auto it = std::lower_bound(
          impl_->table.begin(), impl_->table.end(), k,
          [](const auto& entry, const Menu<T>& key) { return entry.first < key; });
      if (it == impl_->table.end() || it->first != k) {
        throw UniverseError("menu of size " + std::to_string(k.size()) +
                            " outside the declared menu universe");
      }
      result = it->second;
    } else {
      result = impl_->evaluate(k);
    }
    if (!is_subset(result, k)) throw InvariantError("choice body violates contraction");
    if (impl_->singleton_law && k.size() == 1 && result != k) {
      throw InvariantError("choice body violates the singleton law");
    }
    return result;
  }
  Menu<T> operator()(const Menu<T>& k) const { return evaluate(k); }

  bool is_extensional() const { return impl_->extensional; }
  const Table& table() const {
    if (!impl_->extensional) throw InvariantError("intensional body has no table");
    return impl_->table;
  }
  // The declared menu universe: table keys for extensional bodies, empty for
  // intensional ones (evaluable everywhere).
  std::vector<Menu<T>> universe() const {
    std::vector<Menu<T>> out;
    if (impl_->extensional) {
      out.reserve(impl_->table.size());
      for (const auto& [key, value] : impl_->table) out.push_back(key);
    }
    return out;
  }
  const std::optional<Menu<T>>& carrier() const { return impl_->carrier; }
  bool singleton_law() const { return impl_->singleton_law; }
  bool order_backed() const { return impl_->order_backed; }

 private:
  struct Impl {
    std::optional<Menu<T>> carrier;
    bool singleton_law = true;
    bool order_backed = false;
    bool extensional = false;
    Table table;
    Evaluator evaluate;
  };
  ChoiceFunction() = default;
  std::shared_ptr<const Impl> impl_;
};

// The event B^K_L = "C chooses within L when offered K".
template <class T>
struct ChoiceEvent {
  Menu<T> K;
  Menu<T> L;

  static ChoiceEvent of(Menu<T> k, Menu<T> l) {
    if (!is_subset(l, k)) throw InvariantError("choice event needs L within K");
    return ChoiceEvent{std::move(k), std::move(l)};
  }
};

template <class T>
bool in_event(const ChoiceFunction<T>& c, const ChoiceEvent<T>& e) {
  return is_subset(c.evaluate(e.K), e.L);
}

// The contravariant action on choice functions:
//   relabel(c, f)(K) = f^{-1}[c(f[K])] intersected with K.
// The optional carrier names the domain set the result lives on. Relabeling
// a maximization yields maximization of the pulled-back preorder
// (x <= y iff f(x) <= f(y)), so order_backed carries over.
template <class T, class F>
ChoiceFunction<T> relabel(const ChoiceFunction<T>& c, F f,
                          std::optional<std::type_identity_t<Menu<T>>> domain_carrier =
                              std::nullopt) {
  return ChoiceFunction<T>::intensional(
      std::move(domain_carrier),
      [c, f](const Menu<T>& k) {
        const Menu<T> chosen = c.evaluate(image(k, f));
        std::vector<T> keep;
        for (const T& x : k) {
          if (chosen.contains(f(x))) keep.push_back(x);
        }
        return Menu<T>::of(std::move(keep));
      },
      c.singleton_law(), c.order_backed());
}

// Turns a measurable map into a callable on point identifiers.
std::function<std::string(const std::string&)> point_fn(const MeasurableMap& f);

// Menu of all point identifiers of a space.
Menu<std::string> point_menu(const FinSpace& space);

// relabel along a measurable map, at the level of point identifiers.
ChoiceFunction<std::string> relabel(const ChoiceFunction<std::string>& c,
                                    const MeasurableMap& f);

// The action on choice functions over acts:
//   gamma_map(c, phi)(K) = {g in K | g o phi in c({h o phi | h in K})},
// i.e. relabel along the pullback of acts. c lives on acts over phi's domain;
// the result lives on acts over phi's codomain.
ChoiceFunction<Act> gamma_map(const ChoiceFunction<Act>& c, const MeasurableMap& phi);

// Lifts c along an injection f into a bigger set:
//   c'(K) = f[c(f^{-1}[K])].
// Menus disjoint from the image may legitimately choose the empty menu, so
// the result does not carry the singleton law. The witness property
// relabel(c', f) = c is verified on c's menu universe (table keys when
// extensional, otherwise every submenu of the carrier).
template <class T, class F>
ChoiceFunction<T> lift_along_injection(const ChoiceFunction<T>& c, F f,
                                       Menu<T> codomain_carrier) {
  if (!c.carrier()) {
    throw InvariantError("lift_along_injection needs the input's carrier");
  }
  const Menu<T> domain = *c.carrier();
  std::vector<T> images;
  images.reserve(domain.size());
  for (const T& x : domain) {
    T y = f(x);
    if (!codomain_carrier.contains(y)) {
      throw InvariantError("lift_along_injection: image leaves the codomain carrier");
    }
    images.push_back(std::move(y));
  }
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
    throw InvariantError("lift_along_injection: map is not injective");
  }

  auto lifted = ChoiceFunction<T>::intensional(
      std::move(codomain_carrier),
      [c, f, domain](const Menu<T>& k) {
        std::vector<T> pre;
        for (const T& x : domain) {
          if (k.contains(f(x))) pre.push_back(x);
        }
        return image(c.evaluate(Menu<T>::of(std::move(pre))), f);
      },
      /*singleton_law=*/false);

  const auto back = relabel(lifted, f, domain);
  std::vector<Menu<T>> universe = c.universe();
  if (universe.empty()) universe = all_submenus(domain);
  for (const Menu<T>& menu : universe) {
    if (back.evaluate(menu) != c.evaluate(menu)) {
      throw InvariantError("lift_along_injection: witness property failed");
    }
  }
  return lifted;
}

ChoiceFunction<std::string> lift_along_injection(const ChoiceFunction<std::string>& c,
                                                 const MeasurableMap& f);

// First menu in the given order where the two functions disagree, if any.
template <class T>
std::optional<Menu<T>> first_disagreement(const ChoiceFunction<T>& a,
                                          const ChoiceFunction<T>& b,
                                          const std::vector<Menu<T>>& menus) {
  for (const Menu<T>& m : menus) {
    if (a.evaluate(m) != b.evaluate(m)) return m;
  }
  return std::nullopt;
}

template <class T>
bool agree_on(const ChoiceFunction<T>& a, const ChoiceFunction<T>& b,
              const std::vector<Menu<T>>& menus) {
  return !first_disagreement(a, b, menus).has_value();
}

// Glues a compatible family of per-level choice functions into one on the
// chain colimit: mu(K) picks the least level m whose injection image covers
// K, pulls K back, applies that level's function, and pushes forward.
// Compatibility (family[n] = relabel(family[n+1], links[n]) on every menu)
// is checked first, and relabel(mu, iota_n) = family[n] is re-verified.
ChoiceFunction<std::string> colimit_choice(const FinChain& chain,
                                           const std::vector<ChoiceFunction<std::string>>& family,
                                           std::size_t menu_guard = 12);

}  // namespace choicelab

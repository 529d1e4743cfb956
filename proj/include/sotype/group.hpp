// Copyright 2026 The sotype Authors
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

/// @file group.hpp
/// Exhaustively enumerated finite groups over any element type that
/// satisfies `group_element`.
///
/// A `Group` holds every element in a flat vector, in the breadth-first
/// order in which closure discovered it, plus an open-addressing index from
/// element to position. All structural routines (centralisers, classes,
/// normal closures, derived and lower central series) work by scanning or by
/// rerunning closure on subsets, which is adequate up to a few million
/// elements.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sotype/arith.hpp"
#include "sotype/errors.hpp"

namespace sot {

template <class E>
concept group_element = requires(const E& a, const E& b) {
  { a * b } -> std::same_as<E>;
  { a.inverse() } -> std::same_as<E>;
  { a.identity() } -> std::same_as<E>;
  { a.is_identity() } -> std::convertible_to<bool>;
  { a.compatible(b) } -> std::convertible_to<bool>;
  { a.order() } -> std::convertible_to<u64>;
  { a.hash() } -> std::convertible_to<std::size_t>;
  { a == b } -> std::convertible_to<bool>;
  { a < b } -> std::convertible_to<bool>;
};

inline constexpr std::size_t default_cap = 5'000'000;

/// Order by repeated multiplication; valid for any element type.
template <group_element E>
u64 order_by_powers(const E& x) {
  u64 k = 1;
  for (E y = x; !y.is_identity(); y = y * x) ++k;
  return k;
}

/// a^-1 b^-1 a b
template <group_element E>
E commutator(const E& a, const E& b) {
  return a.inverse() * b.inverse() * a * b;
}

namespace detail {

/// Open-addressing hash index over positions of an external element vector.
class IndexTable {
 public:
  template <class E>
  std::optional<std::size_t> find(const std::vector<E>& elems, const E& x) const {
    if (slots_.empty()) return std::nullopt;
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t s = x.hash() & mask;; s = (s + 1) & mask) {
      const auto slot = slots_[s];
      if (slot == 0) return std::nullopt;
      if (elems[slot - 1] == x) return slot - 1;
    }
  }

  /// Indexes elems.back(). Returns the position of an equal element already
  /// present, or nothing when the new element was inserted.
  template <class E>
  std::optional<std::size_t> insert_last(const std::vector<E>& elems) {
    if (2 * (count_ + 1) > slots_.size()) rehash(elems, std::max<std::size_t>(16, 2 * slots_.size()));
    const std::size_t idx = elems.size() - 1;
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t s = elems[idx].hash() & mask;; s = (s + 1) & mask) {
      const auto slot = slots_[s];
      if (slot == 0) {
        slots_[s] = static_cast<std::uint32_t>(idx + 1);
        ++count_;
        return std::nullopt;
      }
      if (elems[slot - 1] == elems[idx]) return slot - 1;
    }
  }

 private:
  template <class E>
  void rehash(const std::vector<E>& elems, std::size_t size) {
    slots_.assign(size, 0);
    const std::size_t mask = size - 1;
    // Only indexed positions are reinserted; elems.back() may be pending.
    for (std::size_t i = 0; i < count_; ++i) {
      std::size_t s = elems[i].hash() & mask;
      while (slots_[s] != 0) s = (s + 1) & mask;
      slots_[s] = static_cast<std::uint32_t>(i + 1);
    }
  }

  std::vector<std::uint32_t> slots_;
  std::size_t count_ = 0;
};

}  // namespace detail

template <group_element E>
class Group {
 public:
  using element_type = E;

  /// Breadth-first closure of the generators under left multiplication.
  ///
  /// Generators are sorted by key and deduplicated first, so the element
  /// order is a function of the generating set alone. Throws cap_exceeded
  /// once more than `cap` elements have been found.
  static Group generate(std::vector<E> generators, std::size_t cap = default_cap) {
    if (generators.empty()) throw parameter_error("closure needs at least one generator");
    if (cap == 0) throw parameter_error("closure cap must be positive");
    for (const auto& g : generators)
      if (!g.compatible(generators.front())) throw carrier_mismatch("generators live on different carriers");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    Group G;
    G.generators_ = std::move(generators);
    G.elements_.push_back(G.generators_.front().identity());
    G.index_.insert_last(G.elements_);
    for (std::size_t i = 0; i < G.elements_.size(); ++i) {
      for (const auto& g : G.generators_) {
        E y = g * G.elements_[i];
        G.elements_.push_back(std::move(y));
        if (G.index_.insert_last(G.elements_)) {
          G.elements_.pop_back();
        } else if (G.elements_.size() > cap) {
          throw cap_exceeded("group has more than " + std::to_string(cap) + " elements");
        }
      }
    }
    return G;
  }

  /// The group generated by this one and `g`. Existing elements are already
  /// closed under the old generators, so only `g` is applied to them; new
  /// elements get every generator.
  Group extended(E g, std::size_t cap = default_cap) const {
    if (!g.compatible(identity())) throw carrier_mismatch("generator lives on a different carrier");
    if (contains(g)) return *this;
    Group G = *this;
    const E added = g;
    G.generators_.push_back(std::move(g));
    std::sort(G.generators_.begin(), G.generators_.end());
    const std::size_t old_size = G.elements_.size();
    auto push = [&](E y) {
      G.elements_.push_back(std::move(y));
      if (G.index_.insert_last(G.elements_)) {
        G.elements_.pop_back();
      } else if (G.elements_.size() > cap) {
        throw cap_exceeded("group has more than " + std::to_string(cap) + " elements");
      }
    };
    for (std::size_t i = 0; i < G.elements_.size(); ++i) {
      if (i < old_size) {
        push(added * G.elements_[i]);
      } else {
        for (const auto& h : G.generators_) push(h * G.elements_[i]);
      }
    }
    return G;
  }

  std::size_t order() const { return elements_.size(); }
  const std::vector<E>& elements() const { return elements_; }
  const std::vector<E>& generators() const { return generators_; }
  const E& identity() const { return elements_.front(); }

  std::optional<std::size_t> index_of(const E& x) const {
    if (!x.compatible(identity())) return std::nullopt;
    return index_.find(elements_, x);
  }
  bool contains(const E& x) const { return index_of(x).has_value(); }

  bool is_abelian() const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
      for (std::size_t j = i + 1; j < generators_.size(); ++j)
        if (!(generators_[i] * generators_[j] == generators_[j] * generators_[i])) return false;
    return true;
  }

 private:
  Group() = default;

  std::vector<E> generators_;
  std::vector<E> elements_;
  detail::IndexTable index_;
};

/// Smallest subgroup of G containing `candidates`, built by adding only the
/// candidates that are not yet covered. Each accepted generator at least
/// doubles the subgroup, so at most log2|G| closures run.
template <group_element E>
Group<E> subgroup_generated(const Group<E>& G, std::span<const E> candidates) {
  Group<E> H = Group<E>::generate({G.identity()});
  for (const auto& c : candidates)
    if (!H.contains(c)) H = H.extended(c, G.order());
  return H;
}

/// Normal closure in G of a seed set: the subgroup generated by all
/// G-conjugates of the seeds. Returns G as soon as the partial closure
/// exceeds half of G, since no proper subgroup can.
template <group_element E>
Group<E> normal_closure(const Group<E>& G, std::span<const E> seed) {
  std::vector<E> inverses;
  for (const auto& g : G.generators()) inverses.push_back(g.inverse());

  Group<E> H = Group<E>::generate({G.identity()});
  std::deque<E> pending(seed.begin(), seed.end());
  while (!pending.empty()) {
    E c = std::move(pending.front());
    pending.pop_front();
    if (H.contains(c)) continue;
    for (std::size_t i = 0; i < inverses.size(); ++i) pending.push_back(inverses[i] * c * G.generators()[i]);
    H = H.extended(std::move(c), G.order());
    if (2 * H.order() > G.order()) return G;
  }
  return H;
}

/// {g in G : gx = xg}, found by a full scan.
template <group_element E>
Group<E> centralizer(const Group<E>& G, const E& x) {
  if (!G.contains(x)) throw parameter_error("element is not in the group");
  std::vector<E> members;
  for (const auto& g : G.elements())
    if (g * x == x * g) members.push_back(g);
  Group<E> C = subgroup_generated<E>(G, members);
  if (C.order() != members.size()) throw internal_error("centraliser scan is not closed");
  return C;
}

template <group_element E>
std::size_t centralizer_order(const Group<E>& G, const E& x) {
  std::size_t n = 0;
  for (const auto& g : G.elements())
    if (g * x == x * g) ++n;
  return n;
}

template <group_element E>
struct ConjugacyClass {
  E representative;
  std::size_t size;
  u64 order;
};

/// Classes with the identity first, then by (element order, size, key).
/// Each representative is the smallest key in its class.
template <group_element E>
struct ConjugacyClassTable {
  std::vector<ConjugacyClass<E>> classes;
  std::vector<std::uint32_t> class_of;  // element position -> class number
};

template <group_element E>
ConjugacyClassTable<E> conjugacy_classes(const Group<E>& G) {
  const auto& elems = G.elements();
  const auto& gens = G.generators();
  std::vector<E> inverses;
  for (const auto& g : gens) inverses.push_back(g.inverse());

  constexpr auto unassigned = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> raw_class(elems.size(), unassigned);
  std::vector<ConjugacyClass<E>> found;
  std::vector<std::size_t> orbit;
  for (std::size_t start = 0; start < elems.size(); ++start) {
    if (raw_class[start] != unassigned) continue;
    const auto id = static_cast<std::uint32_t>(found.size());
    orbit.assign(1, start);
    raw_class[start] = id;
    std::size_t best = start;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto pos = *G.index_of(inverses[i] * elems[orbit[k]] * gens[i]);
        if (raw_class[pos] != unassigned) continue;
        raw_class[pos] = id;
        orbit.push_back(pos);
        if (elems[pos] < elems[best]) best = pos;
      }
    }
    found.push_back({elems[best], orbit.size(), elems[best].order()});
  }

  std::vector<std::uint32_t> perm(found.size());
  std::iota(perm.begin(), perm.end(), 0u);
  std::sort(perm.begin(), perm.end(), [&](auto a, auto b) {
    const auto& x = found[a];
    const auto& y = found[b];
    if (x.order != y.order) return x.order < y.order;
    if (x.size != y.size) return x.size < y.size;
    return x.representative < y.representative;
  });
  std::vector<std::uint32_t> rank(found.size());
  ConjugacyClassTable<E> table;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    rank[perm[i]] = static_cast<std::uint32_t>(i);
    table.classes.push_back(found[perm[i]]);
  }
  table.class_of.resize(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) table.class_of[i] = rank[raw_class[i]];
  return table;
}

template <group_element E>
Group<E> derived_subgroup(const Group<E>& G) {
  const auto& gens = G.generators();
  std::vector<E> comms;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(commutator(gens[i], gens[j]));
  return normal_closure<E>(G, comms);
}

/// G = G0 > G1 > ... down to the first term equal to its own derived subgroup.
template <group_element E>
std::vector<Group<E>> derived_series(const Group<E>& G) {
  std::vector<Group<E>> series{G};
  while (series.back().order() > 1) {
    Group<E> next = derived_subgroup(series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

template <group_element E>
bool is_solvable(const Group<E>& G) {
  return derived_series(G).back().order() == 1;
}

/// G = g1 > g2 > ... with g(i+1) = [g(i), G], down to the first repeated term.
template <group_element E>
std::vector<Group<E>> lower_central_series(const Group<E>& G) {
  std::vector<Group<E>> series{G};
  while (series.back().order() > 1) {
    std::vector<E> comms;
    for (const auto& x : series.back().generators())
      for (const auto& g : G.generators()) comms.push_back(commutator(x, g));
    Group<E> next = normal_closure<E>(G, comms);
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

/// Structural nilpotency: the lower central series reaches 1.
template <group_element E>
bool is_nilpotent(const Group<E>& G) {
  return lower_central_series(G).back().order() == 1;
}

/// Nontrivial, and every nonidentity conjugacy class normally generates G.
/// Only classes of prime order are tried: a suitable power of any x has
/// prime order and its normal closure lies inside that of x.
template <group_element E>
bool is_simple(const Group<E>& G, const ConjugacyClassTable<E>& classes) {
  if (G.order() == 1) return false;
  if (is_prime(G.order())) return true;
  for (const auto& cls : classes.classes) {
    if (!is_prime(cls.order)) continue;
    const E seed[] = {cls.representative};
    if (normal_closure<E>(G, seed).order() != G.order()) return false;
  }
  return true;
}

template <group_element E>
bool is_simple(const Group<E>& G) {
  return is_simple(G, conjugacy_classes(G));
}

}  // namespace sot

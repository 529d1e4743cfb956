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

/// @file structure.hpp
/// Prime graphs, C_{p,p} detection, the partition-count checks for L2(q)
/// and Sz(q), the odd-prime s_p scans, the alpha_4 prime bound and the
/// eight-group check.

#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sotype/arith.hpp"
#include "sotype/constructions.hpp"
#include "sotype/errors.hpp"
#include "sotype/group.hpp"
#include "sotype/group_handle.hpp"
#include "sotype/spectrum.hpp"

namespace sot {

// ---------------------------------------------------------------------------
// Prime graph

struct PrimeGraph {
  std::vector<u64> vertices;                 // ascending
  std::vector<std::pair<u64, u64>> edges;    // p < q, ascending

  bool adjacent(u64 p, u64 q) const {
    if (p > q) std::swap(p, q);
    return std::binary_search(edges.begin(), edges.end(), std::pair{p, q});
  }
};

/// Vertices pi(G); {p, q} is an edge when G has an element of order pq.
inline PrimeGraph prime_graph(const OrderSpectrum& spec) {
  PrimeGraph g;
  g.vertices = spec.primes();
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j)
      if (spec.has_order(g.vertices[i] * g.vertices[j])) g.edges.emplace_back(g.vertices[i], g.vertices[j]);
  return g;
}

/// Graphs with at most one vertex count as connected.
inline bool is_connected(const PrimeGraph& g) {
  if (g.vertices.size() <= 1) return true;
  std::vector<bool> reached(g.vertices.size(), false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < g.vertices.size(); ++w)
      if (!reached[w] && g.adjacent(g.vertices[v], g.vertices[w])) {
        reached[w] = true;
        stack.push_back(w);
      }
  }
  return std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
}

/// Lexicographically smallest triple of pairwise non-adjacent primes.
inline std::optional<std::array<u64, 3>> independent_triple(const PrimeGraph& g) {
  const auto& v = g.vertices;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (g.adjacent(v[i], v[j])) continue;
      for (std::size_t k = j + 1; k < v.size(); ++k)
        if (!g.adjacent(v[i], v[k]) && !g.adjacent(v[j], v[k])) return std::array{v[i], v[j], v[k]};
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// C_{p,p}

/// No element of order p*t for a prime t != p. Equivalent to every order-p
/// element having a p-group as centraliser.
inline bool is_cpp_spectral(const OrderSpectrum& spec, u64 p) {
  for (u64 t : spec.primes())
    if (t != p && spec.has_order(p * t)) return false;
  return true;
}

/// Every centraliser of an element of order p is a p-group. Computed from
/// class representatives and cross-checked against the spectrum; a
/// disagreement throws internal_error.
template <group_element E>
bool is_cpp(const Group<E>& G, const ConjugacyClassTable<E>& classes, const OrderSpectrum& spec, u64 p) {
  if (!is_prime(p) || !spec.has_order(p)) throw parameter_error(std::to_string(p) + " is not in pi(G)");
  bool result = true;
  for (const auto& cls : classes.classes) {
    if (cls.order != p) continue;
    if (!is_power_of(centralizer_order(G, cls.representative), p)) {
      result = false;
      break;
    }
  }
  if (result != is_cpp_spectral(spec, p))
    throw internal_error("C_{p,p} centraliser and spectrum methods disagree at p = " + std::to_string(p));
  return result;
}

template <group_element E>
bool is_cpp(const Group<E>& G, const OrderSpectrum& spec, u64 p) {
  return is_cpp(G, conjugacy_classes(G), spec, p);
}

inline bool is_cpp(const GroupHandle& G, const OrderSpectrum& spec, u64 p) {
  return std::visit([&](const auto& g) { return is_cpp(g, spec, p); }, G);
}

/// Membership in the families of the classification of simple C_{2,2}-groups:
/// A5, A6, L3(4), L2(q) for q a Fermat prime, a Mersenne prime or a power of
/// 2, and Sz(q). L2(9) is recognised as A6.
inline bool in_c22_families(const GroupRecipe& r) {
  switch (r.kind) {
    case RecipeKind::alternating: return r.param == 5 || r.param == 6;
    case RecipeKind::psl2:
      return (is_power_of_two(r.param) && r.param >= 4) || is_fermat_prime(r.param) || is_mersenne_prime(r.param) ||
             r.param == 9;
    case RecipeKind::sz: return true;
    default: return r.name == "L3(4)" || r.name.rfind("Sz(", 0) == 0 || r.name == "A5" || r.name == "A6";
  }
}

// ---------------------------------------------------------------------------
// Partition profiles

struct PartitionPart {
  std::string label;
  u64 order;
};

struct PartitionProfile {
  enum class Family { l2, sz };
  Family family;
  u64 q;
  std::vector<PartitionPart> parts;
  u64 conjugate_count = 0;  // conjugates of the cyclic part the count formula runs over

  u64 part(std::string_view label) const {
    for (const auto& p : parts)
      if (p.label == label) return p.order;
    throw parameter_error("no partition part " + std::string(label));
  }
};

enum class L2Case { two_power, mersenne, fermat };

/// Which of the three partition arguments covers L2(q). Mersenne wins for q = 3.
inline std::optional<L2Case> l2_case(u64 q) {
  if (q >= 4 && is_power_of_two(q)) return L2Case::two_power;
  if (is_mersenne_prime(q)) return L2Case::mersenne;
  if (is_fermat_prime(q)) return L2Case::fermat;
  return std::nullopt;
}

/// U = (q-1)/d, S = (q+1)/d, P = q with d = gcd(2, q-1). The conjugate count
/// is q(q+1)/2 (conjugates of U) for 2-powers and Mersenne primes and
/// q(q-1)/2 (conjugates of S) for Fermat primes.
inline PartitionProfile l2_partition_profile(u64 q) {
  if (!prime_power(q)) throw parameter_error("L2(q) needs q a prime power");
  const u64 d = std::gcd(u64{2}, q - 1);
  PartitionProfile prof{PartitionProfile::Family::l2, q, {{"U", (q - 1) / d}, {"S", (q + 1) / d}, {"P", q}}};
  const auto c = l2_case(q);
  prof.conjugate_count = c == L2Case::fermat ? q * (q - 1) / 2 : q * (q + 1) / 2;
  return prof;
}

/// A = q-1, B = q-2r+1, C = q+2r+1, F = q^2 with r = sqrt(q/2).
inline PartitionProfile sz_partition_profile(u64 q) {
  const auto m = suzuki_parameter(q);
  if (!m) throw parameter_error("Sz(q) needs q an odd power of 2, at least 8");
  const u64 r = u64{1} << *m;
  return {PartitionProfile::Family::sz, q, {{"A", q - 1}, {"B", q - 2 * r + 1}, {"C", q + 2 * r + 1}, {"F", q * q}}};
}

struct CountsReport {
  std::vector<std::string> failures;
  std::vector<std::string> verified;
  bool passed() const { return failures.empty(); }
};

namespace detail {

inline void expect_count(CountsReport& rep, const std::string& what, u64 expected, u64 actual) {
  const auto line = what + ": expected " + std::to_string(expected) + ", got " + std::to_string(actual);
  (expected == actual ? rep.verified : rep.failures).push_back(line);
}

inline void odd_pair_conclusion(CountsReport& rep, const OrderSpectrum& spec);

}  // namespace detail

enum class PairMode { exists_pair, all_pairs };

struct PairReport {
  bool holds = false;
  /// exists_pair: a pair with differing counts; all_pairs: the first pair with equal counts.
  std::optional<std::pair<u64, u64>> witness;
};

/// exists_pair: some two odd primes of pi(G) have s_p != s_q (false when
/// there are fewer than two odd primes). all_pairs: s_p != s_q for every two
/// distinct primes, 2 included.
inline PairReport distinct_odd_sp(const OrderSpectrum& spec, PairMode mode) {
  auto primes = spec.primes();
  PairReport rep;
  if (mode == PairMode::exists_pair) {
    std::erase(primes, u64{2});
    for (std::size_t i = 0; i < primes.size(); ++i)
      for (std::size_t j = i + 1; j < primes.size(); ++j)
        if (spec.count(primes[i]) != spec.count(primes[j])) {
          rep.holds = true;
          rep.witness = std::pair{primes[i], primes[j]};
          return rep;
        }
    return rep;
  }
  rep.holds = true;
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = i + 1; j < primes.size(); ++j)
      if (spec.count(primes[i]) == spec.count(primes[j])) {
        rep.holds = false;
        rep.witness = std::pair{primes[i], primes[j]};
        return rep;
      }
  return rep;
}

inline void detail::odd_pair_conclusion(CountsReport& rep, const OrderSpectrum& spec) {
  const auto pair = distinct_odd_sp(spec, PairMode::exists_pair);
  if (pair.holds)
    rep.verified.push_back("s_" + std::to_string(pair.witness->first) + " != s_" + std::to_string(pair.witness->second));
  else
    rep.failures.push_back("no two odd primes with different s_p");
}

/// Checks the L2(q) element counts predicted by the partition into
/// conjugates of U, S and the Sylow subgroups P against the enumerated
/// spectrum of build(psl2 q). q must be a power of 2, a Mersenne prime or a
/// Fermat prime.
inline CountsReport verify_l2_counts(u64 q, const OrderSpectrum& spec) {
  const auto c = l2_case(q);
  if (!c) throw parameter_error("L2(" + std::to_string(q) + ") is not covered: q must be a power of 2, Fermat or Mersenne");
  CountsReport rep;
  detail::expect_count(rep, "|G|", psl2_order(q), spec.group_order());
  const auto prof = l2_partition_profile(q);
  const u64 l_u = q * (q + 1) / 2;  // conjugates of U
  const u64 l_s = q * (q - 1) / 2;  // conjugates of S

  auto per_order = [&](u64 part, u64 conjugates, const std::string& label) {
    for (u64 t : divisors(part)) {
      if (t == 1 || t % 2 == 0) continue;
      detail::expect_count(rep, "s_" + std::to_string(t) + " = " + std::to_string(conjugates) + "*phi(" + std::to_string(t) + ") [" + label + "]",
                           conjugates * euler_phi(t), spec.count(t));
    }
  };

  switch (*c) {
    case L2Case::two_power: {
      const auto lo = prime_divisors(q - 1);
      const auto hi = prime_divisors(q + 1);
      std::vector<u64> common;
      std::set_intersection(lo.begin(), lo.end(), hi.begin(), hi.end(), std::back_inserter(common));
      if (common.empty())
        rep.verified.push_back("pi(" + std::to_string(q - 1) + ") and pi(" + std::to_string(q + 1) + ") are disjoint");
      else
        rep.failures.push_back("pi(q-1) and pi(q+1) intersect");
      per_order(prof.part("U"), l_u, "U");
      per_order(prof.part("S"), l_s, "S");
      detail::expect_count(rep, "s_2 = q^2-1", q * q - 1, spec.count(2));
      break;
    }
    case L2Case::mersenne:
      per_order(prof.part("U"), l_u, "U");
      detail::expect_count(rep, "s_" + std::to_string(q) + " = q^2-1", q * q - 1, spec.count(q));
      break;
    case L2Case::fermat:
      per_order(prof.part("S"), l_s, "S");
      detail::expect_count(rep, "s_" + std::to_string(q) + " = q^2-1", q * q - 1, spec.count(q));
      break;
  }
  detail::odd_pair_conclusion(rep, spec);
  return rep;
}

/// Checks the Sz(q) partition consequences: gcd(|B|,|C|) = 1 with
/// |C|-|B| = 4r, every odd element order divides exactly one of |A|, |B|,
/// |C|, two odd primes have different s_p, and the spectrum totals |G|.
inline CountsReport verify_sz_counts(u64 q, const OrderSpectrum& spec) {
  const auto prof = sz_partition_profile(q);
  const u64 A = prof.part("A"), B = prof.part("B"), C = prof.part("C");
  const u64 r = u64{1} << *suzuki_parameter(q);
  CountsReport rep;
  detail::expect_count(rep, "|G|", sz_order(q), spec.group_order());
  u64 total = 0;
  for (const auto& [t, s] : spec.counts()) total += s;
  detail::expect_count(rep, "sum of s_t", sz_order(q), total);
  detail::expect_count(rep, "|C|-|B|", 4 * r, C - B);
  detail::expect_count(rep, "gcd(|B|,|C|)", 1, std::gcd(B, C));
  for (u64 t : spec.element_orders()) {
    if (t == 1 || t % 2 == 0) continue;
    const int hits = (A % t == 0) + (B % t == 0) + (C % t == 0);
    const auto line = "order " + std::to_string(t) + " divides " + std::to_string(hits) + " of |A|,|B|,|C|";
    (hits == 1 ? rep.verified : rep.failures).push_back(line);
  }
  detail::odd_pair_conclusion(rep, spec);
  return rep;
}

// ---------------------------------------------------------------------------
// alpha_4 prime bound

struct Alpha4Report {
  bool applicable = false;
  std::optional<std::array<u64, 3>> primes;  // r < p < q realising nse(G) \ {1}
  std::size_t prime_count = 0;
  std::string reason;
  bool passes() const { return !applicable || prime_count == 3; }
};

/// Applicable when nse(G) = {1, a, b, c} with a, b, c distinct and realised
/// as s_r, s_p, s_q by three distinct primes, and either 2 is among them or
/// |G| is odd. Then |pi(G)| must be 3.
inline Alpha4Report alpha4_prime_bound_check(const OrderSpectrum& spec) {
  Alpha4Report rep;
  rep.prime_count = spec.primes().size();
  const auto values = nse(spec);
  if (values.size() != 4 || values.front() != 1) {
    rep.reason = "|nse(G)| = " + std::to_string(values.size());
    return rep;
  }
  const auto primes = spec.primes();
  std::optional<std::array<u64, 3>> chosen;
  for (std::size_t i = 0; i < primes.size() && !chosen; ++i)
    for (std::size_t j = i + 1; j < primes.size() && !chosen; ++j)
      for (std::size_t k = j + 1; k < primes.size() && !chosen; ++k) {
        std::vector<u64> got{spec.count(primes[i]), spec.count(primes[j]), spec.count(primes[k])};
        std::sort(got.begin(), got.end());
        if (got == std::vector<u64>(values.begin() + 1, values.end())) chosen = std::array{primes[i], primes[j], primes[k]};
      }
  if (!chosen) {
    rep.reason = "nse(G) \\ {1} is not realised by three primes with distinct counts";
    return rep;
  }
  rep.primes = chosen;
  if ((*chosen)[0] != 2 && spec.group_order() % 2 == 0) {
    rep.reason = "2 is not among the realising primes and |G| is even";
    return rep;
  }
  rep.applicable = true;
  return rep;
}

// ---------------------------------------------------------------------------
// The eight simple groups of order divisible by exactly three primes

struct GroupSummary {
  std::string name;
  OrderSpectrum spectrum;
  bool simple;
  bool nonabelian;
};

struct EightGroupsEntry {
  std::string name;
  bool present = false;
  std::size_t alpha = 0;
  bool simple = false;
  bool ok = false;
};

struct EightGroupsReport {
  std::vector<EightGroupsEntry> entries;
  bool complete() const {
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.present; });
  }
  bool all_ok() const {
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return !e.present || e.ok; });
  }
  /// A5 is the only entry with |nse| = 4.
  bool verdict() const { return complete() && all_ok(); }
};

inline const std::array<const char*, 8>& eight_group_names() {
  static const std::array<const char*, 8> names{"A5", "L2(7)", "L2(8)", "L2(9)", "L2(17)", "L3(3)", "U3(3)", "U4(2)"};
  return names;
}

/// |nse| = 4 for A5 (or L2(5) standing in for it), exactly 5 for L2(7) and
/// L2(8), at least 5 for the rest; all nonabelian simple.
inline EightGroupsReport eight_groups_check(const std::vector<GroupSummary>& groups) {
  auto find = [&](std::string_view name) -> const GroupSummary* {
    for (const auto& g : groups)
      if (g.name == name) return &g;
    return nullptr;
  };
  EightGroupsReport rep;
  for (const char* name : eight_group_names()) {
    EightGroupsEntry e{name};
    const GroupSummary* g = find(name);
    if (!g && e.name == "A5") g = find("L2(5)");
    if (g) {
      e.present = true;
      e.alpha = alpha_size(g->spectrum);
      e.simple = g->simple && g->nonabelian;
      bool alpha_ok = e.name == "A5" ? e.alpha == 4 : e.alpha >= 5;
      if (e.name == "L2(7)" || e.name == "L2(8)") alpha_ok = e.alpha == 5;
      e.ok = e.simple && alpha_ok;
    }
    rep.entries.push_back(e);
  }
  return rep;
}

}  // namespace sot

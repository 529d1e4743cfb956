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

/// @file constructions.hpp
/// Concrete groups: the standard permutation families, PSL(2,q) on the
/// projective line, Sz(q) as 4x4 matrices over GF(q), generator files, and
/// the catalog used by the verification suite.

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sotype/arith.hpp"
#include "sotype/errors.hpp"
#include "sotype/finite_field.hpp"
#include "sotype/generators_io.hpp"
#include "sotype/group_handle.hpp"

namespace sot {

enum class RecipeKind { cyclic, dihedral, symmetric, alternating, psl2, sz, file, perms };

/// How to build one group, plus what it is claimed to be.
struct GroupRecipe {
  std::string name;
  RecipeKind kind = RecipeKind::cyclic;
  u64 param = 0;                    // n for the permutation families, q for psl2 and sz
  std::filesystem::path path;       // file kind; relative paths resolve against the data directory
  std::size_t degree = 0;           // perms kind
  std::vector<std::string> cycles;  // perms kind, one-based cycle notation
  std::optional<u64> expected_order;
  std::optional<bool> claimed_simple;
};

struct BuildOptions {
  std::size_t cap = default_cap;
  std::filesystem::path data_dir = "data";
};

// ---------------------------------------------------------------------------
// Order formulas

inline std::optional<u64> factorial(u64 n) {
  u64 r = 1;
  for (u64 k = 2; k <= n; ++k) {
    if (r > ~u64{0} / k) return std::nullopt;
    r *= k;
  }
  return r;
}

inline u64 psl2_order(u64 q) { return q * (q * q - 1) / std::gcd(u64{2}, q - 1); }

inline u64 sz_order(u64 q) { return q * q * (q * q + 1) * (q - 1); }

/// m with q = 2^(2m+1), m >= 1.
inline std::optional<unsigned> suzuki_parameter(u64 q) {
  if (!is_power_of_two(q)) return std::nullopt;
  unsigned e = 0;
  while ((u64{1} << e) < q) ++e;
  if (e < 3 || e % 2 == 0) return std::nullopt;
  return (e - 1) / 2;
}

// ---------------------------------------------------------------------------
// Permutation families

inline PermGroup cyclic_group(u64 n, std::size_t cap = default_cap) {
  if (n == 0) throw parameter_error("cyclic group needs n >= 1");
  if (n == 1) return PermGroup::generate({Permutation::identity(1)}, cap);
  std::vector<std::size_t> cycle(n);
  std::iota(cycle.begin(), cycle.end(), std::size_t{0});
  return PermGroup::generate({Permutation::from_cycles(n, {cycle})}, cap);
}

/// Dihedral group of order 2n.
inline PermGroup dihedral_group(u64 n, std::size_t cap = default_cap) {
  if (n == 0) throw parameter_error("dihedral group needs n >= 1");
  if (n == 1) return PermGroup::generate({Permutation::from_cycles(2, {{0, 1}})}, cap);
  if (n == 2)
    return PermGroup::generate({Permutation::from_cycles(4, {{0, 1}, {2, 3}}), Permutation::from_cycles(4, {{0, 2}, {1, 3}})},
                               cap);
  std::vector<std::size_t> rotation(n);
  std::iota(rotation.begin(), rotation.end(), std::size_t{0});
  std::vector<Permutation::point_type> reflection(n);
  for (u64 i = 0; i < n; ++i) reflection[i] = static_cast<Permutation::point_type>((n - i) % n);
  return PermGroup::generate({Permutation::from_cycles(n, {rotation}), Permutation(reflection)}, cap);
}

inline PermGroup symmetric_group(u64 n, std::size_t cap = default_cap) {
  if (n == 0) throw parameter_error("symmetric group needs n >= 1");
  if (n == 1) return PermGroup::generate({Permutation::identity(1)}, cap);
  std::vector<std::size_t> cycle(n);
  std::iota(cycle.begin(), cycle.end(), std::size_t{0});
  return PermGroup::generate({Permutation::from_cycles(n, {cycle}), Permutation::from_cycles(n, {{0, 1}})}, cap);
}

/// (0 1 2) with the n-cycle for odd n, or with the (n-1)-cycle on 1..n-1 for even n.
inline PermGroup alternating_group(u64 n, std::size_t cap = default_cap) {
  if (n == 0) throw parameter_error("alternating group needs n >= 1");
  if (n < 3) return PermGroup::generate({Permutation::identity(n)}, cap);
  std::vector<std::size_t> cycle;
  for (u64 i = n % 2 == 1 ? 0 : 1; i < n; ++i) cycle.push_back(i);
  return PermGroup::generate({Permutation::from_cycles(n, {{0, 1, 2}}), Permutation::from_cycles(n, {cycle})}, cap);
}

// ---------------------------------------------------------------------------
// PSL(2,q) on the projective line

/// PSL(2,q) acting on GF(q) u {inf}: point i < q is the field element of
/// index i and point q is infinity. Generated by x -> x+1, x -> mu x
/// (mu = lambda^2 for odd q, lambda for even q) and x -> -1/x.
inline PermGroup psl2_group(u64 q, std::size_t cap = default_cap) {
  const auto pp = prime_power(q);
  if (!pp) throw parameter_error("PSL(2,q) needs q a prime power, got " + std::to_string(q));
  const auto field = build_field(pp->first, pp->second);
  const Field& F = *field;
  const auto inf = static_cast<Permutation::point_type>(q);
  using P = Permutation::point_type;
  const auto lambda = F.primitive_element();
  const auto mu = q % 2 == 0 ? lambda : F.mul(lambda, lambda);

  std::vector<P> shift(q + 1), scale(q + 1), flip(q + 1);
  for (u64 x = 0; x < q; ++x) {
    const auto v = static_cast<Field::value_type>(x);
    shift[x] = static_cast<P>(F.add(v, 1));
    scale[x] = static_cast<P>(F.mul(mu, v));
    flip[x] = x == 0 ? inf : static_cast<P>(F.neg(F.inv(v)));
  }
  shift[q] = inf;
  scale[q] = inf;
  flip[q] = 0;
  auto G = PermGroup::generate({Permutation(shift), Permutation(scale), Permutation(flip)}, cap);
  if (G.order() != psl2_order(q))
    throw order_gate_error("PSL(2," + std::to_string(q) + ") closure has order " + std::to_string(G.order()) +
                           ", expected " + std::to_string(psl2_order(q)));
  return G;
}

// ---------------------------------------------------------------------------
// Sz(q) as 4x4 matrices

/// Sz(q), q = 2^(2m+1), generated by the unipotent matrices S(1,0), S(0,1),
/// the torus element M(lambda) and the antidiagonal involution T, with
/// t(a) = a^(2^(m+1)):
///
///     S(a,b) = [ 1                    0          0  0 ]
///              [ a                    1          0  0 ]
///              [ b                    t(a)       1  0 ]
///              [ a^2 t(a) + ab + t(b) a t(a) + b a  1 ]
///
///     M(k) = diag(k^(1+2^m), k^(2^m), k^-(2^m), k^-(1+2^m))
inline MatrixGroup suzuki_group(u64 q, std::size_t cap = default_cap) {
  const auto m = suzuki_parameter(q);
  if (!m) throw parameter_error("Sz(q) needs q an odd power of 2, at least 8; got " + std::to_string(q));
  const auto field = build_field(2, 2 * *m + 1);
  const Field& F = *field;
  using V = Field::value_type;
  const u64 theta = u64{1} << (*m + 1);
  const u64 e = u64{1} << *m;
  auto t = [&](V a) { return F.pow(a, theta); };

  auto S = [&](V a, V b) {
    const V r3c0 = F.add(F.add(F.mul(F.mul(a, a), t(a)), F.mul(a, b)), t(b));
    const V r3c1 = F.add(F.mul(a, t(a)), b);
    return Matrix(field, 4, {1, 0, 0, 0, a, 1, 0, 0, b, t(a), 1, 0, r3c0, r3c1, a, 1});
  };
  const V k = F.primitive_element();
  const V ki = F.inv(k);
  const Matrix torus(field, 4, {F.pow(k, 1 + e), 0, 0, 0, 0, F.pow(k, e), 0, 0, 0, 0, F.pow(ki, e), 0, 0, 0, 0, F.pow(ki, 1 + e)});
  const Matrix flip(field, 4, {0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0});

  auto G = MatrixGroup::generate({S(1, 0), S(0, 1), torus, flip}, cap);
  if (G.order() != sz_order(q))
    throw order_gate_error("Sz(" + std::to_string(q) + ") closure has order " + std::to_string(G.order()) + ", expected " +
                           std::to_string(sz_order(q)));
  return G;
}

// ---------------------------------------------------------------------------
// Recipes

inline std::string kind_name(RecipeKind k) {
  switch (k) {
    case RecipeKind::cyclic: return "cyclic";
    case RecipeKind::dihedral: return "dihedral";
    case RecipeKind::symmetric: return "symmetric";
    case RecipeKind::alternating: return "alternating";
    case RecipeKind::psl2: return "psl2";
    case RecipeKind::sz: return "sz";
    case RecipeKind::file: return "file";
    case RecipeKind::perms: return "perms";
  }
  return "?";
}

/// "alternating 5", "file L3_3.gens", "perms 3 (1,2); (1,2,3)".
inline std::string describe_kind(const GroupRecipe& r) {
  switch (r.kind) {
    case RecipeKind::file: return "file " + r.path.generic_string();
    case RecipeKind::perms: {
      std::string s = "perms " + std::to_string(r.degree);
      for (std::size_t i = 0; i < r.cycles.size(); ++i) s += (i ? "; " : " ") + r.cycles[i];
      return s;
    }
    default: return kind_name(r.kind) + " " + std::to_string(r.param);
  }
}

/// Order implied by the parameters, when the family determines it.
inline std::optional<u64> formula_order(RecipeKind kind, u64 param) {
  switch (kind) {
    case RecipeKind::cyclic: return param;
    case RecipeKind::dihedral: return 2 * param;
    case RecipeKind::symmetric: return factorial(param);
    case RecipeKind::alternating: {
      auto f = factorial(param);
      if (f && param >= 2) *f /= 2;
      return f;
    }
    case RecipeKind::psl2:
      if (prime_power(param)) return psl2_order(param);
      return std::nullopt;
    case RecipeKind::sz:
      if (suzuki_parameter(param)) return sz_order(param);
      return std::nullopt;
    default: return std::nullopt;
  }
}

inline GroupRecipe make_recipe(std::string name, RecipeKind kind, u64 param, std::optional<bool> simple = std::nullopt) {
  GroupRecipe r;
  r.name = std::move(name);
  r.kind = kind;
  r.param = param;
  r.expected_order = formula_order(kind, param);
  r.claimed_simple = simple;
  return r;
}

inline GroupRecipe file_recipe(std::string name, std::filesystem::path path, u64 order, bool simple) {
  GroupRecipe r;
  r.name = std::move(name);
  r.kind = RecipeKind::file;
  r.path = std::move(path);
  r.expected_order = order;
  r.claimed_simple = simple;
  return r;
}

inline GroupRecipe perms_recipe(std::string name, std::size_t degree, std::vector<std::string> cycles, u64 order,
                                std::optional<bool> simple = std::nullopt) {
  GroupRecipe r;
  r.name = std::move(name);
  r.kind = RecipeKind::perms;
  r.degree = degree;
  r.cycles = std::move(cycles);
  r.expected_order = order;
  r.claimed_simple = simple;
  return r;
}

inline std::filesystem::path resolve_data_path(const GroupRecipe& r, const BuildOptions& opts) {
  return r.path.is_absolute() ? r.path : opts.data_dir / r.path;
}

inline GroupHandle build(const GroupRecipe& r, const BuildOptions& opts = {}) {
  auto gate = [&](GroupHandle G) {
    if (r.expected_order && group_order(G) != *r.expected_order)
      throw order_gate_error(r.name + ": built order " + std::to_string(group_order(G)) + ", expected " +
                             std::to_string(*r.expected_order));
    return G;
  };
  switch (r.kind) {
    case RecipeKind::cyclic: return gate(cyclic_group(r.param, opts.cap));
    case RecipeKind::dihedral: return gate(dihedral_group(r.param, opts.cap));
    case RecipeKind::symmetric: return gate(symmetric_group(r.param, opts.cap));
    case RecipeKind::alternating: return gate(alternating_group(r.param, opts.cap));
    case RecipeKind::psl2: return gate(psl2_group(r.param, opts.cap));
    case RecipeKind::sz: return gate(suzuki_group(r.param, opts.cap));
    case RecipeKind::file: {
      auto set = load_generators(resolve_data_path(r, opts));
      return gate(PermGroup::generate(std::move(set.generators), opts.cap));
    }
    case RecipeKind::perms: {
      if (r.degree == 0 || r.cycles.empty()) throw parameter_error(r.name + ": inline generators need a degree and cycles");
      std::vector<Permutation> gens;
      for (const auto& c : r.cycles) gens.push_back(parse_cycles(c, r.degree));
      return gate(PermGroup::generate(std::move(gens), opts.cap));
    }
  }
  throw parameter_error("unknown recipe kind");
}

// ---------------------------------------------------------------------------
// Catalog

/// The groups the verification suite runs over: the eight simple groups
/// whose order has exactly three prime divisors, further simple groups for
/// the classification and property scans, the two groups of order 40320, and a few
/// small non-simple groups.
inline std::vector<GroupRecipe> catalog() {
  using K = RecipeKind;
  return {
      make_recipe("A5", K::alternating, 5, true),
      make_recipe("L2(4)", K::psl2, 4, true),
      make_recipe("L2(5)", K::psl2, 5, true),
      make_recipe("L2(7)", K::psl2, 7, true),
      make_recipe("L2(8)", K::psl2, 8, true),
      make_recipe("L2(9)", K::psl2, 9, true),
      make_recipe("A6", K::alternating, 6, true),
      make_recipe("L2(11)", K::psl2, 11, true),
      make_recipe("L2(13)", K::psl2, 13, true),
      make_recipe("L2(16)", K::psl2, 16, true),
      make_recipe("L2(17)", K::psl2, 17, true),
      make_recipe("L2(31)", K::psl2, 31, true),
      make_recipe("A7", K::alternating, 7, true),
      file_recipe("L3(3)", "L3_3.gens", 5616, true),
      file_recipe("U3(3)", "U3_3.gens", 6048, true),
      file_recipe("U4(2)", "U4_2.gens", 25920, true),
      file_recipe("L3(4)", "L3_4.gens", 20160, true),
      make_recipe("Sz(8)", K::sz, 8, true),
      file_recipe("Sz(8)/65", "Sz_8.gens", 29120, true),
      file_recipe("2^4:A7", "2_4_A7.gens", 40320, false),
      file_recipe("L3(4):2", "L3_4_2.gens", 40320, false),
      make_recipe("S3", K::symmetric, 3, false),
      make_recipe("S4", K::symmetric, 4, false),
      make_recipe("A4", K::alternating, 4, false),
      perms_recipe("Q8", 8, {"(1,2,3,4)(5,8,7,6)", "(1,5,3,7)(2,6,4,8)"}, 8, false),
      make_recipe("C2", K::cyclic, 2, true),
      make_recipe("C6", K::cyclic, 6, false),
      make_recipe("C12", K::cyclic, 12, false),
      make_recipe("C30", K::cyclic, 30, false),
      make_recipe("D4", K::dihedral, 4, false),
      make_recipe("D5", K::dihedral, 5, false),
      make_recipe("D6", K::dihedral, 6, false),
  };
}

/// Assorted groups of order at most 200 for the spectrum-level property
/// suites (prime-count bound, nilpotency, alpha_2 / alpha_3 structure).
inline std::vector<GroupRecipe> small_group_suite() {
  using K = RecipeKind;
  std::vector<GroupRecipe> out;
  for (u64 n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16, 30, 49, 64})
    out.push_back(make_recipe("C" + std::to_string(n), K::cyclic, n, is_prime(n)));
  for (u64 n : {3, 4, 5, 6, 7, 8, 10, 12, 15, 50, 100}) out.push_back(make_recipe("D" + std::to_string(n), K::dihedral, n, false));
  out.push_back(make_recipe("S4", K::symmetric, 4, false));
  out.push_back(make_recipe("S5", K::symmetric, 5, false));
  out.push_back(make_recipe("A4", K::alternating, 4, false));
  out.push_back(make_recipe("A5", K::alternating, 5, true));
  out.push_back(make_recipe("L2(7)", K::psl2, 7, true));
  auto P = [&](std::string name, std::size_t degree, std::vector<std::string> cycles, u64 order) {
    out.push_back(perms_recipe(std::move(name), degree, std::move(cycles), order, false));
  };
  P("C2^2", 4, {"(1,2)", "(3,4)"}, 4);
  P("C2^3", 6, {"(1,2)", "(3,4)", "(5,6)"}, 8);
  P("C2^4", 8, {"(1,2)", "(3,4)", "(5,6)", "(7,8)"}, 16);
  P("C4xC2", 6, {"(1,2,3,4)", "(5,6)"}, 8);
  P("C4xC4", 8, {"(1,2,3,4)", "(5,6,7,8)"}, 16);
  P("C2xC6", 8, {"(1,2)", "(3,4,5,6,7,8)"}, 12);
  P("C3^2", 6, {"(1,2,3)", "(4,5,6)"}, 9);
  P("C5^2", 10, {"(1,2,3,4,5)", "(6,7,8,9,10)"}, 25);
  P("Q8", 8, {"(1,2,3,4)(5,8,7,6)", "(1,5,3,7)(2,6,4,8)"}, 8);
  P("Q16", 16, {"(1,2,3,4,5,6,7,8)(9,16,15,14,13,12,11,10)", "(1,9,5,13)(2,10,6,14)(3,11,7,15)(4,12,8,16)"}, 16);
  P("Dic3", 12, {"(1,2,3,4,5,6)(7,12,11,10,9,8)", "(1,7,4,10)(2,8,5,11)(3,9,6,12)"}, 12);
  P("Dic5", 20, {"(1,2,3,4,5,6,7,8,9,10)(11,20,19,18,17,16,15,14,13,12)", "(1,11,6,16)(2,12,7,17)(3,13,8,18)(4,14,9,19)(5,15,10,20)"},
    20);
  P("He3", 9, {"(1,4,7)(2,5,8)(3,6,9)", "(4,5,6)(7,9,8)"}, 27);
  P("SL(2,3)", 8, {"(3,4,5)(6,8,7)", "(1,4,7)(2,8,5)"}, 24);
  P("GL(2,3)", 8, {"(3,4,5)(6,8,7)", "(1,4,7)(2,8,5)", "(3,6)(4,7)(5,8)"}, 48);
  P("SL(2,5)", 24,
    {"(5,6,7,8,9)(10,12,14,11,13)(15,18,16,19,17)(20,24,23,22,21)",
     "(1,6,11,16,21)(2,12,22,7,17)(3,18,8,23,13)(4,24,19,14,9)"},
    120);
  P("F20", 5, {"(1,2,3,4,5)", "(2,3,5,4)"}, 20);
  P("F21", 7, {"(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"}, 21);
  P("AGL(1,7)", 7, {"(1,2,3,4,5,6,7)", "(2,4,3,7,5,6)"}, 42);
  P("F55", 11, {"(1,2,3,4,5,6,7,8,9,10,11)", "(2,4,10,6,5)(3,7,8,11,9)"}, 55);
  P("AGL(1,11)", 11, {"(1,2,3,4,5,6,7,8,9,10,11)", "(2,3,5,9,6,11,10,8,4,7)"}, 110);
  P("AGL(1,8)", 8, {"(1,2)(3,4)(5,6)(7,8)", "(2,3,5,4,7,8,6)"}, 56);
  P("AGammaL(1,8)", 8, {"(1,2)(3,4)(5,6)(7,8)", "(2,3,5,4,7,8,6)", "(3,5,7)(4,6,8)"}, 168);
  P("A4xC2", 6, {"(1,2,3)", "(1,2)(3,4)", "(5,6)"}, 24);
  P("A4xC3", 7, {"(1,2,3)", "(1,2)(3,4)", "(5,6,7)"}, 36);
  P("S3xC3", 6, {"(1,2,3)", "(1,2)", "(4,5,6)"}, 18);
  P("S3xS3", 6, {"(1,2,3)", "(1,2)", "(4,5,6)", "(4,5)"}, 36);
  P("D4xC2", 6, {"(1,2,3,4)", "(1,3)", "(5,6)"}, 16);
  P("S4xC2", 6, {"(1,2,3,4)", "(1,2)", "(5,6)"}, 48);
  P("A5xC2", 7, {"(1,2,3,4,5)", "(1,2,3)", "(6,7)"}, 120);
  return out;
}

// ---------------------------------------------------------------------------
// Manifest: one record per line, "name | kind params | expected_order | claimed_simple",
// with "-" for an absent optional field.

inline std::string to_manifest_line(const GroupRecipe& r) {
  std::string s = r.name + " | " + describe_kind(r) + " | ";
  s += r.expected_order ? std::to_string(*r.expected_order) : "-";
  s += " | ";
  s += r.claimed_simple ? (*r.claimed_simple ? "true" : "false") : "-";
  return s;
}

inline GroupRecipe parse_manifest_line(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto bar = line.find('|', start);
    fields.emplace_back(detail::trim(line.substr(start, bar == std::string_view::npos ? bar : bar - start)));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  if (fields.size() != 4) throw parse_error("manifest record needs 4 '|'-separated fields: " + std::string(line));
  GroupRecipe r;
  r.name = fields[0];
  if (r.name.empty()) throw parse_error("manifest record has an empty name");

  std::string_view kind = fields[1];
  const auto space = kind.find(' ');
  const std::string word(kind.substr(0, space));
  const std::string_view rest = space == std::string_view::npos ? std::string_view{} : detail::trim(kind.substr(space + 1));
  static const std::pair<const char*, RecipeKind> simple_kinds[] = {
      {"cyclic", RecipeKind::cyclic}, {"dihedral", RecipeKind::dihedral}, {"symmetric", RecipeKind::symmetric},
      {"alternating", RecipeKind::alternating}, {"psl2", RecipeKind::psl2}, {"sz", RecipeKind::sz}};
  bool matched = false;
  for (const auto& [label, k] : simple_kinds)
    if (word == label) {
      r.kind = k;
      r.param = detail::parse_count(rest, "recipe parameter");
      matched = true;
    }
  if (!matched) {
    if (word == "file") {
      if (rest.empty()) throw parse_error("file recipe needs a path");
      r.kind = RecipeKind::file;
      r.path = std::string(rest);
    } else if (word == "perms") {
      r.kind = RecipeKind::perms;
      const auto sp = rest.find(' ');
      r.degree = detail::parse_count(rest.substr(0, sp), "degree");
      if (sp == std::string_view::npos) throw parse_error("perms recipe needs generators");
      std::string_view gens = rest.substr(sp + 1);
      while (!gens.empty()) {
        const auto semi = gens.find(';');
        auto g = detail::trim(gens.substr(0, semi));
        if (!g.empty()) r.cycles.emplace_back(g);
        if (semi == std::string_view::npos) break;
        gens = gens.substr(semi + 1);
      }
      if (r.cycles.empty()) throw parse_error("perms recipe needs generators");
    } else {
      throw parse_error("unknown recipe kind '" + word + "'");
    }
  }
  if (fields[2] != "-") r.expected_order = detail::parse_count(fields[2], "expected order");
  if (fields[3] == "true") r.claimed_simple = true;
  else if (fields[3] == "false") r.claimed_simple = false;
  else if (fields[3] != "-") throw parse_error("claimed_simple must be true, false or -");
  return r;
}

inline std::vector<GroupRecipe> parse_manifest(std::istream& in) {
  std::vector<GroupRecipe> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = line;
    if (const auto hash = s.find('#'); hash != std::string_view::npos && s.find('|') > hash) s = s.substr(0, hash);
    s = detail::trim(s);
    if (s.empty()) continue;
    try {
      out.push_back(parse_manifest_line(s));
    } catch (const parse_error& e) {
      throw parse_error("manifest line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

inline std::vector<GroupRecipe> load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw missing_data("cannot read manifest " + path.string());
  return parse_manifest(in);
}

// ---------------------------------------------------------------------------
// Group-spec grammar for the command line:
//   A<n> S<n> C<n> D<n> PSL(2,q) L2(q) Sz(q) L3(3) U3(3) U4(2) L3(4) file:<path>
// case-insensitive and whitespace-tolerant; other catalog names are accepted too.

namespace detail {

inline std::string squash_upper(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

inline std::optional<u64> parse_suffix_number(std::string_view s) {
  if (s.empty() || s.size() > 18) return std::nullopt;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  return std::stoull(std::string(s));
}

}  // namespace detail

inline GroupRecipe parse_group_spec(std::string_view text) {
  const auto trimmed = detail::trim(text);
  if (trimmed.size() >= 5 && detail::squash_upper(trimmed.substr(0, 5)) == "FILE:") {
    const auto path = detail::trim(trimmed.substr(5));
    if (path.empty()) throw parse_error("file: spec needs a path");
    GroupRecipe r;
    r.kind = RecipeKind::file;
    r.path = std::filesystem::absolute(std::filesystem::path(std::string(path)));
    r.name = r.path.stem().string();
    return r;
  }
  const std::string s = detail::squash_upper(trimmed);
  if (s.empty()) throw parse_error("empty group spec");

  const auto cat = catalog();
  auto from_catalog = [&](const std::string& name) -> std::optional<GroupRecipe> {
    for (const auto& r : cat)
      if (detail::squash_upper(r.name) == detail::squash_upper(name)) return r;
    return std::nullopt;
  };
  auto family = [&](std::string canonical, RecipeKind kind, u64 param) {
    if (auto r = from_catalog(canonical)) return *r;
    return make_recipe(std::move(canonical), kind, param);
  };

  if (s.size() >= 2 && std::string_view("ASCD").find(s[0]) != std::string_view::npos) {
    if (auto n = detail::parse_suffix_number(std::string_view(s).substr(1))) {
      if (*n == 0) throw parse_error("group parameter must be positive: " + std::string(trimmed));
      switch (s[0]) {
        case 'A': return family("A" + std::to_string(*n), RecipeKind::alternating, *n);
        case 'S': return family("S" + std::to_string(*n), RecipeKind::symmetric, *n);
        case 'C': return family("C" + std::to_string(*n), RecipeKind::cyclic, *n);
        default: return family("D" + std::to_string(*n), RecipeKind::dihedral, *n);
      }
    }
  }
  auto bracketed = [&](std::string_view prefix) -> std::optional<u64> {
    if (s.size() <= prefix.size() + 1 || s.compare(0, prefix.size(), prefix) != 0 || s.back() != ')') return std::nullopt;
    return detail::parse_suffix_number(std::string_view(s).substr(prefix.size(), s.size() - prefix.size() - 1));
  };
  if (auto q = bracketed("PSL(2,") ? bracketed("PSL(2,") : bracketed("L2(")) {
    return family("L2(" + std::to_string(*q) + ")", RecipeKind::psl2, *q);
  }
  if (auto q = bracketed("SZ(")) return family("Sz(" + std::to_string(*q) + ")", RecipeKind::sz, *q);
  if (auto r = from_catalog(s)) return *r;
  throw parse_error("unrecognised group spec '" + std::string(trimmed) + "'");
}

}  // namespace sot

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

/// @file checks.hpp
/// Named checks over a built group or over the whole catalog. Each check
/// produces a CheckResult with one of four statuses; "not-applicable" and
/// "skipped" are never folded into "pass".

#include <array>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sotype/constructions.hpp"
#include "sotype/group_handle.hpp"
#include "sotype/spectrum.hpp"
#include "sotype/structure.hpp"

namespace sot {

enum class Status { pass, fail, not_applicable, skipped };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::not_applicable: return "not-applicable";
    case Status::skipped: return "skipped";
  }
  return "?";
}

struct CheckResult {
  std::string id;
  Status status;
  std::string details;
};

inline constexpr std::array<std::string_view, 14> check_ids{
    "frobenius",          "cyclic-containment", "l2-counts",      "sz-counts",          "cpp",
    "c22-classification", "prime-graph-triple", "two-odd-primes", "all-pairs-distinct", "alpha4-bound",
    "eight-groups",       "shen-bound",         "nilpotent-spectral", "thompson-pair"};

inline bool is_known_check(std::string_view id) {
  return std::find(check_ids.begin(), check_ids.end(), id) != check_ids.end();
}

/// Checks that look at the catalog as a whole rather than one group.
inline bool is_catalog_check(std::string_view id) { return id == "eight-groups" || id == "thompson-pair"; }

namespace detail {

template <class Range>
std::string join(const Range& r, std::string_view sep = ",") {
  std::ostringstream out;
  bool first = true;
  for (const auto& x : r) {
    if (!first) out << sep;
    out << x;
    first = false;
  }
  return out.str();
}

inline std::string set_string(const std::vector<u64>& v) { return "{" + join(v) + "}"; }

}  // namespace detail

/// One built group with lazily computed structural facts.
class GroupContext {
 public:
  GroupContext(GroupRecipe recipe, GroupHandle group)
      : recipe_(std::move(recipe)), group_(std::move(group)), spectrum_(compute_spectrum(group_)) {}

  const GroupRecipe& recipe() const { return recipe_; }
  const GroupHandle& group() const { return group_; }
  const OrderSpectrum& spectrum() const { return spectrum_; }

  bool simple() {
    if (!simple_) {
      simple_ = std::visit(
          [&](const auto& g) {
            using E = typename std::decay_t<decltype(g)>::element_type;
            return is_simple(g, classes<E>());
          },
          group_);
    }
    return *simple_;
  }
  bool abelian() const { return is_abelian(group_); }
  bool nonabelian_simple() { return !abelian() && simple(); }
  bool solvable() {
    if (!solvable_) solvable_ = is_solvable(group_);
    return *solvable_;
  }

  /// Centraliser-based C_{p,p} answer, cross-checked against the spectrum.
  bool cpp(u64 p) {
    return std::visit(
        [&](const auto& g) {
          using E = typename std::decay_t<decltype(g)>::element_type;
          return is_cpp(g, classes<E>(), spectrum_, p);
        },
        group_);
  }

 private:
  template <class E>
  const ConjugacyClassTable<E>& classes() {
    if (!classes_.has_value()) classes_ = conjugacy_classes(std::get<Group<E>>(group_));
    return std::get<ConjugacyClassTable<E>>(*classes_);
  }

  GroupRecipe recipe_;
  GroupHandle group_;
  OrderSpectrum spectrum_;
  std::optional<bool> simple_;
  std::optional<bool> solvable_;
  std::optional<std::variant<ConjugacyClassTable<Permutation>, ConjugacyClassTable<Matrix>>> classes_;
};

namespace detail {

inline CheckResult counts_result(std::string id, const CountsReport& rep) {
  if (rep.passed()) return {std::move(id), Status::pass, join(rep.verified, "; ")};
  return {std::move(id), Status::fail, join(rep.failures, "; ")};
}

inline bool is_a10(const GroupRecipe& r) { return r.kind == RecipeKind::alternating && r.param == 10; }

}  // namespace detail

/// Runs one per-group check. Catalog-level ids report not-applicable here.
inline CheckResult run_check(std::string_view id, GroupContext& ctx) {
  using detail::set_string;
  const auto& spec = ctx.spectrum();
  const auto& r = ctx.recipe();
  const std::string sid(id);

  if (id == "frobenius") {
    const auto rep = check_frobenius(spec);
    if (rep.ok())
      return {sid, Status::pass,
              std::to_string(rep.divisors_checked) + " divisors k with k | f(k); " + std::to_string(rep.orders_checked) +
                  " orders t with phi(t) | s_t"};
    std::string d;
    for (const auto& v : rep.violations)
      d += (d.empty() ? "" : "; ") + std::string(v.kind == FrobeniusViolation::Kind::divisor_count ? "f(" : "s_") +
           std::to_string(v.k) + (v.kind == FrobeniusViolation::Kind::divisor_count ? ")" : "") + " = " +
           std::to_string(v.value);
    return {sid, Status::fail, d};
  }

  if (id == "cyclic-containment") {
    if (r.kind != RecipeKind::cyclic) return {sid, Status::not_applicable, "not a cyclic recipe"};
    std::vector<std::string> bad;
    for (u64 m : divisors(r.param)) {
      const auto c = cyclic_containment_check(m, r.param);
      if (!c.contained()) bad.push_back("nse(C" + std::to_string(m) + ") = " + set_string(c.nse_m));
    }
    if (bad.empty())
      return {sid, Status::pass, "nse(C_m) within " + set_string(nse(spec)) + " for every m | " + std::to_string(r.param)};
    return {sid, Status::fail, detail::join(bad, "; ")};
  }

  if (id == "l2-counts") {
    if (r.kind != RecipeKind::psl2) return {sid, Status::not_applicable, "not a PSL(2,q) recipe"};
    if (!l2_case(r.param))
      return {sid, Status::not_applicable, "q = " + std::to_string(r.param) + " is not a power of 2, Fermat or Mersenne"};
    return detail::counts_result(sid, verify_l2_counts(r.param, spec));
  }

  if (id == "sz-counts") {
    if (r.kind != RecipeKind::sz) return {sid, Status::not_applicable, "not a Sz(q) recipe"};
    return detail::counts_result(sid, verify_sz_counts(r.param, spec));
  }

  if (id == "cpp") {
    std::vector<std::string> parts;
    try {
      for (u64 p : spec.primes()) parts.push_back("C" + std::to_string(p) + "," + std::to_string(p) + ": " + (ctx.cpp(p) ? "yes" : "no"));
    } catch (const internal_error& e) {
      return {sid, Status::fail, e.what()};
    }
    if (parts.empty()) return {sid, Status::not_applicable, "trivial group"};
    return {sid, Status::pass, "centraliser and spectrum methods agree; " + detail::join(parts, "; ")};
  }

  if (id == "c22-classification") {
    if (!ctx.nonabelian_simple()) return {sid, Status::not_applicable, "not nonabelian simple"};
    bool c22 = false;
    try {
      c22 = ctx.cpp(2);
    } catch (const internal_error& e) {
      return {sid, Status::fail, e.what()};
    }
    const bool family = in_c22_families(r);
    const std::string d = std::string("C2,2: ") + (c22 ? "yes" : "no") + "; listed family: " + (family ? "yes" : "no");
    return {sid, c22 == family ? Status::pass : Status::fail, d};
  }

  if (id == "prime-graph-triple") {
    const auto g = prime_graph(spec);
    const auto triple = independent_triple(g);
    std::string d = "edges " + std::to_string(g.edges.size()) + "; independent triple: " +
                    (triple ? set_string({(*triple)[0], (*triple)[1], (*triple)[2]}) : std::string("none"));
    if (!is_connected(g)) return {sid, Status::not_applicable, "prime graph disconnected; " + d};
    if (!ctx.nonabelian_simple()) return {sid, Status::not_applicable, "not nonabelian simple; " + d};
    if (detail::is_a10(r)) return {sid, triple ? Status::fail : Status::pass, "A10 exception; connected; " + d};
    return {sid, triple ? Status::pass : Status::fail, "connected; " + d};
  }

  if (id == "two-odd-primes") {
    if (!ctx.nonabelian_simple()) return {sid, Status::not_applicable, "not nonabelian simple"};
    const auto pair = distinct_odd_sp(spec, PairMode::exists_pair);
    const auto alpha = alpha_size(spec);
    const bool ok = pair.holds && alpha >= 4 && spec.count(2) > 1;
    std::string d = pair.holds ? "s_" + std::to_string(pair.witness->first) + " = " + std::to_string(spec.count(pair.witness->first)) +
                                     " != s_" + std::to_string(pair.witness->second) + " = " +
                                     std::to_string(spec.count(pair.witness->second))
                               : "no odd pair with different counts";
    d += "; |nse| = " + std::to_string(alpha) + "; s_2 = " + std::to_string(spec.count(2));
    return {sid, ok ? Status::pass : Status::fail, d};
  }

  if (id == "all-pairs-distinct") {
    const auto rep = distinct_odd_sp(spec, PairMode::all_pairs);
    std::vector<std::string> sp;
    for (u64 p : spec.primes()) sp.push_back("s_" + std::to_string(p) + "=" + std::to_string(spec.count(p)));
    const std::string d = detail::join(sp, ", ") + (rep.holds ? "" : "; equal pair " + std::to_string(rep.witness->first) + "," +
                                                                         std::to_string(rep.witness->second));
    if (!ctx.nonabelian_simple()) return {sid, Status::not_applicable, "not nonabelian simple; " + d};
    return {sid, rep.holds ? Status::pass : Status::fail, d};
  }

  if (id == "alpha4-bound") {
    const auto rep = alpha4_prime_bound_check(spec);
    if (!rep.applicable) return {sid, Status::not_applicable, rep.reason};
    return {sid, rep.passes() ? Status::pass : Status::fail,
            "primes " + set_string({(*rep.primes)[0], (*rep.primes)[1], (*rep.primes)[2]}) + "; |pi(G)| = " +
                std::to_string(rep.prime_count)};
  }

  if (id == "shen-bound") {
    const auto rep = shen_bound_check(spec);
    return {sid, rep.passes() ? Status::pass : Status::fail,
            "|pi(G)| = " + std::to_string(rep.prime_count) + ", |nse(G)| = " + std::to_string(rep.alpha)};
  }

  if (id == "nilpotent-spectral") {
    const bool nil = is_nilpotent_spectral(spec);
    const auto alpha = alpha_size(spec);
    std::string d = std::string("nilpotent: ") + (nil ? "yes" : "no") + "; |nse| = " + std::to_string(alpha);
    if (alpha == 2 && !nil) return {sid, Status::fail, d + "; alpha_2 group is not nilpotent"};
    if (alpha == 3) {
      const bool solv = ctx.solvable();
      d += std::string("; solvable: ") + (solv ? "yes" : "no");
      if (!solv) return {sid, Status::fail, d + "; alpha_3 group is not solvable"};
    }
    return {sid, Status::pass, d};
  }

  if (is_catalog_check(id)) return {sid, Status::not_applicable, "catalog-level check; run with --catalog"};
  throw parse_error("unknown check id '" + sid + "'");
}

/// Per-group checks in registry order.
inline std::vector<CheckResult> run_all_checks(GroupContext& ctx) {
  std::vector<CheckResult> out;
  for (auto id : check_ids)
    if (!is_catalog_check(id)) out.push_back(run_check(id, ctx));
  return out;
}

/// Catalog-level result of the eight-group check; `missing` lists
/// file-backed groups that could not be loaded.
inline CheckResult run_eight_groups(const std::vector<GroupSummary>& groups) {
  const auto rep = eight_groups_check(groups);
  std::vector<std::string> parts;
  for (const auto& e : rep.entries)
    parts.push_back(e.name + (e.present ? ": |nse|=" + std::to_string(e.alpha) + (e.ok ? "" : " (unexpected)") : ": missing"));
  const auto d = detail::join(parts, "; ");
  if (!rep.all_ok()) return {"eight-groups", Status::fail, d};
  if (!rep.complete()) return {"eight-groups", Status::skipped, "incomplete; " + d};
  return {"eight-groups", Status::pass, "A5 is the only entry with |nse| = 4; " + d};
}

/// Both groups of order 40320, equal nse sets, Frobenius clean.
inline CheckResult run_thompson_pair(const GroupSummary* first, const GroupSummary* second) {
  if (!first || !second) return {"thompson-pair", Status::skipped, "2^4:A7 or L3(4):2 data not available"};
  const auto a = nse(first->spectrum);
  const auto b = nse(second->spectrum);
  const bool orders = first->spectrum.group_order() == 40320 && second->spectrum.group_order() == 40320;
  const bool frob = check_frobenius(first->spectrum).ok() && check_frobenius(second->spectrum).ok();
  const std::string d = first->name + ": |G|=" + std::to_string(first->spectrum.group_order()) + " nse=" + detail::set_string(a) +
                        "; " + second->name + ": |G|=" + std::to_string(second->spectrum.group_order()) +
                        " nse=" + detail::set_string(b) + (first->spectrum == second->spectrum ? "; spectra identical" : "");
  return {"thompson-pair", orders && a == b && frob ? Status::pass : Status::fail, d};
}

}  // namespace sot

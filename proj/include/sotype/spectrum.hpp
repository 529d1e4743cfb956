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

/// @file spectrum.hpp
/// Element-order census of a finite group and the checks that need nothing
/// but that census.
///
/// s_t is the number of elements of order exactly t. The key set of the
/// census is pi_e(G), its value set is nse(G) (the same-order type), and the
/// primes among the keys are pi(G). The Frobenius count f(k), the number of
/// solutions of g^k = 1, is the sum of s_d over keys d dividing k.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sotype/arith.hpp"
#include "sotype/constructions.hpp"
#include "sotype/errors.hpp"
#include "sotype/group_handle.hpp"

namespace sot {

class OrderSpectrum {
 public:
  OrderSpectrum(u64 group_order, std::map<u64, u64> counts) : group_order_(group_order), counts_(std::move(counts)) {
    if (group_order_ == 0) throw parameter_error("group order must be positive");
    for (const auto& [t, s] : counts_)
      if (t == 0 || s == 0) throw parameter_error("spectrum entries must be positive");
  }

  u64 group_order() const { return group_order_; }
  const std::map<u64, u64>& counts() const { return counts_; }

  /// s_t, zero when t is not an element order.
  u64 count(u64 t) const {
    const auto it = counts_.find(t);
    return it == counts_.end() ? 0 : it->second;
  }

  /// pi_e(G), ascending.
  std::vector<u64> element_orders() const {
    std::vector<u64> out;
    for (const auto& [t, s] : counts_) out.push_back(t);
    return out;
  }

  /// pi(G): the prime element orders, ascending.
  std::vector<u64> primes() const {
    std::vector<u64> out;
    for (const auto& [t, s] : counts_)
      if (is_prime(t)) out.push_back(t);
    return out;
  }

  bool has_order(u64 t) const { return counts_.contains(t); }

  friend bool operator==(const OrderSpectrum&, const OrderSpectrum&) = default;

 private:
  u64 group_order_;
  std::map<u64, u64> counts_;
};

template <group_element E>
OrderSpectrum compute_spectrum(const Group<E>& G) {
  std::map<u64, u64> counts;
  for (const auto& g : G.elements()) ++counts[g.order()];
  return {G.order(), std::move(counts)};
}

inline OrderSpectrum compute_spectrum(const GroupHandle& G) {
  return std::visit([](const auto& g) { return compute_spectrum(g); }, G);
}

/// nse(G) = alpha(G): the distinct values s_t, ascending.
inline std::vector<u64> nse(const OrderSpectrum& spec) {
  std::set<u64> values;
  for (const auto& [t, s] : spec.counts()) values.insert(s);
  return {values.begin(), values.end()};
}

inline std::size_t alpha_size(const OrderSpectrum& spec) { return nse(spec).size(); }

/// |{g : g^k = 1}|
inline u64 f_of(const OrderSpectrum& spec, u64 k) {
  if (k == 0) throw parameter_error("f(k) needs k >= 1");
  u64 total = 0;
  for (const auto& [d, s] : spec.counts())
    if (k % d == 0) total += s;
  return total;
}

struct FrobeniusViolation {
  enum class Kind { divisor_count, totient };
  Kind kind;
  u64 k;      // the divisor k, or the element order t
  u64 value;  // f(k), or s_t
};

struct FrobeniusReport {
  std::vector<FrobeniusViolation> violations;
  std::size_t divisors_checked = 0;
  std::size_t orders_checked = 0;
  bool ok() const { return violations.empty(); }
};

/// k | f(k) for every divisor k of |G|, and phi(t) | s_t for every order t.
inline FrobeniusReport check_frobenius(const OrderSpectrum& spec) {
  FrobeniusReport report;
  for (u64 k : divisors(spec.group_order())) {
    ++report.divisors_checked;
    const u64 f = f_of(spec, k);
    if (f % k != 0) report.violations.push_back({FrobeniusViolation::Kind::divisor_count, k, f});
  }
  for (const auto& [t, s] : spec.counts()) {
    ++report.orders_checked;
    if (s % euler_phi(t) != 0) report.violations.push_back({FrobeniusViolation::Kind::totient, t, s});
  }
  return report;
}

/// G is nilpotent iff every Sylow subgroup is normal, iff f(p^a) = p^a for
/// each prime power p^a exactly dividing |G|.
inline bool is_nilpotent_spectral(const OrderSpectrum& spec) {
  for (const auto& [p, a] : factorize(spec.group_order())) {
    const u64 pa = ipow(p, a);
    if (f_of(spec, pa) != pa) return false;
  }
  return true;
}

struct ShenReport {
  std::size_t prime_count;
  std::size_t alpha;
  bool passes() const { return prime_count <= alpha; }
};

/// |pi(G)| <= |nse(G)|.
inline ShenReport shen_bound_check(const OrderSpectrum& spec) { return {spec.primes().size(), alpha_size(spec)}; }

struct ContainmentReport {
  u64 m;
  u64 n;
  std::vector<u64> nse_m;
  std::vector<u64> nse_n;
  bool contained() const { return std::includes(nse_n.begin(), nse_n.end(), nse_m.begin(), nse_m.end()); }
};

/// Builds C_m and C_n (m | n) and compares their same-order types.
inline ContainmentReport cyclic_containment_check(u64 m, u64 n, std::size_t cap = default_cap) {
  if (m == 0 || n == 0) throw parameter_error("cyclic orders must be positive");
  if (n % m != 0) throw parameter_error(std::to_string(m) + " does not divide " + std::to_string(n));
  return {m, n, nse(compute_spectrum(cyclic_group(m, cap))), nse(compute_spectrum(cyclic_group(n, cap)))};
}

}  // namespace sot

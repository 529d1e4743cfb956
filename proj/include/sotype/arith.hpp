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

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace sot {

using u64 = std::uint64_t;

/// Trial division; inputs here stay far below 2^32.
constexpr bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// Prime factorisation as prime -> exponent.
inline std::map<u64, unsigned> factorize(u64 n) {
  std::map<u64, unsigned> out;
  for (u64 d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

inline std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (const auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

inline u64 euler_phi(u64 n) {
  u64 phi = n;
  for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

/// All positive divisors of n, ascending.
inline std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

constexpr u64 ipow(u64 base, unsigned exp) {
  u64 r = 1;
  while (exp--) r *= base;
  return r;
}

/// q = p^m with p prime, or nothing.
inline std::optional<std::pair<u64, unsigned>> prime_power(u64 q) {
  if (q < 2) return std::nullopt;
  const auto f = factorize(q);
  if (f.size() != 1) return std::nullopt;
  return std::pair{f.begin()->first, f.begin()->second};
}

constexpr bool is_power_of_two(u64 n) { return n != 0 && (n & (n - 1)) == 0; }

/// Prime of the form 2^k + 1.
constexpr bool is_fermat_prime(u64 n) { return n > 2 && is_prime(n) && is_power_of_two(n - 1); }

/// Prime of the form 2^k - 1.
constexpr bool is_mersenne_prime(u64 n) { return is_prime(n) && is_power_of_two(n + 1); }

/// True when n = p^a for the given prime p (including n = 1).
constexpr bool is_power_of(u64 n, u64 p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace sot

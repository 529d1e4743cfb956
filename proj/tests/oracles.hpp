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


// Independent reference computations for the test suite. Nothing here calls
// into the library: fields, matrices and permutations are re-implemented in
// the most direct way possible so that agreement means something.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_set>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using Counts = std::map<u64, u64>;

inline u64 gcd(u64 a, u64 b) { return b ? gcd(b, a % b) : a; }
inline u64 lcm(u64 a, u64 b) { return a / gcd(a, b) * b; }

inline u64 phi(u64 n) {
  u64 c = 0;
  for (u64 k = 1; k <= n; ++k)
    if (gcd(k, n) == 1) ++c;
  return c;
}

// ---------------------------------------------------------------------------
// Polynomials over Z_p, coefficient vectors low degree first.

using Poly = std::vector<int>;

inline Poly poly_mul(const Poly& a, const Poly& b, int p) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return r;
}

/// Monic polynomials of degree d, in order of the integer sum c_i p^i.
inline std::vector<Poly> monic(int p, int d) {
  int count = 1;
  for (int i = 0; i < d; ++i) count *= p;
  std::vector<Poly> out;
  for (int c = 0; c < count; ++c) {
    Poly f(d + 1, 0);
    int v = c;
    for (int i = 0; i < d; ++i, v /= p) f[i] = v % p;
    f[d] = 1;
    out.push_back(f);
  }
  return out;
}

/// Every reducible monic polynomial of degree m, as products of lower-degree factors.
inline std::set<Poly> reducible(int p, int m) {
  std::set<Poly> out;
  for (int d = 1; d < m; ++d)
    for (const auto& a : monic(p, d))
      for (const auto& b : monic(p, m - d)) out.insert(poly_mul(a, b, p));
  return out;
}

inline Poly first_irreducible(int p, int m) {
  const auto red = reducible(p, m);
  for (const auto& f : monic(p, m))
    if (!red.contains(f)) return f;
  return {};
}

// ---------------------------------------------------------------------------
// Small fields with full addition and multiplication tables, built by
// schoolbook multiplication and long division.

struct SmallField {
  int p = 0, m = 0, q = 0;
  std::vector<int> add, mul;

  SmallField(int p_, const Poly& modulus) : p(p_), m(static_cast<int>(modulus.size()) - 1) {
    q = 1;
    for (int i = 0; i < m; ++i) q *= p;
    add.assign(q * q, 0);
    mul.assign(q * q, 0);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        const Poly x = digits(a), y = digits(b);
        Poly s(m);
        for (int i = 0; i < m; ++i) s[i] = (x[i] + y[i]) % p;
        add[a * q + b] = value(s);
        Poly prod = poly_mul(x, y, p);
        for (int k = static_cast<int>(prod.size()) - 1; k >= m; --k) {
          const int c = prod[k];
          for (int i = 0; i <= m; ++i) prod[k - m + i] = ((prod[k - m + i] - c * modulus[i]) % p + p) % p;
        }
        prod.resize(m);
        mul[a * q + b] = value(prod);
      }
  }

  Poly digits(int a) const {
    Poly d(m);
    for (int i = 0; i < m; ++i, a /= p) d[i] = a % p;
    return d;
  }
  int value(const Poly& d) const {
    int v = 0;
    for (int i = m - 1; i >= 0; --i) v = v * p + d[i];
    return v;
  }
  int plus(int a, int b) const { return add[a * q + b]; }
  int times(int a, int b) const { return mul[a * q + b]; }
  int negate(int a) const {
    for (int b = 0; b < q; ++b)
      if (plus(a, b) == 0) return b;
    return -1;
  }
};

inline SmallField small_field(int q) {
  switch (q) {
    case 4: return {2, {1, 1, 1}};
    case 8: return {2, {1, 1, 0, 1}};
    case 9: return {3, {1, 0, 1}};
    case 16: return {2, {1, 1, 0, 0, 1}};
    default: return {q, {0, 1}};  // prime q
  }
}

// ---------------------------------------------------------------------------
// PSL(n, q) by enumerating every n x n matrix of determinant one and
// counting projective orders (n = 2, 3).

using Mat = std::vector<int>;

inline Mat mat_mul(const SmallField& F, const Mat& a, const Mat& b, int n) {
  Mat r(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int s = 0;
      for (int k = 0; k < n; ++k) s = F.plus(s, F.times(a[i * n + k], b[k * n + j]));
      r[i * n + j] = s;
    }
  return r;
}

inline int det(const SmallField& F, const Mat& a, int n) {
  auto sub = [&](int x, int y) { return F.plus(x, F.negate(y)); };
  if (n == 2) return sub(F.times(a[0], a[3]), F.times(a[1], a[2]));
  int d = 0;
  for (int j = 0; j < 3; ++j) {
    const int minor = sub(F.times(a[3 + (j + 1) % 3], a[6 + (j + 2) % 3]), F.times(a[3 + (j + 2) % 3], a[6 + (j + 1) % 3]));
    d = F.plus(d, F.times(a[j], minor));
  }
  return d;
}

inline std::optional<int> scalar_of(const Mat& a, int n) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && a[i * n + j] != 0) return std::nullopt;
  for (int i = 1; i < n; ++i)
    if (a[i * n + i] != a[0]) return std::nullopt;
  return a[0];
}

inline Counts psl_spectrum(int n, int q) {
  const SmallField F = small_field(q);
  int scalars = 0;
  for (int l = 1; l < q; ++l) {
    int pw = 1;
    for (int i = 0; i < n; ++i) pw = F.times(pw, l);
    if (pw == 1) ++scalars;
  }
  Counts raw;
  u64 total = 1;
  for (int i = 0; i < n * n; ++i) total *= q;
  Mat a(n * n);
  for (u64 idx = 0; idx < total; ++idx) {
    u64 v = idx;
    for (int i = 0; i < n * n; ++i, v /= q) a[i] = static_cast<int>(v % q);
    if (det(F, a, n) != 1) continue;
    Mat x = a;
    u64 k = 1;
    while (!scalar_of(x, n)) {
      x = mat_mul(F, x, a, n);
      ++k;
    }
    ++raw[k];
  }
  for (auto& [k, c] : raw) c /= scalars;
  return raw;
}

// ---------------------------------------------------------------------------
// PSp(4,3): closure of all symplectic transvections on GF(3)^4, then
// projective orders modulo +-I.

struct PspResult {
  u64 sp_order = 0;
  Counts spectrum;
};

inline PspResult psp4_3() {
  using M = std::array<std::uint8_t, 16>;
  auto mul = [](const M& a, const M& b) {
    M r{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        int s = 0;
        for (int k = 0; k < 4; ++k) s += a[i * 4 + k] * b[k * 4 + j];
        r[i * 4 + j] = static_cast<std::uint8_t>(s % 3);
      }
    return r;
  };
  struct H {
    std::size_t operator()(const M& m) const {
      std::size_t h = 0;
      for (auto c : m) h = h * 3 + c;
      return h;
    }
  };
  // B(x, y) = x1 y3 + x2 y4 - x3 y1 - x4 y2
  // x -> x + B(x, v) v has matrix I + v (Jv)^T.
  const int J[4][4] = {{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}};
  std::vector<M> gens;
  for (int c = 1; c < 81; ++c) {
    int v[4], w = c;
    for (int i = 0; i < 4; ++i, w /= 3) v[i] = w % 3;
    int jv[4];
    for (int i = 0; i < 4; ++i) {
      int s = 0;
      for (int k = 0; k < 4; ++k) s += J[i][k] * v[k];
      jv[i] = ((s % 3) + 3) % 3;
    }
    M t{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) t[i * 4 + j] = static_cast<std::uint8_t>(((i == j) + v[i] * jv[j]) % 3);
    gens.push_back(t);
  }
  M id{};
  for (int i = 0; i < 4; ++i) id[i * 5] = 1;
  std::unordered_set<M, H> seen{id};
  std::vector<M> elems{id};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      M y = mul(g, elems[i]);
      if (seen.insert(y).second) elems.push_back(y);
    }
  M minus_id{};
  for (int i = 0; i < 4; ++i) minus_id[i * 5] = 2;
  PspResult out;
  out.sp_order = elems.size();
  for (const auto& a : elems) {
    M x = a;
    u64 k = 1;
    while (x != id && x != minus_id) {
      x = mul(x, a);
      ++k;
    }
    ++out.spectrum[k];
  }
  for (auto& [k, c] : out.spectrum) c /= 2;
  return out;
}

// ---------------------------------------------------------------------------
// Symmetric and alternating groups by cycle-type census.

inline Counts cycle_type_census(int n, bool even_only) {
  Counts out;
  u64 nfact = 1;
  for (int i = 2; i <= n; ++i) nfact *= i;
  std::vector<int> parts;
  auto visit = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      u64 denom = 1, order = 1;
      std::map<int, int> mult;
      for (int k : parts) {
        ++mult[k];
        order = lcm(order, k);
      }
      for (auto [k, m] : mult)
        for (int i = 0; i < m; ++i) denom *= static_cast<u64>(k) * (i + 1);
      const bool even = (n - static_cast<int>(parts.size())) % 2 == 0;
      if (!even_only || even) out[order] += nfact / denom;
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      parts.push_back(k);
      self(self, remaining - k, k);
      parts.pop_back();
    }
  };
  visit(visit, n, n);
  return out;
}

inline Counts cyclic_spectrum(u64 n) {
  Counts out;
  for (u64 d = 1; d <= n; ++d)
    if (n % d == 0) out[d] = phi(d);
  return out;
}

// ---------------------------------------------------------------------------
// Permutations as plain vectors; a * b applies a first.

using Perm = std::vector<int>;

inline Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

inline Perm invert(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

inline u64 order(const Perm& a) {
  Perm x = a;
  u64 k = 1;
  Perm id(a.size());
  std::iota(id.begin(), id.end(), 0);
  while (x != id) {
    x = compose(x, a);
    ++k;
  }
  return k;
}

inline std::set<Perm> closure(const std::vector<Perm>& gens, std::size_t degree) {
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen{id};
  std::vector<Perm> queue{id};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : gens) {
      Perm y = compose(queue[i], g);
      if (seen.insert(y).second) queue.push_back(y);
    }
  return seen;
}

inline Counts spectrum(const std::set<Perm>& G) {
  Counts out;
  for (const auto& x : G) ++out[order(x)];
  return out;
}

/// Sorted conjugacy class sizes by direct orbit computation.
inline std::vector<u64> class_sizes(const std::set<Perm>& G) {
  std::set<Perm> done;
  std::vector<u64> out;
  for (const auto& x : G) {
    if (done.contains(x)) continue;
    std::set<Perm> cls;
    for (const auto& g : G) cls.insert(compose(compose(invert(g), x), g));
    done.insert(cls.begin(), cls.end());
    out.push_back(cls.size());
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Nilpotent iff the lower central series reaches the trivial group.
inline bool nilpotent(const std::set<Perm>& G) {
  const std::size_t degree = G.begin()->size();
  std::set<Perm> gamma = G;
  while (gamma.size() > 1) {
    std::vector<Perm> comms;
    for (const auto& x : gamma)
      for (const auto& g : G) comms.push_back(compose(compose(compose(invert(x), invert(g)), x), g));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    auto next = closure(comms, degree);
    if (next.size() == gamma.size()) return false;
    gamma = std::move(next);
  }
  return true;
}

/// Solvable iff the derived series reaches the trivial group.
inline bool solvable(const std::set<Perm>& G) {
  const std::size_t degree = G.begin()->size();
  std::set<Perm> cur = G;
  while (cur.size() > 1) {
    std::vector<Perm> comms;
    for (const auto& x : cur)
      for (const auto& y : cur) comms.push_back(compose(compose(compose(invert(x), invert(y)), x), y));
    auto next = closure(comms, degree);
    if (next.size() == cur.size()) return false;
    cur = std::move(next);
  }
  return true;
}

}  // namespace oracle

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
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "sotype/arith.hpp"
#include "sotype/errors.hpp"

namespace sot {

/// A permutation of {0, ..., n-1} stored as its image array.
///
/// Products compose left to right: (a * b)(i) = b(a(i)), i.e. apply a, then b.
/// The image array doubles as the canonical key, so equality, hashing and
/// ordering are all defined on it.
class Permutation {
 public:
  using point_type = std::uint16_t;
  static constexpr std::size_t max_degree = 65535;

  explicit Permutation(std::vector<point_type> images) : images_(std::move(images)) {
    if (images_.empty()) throw parameter_error("permutation of degree 0");
    std::vector<bool> seen(images_.size(), false);
    for (auto v : images_) {
      if (v >= images_.size() || seen[v]) throw parameter_error("image list is not a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t degree) {
    if (degree == 0 || degree > max_degree) throw parameter_error("bad permutation degree");
    std::vector<point_type> id(degree);
    std::iota(id.begin(), id.end(), point_type{0});
    return Permutation(std::move(id), unchecked{});
  }

  /// Product of the given cycles (zero-based points), applied left to right.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<std::size_t>>& cycles) {
    Permutation result = identity(degree);
    for (const auto& cycle : cycles) {
      std::vector<point_type> img = identity(degree).images_;
      std::vector<bool> used(degree, false);
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (cycle[i] >= degree) throw parameter_error("cycle point outside degree");
        if (used[cycle[i]]) throw parameter_error("point repeated inside a cycle");
        used[cycle[i]] = true;
        img[cycle[i]] = static_cast<point_type>(cycle[(i + 1) % cycle.size()]);
      }
      result = result * Permutation(std::move(img), unchecked{});
    }
    return result;
  }

  std::size_t degree() const { return images_.size(); }
  point_type operator()(std::size_t i) const { return images_[i]; }
  std::span<const point_type> images() const { return images_; }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw carrier_mismatch("permutations of different degree");
    std::vector<point_type> out(a.degree());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = b.images_[a.images_[i]];
    return Permutation(std::move(out), unchecked{});
  }

  Permutation inverse() const {
    std::vector<point_type> out(degree());
    for (std::size_t i = 0; i < out.size(); ++i) out[images_[i]] = static_cast<point_type>(i);
    return Permutation(std::move(out), unchecked{});
  }

  Permutation identity() const { return identity(degree()); }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  bool compatible(const Permutation& other) const { return degree() == other.degree(); }

  /// Lengths of the nontrivial cycles, ascending.
  std::vector<std::size_t> cycle_type() const {
    std::vector<std::size_t> lengths;
    std::vector<bool> seen(degree(), false);
    for (std::size_t i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      if (len > 1) lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
  }

  /// lcm of the cycle lengths.
  u64 order() const {
    u64 result = 1;
    for (auto len : cycle_type()) result = std::lcm(result, u64{len});
    return result;
  }

  bool is_even() const {
    std::size_t transpositions = 0;
    for (auto len : cycle_type()) transpositions += len - 1;
    return transpositions % 2 == 0;
  }

  std::size_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto v : images_) {
      h ^= v;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }

  /// One-based cycle notation, e.g. "(1,2,3)(4,5)"; the identity prints as "()".
  std::string to_cycle_string() const {
    std::string out;
    std::vector<bool> seen(degree(), false);
    for (std::size_t i = 0; i < degree(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      out += '(';
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        if (j != i) out += ',';
        out += std::to_string(j + 1);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  struct unchecked {};
  Permutation(std::vector<point_type> images, unchecked) : images_(std::move(images)) {}

  std::vector<point_type> images_;
};

}  // namespace sot

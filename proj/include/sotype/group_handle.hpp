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

#include <variant>

#include "sotype/group.hpp"
#include "sotype/matrix.hpp"
#include "sotype/permutation.hpp"

namespace sot {

using PermGroup = Group<Permutation>;
using MatrixGroup = Group<Matrix>;

/// A fully enumerated group over either carrier. Representation-agnostic
/// code takes this and dispatches with std::visit.
using GroupHandle = std::variant<PermGroup, MatrixGroup>;

inline std::size_t group_order(const GroupHandle& G) {
  return std::visit([](const auto& g) { return g.order(); }, G);
}

inline bool is_simple(const GroupHandle& G) {
  return std::visit([](const auto& g) { return is_simple(g); }, G);
}

inline bool is_solvable(const GroupHandle& G) {
  return std::visit([](const auto& g) { return is_solvable(g); }, G);
}

inline bool is_nilpotent(const GroupHandle& G) {
  return std::visit([](const auto& g) { return is_nilpotent(g); }, G);
}

inline bool is_abelian(const GroupHandle& G) {
  return std::visit([](const auto& g) { return g.is_abelian(); }, G);
}

}  // namespace sot

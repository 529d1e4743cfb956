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

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sotype/checks.hpp"
#include "sotype/sotype.hpp"

namespace sot::testing {

inline BuildOptions options() {
  BuildOptions opts;
  opts.data_dir = SOTYPE_TEST_DATA_DIR;
  return opts;
}

/// Catalog and suite groups are built once per test binary.
inline GroupContext& context(const GroupRecipe& r) {
  static std::map<std::string, std::unique_ptr<GroupContext>> cache;
  const std::string key = to_manifest_line(r);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::make_unique<GroupContext>(r, build(r, options()))).first;
  return *it->second;
}

inline GroupRecipe catalog_entry(std::string_view name) {
  for (auto& r : catalog())
    if (r.name == name) return r;
  throw parameter_error("no catalog entry " + std::string(name));
}

inline GroupContext& catalog_group(std::string_view name) { return context(catalog_entry(name)); }

inline std::vector<GroupRecipe> suite_up_to(u64 max_order) {
  std::vector<GroupRecipe> out;
  for (auto& r : small_group_suite())
    if (r.expected_order && *r.expected_order <= max_order) out.push_back(r);
  return out;
}

inline std::map<u64, u64> counts_of(const OrderSpectrum& s) { return s.counts(); }

/// Plain image vectors for the oracles.
inline std::vector<int> images(const Permutation& p) {
  std::vector<int> out;
  for (std::size_t i = 0; i < p.degree(); ++i) out.push_back(static_cast<int>(p(i)));
  return out;
}

}  // namespace sot::testing

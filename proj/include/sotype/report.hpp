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

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sotype/checks.hpp"
#include "sotype/constructions.hpp"
#include "sotype/spectrum.hpp"
#include "sotype/structure.hpp"

namespace sot {

inline constexpr const char* tool_version = "1.0.0";

/// Canonical JSON report. Keys appear in a fixed order and the spectrum
/// object lists orders numerically ascending, so equal inputs give
/// byte-identical output.
inline nlohmann::ordered_json make_report(const GroupRecipe& recipe, const OrderSpectrum& spec,
                                          const std::vector<CheckResult>& checks = {}) {
  using json = nlohmann::ordered_json;
  json report;
  report["tool_version"] = tool_version;
  report["group"] = {{"name", recipe.name}, {"kind", describe_kind(recipe)}, {"order", spec.group_order()}};
  json counts = json::object();
  for (const auto& [t, s] : spec.counts()) counts[std::to_string(t)] = s;
  report["spectrum"] = counts;
  report["nse"] = nse(spec);
  report["pi"] = spec.primes();
  report["pi_e"] = spec.element_orders();
  const auto g = prime_graph(spec);
  json edges = json::array();
  for (const auto& [p, q] : g.edges) edges.push_back({p, q});
  report["prime_graph"] = {{"vertices", g.vertices}, {"edges", edges}, {"connected", is_connected(g)}};
  json list = json::array();
  for (const auto& c : checks) list.push_back({{"id", c.id}, {"status", std::string(to_string(c.status))}, {"details", c.details}});
  report["checks"] = list;
  return report;
}

/// Report for catalog-level checks that belong to no single group.
inline nlohmann::ordered_json make_catalog_report(const std::vector<CheckResult>& checks) {
  using json = nlohmann::ordered_json;
  json report;
  report["tool_version"] = tool_version;
  report["group"] = {{"name", "catalog"}, {"kind", "catalog"}};
  json list = json::array();
  for (const auto& c : checks) list.push_back({{"id", c.id}, {"status", std::string(to_string(c.status))}, {"details", c.details}});
  report["checks"] = list;
  return report;
}

}  // namespace sot

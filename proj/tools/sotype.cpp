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

// sotype: same-order types, order spectra and prime graphs of finite groups.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or parse error,
// 3 build failure or order gate, 4 enumeration cap exceeded.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sotype/report.hpp"
#include "sotype/sotype.hpp"

namespace {

using sot::Status;

enum Exit : int { ok = 0, check_failed = 1, usage = 2, build_failed = 3, too_large = 4 };

struct Options {
  std::size_t cap = sot::default_cap;
  bool json_only = false;
  bool pretty = false;
  bool strict = false;
  bool stress = false;
  std::string data_dir;
  std::string manifest;
};

/// Tracks the worst outcome seen so far.
struct Outcome {
  int code = ok;
  void raise(int c) {
    auto rank = [](int x) { return x == too_large ? 4 : x == build_failed ? 3 : x == check_failed ? 1 : x == usage ? 5 : 0; };
    if (rank(c) > rank(code)) code = c;
  }
};

sot::BuildOptions build_options(const Options& o) {
  sot::BuildOptions b;
  b.cap = o.cap;
  if (!o.data_dir.empty()) b.data_dir = o.data_dir;
  else if (const char* env = std::getenv("SOTYPE_DATA_DIR")) b.data_dir = env;
  else b.data_dir = "data";
  return b;
}

void emit(const nlohmann::ordered_json& doc, const Options& o) { std::cout << doc.dump(o.pretty ? 2 : -1) << '\n'; }

void summarize(const Options& o, const std::string& name, const sot::OrderSpectrum& spec,
               const std::vector<sot::CheckResult>& checks) {
  if (o.json_only) return;
  std::cerr << name << ": |G| = " << spec.group_order() << ", nse = {" << sot::detail::join(sot::nse(spec), ", ") << "}";
  for (const auto& c : checks) {
    if (&c == &checks.front()) std::cerr << '\n';
    std::cerr << "  " << c.id << ": " << sot::to_string(c.status) << (c.details.empty() ? "" : " (" + c.details + ")") << '\n';
  }
  if (checks.empty()) std::cerr << '\n';
}

int status_exit(const std::vector<sot::CheckResult>& checks, bool strict) {
  for (const auto& c : checks)
    if (c.status == Status::fail || (strict && c.status == Status::skipped)) return check_failed;
  return ok;
}

/// Builds a group, mapping library errors onto exit codes.
std::optional<sot::GroupContext> try_build(const sot::GroupRecipe& r, const Options& o, Outcome& out) {
  try {
    return sot::GroupContext(r, sot::build(r, build_options(o)));
  } catch (const sot::cap_exceeded& e) {
    std::cerr << r.name << ": " << e.what() << " (raise --cap)\n";
    out.raise(too_large);
  } catch (const sot::parse_error& e) {
    std::cerr << r.name << ": " << e.what() << '\n';
    out.raise(usage);
  } catch (const sot::error& e) {
    std::cerr << r.name << ": " << e.what() << '\n';
    out.raise(build_failed);
  }
  return std::nullopt;
}

int cmd_spectrum(const std::string& spec_text, const Options& o, bool with_graph_check) {
  sot::GroupRecipe r;
  try {
    r = sot::parse_group_spec(spec_text);
  } catch (const sot::parse_error& e) {
    std::cerr << e.what() << '\n';
    return usage;
  }
  Outcome out;
  auto ctx = try_build(r, o, out);
  if (!ctx) return out.code;
  std::vector<sot::CheckResult> checks;
  if (with_graph_check) checks.push_back(sot::run_check("prime-graph-triple", *ctx));
  emit(sot::make_report(r, ctx->spectrum(), checks), o);
  summarize(o, r.name, ctx->spectrum(), checks);
  return ok;
}

int cmd_ingest(const std::string& path, std::optional<std::uint64_t> expected, const Options& o) {
  sot::GroupRecipe r;
  r.kind = sot::RecipeKind::file;
  r.path = std::filesystem::absolute(path);
  r.name = r.path.stem().string();
  r.expected_order = expected;
  Outcome out;
  auto ctx = try_build(r, o, out);
  if (!ctx) return out.code;
  const std::vector<sot::CheckResult> checks{sot::run_check("frobenius", *ctx)};
  emit(sot::make_report(r, ctx->spectrum(), checks), o);
  summarize(o, r.name, ctx->spectrum(), checks);
  return status_exit(checks, o.strict);
}

int cmd_verify(const std::string& check, const std::string& target, bool whole_catalog, const Options& o) {
  if (check != "all" && !sot::is_known_check(check)) {
    std::cerr << "unknown check id '" << check << "'; known: " << sot::detail::join(sot::check_ids, ", ") << '\n';
    return usage;
  }
  Outcome out;
  auto per_group = [&](sot::GroupContext& ctx) {
    return check == "all" ? sot::run_all_checks(ctx) : std::vector<sot::CheckResult>{sot::run_check(check, ctx)};
  };

  if (!whole_catalog) {
    if (target.empty()) {
      std::cerr << "verify needs a group spec or --catalog\n";
      return usage;
    }
    sot::GroupRecipe r;
    try {
      r = sot::parse_group_spec(target);
    } catch (const sot::parse_error& e) {
      std::cerr << e.what() << '\n';
      return usage;
    }
    auto ctx = try_build(r, o, out);
    if (!ctx) return out.code;
    const auto checks = per_group(*ctx);
    emit(sot::make_report(r, ctx->spectrum(), checks), o);
    summarize(o, r.name, ctx->spectrum(), checks);
    out.raise(status_exit(checks, o.strict));
    return out.code;
  }

  std::vector<sot::GroupRecipe> recipes;
  try {
    recipes = o.manifest.empty() ? sot::catalog() : sot::load_manifest(o.manifest);
  } catch (const sot::error& e) {
    std::cerr << e.what() << '\n';
    return usage;
  }
  if (o.stress) recipes.push_back(sot::make_recipe("A10", sot::RecipeKind::alternating, 10, true));

  const bool catalog_only = sot::is_catalog_check(check);
  auto needed = [&](const sot::GroupRecipe& r) {
    if (check == "eight-groups") {
      for (const char* n : sot::eight_group_names())
        if (r.name == n) return true;
      return r.name == "L2(5)";
    }
    if (check == "thompson-pair") return r.name == "2^4:A7" || r.name == "L3(4):2";
    return true;
  };

  std::vector<sot::GroupSummary> summaries;
  for (const auto& r : recipes) {
    if (!needed(r)) continue;
    std::optional<sot::GroupContext> ctx;
    try {
      ctx.emplace(r, sot::build(r, build_options(o)));
    } catch (const sot::missing_data& e) {
      if (!o.json_only) std::cerr << r.name << ": skipped, " << e.what() << '\n';
      if (o.strict) out.raise(check_failed);
      if (!catalog_only) {
        std::vector<sot::CheckResult> skipped;
        for (auto id : sot::check_ids)
          if (!sot::is_catalog_check(id) && (check == "all" || check == id)) skipped.push_back({std::string(id), Status::skipped, e.what()});
        auto doc = sot::make_catalog_report(skipped);
        doc["group"] = {{"name", r.name}, {"kind", sot::describe_kind(r)}};
        emit(doc, o);
      }
      continue;
    } catch (const sot::cap_exceeded& e) {
      std::cerr << r.name << ": " << e.what() << '\n';
      out.raise(too_large);
      continue;
    } catch (const sot::error& e) {
      std::cerr << r.name << ": " << e.what() << '\n';
      out.raise(build_failed);
      continue;
    }
    if (r.claimed_simple && ctx->simple() != *r.claimed_simple) {
      std::cerr << r.name << ": claimed_simple disagrees with the computed answer\n";
      out.raise(check_failed);
    }
    if (!catalog_only) {
      const auto checks = per_group(*ctx);
      emit(sot::make_report(r, ctx->spectrum(), checks), o);
      summarize(o, r.name, ctx->spectrum(), checks);
      out.raise(status_exit(checks, o.strict));
    }
    if (check == "all" || catalog_only) summaries.push_back({r.name, ctx->spectrum(), ctx->simple(), !ctx->abelian()});
  }

  std::vector<sot::CheckResult> catalog_checks;
  if (check == "all" || check == "eight-groups") catalog_checks.push_back(sot::run_eight_groups(summaries));
  if (check == "all" || check == "thompson-pair") {
    const sot::GroupSummary *a = nullptr, *b = nullptr;
    for (const auto& s : summaries) {
      if (s.name == "2^4:A7") a = &s;
      if (s.name == "L3(4):2") b = &s;
    }
    catalog_checks.push_back(sot::run_thompson_pair(a, b));
  }
  if (!catalog_checks.empty()) {
    emit(sot::make_catalog_report(catalog_checks), o);
    if (!o.json_only)
      for (const auto& c : catalog_checks) std::cerr << "catalog " << c.id << ": " << sot::to_string(c.status) << " (" << c.details << ")\n";
    out.raise(status_exit(catalog_checks, o.strict));
  }
  return out.code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Same-order types, order spectra and prime graphs of finite groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--cap", o.cap, "Maximum number of enumerated elements")->default_val(sot::default_cap);
  app.add_flag("--json-only", o.json_only, "Suppress the summary on standard error");
  app.add_flag("--pretty", o.pretty, "Indent JSON output");
  app.add_option("--data-dir", o.data_dir, "Directory of generator files (default $SOTYPE_DATA_DIR or ./data)");

  std::string group;
  auto* spectrum = app.add_subcommand("spectrum", "Element-order spectrum, nse, pi, pi_e and prime graph of a group");
  spectrum->add_option("group", group, "Group spec, e.g. A5, L2(7), Sz(8), file:gens.txt")->required();

  auto* graph = app.add_subcommand("prime-graph", "Prime graph of a group with its independent-triple check");
  graph->add_option("group", group, "Group spec")->required();

  std::string check, target;
  bool whole_catalog = false;
  auto* verify = app.add_subcommand("verify", "Run a named check (or all) on a group or the catalog");
  verify->add_option("check", check, "Check id or 'all'")->required();
  verify->add_option("group", target, "Group spec");
  verify->add_flag("--catalog", whole_catalog, "Run over every catalog group");
  verify->add_flag("--strict", o.strict, "Treat skipped file-backed groups as failures");
  verify->add_flag("--stress", o.stress, "Add A10 (1814400 elements) to the catalog run");
  verify->add_option("--manifest", o.manifest, "Catalog manifest to use instead of the built-in catalog");

  std::string path;
  std::optional<std::uint64_t> expected;
  auto* ingest = app.add_subcommand("ingest", "Build a group from a generator file");
  ingest->add_option("path", path, "Generator file")->required();
  ingest->add_option("--expected-order", expected, "Order gate");

  auto* cat = app.add_subcommand("catalog", "Catalog commands");
  cat->require_subcommand(1);
  auto* list = cat->add_subcommand("list", "Print the built-in catalog as a manifest");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  if (*spectrum) return cmd_spectrum(group, o, false);
  if (*graph) return cmd_spectrum(group, o, true);
  if (*verify) return cmd_verify(check, target, whole_catalog, o);
  if (*ingest) return cmd_ingest(path, expected, o);
  if (*list) {
    std::cout << "# name | kind params | expected_order | claimed_simple\n";
    for (const auto& r : sot::catalog()) std::cout << sot::to_manifest_line(r) << '\n';
    return ok;
  }
  return usage;
}

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

/// @file generators_io.hpp
/// Text format for permutation generators.
///
///     # comment
///     degree 5
///     (1,2,3,4,5)
///     (1,2)(3,4)
///     2 1 3 5 4
///
/// Points are 1..N in the file and 0..N-1 in memory. A generator line is
/// either cycle notation (fixed points omitted; several cycles multiply left
/// to right) or the full image list of N integers.

#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sotype/errors.hpp"
#include "sotype/permutation.hpp"

namespace sot {

struct GeneratorSet {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::size_t parse_count(std::string_view tok, std::string_view what) {
  std::size_t v = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc{} || ptr != end || tok.empty()) throw parse_error("expected an integer for " + std::string(what) + ", got '" + std::string(tok) + "'");
  return v;
}

inline std::vector<std::string_view> split_points(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ',' || std::isspace(static_cast<unsigned char>(s[i])))) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ',' && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace detail

/// Parses one generator written in one-based cycle notation, e.g. "(1,2,3)(4,5)".
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<std::size_t>> cycles;
  text = detail::trim(text);
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw parse_error("expected '(' in cycle notation: " + std::string(text));
    const auto close = text.find(')', i);
    if (close == std::string_view::npos) throw parse_error("unterminated cycle: " + std::string(text));
    std::vector<std::size_t> cycle;
    for (auto tok : detail::split_points(text.substr(i + 1, close - i - 1))) {
      const auto point = detail::parse_count(tok, "cycle point");
      if (point < 1 || point > degree)
        throw parse_error("point " + std::to_string(point) + " outside 1.." + std::to_string(degree));
      cycle.push_back(point - 1);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    i = close + 1;
  }
  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (const parameter_error& e) {
    throw parse_error(e.what());
  }
}

/// Parses a full one-based image list of exactly `degree` entries.
inline Permutation parse_image_list(std::string_view text, std::size_t degree) {
  const auto toks = detail::split_points(text);
  if (toks.size() != degree)
    throw parse_error("image list has " + std::to_string(toks.size()) + " entries, degree is " + std::to_string(degree));
  std::vector<Permutation::point_type> images;
  for (auto tok : toks) {
    const auto v = detail::parse_count(tok, "image");
    if (v < 1 || v > degree) throw parse_error("image " + std::to_string(v) + " outside 1.." + std::to_string(degree));
    images.push_back(static_cast<Permutation::point_type>(v - 1));
  }
  try {
    return Permutation(std::move(images));
  } catch (const parameter_error&) {
    throw parse_error("image list is not a bijection: " + std::string(text));
  }
}

inline GeneratorSet parse_generators(std::istream& in) {
  GeneratorSet out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = line;
    if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = detail::trim(s);
    if (s.empty()) continue;
    const auto where = "line " + std::to_string(lineno) + ": ";
    try {
      if (out.degree == 0) {
        if (s.substr(0, 6) != "degree") throw parse_error("expected 'degree N' header");
        out.degree = detail::parse_count(detail::trim(s.substr(6)), "degree");
        if (out.degree == 0 || out.degree > Permutation::max_degree) throw parse_error("degree out of range");
        continue;
      }
      out.generators.push_back(s.find('(') != std::string_view::npos ? parse_cycles(s, out.degree)
                                                                     : parse_image_list(s, out.degree));
    } catch (const parse_error& e) {
      throw parse_error(where + e.what());
    }
  }
  if (out.degree == 0) throw parse_error("missing 'degree N' header");
  if (out.generators.empty()) throw parse_error("no generators listed");
  return out;
}

inline GeneratorSet parse_generators(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_generators(in);
}

inline GeneratorSet load_generators(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) throw missing_data("generator file not found: " + path.string());
  std::ifstream in(path);
  if (!in) throw parse_error("cannot read generator file " + path.string());
  try {
    return parse_generators(in);
  } catch (const parse_error& e) {
    throw parse_error(path.string() + ": " + e.what());
  }
}

}  // namespace sot

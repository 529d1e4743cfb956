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

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "sotype/errors.hpp"
#include "sotype/finite_field.hpp"

namespace sot {

/// Square invertible matrix over a finite field. Entries are field indices
/// stored row-major; that vector is the canonical key.
class Matrix {
 public:
  using value_type = Field::value_type;

  Matrix(FieldPtr field, std::size_t n, std::vector<value_type> entries)
      : field_(std::move(field)), n_(n), entries_(std::move(entries)) {
    if (n_ == 0 || entries_.size() != n_ * n_) throw parameter_error("matrix entries do not form a square");
    for (auto e : entries_)
      if (e >= field_->size()) throw parameter_error("matrix entry outside the field");
  }

  static Matrix identity(FieldPtr field, std::size_t n) {
    std::vector<value_type> e(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
    return {std::move(field), n, std::move(e)};
  }

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::size_t dimension() const { return n_; }
  value_type operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
  const std::vector<value_type>& entries() const { return entries_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (!a.compatible(b)) throw carrier_mismatch("matrices over different fields or dimensions");
    const Field& f = *a.field_;
    const std::size_t n = a.n_;
    std::vector<value_type> out(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const value_type aik = a.entries_[i * n + k];
        if (aik == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          const value_type bkj = b.entries_[k * n + j];
          if (bkj != 0) out[i * n + j] = f.add(out[i * n + j], f.mul(aik, bkj));
        }
      }
    return Matrix(a.field_, n, std::move(out), unchecked{});
  }

  /// Gauss-Jordan elimination; throws parameter_error when singular.
  Matrix inverse() const {
    const Field& f = *field_;
    const std::size_t n = n_;
    std::vector<value_type> work = entries_;
    std::vector<value_type> inv = identity(field_, n).entries_;
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (pivot < n && work[pivot * n + col] == 0) ++pivot;
      if (pivot == n) throw parameter_error("singular matrix");
      if (pivot != col)
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(work[pivot * n + j], work[col * n + j]);
          std::swap(inv[pivot * n + j], inv[col * n + j]);
        }
      const value_type scale = f.inv(work[col * n + col]);
      for (std::size_t j = 0; j < n; ++j) {
        work[col * n + j] = f.mul(work[col * n + j], scale);
        inv[col * n + j] = f.mul(inv[col * n + j], scale);
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || work[r * n + col] == 0) continue;
        const value_type factor = f.neg(work[r * n + col]);
        for (std::size_t j = 0; j < n; ++j) {
          work[r * n + j] = f.add(work[r * n + j], f.mul(factor, work[col * n + j]));
          inv[r * n + j] = f.add(inv[r * n + j], f.mul(factor, inv[col * n + j]));
        }
      }
    }
    return Matrix(field_, n, std::move(inv), unchecked{});
  }

  Matrix identity() const { return identity(field_, n_); }

  bool is_identity() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (entries_[i * n_ + j] != (i == j ? 1u : 0u)) return false;
    return true;
  }

  bool compatible(const Matrix& other) const { return n_ == other.n_ && field_->same_as(*other.field_); }

  /// Least k >= 1 with x^k = 1, by repeated multiplication.
  u64 order() const {
    u64 k = 1;
    for (Matrix x = *this; !x.is_identity(); x = x * *this) ++k;
    return k;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ n_;
    for (auto v : entries_) {
      h ^= v;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 31));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_ && a.field_->same_as(*b.field_);
  }
  friend auto operator<=>(const Matrix& a, const Matrix& b) { return a.entries_ <=> b.entries_; }

 private:
  struct unchecked {};
  Matrix(FieldPtr field, std::size_t n, std::vector<value_type> entries, unchecked)
      : field_(std::move(field)), n_(n), entries_(std::move(entries)) {}

  FieldPtr field_;
  std::size_t n_;
  std::vector<value_type> entries_;
};

}  // namespace sot

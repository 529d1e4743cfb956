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

/// @file finite_field.hpp
/// Exact arithmetic in GF(p^m).
///
/// Elements are stored by index: the coefficient vector (c0, ..., c_{m-1}) of
/// the reduced polynomial representative maps to sum c_i p^i. Index 0 is zero,
/// index 1 is one, and index p is the class of x. Multiplication runs through
/// log/exp tables built from a primitive element; the polynomial route is kept
/// as `mul_reference` so the tables can be checked against it.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sotype/arith.hpp"
#include "sotype/errors.hpp"

namespace sot {

class Field {
 public:
  using value_type = std::uint32_t;

  /// Largest supported field size; the log/exp tables are O(q).
  static constexpr u64 max_size = u64{1} << 20;

  /// GF(p^m) with the smallest monic irreducible modulus, where polynomials
  /// are ranked by the integer sum c_i p^i of their lower coefficients.
  static std::shared_ptr<const Field> build(u64 p, unsigned m) {
    if (!is_prime(p)) throw parameter_error(std::to_string(p) + " is not prime");
    if (m == 0) throw parameter_error("field degree must be positive");
    const u64 q = ipow(p, m);
    if (q > max_size) throw parameter_error("field GF(" + std::to_string(q) + ") is too large");
    for (u64 c = 0; c < q; ++c) {
      std::vector<value_type> modulus = digits(c, p, m);
      modulus.push_back(1);
      if (is_irreducible(modulus, p)) return std::shared_ptr<const Field>(new Field(p, m, std::move(modulus)));
    }
    throw internal_error("no irreducible polynomial found");  // unreachable
  }

  /// GF(p^m) over a caller-chosen modulus c0..cm (monic, irreducible).
  static std::shared_ptr<const Field> with_modulus(u64 p, std::vector<value_type> modulus) {
    if (!is_prime(p)) throw parameter_error(std::to_string(p) + " is not prime");
    if (modulus.size() < 2 || modulus.back() != 1) throw parameter_error("modulus must be monic of degree >= 1");
    for (auto c : modulus)
      if (c >= p) throw parameter_error("modulus coefficient out of range");
    if (!is_irreducible(modulus, p)) throw parameter_error("modulus is reducible");
    const auto m = static_cast<unsigned>(modulus.size() - 1);
    if (ipow(p, m) > max_size) throw parameter_error("field is too large");
    return std::shared_ptr<const Field>(new Field(p, m, std::move(modulus)));
  }

  u64 characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  u64 size() const { return q_; }
  const std::vector<value_type>& modulus() const { return modulus_; }
  value_type primitive_element() const { return primitive_; }

  bool same_as(const Field& other) const {
    return this == &other || (p_ == other.p_ && modulus_ == other.modulus_);
  }

  std::vector<value_type> coeffs(value_type a) const { return digits(a, p_, m_); }

  value_type from_coeffs(std::span<const value_type> c) const {
    if (c.size() > m_) throw parameter_error("too many coefficients for field degree");
    value_type v = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      if (c[i] >= p_) throw parameter_error("coefficient out of range");
      v = static_cast<value_type>(v * p_ + c[i]);
    }
    return v;
  }

  value_type add(value_type a, value_type b) const {
    if (p_ == 2) return a ^ b;
    value_type out = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
      out += static_cast<value_type>(((a % p_) + (b % p_)) % p_) * scale;
      a /= static_cast<value_type>(p_);
      b /= static_cast<value_type>(p_);
      scale *= static_cast<value_type>(p_);
    }
    return out;
  }

  value_type neg(value_type a) const {
    if (p_ == 2) return a;
    value_type out = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
      out += static_cast<value_type>((p_ - a % p_) % p_) * scale;
      a /= static_cast<value_type>(p_);
      scale *= static_cast<value_type>(p_);
    }
    return out;
  }

  value_type sub(value_type a, value_type b) const { return add(a, neg(b)); }

  value_type mul(value_type a, value_type b) const {
    if (a == 0 || b == 0) return 0;
    const u64 e = (u64{log_[a]} + log_[b]) % (q_ - 1);
    return exp_[e];
  }

  value_type inv(value_type a) const {
    if (a == 0) throw parameter_error("inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }

  /// Square-and-multiply.
  value_type pow(value_type a, u64 e) const {
    value_type result = 1;
    while (e) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }

  /// Schoolbook polynomial product reduced by the modulus.
  value_type mul_reference(value_type a, value_type b) const {
    return from_poly(poly_mulmod(digits(a, p_, m_), digits(b, p_, m_), modulus_, p_));
  }

 private:
  Field(u64 p, unsigned m, std::vector<value_type> modulus)
      : p_(p), m_(m), q_(ipow(p, m)), modulus_(std::move(modulus)) {
    build_tables();
  }

  static std::vector<value_type> digits(u64 v, u64 p, unsigned m) {
    std::vector<value_type> d(m);
    for (unsigned i = 0; i < m; ++i) {
      d[i] = static_cast<value_type>(v % p);
      v /= p;
    }
    return d;
  }

  value_type from_poly(const std::vector<value_type>& poly) const {
    value_type v = 0;
    for (std::size_t i = m_; i-- > 0;) v = static_cast<value_type>(v * p_ + (i < poly.size() ? poly[i] : 0));
    return v;
  }

  static void trim(std::vector<value_type>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  /// Remainder of a modulo monic b over Z_p.
  static std::vector<value_type> poly_mod(std::vector<value_type> a, const std::vector<value_type>& b, u64 p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
      const u64 lead = a.back();
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i <= db; ++i)
        a[shift + i] = static_cast<value_type>((a[shift + i] + (p - lead) * b[i]) % p);
      trim(a);
    }
    return a;
  }

  static std::vector<value_type> poly_mulmod(const std::vector<value_type>& a, const std::vector<value_type>& b,
                                             const std::vector<value_type>& mod, u64 p) {
    std::vector<value_type> prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        prod[i + j] = static_cast<value_type>((prod[i + j] + u64{a[i]} * b[j]) % p);
    return poly_mod(std::move(prod), mod, p);
  }

  /// No monic factor of degree 1..m/2.
  static bool is_irreducible(const std::vector<value_type>& f, u64 p) {
    const unsigned m = static_cast<unsigned>(f.size() - 1);
    for (unsigned d = 1; 2 * d <= m; ++d) {
      const u64 count = ipow(p, d);
      for (u64 c = 0; c < count; ++c) {
        auto g = digits(c, p, d);
        g.push_back(1);
        if (poly_mod(f, g, p).empty()) return false;
      }
    }
    return true;
  }

  void build_tables() {
    if (q_ == 2) {
      primitive_ = 1;
      exp_ = {1};
      log_ = {0, 0};
      return;
    }
    for (value_type g = 2; g < q_; ++g) {
      std::vector<value_type> exp;
      exp.reserve(q_ - 1);
      value_type x = 1;
      do {
        exp.push_back(x);
        x = mul_reference(x, g);
      } while (x != 1 && exp.size() < q_);
      if (exp.size() == q_ - 1) {
        primitive_ = g;
        exp_ = std::move(exp);
        log_.assign(q_, 0);
        for (std::size_t i = 0; i < exp_.size(); ++i) log_[exp_[i]] = static_cast<value_type>(i);
        return;
      }
    }
    throw internal_error("multiplicative group is not cyclic; modulus not irreducible");
  }

  u64 p_;
  unsigned m_;
  u64 q_;
  std::vector<value_type> modulus_;
  value_type primitive_ = 1;
  std::vector<value_type> exp_;
  std::vector<value_type> log_;
};

using FieldPtr = std::shared_ptr<const Field>;

inline FieldPtr build_field(u64 p, unsigned m) { return Field::build(p, m); }

/// An element of GF(p^m) bound to its field. Arithmetic between elements of
/// different fields throws carrier_mismatch.
class FieldElement {
 public:
  using value_type = Field::value_type;

  FieldElement(FieldPtr field, value_type index) : field_(std::move(field)), index_(index) {
    if (index_ >= field_->size()) throw parameter_error("field element index out of range");
  }

  static FieldElement from_coeffs(FieldPtr field, std::span<const value_type> coeffs) {
    const auto v = field->from_coeffs(coeffs);
    return {std::move(field), v};
  }

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  value_type index() const { return index_; }
  std::vector<value_type> coeffs() const { return field_->coeffs(index_); }
  bool is_zero() const { return index_ == 0; }

  FieldElement inverse() const { return {field_, field_->inv(index_)}; }
  FieldElement pow(u64 e) const { return {field_, field_->pow(index_, e)}; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.field_, a.field_->add(a.index_, b.index_)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.field_, a.field_->sub(a.index_, b.index_)};
  }
  friend FieldElement operator-(const FieldElement& a) { return {a.field_, a.field_->neg(a.index_)}; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.field_, a.field_->mul(a.index_, b.index_)};
  }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.index_ == b.index_ && a.field_->same_as(*b.field_);
  }

 private:
  static void check(const FieldElement& a, const FieldElement& b) {
    if (!a.field_->same_as(*b.field_)) throw carrier_mismatch("field elements from different fields");
  }

  FieldPtr field_;
  value_type index_;
};

/// All q elements in index order: 0, 1, ..., p-1, x, x+1, ...
inline std::vector<FieldElement> ff_enumerate(const FieldPtr& field) {
  std::vector<FieldElement> out;
  out.reserve(field->size());
  for (u64 i = 0; i < field->size(); ++i) out.emplace_back(field, static_cast<FieldElement::value_type>(i));
  return out;
}

}  // namespace sot

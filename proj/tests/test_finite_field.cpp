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


#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "oracles.hpp"
#include "sotype/finite_field.hpp"

namespace sot {
namespace {

using V = Field::value_type;

std::vector<std::pair<u64, unsigned>> small_fields(u64 limit) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 p = 2; p <= limit; ++p) {
    if (!is_prime(p)) continue;
    u64 q = p;
    for (unsigned m = 1; q <= limit; ++m, q *= p) out.emplace_back(p, m);
  }
  return out;
}

FieldElement poly(const FieldPtr& F, std::vector<V> c) { return FieldElement::from_coeffs(F, c); }

TEST(FieldBuild, RejectsNonPrimeCharacteristic) {
  EXPECT_THROW(build_field(4, 1), parameter_error);
  EXPECT_THROW(build_field(1, 3), parameter_error);
  EXPECT_THROW(build_field(3, 0), parameter_error);
  EXPECT_THROW(build_field(2, 21), parameter_error);
}

TEST(FieldBuild, KnownModuli) {
  EXPECT_EQ(build_field(3, 2)->modulus(), (std::vector<V>{1, 0, 1}));
  EXPECT_EQ(build_field(2, 3)->modulus(), (std::vector<V>{1, 1, 0, 1}));
  EXPECT_EQ(build_field(7, 1)->modulus(), (std::vector<V>{0, 1}));
}

TEST(FieldBuild, ModulusIsFirstIrreducibleByBruteForce) {
  for (auto [p, m] : small_fields(729)) {
    if (m == 1) continue;
    const auto expected = oracle::first_irreducible(static_cast<int>(p), static_cast<int>(m));
    const auto F = build_field(p, m);
    const auto& got = F->modulus();
    ASSERT_EQ(got.size(), expected.size()) << p << "^" << m;
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(static_cast<int>(got[i]), expected[i]) << p << "^" << m;
  }
}

TEST(FieldBuild, WithModulusValidates) {
  EXPECT_THROW(Field::with_modulus(2, {1, 0, 1}), parameter_error);  // (x+1)^2
  EXPECT_THROW(Field::with_modulus(2, {1, 1, 0}), parameter_error);  // not monic
  EXPECT_THROW(Field::with_modulus(3, {1, 3}), parameter_error);
  EXPECT_EQ(Field::with_modulus(2, {1, 0, 1, 1})->size(), 8u);
}

TEST(FieldArith, PrimeField) {
  auto F = build_field(7, 1);
  EXPECT_EQ(FieldElement(F, 3) * FieldElement(F, 5), FieldElement(F, 1));
  EXPECT_EQ(FieldElement(F, 3).inverse(), FieldElement(F, 5));
  EXPECT_EQ(FieldElement(F, 6) + FieldElement(F, 4), FieldElement(F, 3));
  EXPECT_EQ(FieldElement(F, 2) - FieldElement(F, 5), FieldElement(F, 4));
}

TEST(FieldArith, ReductionInGF8) {
  auto F = build_field(2, 3);
  EXPECT_EQ(poly(F, {0, 1}) * poly(F, {0, 0, 1}), poly(F, {1, 1}));
}

TEST(FieldArith, SquaredTwistInGF8) {
  auto F = build_field(2, 3);
  for (const auto& x : ff_enumerate(F)) {
    EXPECT_EQ(x.pow(4).pow(4), x.pow(2)) << x.index();
  }
}

TEST(FieldArith, SquaredTwistOddPowersOfTwo) {
  for (unsigned m = 0; m <= 4; ++m) {
    auto F = build_field(2, 2 * m + 1);
    const u64 theta = u64{1} << (m + 1);
    for (V x = 0; x < F->size(); ++x) ASSERT_EQ(F->pow(F->pow(x, theta), theta), F->pow(x, 2));
  }
}

TEST(FieldArith, InverseOfZeroIsAnError) { EXPECT_THROW(FieldElement(build_field(5, 1), 0).inverse(), parameter_error); }

TEST(FieldArith, AxiomsExhaustive) {
  for (auto [p, m] : small_fields(64)) {
    auto F = build_field(p, m);
    const V q = static_cast<V>(F->size());
    for (V a = 0; a < q; ++a) {
      EXPECT_EQ(F->add(a, 0), a);
      EXPECT_EQ(F->mul(a, 1), a);
      EXPECT_EQ(F->add(a, F->neg(a)), 0u);
      if (a) {
        EXPECT_EQ(F->mul(a, F->inv(a)), 1u);
      }
      for (V b = 0; b < q; ++b) {
        ASSERT_EQ(F->add(a, b), F->add(b, a));
        ASSERT_EQ(F->mul(a, b), F->mul(b, a));
        for (V c = 0; c < q; ++c) {
          ASSERT_EQ(F->add(F->add(a, b), c), F->add(a, F->add(b, c)));
          ASSERT_EQ(F->mul(F->mul(a, b), c), F->mul(a, F->mul(b, c)));
          ASSERT_EQ(F->mul(a, F->add(b, c)), F->add(F->mul(a, b), F->mul(a, c)));
        }
      }
    }
  }
}

TEST(FieldArith, FrobeniusIsAdditive) {
  for (auto [p, m] : small_fields(64)) {
    auto F = build_field(p, m);
    for (V a = 0; a < F->size(); ++a)
      for (V b = 0; b < F->size(); ++b) ASSERT_EQ(F->pow(F->add(a, b), p), F->add(F->pow(a, p), F->pow(b, p)));
  }
}

TEST(FieldArith, TablesAgreeWithPolynomialRoute) {
  for (auto [p, m] : small_fields(256)) {
    auto F = build_field(p, m);
    for (V a = 0; a < F->size(); ++a)
      for (V b = 0; b < F->size(); ++b) ASSERT_EQ(F->mul(a, b), F->mul_reference(a, b));
  }
}

TEST(FieldArith, AgreesWithSchoolbookOracle) {
  for (auto [p, m] : small_fields(128)) {
    auto F = build_field(p, m);
    oracle::Poly mod(F->modulus().begin(), F->modulus().end());
    oracle::SmallField O(static_cast<int>(p), mod);
    for (V a = 0; a < F->size(); ++a)
      for (V b = 0; b < F->size(); ++b) {
        ASSERT_EQ(static_cast<int>(F->mul(a, b)), O.times(static_cast<int>(a), static_cast<int>(b)));
        ASSERT_EQ(static_cast<int>(F->add(a, b)), O.plus(static_cast<int>(a), static_cast<int>(b)));
      }
  }
}

TEST(FieldArith, PowMatchesRepeatedMultiplication) {
  auto F = build_field(3, 3);
  for (V a = 0; a < F->size(); ++a) {
    V acc = 1;
    for (u64 e = 0; e < 60; ++e) {
      ASSERT_EQ(F->pow(a, e), acc);
      acc = F->mul(acc, a);
    }
  }
}

TEST(FieldArith, CrossFieldIsAnError) {
  auto F9 = build_field(3, 2);
  auto F3 = build_field(3, 1);
  EXPECT_THROW(FieldElement(F9, 1) + FieldElement(F3, 1), carrier_mismatch);
  auto A = build_field(2, 3);
  auto B = Field::with_modulus(2, {1, 0, 1, 1});
  EXPECT_THROW(FieldElement(A, 2) * FieldElement(B, 2), carrier_mismatch);
  // separately built copies of the same field interoperate
  EXPECT_EQ(FieldElement(A, 2) * FieldElement(build_field(2, 3), 2), FieldElement(A, 4));
}

TEST(FieldEnumerate, OrderAndDistinctness) {
  auto F2 = ff_enumerate(build_field(2, 1));
  ASSERT_EQ(F2.size(), 2u);
  EXPECT_EQ(F2[0].index(), 0u);
  EXPECT_EQ(F2[1].index(), 1u);
  auto F9 = ff_enumerate(build_field(3, 2));
  std::set<V> seen;
  for (const auto& x : F9) seen.insert(x.index());
  EXPECT_EQ(seen.size(), 9u);
}

TEST(FieldEnumerate, XGeneratesGF8) {
  auto F = build_field(2, 3);
  const auto x = poly(F, {0, 1});
  std::set<V> powers;
  auto y = x;
  u64 order = 1;
  while (y.index() != 1) {
    powers.insert(y.index());
    y = y * x;
    ++order;
  }
  EXPECT_EQ(order, 7u);
  EXPECT_EQ(powers.size(), 6u);
}

TEST(FieldEnumerate, PrimitiveElementHasFullOrder) {
  for (auto [p, m] : small_fields(1024)) {
    auto F = build_field(p, m);
    const V g = F->primitive_element();
    for (u64 d : divisors(F->size() - 1))
      if (d < F->size() - 1) {
        ASSERT_NE(F->pow(g, d), 1u) << F->size();
      }
    for (V h = 1; h < g; ++h) {
      bool full = true;
      for (u64 d : divisors(F->size() - 1))
        if (d < F->size() - 1 && F->pow(h, d) == 1) full = false;
      ASSERT_FALSE(full) << "smaller generator " << h << " in GF(" << F->size() << ")";
    }
  }
}

TEST(FieldCoeffs, RoundTrip) {
  auto F = build_field(5, 3);
  for (V a = 0; a < F->size(); ++a) EXPECT_EQ(F->from_coeffs(F->coeffs(a)), a);
  EXPECT_THROW(F->from_coeffs(std::vector<V>{5}), parameter_error);
  EXPECT_THROW(F->from_coeffs(std::vector<V>{0, 0, 0, 1}), parameter_error);
}

}  // namespace
}  // namespace sot

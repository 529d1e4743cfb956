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

#include "oracles.hpp"
#include "sotype/sotype.hpp"
#include "support.hpp"

namespace sot {
namespace {

TEST(MatrixOracle, ProjectiveLineGroups) {
  for (int q : {4, 5, 7, 8, 9, 11, 13, 16, 17}) {
    const auto expected = oracle::psl_spectrum(2, q);
    EXPECT_EQ(compute_spectrum(psl2_group(q)).counts(), expected) << "q=" << q;
  }
}

TEST(MatrixOracle, L33) {
  const auto expected = oracle::psl_spectrum(3, 3);
  EXPECT_EQ(testing::catalog_group("L3(3)").spectrum().counts(), expected);
}

TEST(MatrixOracle, L34) {
  const auto expected = oracle::psl_spectrum(3, 4);
  EXPECT_EQ(testing::catalog_group("L3(4)").spectrum().counts(), expected);
}

TEST(MatrixOracle, U42AsSymplectic) {
  const auto psp = oracle::psp4_3();
  ASSERT_EQ(psp.sp_order, 51840u);
  EXPECT_EQ(testing::catalog_group("U4(2)").spectrum().counts(), psp.spectrum);
}

TEST(ClassData, U33) {
  // class sizes from the character table, summed by element order
  const oracle::Counts expected{{1, 1}, {2, 63}, {3, 56 + 672}, {4, 63 + 63 + 378}, {6, 504},
                                {7, 864 + 864}, {8, 756 + 756}, {12, 504 + 504}};
  EXPECT_EQ(testing::catalog_group("U3(3)").spectrum().counts(), expected);
}

TEST(ClassData, L33) {
  const oracle::Counts expected{{1, 1}, {2, 117}, {3, 104 + 624}, {4, 702}, {6, 936}, {8, 702 + 702}, {13, 4 * 432}};
  EXPECT_EQ(testing::catalog_group("L3(3)").spectrum().counts(), expected);
}

TEST(CensusOracle, SymmetricAndAlternating) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(compute_spectrum(symmetric_group(n)).counts(), oracle::cycle_type_census(n, false)) << "S" << n;
    EXPECT_EQ(compute_spectrum(alternating_group(n)).counts(), oracle::cycle_type_census(n, true)) << "A" << n;
  }
}

TEST(CensusOracle, A10PrimeGraph) {
  const auto census = oracle::cycle_type_census(10, true);
  std::map<u64, u64> counts(census.begin(), census.end());
  const OrderSpectrum s(1814400, counts);
  const auto g = prime_graph(s);
  EXPECT_EQ(g.edges, (std::vector<std::pair<u64, u64>>{{2, 3}, {2, 5}, {3, 5}, {3, 7}}));
  EXPECT_TRUE(is_connected(g));
  EXPECT_FALSE(independent_triple(g));
}

TEST(CyclicOracle, TotientCensus) {
  for (u64 n = 1; n <= 96; ++n) EXPECT_EQ(compute_spectrum(cyclic_group(n)).counts(), oracle::cyclic_spectrum(n)) << n;
}

TEST(StructuralOracle, SpectralNilpotencyAgrees) {
  std::size_t checked = 0;
  for (const auto& r : testing::suite_up_to(200)) {
    auto& ctx = testing::context(r);
    const auto& G = std::get<PermGroup>(ctx.group());
    std::set<oracle::Perm> O;
    for (const auto& x : G.elements()) O.insert(testing::images(x));
    const bool structural = oracle::nilpotent(O);
    EXPECT_EQ(is_nilpotent_spectral(ctx.spectrum()), structural) << r.name;
    EXPECT_EQ(is_nilpotent(G), structural) << r.name;
    EXPECT_EQ(is_solvable(G), oracle::solvable(O)) << r.name;
    ++checked;
  }
  EXPECT_GE(checked, 30u);
}

TEST(StructuralOracle, SmallAlphaGroups) {
  for (const auto& r : testing::suite_up_to(200)) {
    auto& ctx = testing::context(r);
    const auto a = alpha_size(ctx.spectrum());
    if (a == 2) {
      EXPECT_TRUE(is_nilpotent(ctx.group())) << r.name;
    }
    if (a == 3) {
      EXPECT_TRUE(is_solvable(ctx.group())) << r.name;
    }
  }
}

}  // namespace
}  // namespace sot

// Copyright 2026 The Authors.
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


#include "divflag/lattice.h"

#include <gtest/gtest.h>

#include <random>

#include "divflag/catalog.h"
#include "divflag/random.h"
#include "testing.h"

namespace divflag {
namespace {

using testing::Ints;
using testing::Q;
using testing::Roots;

TEST(BuildLatticeTest, Boolean3) {
  const IntersectionLattice lat = BuildLattice(BooleanArrangement(3));
  EXPECT_EQ(lat.LevelSizes(), (std::vector<int>{1, 3, 3, 1}));
  EXPECT_EQ(lat.mobius[0], (std::vector<std::int64_t>{1}));
  EXPECT_EQ(lat.mobius[1], (std::vector<std::int64_t>{-1, -1, -1}));
  EXPECT_EQ(lat.mobius[2], (std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_EQ(lat.mobius[3], (std::vector<std::int64_t>{-1}));
  EXPECT_EQ(lat.covers[0][0], (std::vector<int>{0, 1, 2}));
}

TEST(BuildLatticeTest, BraidHasOneCenter) {
  const IntersectionLattice lat = BuildLattice(BraidArrangement(3));
  EXPECT_EQ(lat.LevelSizes(), (std::vector<int>{1, 3, 1}));
  EXPECT_EQ(lat.mobius[2][0], 2);
  EXPECT_EQ(lat.levels[2][0].members, (std::vector<int>{0, 1, 2}));
}

TEST(BuildLatticeTest, MaxRankStopsEarly) {
  const IntersectionLattice lat = BuildLattice(EdelmanReinerRestriction(), 2);
  EXPECT_EQ(lat.Rank(), 2);
  EXPECT_EQ(lat.levels[1].size(), 12u);
}

TEST(BuildLatticeTest, EmptyArrangement) {
  const IntersectionLattice lat = BuildLattice(Arrangement(Q(), 3));
  EXPECT_EQ(lat.LevelSizes(), (std::vector<int>{1}));
  const CharData cd = ComputeCharData(lat);
  EXPECT_EQ(cd.chi, IntPoly({0, 0, 0, 1}));
  EXPECT_FALSE(cd.chi0.has_value());
  EXPECT_THROW(cd.Chi0(), std::domain_error);
}

TEST(CharDataTest, EdelmanReiner) {
  const CharData cd = ComputeCharData(EdelmanReinerRestriction());
  EXPECT_EQ(cd.chi, Roots({1, 3, 3, 5}));
  EXPECT_EQ(cd.Chi0(), Roots({3, 3, 5}));
  EXPECT_EQ(cd.betti_dec[2], 39);
  EXPECT_EQ(B2Deconed(EdelmanReinerRestriction()), 39);
  EXPECT_EQ(cd.betti, (std::vector<mpz_class>{1, 12, 50, 84, 45}));
  EXPECT_EQ(cd.poincare, IntPoly({1, 12, 50, 84, 45}));
}

TEST(CharDataTest, WeylB3AndBraid) {
  EXPECT_EQ(CharPoly(WeylB(3)), Roots({1, 3, 5}));
  EXPECT_EQ(CharPoly(BraidArrangement(3)), Roots({0, 1, 2}));
  EXPECT_EQ(EssentialCharPoly(BraidArrangement(3)), Roots({1, 2}));
}

TEST(WhitneyOracleTest, Examples) {
  EXPECT_EQ(WhitneyOracle(BooleanArrangement(3)), Roots({1, 1, 1}));
  EXPECT_EQ(WhitneyOracle(XyzwExample()), IntPoly({-1, 1}) * IntPoly({-4, 6, -4, 1}));
  EXPECT_EQ(WhitneyOracle(Arrangement(Q(), 2)), IntPoly({0, 0, 1}));
}

TEST(WhitneyOracleTest, EnforcesCap) {
  EXPECT_THROW(WhitneyOracle(WeylB(5)), std::invalid_argument);  // 25 hyperplanes
  EXPECT_NO_THROW(WhitneyOracle(WeylB(4)));                      // 16
}

TEST(PointCountOracleTest, Examples) {
  EXPECT_EQ(PointCountOracle(BooleanArrangement(3), 5), 64);
  EXPECT_EQ(PointCountOracle(EdelmanReinerRestriction(), 7), 192);
  EXPECT_EQ(PointCountOracle(BraidArrangement(3), 5), 60);
}

TEST(PointCountOracleTest, RejectsBadPrimes) {
  // x + y and x - y coincide mod 2.
  EXPECT_THROW(PointCountOracle(Ints(2, {{1, 1}, {1, -1}}), 2), std::invalid_argument);
  // x + 2y and x - y coincide mod 3.
  EXPECT_THROW(PointCountOracle(Ints(2, {{1, 2}, {1, -1}}), 3), std::invalid_argument);
  EXPECT_THROW(PointCountOracle(BooleanArrangement(2), 4), std::invalid_argument);
}

TEST(PointCountOracleTest, PrimeFieldArrangementsCountOverTheirField) {
  const Arrangement a = Intermediate(3, 1, 3, 7);
  EXPECT_EQ(PointCountOracle(a, 7), CharPoly(a).Evaluate(7));
  EXPECT_THROW(PointCountOracle(a, 11), std::invalid_argument);
}

TEST(ThreadingTest, LatticeIsDeterministic) {
  const Arrangement a = WeylB(4);
  SetThreadCount(1);
  const IntersectionLattice one = BuildLattice(a);
  SetThreadCount(4);
  const IntersectionLattice four = BuildLattice(a);
  SetThreadCount(1);
  ASSERT_EQ(one.LevelSizes(), four.LevelSizes());
  for (std::size_t i = 0; i < one.levels.size(); ++i) {
    for (std::size_t j = 0; j < one.levels[i].size(); ++j) {
      EXPECT_EQ(one.levels[i][j].members, four.levels[i][j].members);
    }
  }
  EXPECT_EQ(one.mobius, four.mobius);
}

class LatticePropertyTest : public ::testing::Test {
 protected:
  std::vector<Arrangement> Instances(std::uint64_t salt, int count) {
    std::mt19937_64 rng = testing::Rng(salt);
    std::vector<Arrangement> out;
    for (int i = 0; i < count; ++i) out.push_back(RandomArrangement(rng, RandomSpec{}));
    return out;
  }
};

TEST_F(LatticePropertyTest, WhitneyAgreesWithMobius) {
  for (const Arrangement& a : Instances(30, 200)) {
    EXPECT_EQ(WhitneyOracle(a), CharPoly(a)) << a.ToString();
  }
}

TEST_F(LatticePropertyTest, DeletionRestriction) {
  for (const Arrangement& a : Instances(31, 150)) {
    for (int h = 0; h < a.size(); ++h) {
      const IntPoly rest = CharPoly(RestrictTo(a, h).arrangement);
      EXPECT_EQ(CharPoly(a), CharPoly(Deletion(a, h)) - rest) << a.ToString() << " h=" << h;
    }
  }
}

TEST_F(LatticePropertyTest, MobiusSumsVanish) {
  for (const Arrangement& a : Instances(32, 100)) {
    const IntersectionLattice lat = BuildLattice(a);
    for (std::size_t i = 1; i < lat.levels.size(); ++i) {
      for (const Flat& x : lat.levels[i]) {
        std::int64_t sum = 0;
        for (std::size_t k = 0; k <= i; ++k) {
          for (std::size_t j = 0; j < lat.levels[k].size(); ++j) {
            const Flat& y = lat.levels[k][j];
            if (y.member_set.is_subset_of(x.member_set)) sum += lat.mobius[k][j];
          }
        }
        EXPECT_EQ(sum, 0);
      }
    }
  }
}

TEST_F(LatticePropertyTest, BettiAndPoincare) {
  for (const Arrangement& a : Instances(33, 150)) {
    const IntersectionLattice lat = BuildLattice(a);
    const CharData cd = ComputeCharData(lat);
    const int l = a.dim();
    EXPECT_EQ(cd.chi.coefficient(l - 1), -a.size());
    for (int i = 0; i <= l; ++i) {
      const mpz_class sign = i % 2 ? -1 : 1;
      EXPECT_EQ(cd.betti[i], sign * cd.chi.coefficient(l - i));
      EXPECT_EQ(cd.poincare.coefficient(i), cd.betti[i]);
      EXPECT_GE(cd.betti[i], 0);
    }
    EXPECT_TRUE(Divides(IntPoly::Linear(1), cd.chi));
    EXPECT_EQ(*cd.chi0 * IntPoly::Linear(1), cd.chi);
    std::int64_t b2 = 0;
    if (lat.levels.size() > 2) {
      for (const Flat& x : lat.levels[2]) b2 += static_cast<std::int64_t>(x.members.size()) - 1;
    }
    EXPECT_EQ(cd.betti[2], b2);
  }
}

TEST_F(LatticePropertyTest, PointCountsMatchAtGoodPrimes) {
  int checked = 0;
  for (const Arrangement& a : Instances(34, 50)) {
    int good = 0;
    for (std::uint64_t q = 5; q < 100; q += 2) {
      if (!IsPrime(q)) continue;
      if (good == 2) break;
      mpz_class count;
      try {
        count = PointCountOracle(a, q);
      } catch (const std::invalid_argument&) {
        continue;  // q changes the lattice
      }
      EXPECT_EQ(count, CharPoly(a).Evaluate(q)) << a.ToString() << " q=" << q;
      ++good;
    }
    checked += good;
  }
  EXPECT_EQ(checked, 100);
}

}  // namespace
}  // namespace divflag

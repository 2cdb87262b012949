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


#include "divflag/catalog.h"

#include <gtest/gtest.h>

#include "divflag/freeness.h"
#include "divflag/lattice.h"
#include "testing.h"

namespace divflag {
namespace {

using testing::Roots;

TEST(RootSystemTest, CountsAndCoxeterNumbers) {
  for (int l = 1; l <= 5; ++l) {
    const auto a = RootSystemSpec::Make(RootType::kA, l);
    EXPECT_EQ(static_cast<int>(a.positive_roots.size()), l * (l + 1) / 2);
    EXPECT_EQ(a.coxeter_number, l + 1);
    for (RootType t : {RootType::kB, RootType::kC}) {
      const auto s = RootSystemSpec::Make(t, l);
      EXPECT_EQ(static_cast<int>(s.positive_roots.size()), l * l);
      EXPECT_EQ(s.coxeter_number, 2 * l);
    }
    if (l >= 2) {
      const auto d = RootSystemSpec::Make(RootType::kD, l);
      EXPECT_EQ(static_cast<int>(d.positive_roots.size()), l * (l - 1));
      EXPECT_EQ(d.coxeter_number, 2 * l - 2);
    }
  }
  EXPECT_THROW(RootSystemSpec::Make(RootType::kD, 1), std::invalid_argument);
  EXPECT_THROW(RootSystemSpec::Make(RootType::kA, 0), std::invalid_argument);
  EXPECT_EQ(RootSystemSpec::ParseType("C"), RootType::kC);
  EXPECT_THROW(RootSystemSpec::ParseType("E"), std::invalid_argument);
}

TEST(WeylTest, CharacteristicPolynomials) {
  EXPECT_EQ(WeylB(3).size(), 9);
  EXPECT_EQ(CharPoly(WeylB(3)), Roots({1, 3, 5}));
  EXPECT_EQ(CharPoly(BooleanArrangement(4)), Roots({1, 1, 1, 1}));
  EXPECT_EQ(CharPoly(BraidArrangement(3)), WhitneyOracle(BraidArrangement(3)));
  EXPECT_EQ(CharPoly(BraidArrangement(3)), Roots({0, 1, 2}));
  EXPECT_EQ(WeylC(3).CanonicalKey(), WeylB(3).CanonicalKey());
  EXPECT_EQ(CharPoly(WeylD(4)), Roots({1, 3, 3, 5}));
  EXPECT_EQ(CharPoly(WeylArrangement(RootSystemSpec::Make(RootType::kA, 3))),
            Roots({1, 2, 3}));
  EXPECT_THROW(BraidArrangement(1), std::invalid_argument);
  EXPECT_THROW(WeylD(1), std::invalid_argument);
  EXPECT_THROW(BooleanArrangement(0), std::invalid_argument);
}

TEST(ShiTest, Examples) {
  const auto a2 = RootSystemSpec::Make(RootType::kA, 2);
  const auto b2 = RootSystemSpec::Make(RootType::kB, 2);
  EXPECT_EQ(Shi(a2, 1).size(), 7);
  EXPECT_EQ(Shi(a2, 1).dim(), 3);
  EXPECT_EQ(CharPoly(Shi(a2, 1)), Roots({1, 3, 3}));
  EXPECT_EQ(Shi(a2, 2).size(), 13);
  EXPECT_EQ(CharPoly(Shi(a2, 2)), Roots({1, 6, 6}));
  EXPECT_EQ(Shi(b2, 1).size(), 9);
  EXPECT_EQ(CharPoly(Shi(b2, 1)), Roots({1, 4, 4}));
  EXPECT_THROW(Shi(a2, 0), std::invalid_argument);
}

TEST(ShiTest, HyperplaneCountsFollowTheClosedForm) {
  for (RootType t : {RootType::kA, RootType::kB, RootType::kC, RootType::kD}) {
    for (int l = 2; l <= 3; ++l) {
      const auto spec = RootSystemSpec::Make(t, l);
      for (int k = 1; k <= 2; ++k) {
        const int roots = static_cast<int>(spec.positive_roots.size());
        EXPECT_EQ(Shi(spec, k).size(), 1 + 2 * k * roots) << spec.Name() << " k=" << k;
      }
    }
  }
}

TEST(IntermediateTest, Examples) {
  EXPECT_EQ(RootOfUnity(7, 3), 2u);
  const Arrangement a = Intermediate(3, 1, 3, 7);
  EXPECT_EQ(a.size(), 10);
  EXPECT_EQ(a.field(), FieldSpec::Prime(7));
  EXPECT_EQ(Intermediate(3, 0, 3, 7).size(), 9);
  const Arrangement rank2 = Intermediate(2, 2, 1, 5);
  EXPECT_EQ(rank2.size(), 3);
  EXPECT_EQ(CharPoly(rank2), Roots({1, 2}));
}

TEST(IntermediateTest, KnownExponents) {
  // exp = 1, r + 1, ..., (ℓ-2)r + 1, (ℓ-1)r - ℓ + k + 1
  EXPECT_EQ(LinearRoots(CharPoly(Intermediate(3, 1, 3, 7))),
            (std::vector<std::int64_t>{1, 4, 5}));
  EXPECT_EQ(LinearRoots(CharPoly(Intermediate(3, 3, 3, 7))),
            (std::vector<std::int64_t>{1, 4, 7}));
  EXPECT_EQ(LinearRoots(CharPoly(Intermediate(4, 2, 3, 7))),
            (std::vector<std::int64_t>{1, 4, 7, 8}));
}

TEST(IntermediateTest, Errors) {
  EXPECT_THROW(Intermediate(3, 1, 3, 5), std::invalid_argument);   // 5 ≢ 1 mod 3
  EXPECT_THROW(Intermediate(3, 4, 3, 7), std::invalid_argument);   // k > ℓ
  EXPECT_THROW(Intermediate(1, 0, 3, 7), std::invalid_argument);
  EXPECT_THROW(Intermediate(3, 1, 0, 7), std::invalid_argument);
  EXPECT_THROW(Intermediate(3, 1, 3, 9), std::invalid_argument);
  EXPECT_EQ(NextPrimeCongruentToOne(7, 3), 13u);
  EXPECT_EQ(NextPrimeCongruentToOne(31, 5), 41u);
}

TEST(IntermediateTest, StableAcrossPrimes) {
  for (int k = 0; k <= 3; ++k) {
    const Arrangement a = Intermediate(3, k, 3, 7);
    const Arrangement b = Intermediate(3, k, 3, 13);
    EXPECT_EQ(BuildLattice(a).LevelSizes(), BuildLattice(b).LevelSizes());
    EXPECT_EQ(CharPoly(a), CharPoly(b));
  }
}

TEST(NamedExamplesTest, EdelmanReiner) {
  const Arrangement b = EdelmanReinerRestriction();
  EXPECT_EQ(b.size(), 12);
  EXPECT_EQ(CharPoly(b), Roots({1, 3, 3, 5}));
  EXPECT_EQ(RestrictTo(b, 3).arrangement.CanonicalKey(),
            EdelmanReinerRestrictionC().CanonicalKey());
  EXPECT_EQ(CharPoly(EdelmanReinerRestrictionC()), Roots({1, 3, 3}));
  EXPECT_TRUE(DivisionalFlagSearch(b).has_value());
}

TEST(NamedExamplesTest, Xyzw) {
  const Arrangement a = XyzwExample();
  EXPECT_EQ(a.size(), 5);
  EXPECT_EQ(CharPoly(a), IntPoly({-1, 1}) * IntPoly({-4, 6, -4, 1}));
  EXPECT_EQ(CharPoly(XyzwRestriction()), IntPoly({-1, 1}) * IntPoly({3, -3, 1}));
  EXPECT_EQ(RestrictTo(a, 3).arrangement.CanonicalKey(), XyzwRestriction().CanonicalKey());
  const IntersectionLattice lat = BuildLattice(XyzwRestriction());
  for (const Flat& x2 : lat.levels[2]) {
    // x2 lives in H = {w = 0}; lift it to A through the hyperplanes of A.
    std::vector<int> lifted{3};
    for (int m : x2.members) lifted.push_back(m < 3 ? m : 4);
    std::sort(lifted.begin(), lifted.end());
    const Flat x = FlatOf(a, lifted);
    EXPECT_EQ(EssentialCharPoly(Localization(a, x)), Roots({1, 1, 1}));
  }
}

TEST(PentagonTest, Structure) {
  for (std::uint64_t p : {11u, 31u, 41u}) {
    const PentagonCone pc = MakePentagonCone(p);
    EXPECT_EQ(pc.plane.size(), 11);
    EXPECT_EQ(pc.cone.size(), 12);
    EXPECT_EQ(pc.x_members.size(), 11u);
    for (int h = 0; h < pc.plane.size(); ++h) {
      EXPECT_EQ(RestrictTo(pc.plane, h).arrangement.size(), 5) << "p=" << p << " h=" << h;
    }
    const Flat x = FlatOf(pc.cone, pc.x_members);
    EXPECT_EQ(EssentialCharPoly(Localization(pc.cone, x)), Roots({1, 5, 5}));
    const Arrangement bx = Localization(pc.cone, x);
    const int h0 = bx.IndexOf(pc.cone.hyperplane(pc.h0));
    ASSERT_GE(h0, 0);
    EXPECT_EQ(EssentialCharPoly(RestrictTo(bx, h0).arrangement), Roots({1, 4}));
  }
  EXPECT_THROW(MakePentagonCone(7), std::invalid_argument);
}

TEST(PentagonTest, LatticeStableAcrossPrimes) {
  EXPECT_EQ(BuildLattice(MakePentagonCone(31).cone).LevelSizes(),
            BuildLattice(MakePentagonCone(41).cone).LevelSizes());
  EXPECT_EQ(CharPoly(MakePentagonCone(31).cone), CharPoly(MakePentagonCone(41).cone));
}

TEST(LookupCatalogTest, EveryNameResolves) {
  for (const std::string& name : CatalogNames()) {
    const CatalogEntry e = LookupCatalog(name);
    EXPECT_EQ(e.name.substr(0, name.size()), name);
    EXPECT_GT(e.arrangement.size(), 0) << name;
    if (e.expected_chi) {
      EXPECT_EQ(CharPoly(e.arrangement), *e.expected_chi) << name;
    }
    if (e.expected_exponents) {
      EXPECT_EQ(LinearRoots(CharPoly(e.arrangement)), *e.expected_exponents) << name;
    }
  }
  EXPECT_THROW(LookupCatalog("nope"), std::invalid_argument);
  EXPECT_THROW(LookupCatalog("shi", {.type = "Z"}), std::invalid_argument);
}

TEST(LookupCatalogTest, Parameters) {
  EXPECT_EQ(LookupCatalog("weyl-b", {.l = 4}).arrangement.size(), 16);
  EXPECT_EQ(LookupCatalog("shi", {.l = 2, .k = 2, .type = "A"}).arrangement.size(), 13);
  const CatalogEntry e = LookupCatalog("intermediate", {.l = 3, .k = 2, .r = 3, .p = 13});
  EXPECT_EQ(e.arrangement.field(), FieldSpec::Prime(13));
  EXPECT_EQ(e.expected_exponents, (std::vector<std::int64_t>{1, 4, 6}));
}

}  // namespace
}  // namespace divflag

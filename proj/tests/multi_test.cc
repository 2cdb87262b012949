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


#include "divflag/multi.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "divflag/catalog.h"
#include "divflag/lattice.h"
#include "divflag/random.h"
#include "testing.h"

namespace divflag {
namespace {

using testing::Ints;
using testing::Q;
using testing::Roots;

std::vector<int> Sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(ZieglerTest, XyzwAlongW) {
  const MultiArrangement z = ZieglerRestriction(XyzwExample(), 3);
  EXPECT_EQ(z.base.CanonicalKey(), XyzwRestriction().CanonicalKey());
  EXPECT_EQ(z.mult, (std::vector<int>{1, 1, 1, 1}));
}

TEST(ZieglerTest, EdelmanReinerAlongX4) {
  const MultiArrangement z = ZieglerRestriction(EdelmanReinerRestriction(), 3);
  EXPECT_EQ(z.base.size(), 7);
  EXPECT_EQ(z.Total(), 11);
  EXPECT_EQ(Sorted(z.mult), (std::vector<int>{1, 1, 1, 2, 2, 2, 2}));
  for (int i = 0; i < z.base.size(); ++i) {
    // Coordinate traces keep multiplicity one.
    int nonzero = 0;
    for (const Scalar& s : z.base.hyperplane(i)) nonzero += !s.is_zero();
    EXPECT_EQ(z.mult[i], nonzero == 1 ? 1 : 2);
  }
}

TEST(ZieglerTest, BooleanAndErrors) {
  const MultiArrangement z = ZieglerRestriction(BooleanArrangement(3), 2);
  EXPECT_EQ(z.base.CanonicalKey(), BooleanArrangement(2).CanonicalKey());
  EXPECT_EQ(z.mult, (std::vector<int>{1, 1}));
  EXPECT_THROW(ZieglerRestriction(Ints(1, {{1}}), 0), std::invalid_argument);
}

TEST(MultiArrangementTest, Validation) {
  EXPECT_THROW(MultiArrangement::Make(BooleanArrangement(2), {1}), std::invalid_argument);
  EXPECT_THROW(MultiArrangement::Make(BooleanArrangement(2), {1, 0}), std::invalid_argument);
  const MultiArrangement m = MultiArrangement::Make(BooleanArrangement(2), {3, 1});
  EXPECT_EQ(m.Lowered(0).mult, (std::vector<int>{2, 1}));
  EXPECT_THROW(m.Lowered(1), std::invalid_argument);
}

MultiArrangement M(const Arrangement& a, std::vector<int> mult) {
  return MultiArrangement::Make(a, std::move(mult));
}

TEST(Exp2Test, Examples) {
  const Arrangement xy = BooleanArrangement(2);
  const Arrangement xyd = Ints(2, {{1, 0}, {0, 1}, {1, -1}});
  EXPECT_EQ(Exp2(M(xy, {2, 1})), (Exponents2{1, 2}));
  EXPECT_EQ(Exp2(M(xyd, {1, 1, 1})), (Exponents2{1, 2}));
  EXPECT_EQ(Exp2(M(xy, {3, 1})), (Exponents2{1, 3}));
  EXPECT_EQ(Exp2Solve(M(xy, {3, 1})), (Exponents2{1, 3}));
  EXPECT_EQ(Exp2Solve(M(xyd, {1, 1, 1})), (Exponents2{1, 2}));
}

TEST(Exp2Test, SolvedCasesBeyondTheClosedForm) {
  const Arrangement xyd = Ints(2, {{1, 0}, {0, 1}, {1, -1}});
  // |m| = 6 > 5; the balanced case splits evenly.
  EXPECT_EQ(Exp2(M(xyd, {2, 2, 2})), (Exponents2{3, 3}));
  // One dominant hyperplane: m(H) >= |m| / 2 forces (|m| - m(H), m(H)).
  EXPECT_EQ(Exp2(M(xyd, {5, 1, 1})), (Exponents2{2, 5}));
  EXPECT_EQ(Exp2(M(BooleanArrangement(2), {4, 6})), (Exponents2{4, 6}));
}

TEST(Exp2Test, WorksOverPrimeFieldsAndHigherDimensions) {
  const FieldSpec f5 = FieldSpec::Prime(5);
  EXPECT_EQ(Exp2(M(Ints(2, {{1, 0}, {0, 1}, {1, 1}, {1, 2}}, f5), {2, 2, 2, 2})),
            (Exponents2{4, 4}));
  // Rank 2 inside K^3.
  EXPECT_EQ(Exp2(M(Ints(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}), {1, 1, 1})), (Exponents2{1, 2}));
}

TEST(Exp2Test, RejectsOtherRanks) {
  EXPECT_THROW(Exp2(MultiArrangement::Simple(BooleanArrangement(3))), std::invalid_argument);
  EXPECT_THROW(Exp2(MultiArrangement::Simple(Ints(2, {{1, 0}}))), std::invalid_argument);
}

TEST(EulerMultTest, Examples) {
  const Arrangement xyd = Ints(2, {{1, 0}, {0, 1}, {1, -1}});
  EXPECT_EQ(Exp2(M(xyd, {2, 1, 1})), (Exponents2{2, 2}));
  EXPECT_EQ(EulerMultRank2(M(xyd, {2, 1, 1}), 0), 2);
  EXPECT_EQ(EulerMultRank2(M(BooleanArrangement(2), {2, 2}), 0), 2);
  EXPECT_THROW(EulerMultRank2(M(xyd, {2, 1, 1}), 1), std::invalid_argument);
}

TEST(B2MultiTest, Examples) {
  const Arrangement b = EdelmanReinerRestriction();
  EXPECT_EQ(B2Multi(MultiArrangement::Simple(b)), ComputeCharData(b).betti[2]);
  EXPECT_EQ(B2Multi(ZieglerRestriction(b, 3)), 39);
  EXPECT_EQ(B2Multi(MultiArrangement::Simple(BraidArrangement(3))), 2);
}

TEST(RemainderTest, Xyzw) {
  const RemainderReport r = RemainderDivision(XyzwExample(), 3);
  EXPECT_EQ(r.quotient_root, 1);
  EXPECT_EQ(r.r, IntPoly({-1}));
  EXPECT_EQ(r.r0, 0);
  EXPECT_EQ(r.alternating, (std::vector<mpz_class>{0, 1}));
}

TEST(RemainderTest, ExactDivisions) {
  const RemainderReport er = RemainderDivision(EdelmanReinerRestriction(), 3);
  EXPECT_EQ(er.quotient_root, 5);
  EXPECT_TRUE(er.r.is_zero());
  const RemainderReport b3 = RemainderDivision(BooleanArrangement(3), 1);
  EXPECT_EQ(b3.quotient_root, 1);
  EXPECT_TRUE(b3.r.is_zero());
  EXPECT_EQ(b3.alternating, (std::vector<mpz_class>{0}));
}

TEST(RemainderTest, Errors) {
  EXPECT_THROW(RemainderDivision(BooleanArrangement(2), 0), std::invalid_argument);
  EXPECT_THROW(RemainderDivision(Ints(3, {{1, 0, 0}}), 0), std::invalid_argument);
}

TEST(AyGapTest, Examples) {
  EXPECT_EQ(AyGap(EdelmanReinerRestriction(), 3), 0);
  const PentagonCone pc = MakePentagonCone();
  const std::int64_t gap = AyGap(pc.cone, pc.h0);
  EXPECT_GE(gap, 0);
  RecordProperty("pentagon_cone_gap", static_cast<int>(gap));
  // Four generic planes in K^3: not free, so the gap is positive.
  const Arrangement generic = Ints(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
  for (int h = 0; h < 4; ++h) EXPECT_GT(AyGap(generic, h), 0);
}

TEST(Free3Test, Examples) {
  const Rank3FreenessReport c = Free3Decide(EdelmanReinerRestrictionC());
  EXPECT_TRUE(c.free);
  EXPECT_EQ(c.exponents, (std::vector<int>{1, 3, 3}));
  const Rank3FreenessReport x = Free3Decide(XyzwRestriction());
  EXPECT_FALSE(x.free);
  EXPECT_FALSE(x.exponents.has_value());
  EXPECT_GT(x.gap, 0);
  EXPECT_EQ(Free3Decide(BooleanArrangement(3)).exponents, (std::vector<int>{1, 1, 1}));
}

TEST(Free3Test, EssentializesAndRejectsOtherRanks) {
  // B3 cross a line is still free with exponents 1, 3, 5.
  Arrangement b3 = WeylB(3);
  std::vector<Vector> rows;
  for (const Vector& v : b3.hyperplanes()) {
    Vector w = v;
    w.emplace_back(Q(), 0);
    rows.push_back(w);
  }
  const Rank3FreenessReport r = Free3Decide(Arrangement::Make(Q(), 4, rows));
  EXPECT_EQ(r.exponents, (std::vector<int>{1, 3, 5}));
  EXPECT_THROW(Free3Decide(BooleanArrangement(4)), std::invalid_argument);
  EXPECT_THROW(Free3Decide(BooleanArrangement(2)), std::invalid_argument);
}

TEST(LocalCheckTest, PentagonViolation) {
  const PentagonCone pc = MakePentagonCone();
  const LocalCheckReport r = LocalCodim3DivisionCheck(pc.cone, pc.h0);
  EXPECT_FALSE(r.ok);
  bool found = false;
  for (const LocalViolation& v : r.violations) {
    if (v.members != pc.x_members) continue;
    found = true;
    EXPECT_EQ(v.chi_local, Roots({1, 5, 5}));
    EXPECT_EQ(v.chi_local_restricted, Roots({1, 4}));
  }
  EXPECT_TRUE(found);
}

TEST(LocalCheckTest, NoViolations) {
  EXPECT_TRUE(LocalCodim3DivisionCheck(EdelmanReinerRestriction(), 3).ok);
  for (int h = 0; h < 4; ++h) EXPECT_TRUE(LocalCodim3DivisionCheck(BooleanArrangement(4), h).ok);
}

// Random rank-2 multiarrangements in K^2 over Q or F_p.
MultiArrangement RandomRank2(std::mt19937_64& rng, int max_mult) {
  while (true) {
    const FieldSpec f = rng() % 4 == 0 ? FieldSpec::Prime(7) : Q();
    Arrangement a = RandomArrangement(rng, {.min_dim = 2, .max_dim = 2, .min_size = 2,
                                            .max_size = 6, .range = 3});
    if (!f.is_rational()) {
      const auto reduced = ReduceModPrime(a, 7);
      if (!reduced) continue;
      a = *reduced;
    }
    if (a.rank() != 2) continue;
    std::vector<int> mult(a.size());
    for (int& m : mult) m = std::uniform_int_distribution<int>(1, max_mult)(rng);
    return MultiArrangement::Make(a, mult);
  }
}

TEST(Exp2PropertyTest, SolverMatchesClosedFormAndSaito) {
  std::mt19937_64 rng = testing::Rng(40);
  for (int trial = 0; trial < 300; ++trial) {
    const MultiArrangement am = RandomRank2(rng, 4);
    Exponents2 solved;
    ASSERT_NO_THROW(solved = Exp2Solve(am));  // Saito check inside
    EXPECT_EQ(solved.d1 + solved.d2, am.Total());
    EXPECT_LE(solved.d1, solved.d2);
    const int n = am.base.size();
    if (am.Total() <= 2 * n - 1) {
      EXPECT_EQ(solved, (Exponents2{std::min(am.Total() - n + 1, n - 1),
                                    std::max(am.Total() - n + 1, n - 1)}));
    }
    EXPECT_EQ(Exp2(am), solved);
  }
}

TEST(Exp2PropertyTest, LoweringDropsOneCoordinate) {
  std::mt19937_64 rng = testing::Rng(41);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const MultiArrangement am = RandomRank2(rng, 4);
    for (int h = 0; h < am.base.size(); ++h) {
      if (am.mult[h] < 2) continue;
      ++checked;
      const Exponents2 e = Exp2(am);
      const Exponents2 lower = Exp2(am.Lowered(h));
      const bool first = lower == Exponents2{e.d1 - 1, e.d2};
      const bool second = lower == Exponents2{std::min(e.d1, e.d2 - 1), std::max(e.d1, e.d2 - 1)};
      EXPECT_TRUE(first || second) << am.base.ToString();
      // Step bound b2(m) - b2(m - e_H) >= |A| - 1 and the Euler multiplicity identity.
      const std::int64_t step = B2Multi(am) - B2Multi(am.Lowered(h));
      EXPECT_GE(step, am.base.size() - 1);
      EXPECT_EQ(step, EulerMultRank2(am, h));
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Exp2PropertyTest, ClosedFormEulerMultiplicity) {
  std::mt19937_64 rng = testing::Rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiArrangement am = RandomRank2(rng, 3);
    const int n = am.base.size();
    for (int h = 0; h < n; ++h) {
      if (am.mult[h] < 2 || am.Total() > 2 * n - 1) continue;
      EXPECT_EQ(EulerMultRank2(am, h), n - 1);
    }
  }
}

std::vector<Arrangement> RandomDim3Plus(std::uint64_t salt, int count) {
  std::mt19937_64 rng = testing::Rng(salt);
  std::vector<Arrangement> out;
  while (static_cast<int>(out.size()) < count) {
    Arrangement a = RandomArrangement(rng, {.min_dim = 3, .max_dim = 4, .min_size = 2,
                                            .max_size = 9});
    out.push_back(std::move(a));
  }
  return out;
}

TEST(RemainderPropertyTest, ReconstructsAndIsNonnegative) {
  int index = 0;
  for (const Arrangement& a : RandomDim3Plus(43, 200)) {
    const int h = index++ % a.size();
    const RemainderReport r = RemainderDivision(a, h);
    const IntPoly chi0 = CharPoly0(a);
    const IntPoly chi0_h = CharPoly0(RestrictTo(a, h).arrangement);
    EXPECT_EQ(IntPoly::Linear(r.quotient_root) * chi0_h + r.r, chi0);
    EXPECT_LE(r.r.degree(), a.dim() - 3);
    EXPECT_GE(r.r0, 0);
    EXPECT_GE(AyGap(a, h), 0);
  }
}

TEST(RemainderPropertyTest, ZeroLeadingTermOverFreeRestrictionDividesFully) {
  int applied = 0;
  int index = 0;
  for (const Arrangement& a : RandomDim3Plus(44, 300)) {
    const int h = index++ % a.size();
    const Arrangement ah = RestrictTo(a, h).arrangement;
    if (ah.empty()) continue;
    bool free = ah.rank() <= 2;
    if (ah.rank() == 3) free = Free3Decide(ah).free;
    const RemainderReport r = RemainderDivision(a, h);
    if (!free || r.r0 != 0) continue;
    ++applied;
    EXPECT_TRUE(r.r.is_zero()) << a.ToString() << " h=" << h;
  }
  EXPECT_GT(applied, 20);
}

TEST(Free3PropertyTest, AgreesAcrossHyperplanesAndWithFactorization) {
  std::mt19937_64 rng = testing::Rng(45);
  int done = 0;
  while (done < 80) {
    const Arrangement a = RandomArrangement(
        rng, {.min_dim = 3, .max_dim = 3, .min_size = 3, .max_size = 10, .essential = true});
    ++done;
    const Rank3FreenessReport first = Free3Decide(a, 0);
    for (int h = 1; h < a.size(); ++h) EXPECT_EQ(Free3Decide(a, h).free, first.free);
    const auto roots = LinearRoots(CharPoly(a));
    if (first.free) {
      ASSERT_TRUE(roots.has_value());
      EXPECT_EQ(std::vector<std::int64_t>(first.exponents->begin(), first.exponents->end()),
                *roots);
    }
  }
}

}  // namespace
}  // namespace divflag

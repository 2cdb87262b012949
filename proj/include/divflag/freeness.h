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

// Combinatorial freeness certificates: division of characteristic
// polynomials along restrictions, divisional flags, inductive freeness, and
// the rank-3 shortcuts.

#ifndef DIVFLAG_FREENESS_H_
#define DIVFLAG_FREENESS_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "divflag/arrangement.h"
#include "divflag/poly.h"

namespace divflag {

// χ(A^H;t) | χ(A;t).
bool DivisionCheck(const Arrangement& a, int h);

// V = X_0 ⊃ X_1 ⊃ ... with X_i in L_i(A) and χ(A^{X_{i+1}}) | χ(A^{X_i}).
// A full flag stops at X_{ℓ-2}. It stops earlier only when A^{X_i} is empty,
// which happens for arrangements of rank below ℓ - 2.
struct DivisionalFlag {
  // flats[i] lists the indices of the hyperplanes of A containing X_i.
  std::vector<std::vector<int>> flats;
  // charpolys[i] = χ(A^{X_i};t).
  std::vector<IntPoly> charpolys;
  // Roots of χ(A;t) when it splits over the integers.
  std::optional<std::vector<std::int64_t>> exponents;
};

// Depth-first search for a divisional flag. At each level the hyperplanes of
// the current restriction are tried in decreasing order of the size of their
// own restriction. Failed flats are memoized by their member set. Returns
// nullopt exactly when A is not divisionally free.
std::optional<DivisionalFlag> DivisionalFlagSearch(const Arrangement& a);

// Recomputes every flat, charpoly and divisibility of a flag from scratch.
bool VerifyFlag(const Arrangement& a, const DivisionalFlag& flag);

struct FlagB2 {
  // b2(dA)
  std::int64_t lhs = 0;
  // Σ_{i=0}^{ℓ-3} (|A^{X_i}| - |A^{X_{i+1}}|)(|A^{X_{i+1}}| - 1)
  std::int64_t rhs = 0;
};

// Both sides of b2(dA) >= Σ (|A^{X_i}| - |A^{X_{i+1}}|)(|A^{X_{i+1}}| - 1) for
// a flag X_0 ⊃ ... ⊃ X_{ℓ-2} given by member lists. Throws
// std::invalid_argument when the flag is malformed (wrong length, a member
// list that is not a flat, wrong codimension, or not nested). Requires
// dim >= 3.
FlagB2 FlagB2Bound(const Arrangement& a, const std::vector<std::vector<int>>& flats);

// Whether the flag attains equality above, which holds exactly for
// divisional flags.
bool DfViaB2(const Arrangement& a, const std::vector<std::vector<int>>& flats);

struct IFCertificate;

// One addition step of an inductive chain: hyperplane `hyperplane` (an index
// into the certified arrangement) is added to the previously added ones.
struct IFStep {
  int hyperplane = 0;
  IntPoly chi_restriction;
  IntPoly chi_deletion;
  // Certificate for the restriction when it has dimension >= 3 and is
  // nonempty; otherwise null.
  std::shared_ptr<const IFCertificate> restriction;
};

struct IFCertificate {
  Arrangement arrangement;
  std::vector<IFStep> steps;
};

enum class IFOutcome { kCertified, kNotIF, kExhausted };

struct IFResult {
  IFOutcome outcome = IFOutcome::kNotIF;
  std::shared_ptr<const IFCertificate> certificate;
  std::int64_t nodes = 0;
};

inline constexpr std::int64_t kDefaultIFBudget = 200000;

// Exhaustive search for an inductive chain, memoized on canonical keys. Each
// visited arrangement counts as one node; exceeding `budget` nodes yields
// kExhausted.
IFResult InductivelyFree(const Arrangement& a, std::int64_t budget = kDefaultIFBudget);

// Replays a certificate against `a`. The certificate's arrangement must equal
// `a` hyperplane for hyperplane.
bool VerifyIFCertificate(const Arrangement& a, const IFCertificate& cert);

struct HdfReport {
  bool ok = true;
  // Member lists of the flats X whose restriction A^X is not divisionally
  // free.
  std::vector<std::vector<int>> failing;
};

// Divisional freeness of A^X for every X in L(A) with dim X >= 1.
HdfReport HereditarilyDf(const Arrangement& a);

struct Line3Flags {
  // χ(A;t) = (t-1)(t-d1)(t-d2)
  bool a = false;
  // χ(A \ H;t) = (t-1)(t-d1)(t-(d2-1))
  bool b = false;
  // |A^H| = d1 + 1
  bool c = false;
};

// The three conditions for a rank-3 arrangement, computed on its
// essentialization. Throws std::invalid_argument when rank(A) != 3.
Line3Flags Line3Conditions(const Arrangement& a, int h, int d1, int d2);

// a = χ0(A; |A^H| - 1) for a rank-3 arrangement. a >= 0 always, and a = 0
// certifies freeness. Throws std::invalid_argument when rank(A) != 3.
mpz_class Div3Remainder(const Arrangement& a, int h);

// χ((A ∪ L)^L;t) | χ(A;t). Throws std::invalid_argument if L is already in A.
bool DivisionAdditionCheck(const Arrangement& a, std::span<const Scalar> covector);

struct SameEqReport {
  bool c4 = false;  // χ(A^H) | χ(A)
  bool c5 = false;  // χ(A^H) | χ(A')
  bool c6 = false;  // gcd(χ(A), χ(A')) has degree ℓ - 1
  // r0 = 0 in the division of χ0(A), resp. χ0(A'), by χ0(A^H). Absent when
  // ℓ < 3 or |A| < 2, where χ0 of A' or A^H is not defined.
  std::optional<bool> c7;
  std::optional<bool> c8;
  // Freeness of A^H when it is decidable here: always free at rank <= 2,
  // decided by Free3Decide at rank 3, absent above.
  std::optional<bool> restriction_free;

  bool AllHold() const;
  bool NoneHold() const;
};

// Five combinatorial conditions on the triple (A, A', A^H), each equivalent
// to the others whenever A^H is free. When A^H is known free and they
// disagree, throws std::logic_error. Throws std::invalid_argument for the
// empty arrangement.
SameEqReport SameEquivalences(const Arrangement& a, int h);

}  // namespace divflag

#endif  // DIVFLAG_FREENESS_H_

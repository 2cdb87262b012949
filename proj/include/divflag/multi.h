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

// Multiarrangements: Ziegler restrictions, exponents in rank 2, the second
// Betti number b2(A,m), the remainder of χ0(A) modulo χ0(A^H), and the exact
// freeness test for rank-3 arrangements.

#ifndef DIVFLAG_MULTI_H_
#define DIVFLAG_MULTI_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "divflag/arrangement.h"
#include "divflag/poly.h"

namespace divflag {

// An arrangement with a positive multiplicity on each hyperplane.
// mult[i] belongs to base.hyperplane(i).
struct MultiArrangement {
  Arrangement base;
  std::vector<int> mult;

  // Throws std::invalid_argument if sizes differ or a value is < 1.
  static MultiArrangement Make(Arrangement base, std::vector<int> mult);
  static MultiArrangement Simple(Arrangement base);

  int Total() const;
  // The same multiarrangement with mult[h] lowered by one; requires
  // mult[h] >= 2.
  MultiArrangement Lowered(int h) const;
};

// (A^H, m^H): m^H(K) counts the hyperplanes of A \ {H} whose trace on H is K.
// Throws std::invalid_argument when dim A = 1.
MultiArrangement ZieglerRestriction(const Arrangement& a, int h);

struct Exponents2 {
  int d1 = 0;
  int d2 = 0;
  friend bool operator==(const Exponents2&, const Exponents2&) = default;
};

// Exponents of a rank-2 multiarrangement. Uses the closed form
// (|m| - |A| + 1, |A| - 1) when |m| <= 2|A| - 1 and otherwise Exp2Solve.
// Throws std::invalid_argument when rank(A) != 2.
Exponents2 Exp2(const MultiArrangement& am);

// Always solves for D(A,m) degree by degree: the degree-d derivations
// θ = P ∂x + Q ∂y with α_H^{m(H)} | θ(α_H) form the kernel of a linear system
// in the 2(d+1) coefficients of P and Q. A basis found this way is checked
// with Saito's criterion (det = c · ∏ α_H^{m(H)}, c != 0); failure is a
// std::logic_error.
Exponents2 Exp2Solve(const MultiArrangement& am);

// m*(X) at rank 2: the exponent shared by exp(A,m) and exp(A,m - δ_h).
// Requires mult[h] >= 2.
int EulerMultRank2(const MultiArrangement& am, int h);

// b2(A,m) = Σ over X in L_2(A) of d1(X) d2(X), with (d1, d2) the exponents of
// the localization (A_X, m_X).
std::int64_t B2Multi(const MultiArrangement& am);

struct RemainderReport {
  int pivot = 0;
  // |A| - |A^H|
  int quotient_root = 0;
  // χ0(A;t) - (t - quotient_root) χ0(A^H;t); degree <= ℓ - 3.
  IntPoly r;
  // r_i = (-1)^i [t^(ℓ-3-i)] r(t), for i = 0 .. ℓ-3.
  std::vector<mpz_class> alternating;
  mpz_class r0;
};

// The remainder of chi0 after subtracting (t - quotient_root) chi0_h, laid
// out as above for an ambient dimension l. Performs no sign check.
RemainderReport RemainderOf(const IntPoly& chi0, const IntPoly& chi0_h,
                            int quotient_root, int l);

// Requires dim >= 3 and |A| >= 2; throws std::invalid_argument otherwise.
// Throws std::logic_error if r0 < 0, which cannot happen.
RemainderReport RemainderDivision(const Arrangement& a, int h);

// b2(dA) - b2(A^H, m^H). Nonnegative; zero exactly when A is locally free
// along H in codimension three. Requires dim >= 3.
std::int64_t AyGap(const Arrangement& a, int h);

struct Rank3FreenessReport {
  bool free = false;
  // {1, d1, d2} when free.
  std::optional<std::vector<int>> exponents;
  int witness_h = 0;
  std::int64_t gap = 0;
};

// Exact freeness for rank-3 arrangements: A is free iff AyGap(A, h) = 0, and
// then exp A = {1} ∪ exp(A^H, m^H). Non-essential inputs are essentialized
// first. Throws std::invalid_argument when rank(A) != 3.
Rank3FreenessReport Free3Decide(const Arrangement& a, int h = 0);

struct LocalViolation {
  // Members (indices into A) of the codimension-3 flat X ⊂ H.
  std::vector<int> members;
  // Essential characteristic polynomials of A_X and (A_X)^H.
  IntPoly chi_local;
  IntPoly chi_local_restricted;
};

struct LocalCheckReport {
  bool ok = true;
  std::vector<LocalViolation> violations;
};

// For every X in L_2(A^H), seen as a codimension-3 flat of A inside H, checks
// χ((A_X)^H) | χ(A_X). Requires dim >= 3.
LocalCheckReport LocalCodim3DivisionCheck(const Arrangement& a, int h);

}  // namespace divflag

#endif  // DIVFLAG_MULTI_H_

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

// Generators for the named arrangement families: Boolean, braid, Weyl
// arrangements of types B, C, D, extended Shi arrangements, the monomial
// "intermediate" arrangements over prime fields, the regular pentagon over a
// prime field, and a few small worked examples.

#ifndef DIVFLAG_CATALOG_H_
#define DIVFLAG_CATALOG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "divflag/arrangement.h"
#include "divflag/poly.h"

namespace divflag {

enum class RootType { kA, kB, kC, kD };

struct RootSystemSpec {
  RootType type;
  int rank = 0;
  // Type A uses coordinates dual to the simple roots, so the arrangement is
  // essential in rank ℓ. B, C and D use the standard e_i coordinates.
  std::vector<std::vector<long>> positive_roots;
  int coxeter_number = 0;

  // Throws std::invalid_argument for rank < 1, or rank < 2 in type D.
  static RootSystemSpec Make(RootType type, int rank);
  // Parses "A", "B", "C" or "D".
  static RootType ParseType(const std::string& name);
  std::string Name() const;
};

// Coordinate hyperplanes x_1 .. x_ℓ.
Arrangement BooleanArrangement(int l);
// x_i - x_j in K^ℓ (not essential). Requires ℓ >= 2.
Arrangement BraidArrangement(int l);
// x_i, x_i ± x_j.
Arrangement WeylB(int l);
// 2x_i, x_i ± x_j: the same hyperplanes as WeylB.
Arrangement WeylC(int l);
// x_i ± x_j. Requires ℓ >= 2.
Arrangement WeylD(int l);
// The hyperplanes of the positive roots.
Arrangement WeylArrangement(const RootSystemSpec& spec);

// {z = 0} ∪ {α = j z : α in Φ+, -k+1 <= j <= k} in dimension ℓ + 1.
// Requires k >= 1.
Arrangement Shi(const RootSystemSpec& spec, int k);

// The element of order r used for the intermediate arrangements:
// g^((p-1)/r) with g the least primitive root mod p.
std::uint64_t RootOfUnity(std::uint64_t p, int r);

// Smallest prime q > after with q ≡ 1 mod r.
std::uint64_t NextPrimeCongruentToOne(std::uint64_t after, int r);

// ∏_{i<=k} x_i ∏_{i<j, 0<=n<r} (x_i - ζ^n x_j) over F_p. The construction is
// repeated over the next prime ≡ 1 mod r and the lattice level sizes must
// agree; otherwise std::runtime_error. Throws std::invalid_argument unless
// p is prime, p ≡ 1 mod r, ℓ >= 2, r >= 1 and 0 <= k <= ℓ.
Arrangement Intermediate(int l, int k, int r, std::uint64_t p);
// Same without the second-prime comparison.
Arrangement IntermediateUnchecked(int l, int k, int r, std::uint64_t p);

// Products x_1 ... x_4 and x_1 ± x_2 ± x_3 ± x_4 (all sign patterns with a
// leading +): 12 hyperplanes in Q^4.
Arrangement EdelmanReinerRestriction();
// Its restriction to x_4 = 0: 7 hyperplanes in Q^3.
Arrangement EdelmanReinerRestrictionC();

// x, y, z, w, x+y+z+w in Q^4.
Arrangement XyzwExample();
// Its restriction to w = 0: x, y, z, x+y+z in Q^3.
Arrangement XyzwRestriction();

struct PentagonCone {
  // Cone over the 10 lines through pairs of vertices of a regular pentagon
  // plus the line at infinity: 11 planes in F_p^3. The line at infinity is
  // the last hyperplane.
  Arrangement plane;
  // plane × (w = 0): 12 hyperplanes in F_p^4, plane hyperplanes first.
  Arrangement cone;
  // Index in `cone` of the line at infinity.
  int h0 = 0;
  // Members of the flat of `cone` lying on all 11 plane hyperplanes.
  std::vector<int> x_members;
};

// Pentagon with vertices (ζ^k + ζ^-k, ζ^k - ζ^-k) for ζ of order 5, a linear
// image of the regular pentagon. Requires p ≡ 1 mod 5. Checks |A| = 11,
// |A^H| = 5 for every H and equal lattice level sizes over the next prime
// ≡ 1 mod 5; throws std::runtime_error if any check fails.
PentagonCone MakePentagonCone(std::uint64_t p = 31);

enum class ExpectedSource {
  // Stated as a closed form in the literature on these families.
  kPublished,
  // Computed here by an independent method (subset expansion or point
  // counting) and frozen.
  kComputed,
};

struct CatalogEntry {
  std::string name;
  Arrangement arrangement;
  std::optional<IntPoly> expected_chi;
  // Roots of the expected χ, when it splits.
  std::optional<std::vector<std::int64_t>> expected_exponents;
  ExpectedSource source = ExpectedSource::kPublished;
  std::string note;
};

struct CatalogParams {
  int l = 3;
  int k = 1;
  int r = 3;
  std::uint64_t p = 0;  // 0 selects the entry's default prime
  std::string type = "A";
};

// Names accepted by LookupCatalog.
std::vector<std::string> CatalogNames();

// Throws std::invalid_argument for an unknown name or bad parameters.
CatalogEntry LookupCatalog(const std::string& name, const CatalogParams& params = {});

}  // namespace divflag

#endif  // DIVFLAG_CATALOG_H_

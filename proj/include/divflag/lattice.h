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

// Intersection lattices, the Möbius function, characteristic and Poincaré
// polynomials, and two independent oracles for the characteristic
// polynomial (subset expansion and finite-field point counting).

#ifndef DIVFLAG_LATTICE_H_
#define DIVFLAG_LATTICE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "divflag/arrangement.h"
#include "divflag/poly.h"

namespace divflag {

// Worker threads used inside lattice construction. Results do not depend on
// the value. Defaults to 1.
void SetThreadCount(int threads);
int ThreadCount();

struct IntersectionLattice {
  // levels[i] = L_i(A), sorted by member list.
  std::vector<std::vector<Flat>> levels;
  // mobius[i][j] = μ of levels[i][j].
  std::vector<std::vector<std::int64_t>> mobius;
  // covers[i][j] = indices into levels[i + 1] of the flats covering
  // levels[i][j].
  std::vector<std::vector<std::vector<int>>> covers;
  int dim = 0;

  std::vector<int> LevelSizes() const;
  int Rank() const { return static_cast<int>(levels.size()) - 1; }
};

// Builds L(A) rank by rank: each flat of L_{i+1} is X ∩ H for X in L_i and
// H not containing X, deduplicated by member set.
IntersectionLattice BuildLattice(const Arrangement& a);
// Same, stopping after L_{max_rank}(A).
IntersectionLattice BuildLattice(const Arrangement& a, int max_rank);

struct CharData {
  IntPoly chi;
  // χ / (t - 1); absent for the empty arrangement.
  std::optional<IntPoly> chi0;
  IntPoly poincare;
  // χ(A;t) = Σ b_i (-1)^i t^(ℓ-i).
  std::vector<mpz_class> betti;
  // χ0(A;t) = Σ b_i(dA) (-1)^i t^(ℓ-1-i); empty for the empty arrangement.
  std::vector<mpz_class> betti_dec;

  // Throws std::domain_error for the empty arrangement.
  const IntPoly& Chi0() const;
};

CharData ComputeCharData(const IntersectionLattice& lattice);
CharData ComputeCharData(const Arrangement& a);

// Shorthand for ComputeCharData(a).chi.
IntPoly CharPoly(const Arrangement& a);
// χ0(A;t); throws for the empty arrangement.
IntPoly CharPoly0(const Arrangement& a);

// b2(dA): the coefficient of t^(ℓ-3) in χ0(A;t).
std::int64_t B2Deconed(const Arrangement& a);

// χ of the essentialization of A (drops the t^(ℓ - rank) factor).
IntPoly EssentialCharPoly(const Arrangement& a);

// Subset expansion Σ_{B ⊆ A} (-1)^|B| t^(ℓ - rank B). Limited to 16
// hyperplanes; throws std::invalid_argument beyond that.
IntPoly WhitneyOracle(const Arrangement& a);
inline constexpr int kWhitneyCap = 16;

// Number of points of F_q^ℓ on no hyperplane of the reduction of A mod q.
// Over Q each covector is scaled to a primitive integer vector before
// reduction. An arrangement over F_p is counted directly and needs q = p.
// Throws std::invalid_argument when q is not prime, when q changes the
// lattice (the message names the first level whose size differs), or when
// q^ℓ exceeds 10^8 points.
mpz_class PointCountOracle(const Arrangement& a, std::uint64_t q);

// The reduction of a rational arrangement modulo q, or nullopt when two
// hyperplanes collide or one vanishes.
std::optional<Arrangement> ReduceModPrime(const Arrangement& a, std::uint64_t q);

}  // namespace divflag

#endif  // DIVFLAG_LATTICE_H_

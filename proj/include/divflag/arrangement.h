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

// Central hyperplane arrangements and the basic constructions on them:
// flats, localization, restriction, deletion, cone and essentialization.

#ifndef DIVFLAG_ARRANGEMENT_H_
#define DIVFLAG_ARRANGEMENT_H_

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "divflag/exactalg.h"

namespace divflag {

using MemberSet = boost::dynamic_bitset<>;

// A central arrangement: an ambient dimension and pairwise non-proportional
// hyperplanes, each stored as a normalized covector (first nonzero entry 1).
class Arrangement {
 public:
  // The empty arrangement in K^dim.
  Arrangement(const FieldSpec& field, int dim);

  // Normalizes every covector. Throws std::invalid_argument on a zero
  // covector, a length mismatch, a field mismatch or a duplicate hyperplane.
  static Arrangement Make(const FieldSpec& field, int dim,
                          const std::vector<Vector>& covectors);
  // Integer covectors, mostly for catalog and tests.
  static Arrangement FromIntegers(const FieldSpec& field, int dim,
                                  const std::vector<std::vector<long>>& rows);

  const FieldSpec& field() const { return field_; }
  int dim() const { return dim_; }
  int size() const { return static_cast<int>(hyperplanes_.size()); }
  bool empty() const { return hyperplanes_.empty(); }
  const std::vector<Vector>& hyperplanes() const { return hyperplanes_; }
  const Vector& hyperplane(int i) const { return hyperplanes_.at(i); }

  // Index of the hyperplane proportional to v, or -1.
  int IndexOf(std::span<const Scalar> v) const;

  // Rank of the span of all normals.
  int rank() const;

  // Field, dimension and sorted covectors. Two arrangements have equal keys
  // iff they are the same set of hyperplanes in the same coordinates.
  std::string CanonicalKey() const;

  std::string ToString() const;

 private:
  FieldSpec field_;
  int dim_;
  std::vector<Vector> hyperplanes_;
};

// An element X of L(A). `normal_space` is the rref of the normals of the
// hyperplanes containing X; `members` lists exactly those hyperplanes.
struct Flat {
  Matrix normal_space;
  int codim = 0;
  std::vector<int> members;
  MemberSet member_set;
  // Size and dimension of the arrangement the flat was built from.
  int parent_size = 0;
  int parent_dim = 0;

  int dim() const { return parent_dim - codim; }
};

// The whole space V (codim 0).
Flat WholeSpace(const Arrangement& a);

// Closure of the intersection of the given hyperplanes.
Flat FlatOf(const Arrangement& a, const std::vector<int>& hyperplanes);

// The flat X ∩ H for H = hyperplane h; X itself when H already contains X.
Flat Meet(const Arrangement& a, const Flat& x, int h);

// Throws std::invalid_argument unless x is a flat of a.
void CheckFlatOf(const Arrangement& a, const Flat& x);

// A_X: the hyperplanes of A containing X, in the same ambient space. The
// i-th hyperplane of the result is hyperplane x.members[i] of A.
Arrangement Localization(const Arrangement& a, const Flat& x);

struct Restriction {
  // A^X in dim X coordinates.
  Arrangement arrangement;
  // trace[j]: the indices of A \ A_X whose trace on X is hyperplane j.
  std::vector<std::vector<int>> trace;
};

// A^X, written in the canonical kernel basis of x.normal_space. Throws if
// dim X = 0.
Restriction Restrict(const Arrangement& a, const Flat& x);
// A^H for the hyperplane with index h.
Restriction RestrictTo(const Arrangement& a, int h);

// A' = A \ {H}.
Arrangement Deletion(const Arrangement& a, int h);

struct Triple {
  Arrangement full;
  Arrangement deleted;
  Restriction restricted;
  int pivot = 0;
};
Triple MakeTriple(const Arrangement& a, int h);

// The subarrangement on the given (sorted, distinct) indices.
Arrangement Subarrangement(const Arrangement& a, const std::vector<int>& keep);

// A ∪ {L}. Throws if L is zero or already a member.
Arrangement Addition(const Arrangement& a, std::span<const Scalar> covector);

struct AffineHyperplane {
  Vector normal;  // length dim
  Scalar constant;  // the hyperplane normal · x = constant
};

// Cone over an affine arrangement in K^dim: each (α, c) becomes α - c·z in
// K^(dim+1), with z the last coordinate, plus the hyperplane z = 0.
Arrangement Cone(const std::vector<AffineHyperplane>& affine, int dim,
                 const FieldSpec& field);

// The arrangement induced on V / (common kernel of all normals), written in
// the rref pivot coordinates of the normal space. Hyperplane order is kept.
Arrangement Essentialize(const Arrangement& a);

}  // namespace divflag

#endif  // DIVFLAG_ARRANGEMENT_H_

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

#include "divflag/arrangement.h"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace divflag {
namespace {

bool CovectorLess(const Vector& a, const Vector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      CanonicalLess);
}

// Members of the row space spanned by `rref` (rows with pivots as given).
MemberSet MembersOf(const Arrangement& a, const Matrix& rref,
                    const std::vector<int>& pivots) {
  MemberSet members(a.size());
  for (int i = 0; i < a.size(); ++i) {
    const Vector& v = a.hyperplane(i);
    // v lies in the row space iff v = sum v[p_j] * row_j.
    bool inside = true;
    for (int c = 0; c < a.dim() && inside; ++c) {
      Scalar acc(a.field(), 0);
      for (std::size_t j = 0; j < pivots.size(); ++j) {
        const Scalar& coeff = v[pivots[j]];
        if (!coeff.is_zero() && !rref.at(static_cast<int>(j), c).is_zero()) {
          acc += coeff * rref.at(static_cast<int>(j), c);
        }
      }
      inside = acc == v[c];
    }
    if (inside) members.set(i);
  }
  return members;
}

Flat BuildFlat(const Arrangement& a, const Matrix& generators) {
  RrefResult rr = Rref(generators);
  Matrix basis(a.field(), 0, a.dim());
  for (int r = 0; r < rr.rank; ++r) basis.AppendRow(rr.reduced.row(r));
  Flat flat{std::move(basis), rr.rank, {}, MembersOf(a, rr.reduced, rr.pivots),
            a.size(), a.dim()};
  for (auto i = flat.member_set.find_first(); i != MemberSet::npos;
       i = flat.member_set.find_next(i)) {
    flat.members.push_back(static_cast<int>(i));
  }
  return flat;
}

std::vector<int> PivotsOf(const Matrix& rref) {
  std::vector<int> pivots;
  for (int r = 0; r < rref.rows(); ++r) {
    for (int c = 0; c < rref.cols(); ++c) {
      if (!rref.at(r, c).is_zero()) {
        pivots.push_back(c);
        break;
      }
    }
  }
  return pivots;
}

}  // namespace

Arrangement::Arrangement(const FieldSpec& field, int dim)
    : field_(field), dim_(dim) {
  if (dim < 1) throw std::invalid_argument("arrangement dimension must be >= 1");
}

Arrangement Arrangement::Make(const FieldSpec& field, int dim,
                              const std::vector<Vector>& covectors) {
  Arrangement a(field, dim);
  for (std::size_t i = 0; i < covectors.size(); ++i) {
    const Vector& v = covectors[i];
    if (static_cast<int>(v.size()) != dim) {
      throw std::invalid_argument("hyperplane " + std::to_string(i) +
                                  " has length " + std::to_string(v.size()) +
                                  ", expected " + std::to_string(dim));
    }
    for (const Scalar& s : v) {
      if (!(s.field() == field)) {
        throw std::invalid_argument("hyperplane " + std::to_string(i) +
                                    " is over " + s.field().ToString() +
                                    ", expected " + field.ToString());
      }
    }
    if (IsZeroVector(v)) {
      throw std::invalid_argument("hyperplane " + std::to_string(i) +
                                  " has a zero covector");
    }
    Vector n = NormalizeCovector(v);
    const int dup = a.IndexOf(n);
    if (dup >= 0) {
      throw std::invalid_argument("hyperplane " + std::to_string(i) +
                                  " duplicates hyperplane " +
                                  std::to_string(dup));
    }
    a.hyperplanes_.push_back(std::move(n));
  }
  return a;
}

Arrangement Arrangement::FromIntegers(
    const FieldSpec& field, int dim,
    const std::vector<std::vector<long>>& rows) {
  std::vector<Vector> covectors;
  for (const auto& row : rows) {
    Vector v;
    for (long x : row) v.emplace_back(field, x);
    covectors.push_back(std::move(v));
  }
  return Make(field, dim, covectors);
}

int Arrangement::IndexOf(std::span<const Scalar> v) const {
  if (IsZeroVector(v)) return -1;
  const Vector n = NormalizeCovector(v);
  for (int i = 0; i < size(); ++i) {
    if (hyperplanes_[i] == n) return i;
  }
  return -1;
}

int Arrangement::rank() const {
  return Rank(Matrix::FromRows(field_, hyperplanes_, dim_));
}

std::string Arrangement::CanonicalKey() const {
  std::vector<Vector> sorted = hyperplanes_;
  std::sort(sorted.begin(), sorted.end(), CovectorLess);
  std::string key = field_.ToString() + "|" + std::to_string(dim_);
  for (const Vector& v : sorted) key += "|" + VectorToString(v);
  return key;
}

std::string Arrangement::ToString() const {
  std::string out = "Arrangement(" + field_.ToString() + ", dim " +
                    std::to_string(dim_) + ", [";
  for (int i = 0; i < size(); ++i) {
    if (i > 0) out += ", ";
    out += VectorToString(hyperplanes_[i]);
  }
  return out + "])";
}

Flat WholeSpace(const Arrangement& a) {
  return Flat{Matrix(a.field(), 0, a.dim()), 0, {}, MemberSet(a.size()),
              a.size(), a.dim()};
}

Flat FlatOf(const Arrangement& a, const std::vector<int>& hyperplanes) {
  Matrix gens(a.field(), 0, a.dim());
  for (int h : hyperplanes) {
    if (h < 0 || h >= a.size()) {
      throw std::out_of_range("hyperplane index " + std::to_string(h) +
                              " out of range");
    }
    gens.AppendRow(a.hyperplane(h));
  }
  return BuildFlat(a, gens);
}

Flat Meet(const Arrangement& a, const Flat& x, int h) {
  if (h < 0 || h >= a.size()) {
    throw std::out_of_range("hyperplane index " + std::to_string(h) +
                            " out of range");
  }
  if (x.member_set.test(h)) return x;
  Matrix gens = x.normal_space;
  gens.AppendRow(a.hyperplane(h));
  return BuildFlat(a, gens);
}

void CheckFlatOf(const Arrangement& a, const Flat& x) {
  if (x.parent_size != a.size() || x.parent_dim != a.dim() ||
      x.normal_space.cols() != a.dim() || !(x.normal_space.field() == a.field())) {
    throw std::invalid_argument("flat does not belong to this arrangement");
  }
  const MemberSet recomputed =
      MembersOf(a, x.normal_space, PivotsOf(x.normal_space));
  if (recomputed != x.member_set) {
    throw std::invalid_argument("flat does not belong to this arrangement");
  }
  // The normal space must be spanned by its members.
  if (Rank(Matrix::FromRows(a.field(),
                            [&] {
                              std::vector<Vector> rows;
                              for (int m : x.members) rows.push_back(a.hyperplane(m));
                              return rows;
                            }(),
                            a.dim())) != x.codim) {
    throw std::invalid_argument("flat is not an intersection of hyperplanes");
  }
}

Arrangement Localization(const Arrangement& a, const Flat& x) {
  CheckFlatOf(a, x);
  return Subarrangement(a, x.members);
}

Restriction Restrict(const Arrangement& a, const Flat& x) {
  CheckFlatOf(a, x);
  if (x.dim() < 1) {
    throw std::invalid_argument("cannot restrict to a flat of dimension 0");
  }
  const std::vector<Vector> basis =
      x.codim == 0 ? KernelBasis(Matrix(a.field(), 1, a.dim()))
                   : KernelBasis(x.normal_space);
  Restriction out{Arrangement(a.field(), x.dim()), {}};
  std::vector<Vector> images;
  for (int i = 0; i < a.size(); ++i) {
    if (x.member_set.test(i)) continue;
    Vector image;
    image.reserve(basis.size());
    for (const Vector& b : basis) image.push_back(Dot(a.hyperplane(i), b));
    Vector n = NormalizeCovector(image);
    auto it = std::find(images.begin(), images.end(), n);
    if (it == images.end()) {
      images.push_back(std::move(n));
      out.trace.push_back({i});
    } else {
      out.trace[it - images.begin()].push_back(i);
    }
  }
  out.arrangement = Arrangement::Make(a.field(), x.dim(), images);
  return out;
}

Restriction RestrictTo(const Arrangement& a, int h) {
  return Restrict(a, FlatOf(a, {h}));
}

Arrangement Deletion(const Arrangement& a, int h) {
  if (h < 0 || h >= a.size()) {
    throw std::out_of_range("hyperplane index " + std::to_string(h) +
                            " out of range");
  }
  std::vector<int> keep;
  for (int i = 0; i < a.size(); ++i) {
    if (i != h) keep.push_back(i);
  }
  return Subarrangement(a, keep);
}

Triple MakeTriple(const Arrangement& a, int h) {
  return Triple{a, Deletion(a, h), RestrictTo(a, h), h};
}

Arrangement Subarrangement(const Arrangement& a, const std::vector<int>& keep) {
  std::vector<Vector> rows;
  for (int i : keep) rows.push_back(a.hyperplane(i));
  return Arrangement::Make(a.field(), a.dim(), rows);
}

Arrangement Addition(const Arrangement& a, std::span<const Scalar> covector) {
  if (a.IndexOf(covector) >= 0) {
    throw std::invalid_argument("hyperplane " + VectorToString(covector) +
                                " is already in the arrangement");
  }
  std::vector<Vector> rows = a.hyperplanes();
  rows.emplace_back(covector.begin(), covector.end());
  return Arrangement::Make(a.field(), a.dim(), rows);
}

Arrangement Cone(const std::vector<AffineHyperplane>& affine, int dim,
                 const FieldSpec& field) {
  std::vector<Vector> rows;
  for (const AffineHyperplane& h : affine) {
    if (static_cast<int>(h.normal.size()) != dim) {
      throw std::invalid_argument("affine hyperplane has wrong length");
    }
    if (IsZeroVector(h.normal)) {
      throw std::invalid_argument("affine hyperplane has a zero normal");
    }
    Vector v = h.normal;
    v.push_back(-h.constant);
    rows.push_back(std::move(v));
  }
  Vector z(dim + 1, Scalar(field, 0));
  z[dim] = Scalar(field, 1);
  rows.push_back(std::move(z));
  return Arrangement::Make(field, dim + 1, rows);
}

Arrangement Essentialize(const Arrangement& a) {
  const RrefResult rr = Rref(Matrix::FromRows(a.field(), a.hyperplanes(), a.dim()));
  if (rr.rank == 0) {
    throw std::invalid_argument("cannot essentialize an empty arrangement");
  }
  std::vector<Vector> rows;
  for (const Vector& v : a.hyperplanes()) {
    Vector coords;
    for (int p : rr.pivots) coords.push_back(v[p]);
    rows.push_back(std::move(coords));
  }
  return Arrangement::Make(a.field(), rr.rank, rows);
}

}  // namespace divflag

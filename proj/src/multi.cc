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

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "divflag/lattice.h"

namespace divflag {
namespace {

// Homogeneous polynomial in x, y of degree size() - 1; entry i is the
// coefficient of x^i y^(deg - i).
using BiPoly = std::vector<Scalar>;

BiPoly Multiply(const BiPoly& a, const BiPoly& b) {
  const FieldSpec& field = a.front().field();
  BiPoly out(a.size() + b.size() - 1, Scalar(field, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Scalar Binomial(const FieldSpec& field, int n, int k) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return Scalar(field, c);
}

Scalar Power(Scalar base, int e) {
  Scalar out(base.field(), 1);
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

// A rank-2 arrangement in two coordinates with normalized covectors, so each
// one is (1, c) or (0, 1).
MultiArrangement TwoCoordinates(const MultiArrangement& am) {
  if (am.base.rank() != 2) {
    throw std::invalid_argument("expected a rank-2 multiarrangement, got rank " +
                                std::to_string(am.base.rank()));
  }
  if (am.base.dim() == 2) return am;
  return MultiArrangement::Make(Essentialize(am.base), am.mult);
}

// Constraint matrix for degree-d derivations; columns are p_0..p_d, q_0..q_d.
Matrix DerivationSystem(const MultiArrangement& am, int d) {
  const FieldSpec& field = am.base.field();
  const int n = d + 1;
  Matrix system(field, 0, 2 * n);
  for (int h = 0; h < am.base.size(); ++h) {
    const Vector& alpha = am.base.hyperplane(h);
    const int m = am.mult[h];
    if (alpha[0].is_zero()) {
      // α = y: θ(α) = Q must vanish on the monomials x^i y^(d-i) with
      // d - i < m.
      for (int i = std::max(0, d - m + 1); i <= d; ++i) {
        Vector row(2 * n, Scalar(field, 0));
        row[n + i] = Scalar(field, 1);
        system.AppendRow(row);
      }
      continue;
    }
    // α = x + c y. Writing x = u - c v, y = v turns α into u, and the
    // coefficient of u^j v^(d-j) in θ(α) is Σ_{i>=j} f_i C(i,j) (-c)^(i-j)
    // with f_i = p_i + c q_i.
    const Scalar& c = alpha[1];
    for (int j = 0; j < std::min(m, n); ++j) {
      Vector row(2 * n, Scalar(field, 0));
      for (int i = j; i <= d; ++i) {
        const Scalar w = Binomial(field, i, j) * Power(-c, i - j);
        row[i] += w;
        row[n + i] += w * c;
      }
      system.AppendRow(row);
    }
  }
  return system;
}

std::vector<Vector> DerivationsOfDegree(const MultiArrangement& am, int d) {
  const Matrix system = DerivationSystem(am, d);
  if (system.rows() == 0) {
    std::vector<Vector> all;
    for (int i = 0; i < system.cols(); ++i) {
      Vector e(system.cols(), Scalar(am.base.field(), 0));
      e[i] = Scalar(am.base.field(), 1);
      all.push_back(std::move(e));
    }
    return all;
  }
  return KernelBasis(system);
}

// x^a y^b · θ for a derivation θ of degree d, as a vector of degree d + a + b.
Vector ShiftDerivation(const Vector& theta, int d, int a, int b) {
  const FieldSpec& field = theta.front().field();
  const int n = d + 1;
  const int big = d + a + b + 1;
  Vector out(2 * big, Scalar(field, 0));
  for (int i = 0; i <= d; ++i) {
    out[i + a] = theta[i];
    out[big + i + a] = theta[n + i];
  }
  return out;
}

void CheckSaito(const MultiArrangement& am, const Vector& t1, int d1,
                const Vector& t2, int d2) {
  const FieldSpec& field = am.base.field();
  const BiPoly p1(t1.begin(), t1.begin() + d1 + 1);
  const BiPoly q1(t1.begin() + d1 + 1, t1.end());
  const BiPoly p2(t2.begin(), t2.begin() + d2 + 1);
  const BiPoly q2(t2.begin() + d2 + 1, t2.end());
  BiPoly det = Multiply(p1, q2);
  const BiPoly other = Multiply(p2, q1);
  for (std::size_t i = 0; i < det.size(); ++i) det[i] -= other[i];

  BiPoly target{Scalar(field, 1)};
  for (int h = 0; h < am.base.size(); ++h) {
    // x + c y has coefficients (c, 1) in our ordering; y is (1, 0).
    const Vector& alpha = am.base.hyperplane(h);
    const BiPoly linear = alpha[0].is_zero()
                              ? BiPoly{Scalar(field, 1), Scalar(field, 0)}
                              : BiPoly{alpha[1], Scalar(field, 1)};
    for (int k = 0; k < am.mult[h]; ++k) target = Multiply(target, linear);
  }
  if (det.size() != target.size()) {
    throw std::logic_error("Saito check failed: degree mismatch");
  }
  std::optional<Scalar> ratio;
  for (std::size_t i = 0; i < det.size(); ++i) {
    if (target[i].is_zero()) {
      if (!det[i].is_zero()) throw std::logic_error("Saito check failed");
      continue;
    }
    const Scalar r = det[i] / target[i];
    if (ratio && !(*ratio == r)) throw std::logic_error("Saito check failed");
    ratio = r;
  }
  if (!ratio || ratio->is_zero()) {
    throw std::logic_error("Saito check failed: vanishing determinant");
  }
}

}  // namespace

MultiArrangement MultiArrangement::Make(Arrangement base, std::vector<int> mult) {
  if (static_cast<int>(mult.size()) != base.size()) {
    throw std::invalid_argument("multiplicity has " + std::to_string(mult.size()) +
                                " entries for " + std::to_string(base.size()) +
                                " hyperplanes");
  }
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] < 1) {
      throw std::invalid_argument("multiplicity of hyperplane " + std::to_string(i) +
                                  " is " + std::to_string(mult[i]) +
                                  ", expected >= 1");
    }
  }
  return MultiArrangement{std::move(base), std::move(mult)};
}

MultiArrangement MultiArrangement::Simple(Arrangement base) {
  std::vector<int> ones(base.size(), 1);
  return Make(std::move(base), std::move(ones));
}

int MultiArrangement::Total() const {
  int total = 0;
  for (int m : mult) total += m;
  return total;
}

MultiArrangement MultiArrangement::Lowered(int h) const {
  if (h < 0 || h >= base.size()) {
    throw std::out_of_range("hyperplane index " + std::to_string(h) + " out of range");
  }
  if (mult[h] < 2) {
    throw std::invalid_argument("multiplicity of hyperplane " + std::to_string(h) +
                                " is " + std::to_string(mult[h]) +
                                "; lowering needs at least 2");
  }
  MultiArrangement out = *this;
  --out.mult[h];
  return out;
}

MultiArrangement ZieglerRestriction(const Arrangement& a, int h) {
  if (a.dim() < 2) {
    throw std::invalid_argument("Ziegler restriction needs dimension >= 2");
  }
  Restriction r = RestrictTo(a, h);
  std::vector<int> mult;
  for (const auto& preimage : r.trace) mult.push_back(static_cast<int>(preimage.size()));
  return MultiArrangement::Make(std::move(r.arrangement), std::move(mult));
}

Exponents2 Exp2(const MultiArrangement& am) {
  const MultiArrangement two = TwoCoordinates(am);
  const int n = two.base.size();
  const int total = two.Total();
  if (total <= 2 * n - 1) {
    const int a = total - n + 1;
    const int b = n - 1;
    return Exponents2{std::min(a, b), std::max(a, b)};
  }
  return Exp2Solve(two);
}

Exponents2 Exp2Solve(const MultiArrangement& am) {
  const MultiArrangement two = TwoCoordinates(am);
  const FieldSpec& field = two.base.field();
  const int total = two.Total();
  int d1 = -1;
  Vector theta1;
  for (int d = 0; d <= total; ++d) {
    const std::vector<Vector> basis = DerivationsOfDegree(two, d);
    const int dim = static_cast<int>(basis.size());
    if (d1 < 0) {
      if (dim == 0) continue;
      d1 = d;
      theta1 = basis[0];
      if (dim >= 2) {
        if (2 * d != total) throw std::logic_error("exponents do not sum to |m|");
        CheckSaito(two, basis[0], d, basis[1], d);
        return Exponents2{d, d};
      }
      continue;
    }
    if (dim <= d - d1 + 1) continue;
    // A new generator appears in degree d: pick a solution outside S·θ1.
    RowSpaceBuilder multiples(field, 2 * (d + 1));
    for (int a = 0; a <= d - d1; ++a) {
      multiples.Add(ShiftDerivation(theta1, d1, a, d - d1 - a));
    }
    for (const Vector& candidate : basis) {
      if (multiples.Contains(candidate)) continue;
      if (d1 + d != total) throw std::logic_error("exponents do not sum to |m|");
      CheckSaito(two, theta1, d1, candidate, d);
      return Exponents2{d1, d};
    }
    throw std::logic_error("derivation count grew without a new generator");
  }
  throw std::logic_error("no derivation basis found up to degree |m|");
}

int EulerMultRank2(const MultiArrangement& am, int h) {
  const Exponents2 full = Exp2(am);
  const Exponents2 lower = Exp2(am.Lowered(h));
  for (int x : {full.d1, full.d2}) {
    if (x == lower.d1 || x == lower.d2) return x;
  }
  throw std::logic_error("exponents of (A,m) and (A,m - δ_H) share no entry");
}

std::int64_t B2Multi(const MultiArrangement& am) {
  const IntersectionLattice lat = BuildLattice(am.base, 2);
  if (lat.levels.size() < 3) return 0;
  std::int64_t sum = 0;
  for (const Flat& x : lat.levels[2]) {
    std::vector<int> mult;
    for (int i : x.members) mult.push_back(am.mult[i]);
    const Exponents2 e =
        Exp2(MultiArrangement::Make(Localization(am.base, x), std::move(mult)));
    sum += static_cast<std::int64_t>(e.d1) * e.d2;
  }
  return sum;
}

RemainderReport RemainderOf(const IntPoly& chi0, const IntPoly& chi0_h,
                            int quotient_root, int l) {
  RemainderReport report;
  report.quotient_root = quotient_root;
  report.r = chi0 - IntPoly::Linear(quotient_root) * chi0_h;
  if (report.r.degree() > l - 3) {
    throw std::logic_error("remainder has degree " + std::to_string(report.r.degree()));
  }
  for (int i = 0; i <= l - 3; ++i) {
    const mpz_class c = report.r.coefficient(l - 3 - i);
    report.alternating.push_back(i % 2 == 0 ? c : mpz_class(-c));
  }
  report.r0 = report.alternating.front();
  return report;
}

RemainderReport RemainderDivision(const Arrangement& a, int h) {
  const int l = a.dim();
  if (l < 3) {
    throw std::invalid_argument("remainder division needs dimension >= 3, got " +
                                std::to_string(l));
  }
  if (a.size() < 2) {
    throw std::invalid_argument(
        "remainder division needs at least 2 hyperplanes (χ0 of an empty "
        "restriction is undefined)");
  }
  const Arrangement restricted = RestrictTo(a, h).arrangement;
  RemainderReport report = RemainderOf(CharPoly0(a), CharPoly0(restricted),
                                       a.size() - restricted.size(), l);
  report.pivot = h;
  if (report.r0 < 0) {
    throw std::logic_error("negative r0 = " + report.r0.get_str() + " at hyperplane " +
                           std::to_string(h));
  }
  return report;
}

std::int64_t AyGap(const Arrangement& a, int h) {
  if (a.dim() < 3) {
    throw std::invalid_argument("b2 comparison needs dimension >= 3");
  }
  return B2Deconed(a) - B2Multi(ZieglerRestriction(a, h));
}

Rank3FreenessReport Free3Decide(const Arrangement& a, int h) {
  const int rank = a.rank();
  if (rank != 3) {
    throw std::invalid_argument("rank-3 freeness test got rank " + std::to_string(rank));
  }
  const Arrangement ess = a.dim() == 3 ? a : Essentialize(a);
  Rank3FreenessReport report;
  report.witness_h = h;
  report.gap = AyGap(ess, h);
  report.free = report.gap == 0;
  if (report.free) {
    const Exponents2 e = Exp2(ZieglerRestriction(ess, h));
    report.exponents = std::vector<int>{1, e.d1, e.d2};
    std::sort(report.exponents->begin(), report.exponents->end());
  }
  return report;
}

LocalCheckReport LocalCodim3DivisionCheck(const Arrangement& a, int h) {
  if (a.dim() < 3) {
    throw std::invalid_argument("local division check needs dimension >= 3");
  }
  const Restriction r = RestrictTo(a, h);
  const IntersectionLattice lat = BuildLattice(r.arrangement, 2);
  LocalCheckReport report;
  if (lat.levels.size() < 3) return report;
  for (const Flat& y : lat.levels[2]) {
    std::vector<int> lift{h};
    for (int j : y.members) {
      lift.insert(lift.end(), r.trace[j].begin(), r.trace[j].end());
    }
    const Flat x = FlatOf(a, lift);
    const Arrangement local = Localization(a, x);
    const int pivot = static_cast<int>(
        std::find(x.members.begin(), x.members.end(), h) - x.members.begin());
    const Arrangement local_h = RestrictTo(local, pivot).arrangement;
    if (Divides(CharPoly(local_h), CharPoly(local))) continue;
    report.ok = false;
    report.violations.push_back(
        LocalViolation{x.members, EssentialCharPoly(local), EssentialCharPoly(local_h)});
  }
  return report;
}

}  // namespace divflag

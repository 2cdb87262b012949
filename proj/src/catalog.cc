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

#include <algorithm>
#include <stdexcept>

#include "divflag/lattice.h"

namespace divflag {
namespace {

std::uint64_t PowMod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t out = 1;
  base %= p;
  while (e > 0) {
    if (e & 1) out = out * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return out;
}

std::uint64_t PrimitiveRoot(std::uint64_t p) {
  std::vector<std::uint64_t> factors;
  std::uint64_t n = p - 1;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    factors.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) factors.push_back(n);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool primitive = true;
    for (std::uint64_t q : factors) {
      if (PowMod(g, (p - 1) / q, p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  return 1;  // p = 2
}

std::vector<long> Unit(int l, int i, long value = 1) {
  std::vector<long> v(l, 0);
  v[i] = value;
  return v;
}

std::vector<long> PlusMinus(int l, int i, int j, long sign) {
  std::vector<long> v(l, 0);
  v[i] = 1;
  v[j] = sign;
  return v;
}

void RequireRank(int l, int minimum, const std::string& what) {
  if (l < minimum) {
    throw std::invalid_argument(what + " needs rank >= " + std::to_string(minimum) +
                                ", got " + std::to_string(l));
  }
}

std::vector<std::int64_t> Repeat(std::int64_t value, int times) {
  return std::vector<std::int64_t>(times, value);
}

void CheckSameLevels(const Arrangement& a, const Arrangement& b, const std::string& what,
                     std::uint64_t p, std::uint64_t q) {
  if (BuildLattice(a).LevelSizes() != BuildLattice(b).LevelSizes()) {
    throw std::runtime_error(what + ": lattices over F_" + std::to_string(p) +
                             " and F_" + std::to_string(q) + " differ");
  }
}

PentagonCone BuildPentagon(std::uint64_t p) {
  const FieldSpec f = FieldSpec::Prime(p);
  const std::uint64_t zeta = RootOfUnity(p, 5);
  std::vector<Scalar> xs, ys;
  for (int k = 0; k < 5; ++k) {
    const std::uint64_t z = PowMod(zeta, k, p);
    const std::uint64_t zinv = PowMod(zeta, (5 - k) % 5, p);
    xs.emplace_back(f, static_cast<long>((z + zinv) % p));
    ys.emplace_back(f, static_cast<long>((z + p - zinv) % p));
  }
  std::vector<AffineHyperplane> lines;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) {
      Vector normal{ys[b] - ys[a], xs[a] - xs[b]};
      Scalar constant = normal[0] * xs[a] + normal[1] * ys[a];
      lines.push_back(AffineHyperplane{std::move(normal), std::move(constant)});
    }
  }
  PentagonCone out{Cone(lines, 2, f), Arrangement(f, 4), 0, {}};
  std::vector<Vector> rows;
  for (const Vector& v : out.plane.hyperplanes()) {
    Vector w = v;
    w.emplace_back(f, 0);
    rows.push_back(std::move(w));
  }
  Vector last(4, Scalar(f, 0));
  last[3] = Scalar(f, 1);
  rows.push_back(std::move(last));
  out.cone = Arrangement::Make(f, 4, rows);
  out.h0 = out.plane.size() - 1;
  std::vector<int> plane_indices;
  for (int i = 0; i < out.plane.size(); ++i) plane_indices.push_back(i);
  out.x_members = FlatOf(out.cone, plane_indices).members;
  return out;
}

}  // namespace

RootSystemSpec RootSystemSpec::Make(RootType type, int rank) {
  RootSystemSpec spec{type, rank, {}, 0};
  const int l = rank;
  switch (type) {
    case RootType::kA:
      RequireRank(l, 1, "type A");
      // α_i + ... + α_j in the basis of simple roots.
      for (int i = 0; i < l; ++i) {
        for (int j = i; j < l; ++j) {
          std::vector<long> v(l, 0);
          for (int m = i; m <= j; ++m) v[m] = 1;
          spec.positive_roots.push_back(std::move(v));
        }
      }
      spec.coxeter_number = l + 1;
      break;
    case RootType::kB:
    case RootType::kC:
      RequireRank(l, 1, "type B/C");
      for (int i = 0; i < l; ++i) {
        spec.positive_roots.push_back(Unit(l, i, type == RootType::kB ? 1 : 2));
      }
      for (int i = 0; i < l; ++i) {
        for (int j = i + 1; j < l; ++j) {
          spec.positive_roots.push_back(PlusMinus(l, i, j, -1));
          spec.positive_roots.push_back(PlusMinus(l, i, j, 1));
        }
      }
      spec.coxeter_number = 2 * l;
      break;
    case RootType::kD:
      RequireRank(l, 2, "type D");
      for (int i = 0; i < l; ++i) {
        for (int j = i + 1; j < l; ++j) {
          spec.positive_roots.push_back(PlusMinus(l, i, j, -1));
          spec.positive_roots.push_back(PlusMinus(l, i, j, 1));
        }
      }
      spec.coxeter_number = 2 * l - 2;
      break;
  }
  return spec;
}

RootType RootSystemSpec::ParseType(const std::string& name) {
  if (name == "A" || name == "a") return RootType::kA;
  if (name == "B" || name == "b") return RootType::kB;
  if (name == "C" || name == "c") return RootType::kC;
  if (name == "D" || name == "d") return RootType::kD;
  throw std::invalid_argument("unknown root system type '" + name +
                              "' (expected A, B, C or D)");
}

std::string RootSystemSpec::Name() const {
  static const char* kNames[] = {"A", "B", "C", "D"};
  return kNames[static_cast<int>(type)] + std::to_string(rank);
}

Arrangement BooleanArrangement(int l) {
  RequireRank(l, 1, "Boolean arrangement");
  std::vector<std::vector<long>> rows;
  for (int i = 0; i < l; ++i) rows.push_back(Unit(l, i));
  return Arrangement::FromIntegers(FieldSpec::Rationals(), l, rows);
}

Arrangement BraidArrangement(int l) {
  RequireRank(l, 2, "braid arrangement");
  std::vector<std::vector<long>> rows;
  for (int i = 0; i < l; ++i) {
    for (int j = i + 1; j < l; ++j) rows.push_back(PlusMinus(l, i, j, -1));
  }
  return Arrangement::FromIntegers(FieldSpec::Rationals(), l, rows);
}

Arrangement WeylArrangement(const RootSystemSpec& spec) {
  return Arrangement::FromIntegers(FieldSpec::Rationals(), spec.rank,
                                   spec.positive_roots);
}

Arrangement WeylB(int l) { return WeylArrangement(RootSystemSpec::Make(RootType::kB, l)); }
Arrangement WeylC(int l) { return WeylArrangement(RootSystemSpec::Make(RootType::kC, l)); }
Arrangement WeylD(int l) { return WeylArrangement(RootSystemSpec::Make(RootType::kD, l)); }

Arrangement Shi(const RootSystemSpec& spec, int k) {
  if (k < 1) throw std::invalid_argument("Shi arrangement needs k >= 1");
  const int l = spec.rank;
  std::vector<std::vector<long>> rows;
  rows.push_back(Unit(l + 1, l));
  for (const auto& root : spec.positive_roots) {
    for (int j = -k + 1; j <= k; ++j) {
      std::vector<long> v = root;
      v.push_back(-j);
      rows.push_back(std::move(v));
    }
  }
  return Arrangement::FromIntegers(FieldSpec::Rationals(), l + 1, rows);
}

std::uint64_t RootOfUnity(std::uint64_t p, int r) {
  if (!IsPrime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (r < 1 || (p - 1) % r != 0) {
    throw std::invalid_argument("no element of order " + std::to_string(r) + " in F_" +
                                std::to_string(p) + " (need p ≡ 1 mod r)");
  }
  return PowMod(PrimitiveRoot(p), (p - 1) / r, p);
}

std::uint64_t NextPrimeCongruentToOne(std::uint64_t after, int r) {
  for (std::uint64_t q = after + 1;; ++q) {
    if (IsPrime(q) && (q - 1) % r == 0) return q;
  }
}

Arrangement IntermediateUnchecked(int l, int k, int r, std::uint64_t p) {
  RequireRank(l, 2, "intermediate arrangement");
  if (k < 0 || k > l) {
    throw std::invalid_argument("intermediate arrangement needs 0 <= k <= l, got k = " +
                                std::to_string(k));
  }
  const std::uint64_t zeta = RootOfUnity(p, r);
  const FieldSpec f = FieldSpec::Prime(p);
  std::vector<Vector> rows;
  for (int i = 0; i < k; ++i) {
    Vector v(l, Scalar(f, 0));
    v[i] = Scalar(f, 1);
    rows.push_back(std::move(v));
  }
  for (int i = 0; i < l; ++i) {
    for (int j = i + 1; j < l; ++j) {
      for (int n = 0; n < r; ++n) {
        Vector v(l, Scalar(f, 0));
        v[i] = Scalar(f, 1);
        v[j] = -Scalar(f, static_cast<long>(PowMod(zeta, n, p)));
        rows.push_back(std::move(v));
      }
    }
  }
  return Arrangement::Make(f, l, rows);
}

Arrangement Intermediate(int l, int k, int r, std::uint64_t p) {
  Arrangement a = IntermediateUnchecked(l, k, r, p);
  const std::uint64_t q = NextPrimeCongruentToOne(p, r);
  CheckSameLevels(a, IntermediateUnchecked(l, k, r, q), "intermediate arrangement", p, q);
  return a;
}

Arrangement EdelmanReinerRestriction() {
  std::vector<std::vector<long>> rows;
  for (int i = 0; i < 4; ++i) rows.push_back(Unit(4, i));
  for (long a2 : {1, -1}) {
    for (long a3 : {1, -1}) {
      for (long a4 : {1, -1}) rows.push_back({1, a2, a3, a4});
    }
  }
  return Arrangement::FromIntegers(FieldSpec::Rationals(), 4, rows);
}

Arrangement EdelmanReinerRestrictionC() {
  return RestrictTo(EdelmanReinerRestriction(), 3).arrangement;
}

Arrangement XyzwExample() {
  return Arrangement::FromIntegers(FieldSpec::Rationals(), 4,
                                   {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0},
                                    {0, 0, 0, 1}, {1, 1, 1, 1}});
}

Arrangement XyzwRestriction() { return RestrictTo(XyzwExample(), 3).arrangement; }

PentagonCone MakePentagonCone(std::uint64_t p) {
  if (!IsPrime(p) || p % 5 != 1) {
    throw std::invalid_argument("pentagon needs a prime p ≡ 1 mod 5, got " +
                                std::to_string(p));
  }
  PentagonCone out = BuildPentagon(p);
  if (out.plane.size() != 11) {
    throw std::runtime_error("pentagon over F_" + std::to_string(p) + " has " +
                             std::to_string(out.plane.size()) + " lines, expected 11");
  }
  for (int h = 0; h < out.plane.size(); ++h) {
    const int n = RestrictTo(out.plane, h).arrangement.size();
    if (n != 5) {
      throw std::runtime_error("pentagon over F_" + std::to_string(p) + ": line " +
                               std::to_string(h) + " meets the others in " +
                               std::to_string(n) + " points, expected 5");
    }
  }
  if (out.x_members.size() != 11) {
    throw std::runtime_error("pentagon cone: special flat has the wrong members");
  }
  const std::uint64_t q = NextPrimeCongruentToOne(p, 5);
  CheckSameLevels(out.cone, BuildPentagon(q).cone, "pentagon cone", p, q);
  return out;
}

std::vector<std::string> CatalogNames() {
  return {"boolean",      "braid",          "weyl-a",   "weyl-b",
          "weyl-c",       "weyl-d",         "shi",      "intermediate",
          "edelman-reiner", "edelman-reiner-c", "xyzw", "xyzw-restriction",
          "pentagon",     "pentagon-cone"};
}

CatalogEntry LookupCatalog(const std::string& name, const CatalogParams& params) {
  const int l = params.l;
  auto entry = [&](Arrangement a, std::vector<std::int64_t> roots, std::string note,
                   ExpectedSource source = ExpectedSource::kPublished) {
    std::sort(roots.begin(), roots.end());
    return CatalogEntry{name, std::move(a), IntPoly::FromRoots(roots), roots, source,
                        std::move(note)};
  };
  if (name == "boolean") {
    return entry(BooleanArrangement(l), Repeat(1, l), "(t-1)^l");
  }
  if (name == "braid") {
    std::vector<std::int64_t> roots;
    for (int i = 0; i < l; ++i) roots.push_back(i);
    return entry(BraidArrangement(l), roots, "t(t-1)...(t-l+1)");
  }
  if (name == "weyl-a") {
    std::vector<std::int64_t> roots;
    for (int i = 1; i <= l; ++i) roots.push_back(i);
    return entry(WeylArrangement(RootSystemSpec::Make(RootType::kA, l)), roots,
                 "(t-1)(t-2)...(t-l), simple-root coordinates");
  }
  if (name == "weyl-b" || name == "weyl-c") {
    std::vector<std::int64_t> roots;
    for (int i = 1; i <= l; ++i) roots.push_back(2 * i - 1);
    return entry(name == "weyl-b" ? WeylB(l) : WeylC(l), roots,
                 "(t-1)(t-3)...(t-(2l-1))");
  }
  if (name == "weyl-d") {
    RequireRank(l, 2, "type D");
    std::vector<std::int64_t> roots;
    for (int i = 1; i <= l - 1; ++i) roots.push_back(2 * i - 1);
    roots.push_back(l - 1);
    return entry(WeylD(l), roots, "exponents 1, 3, ..., 2l-3 and l-1");
  }
  if (name == "shi") {
    const RootSystemSpec spec = RootSystemSpec::Make(RootSystemSpec::ParseType(params.type), l);
    std::vector<std::int64_t> roots = Repeat(params.k * spec.coxeter_number, l);
    roots.push_back(1);
    std::string note = "exponents (1, kh, ..., kh), h = " +
                       std::to_string(spec.coxeter_number);
    if (spec.type == RootType::kA) note += "; type A in simple-root coordinates";
    return entry(Shi(spec, params.k), roots, note);
  }
  if (name == "intermediate") {
    const int k = params.k;
    const int r = params.r;
    const std::uint64_t p = params.p == 0 ? 7 : params.p;
    std::vector<std::int64_t> roots{1};
    for (int i = 1; i <= l - 2; ++i) roots.push_back(static_cast<std::int64_t>(i) * r + 1);
    roots.push_back(static_cast<std::int64_t>(l - 1) * r - l + k + 1);
    return entry(Intermediate(l, k, r, p), roots,
                 "exponents 1, r+1, ..., (l-2)r+1, (l-1)r-l+k+1; zeta = " +
                     std::to_string(RootOfUnity(p, r)) + " in F_" + std::to_string(p));
  }
  if (name == "edelman-reiner") {
    return entry(EdelmanReinerRestriction(), {1, 3, 3, 5}, "(t-1)(t-3)^2(t-5)");
  }
  if (name == "edelman-reiner-c") {
    return entry(EdelmanReinerRestrictionC(), {1, 3, 3}, "(t-1)(t-3)^2");
  }
  if (name == "xyzw") {
    return CatalogEntry{name, XyzwExample(),
                        IntPoly::Linear(1) * IntPoly({-4, 6, -4, 1}), std::nullopt,
                        ExpectedSource::kPublished, "(t-1)(t^3-4t^2+6t-4), not split"};
  }
  if (name == "xyzw-restriction") {
    return CatalogEntry{name, XyzwRestriction(), IntPoly::Linear(1) * IntPoly({3, -3, 1}),
                        std::nullopt, ExpectedSource::kPublished,
                        "(t-1)(t^2-3t+3), not split"};
  }
  if (name == "pentagon" || name == "pentagon-cone") {
    const std::uint64_t p = params.p == 0 ? 31 : params.p;
    PentagonCone pc = MakePentagonCone(p);
    if (name == "pentagon") {
      return entry(std::move(pc.plane), {1, 5, 5}, "exponents (1, 5, 5) over F_" +
                                                       std::to_string(p));
    }
    return entry(std::move(pc.cone), {1, 1, 5, 5},
                 "exponents (1, 1, 5, 5) over F_" + std::to_string(p));
  }
  throw std::invalid_argument("unknown catalog entry '" + name + "'");
}

}  // namespace divflag

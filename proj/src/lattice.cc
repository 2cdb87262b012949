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

#include "divflag/lattice.h"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace divflag {
namespace {

std::atomic<int> g_threads{1};

// Covers of x, one per distinct flat, in order of the smallest new member.
std::vector<Flat> CoversOf(const Arrangement& a, const Flat& x) {
  std::vector<Flat> out;
  MemberSet absorbed = x.member_set;
  for (int h = 0; h < a.size(); ++h) {
    if (absorbed.test(h)) continue;
    Flat y = Meet(a, x, h);
    absorbed |= y.member_set;
    out.push_back(std::move(y));
  }
  return out;
}

// Runs body(i) for i in [0, n) on up to ThreadCount() workers.
void ParallelFor(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t workers =
      std::min<std::size_t>(std::max(1, ThreadCount()), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mu;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

void SetThreadCount(int threads) { g_threads = std::max(1, threads); }
int ThreadCount() { return g_threads; }

std::vector<int> IntersectionLattice::LevelSizes() const {
  std::vector<int> sizes;
  for (const auto& level : levels) sizes.push_back(static_cast<int>(level.size()));
  return sizes;
}

IntersectionLattice BuildLattice(const Arrangement& a) {
  return BuildLattice(a, a.dim());
}

IntersectionLattice BuildLattice(const Arrangement& a, int max_rank) {
  IntersectionLattice lat;
  lat.dim = a.dim();
  lat.levels.push_back({WholeSpace(a)});
  while (static_cast<int>(lat.levels.size()) <= max_rank) {
    const std::vector<Flat>& current = lat.levels.back();
    std::vector<std::vector<Flat>> produced(current.size());
    ParallelFor(current.size(),
                [&](std::size_t i) { produced[i] = CoversOf(a, current[i]); });

    std::map<std::vector<int>, Flat> next;
    for (auto& batch : produced) {
      for (Flat& y : batch) {
        auto key = y.members;
        next.try_emplace(std::move(key), std::move(y));
      }
    }
    if (next.empty()) break;

    std::vector<Flat> level;
    level.reserve(next.size());
    for (auto& [members, flat] : next) level.push_back(std::move(flat));

    // Cover relations between the previous level and this one.
    std::vector<std::vector<int>> covers(current.size());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = 0; j < level.size(); ++j) {
        if (current[i].member_set.is_subset_of(level[j].member_set)) {
          covers[i].push_back(static_cast<int>(j));
        }
      }
    }
    lat.covers.push_back(std::move(covers));
    lat.levels.push_back(std::move(level));
  }
  lat.covers.emplace_back(lat.levels.back().size());

  // μ(V) = 1, μ(X) = -Σ_{Y strictly above X} μ(Y).
  lat.mobius.resize(lat.levels.size());
  lat.mobius[0] = {1};
  for (std::size_t i = 1; i < lat.levels.size(); ++i) {
    lat.mobius[i].assign(lat.levels[i].size(), 0);
    ParallelFor(lat.levels[i].size(), [&](std::size_t j) {
      const MemberSet& x = lat.levels[i][j].member_set;
      std::int64_t sum = 0;
      for (std::size_t k = 0; k < i; ++k) {
        for (std::size_t m = 0; m < lat.levels[k].size(); ++m) {
          if (lat.levels[k][m].member_set.is_subset_of(x)) sum += lat.mobius[k][m];
        }
      }
      lat.mobius[i][j] = -sum;
    });
  }
  return lat;
}

const IntPoly& CharData::Chi0() const {
  if (!chi0) throw std::domain_error("chi0 is undefined for the empty arrangement");
  return *chi0;
}

CharData ComputeCharData(const IntersectionLattice& lattice) {
  const int l = lattice.dim;
  std::vector<mpz_class> chi(l + 1, 0);
  std::vector<mpz_class> poincare(l + 1, 0);
  for (std::size_t i = 0; i < lattice.levels.size(); ++i) {
    for (std::int64_t mu : lattice.mobius[i]) {
      chi[l - i] += mpz_class(static_cast<long>(mu));
      // (-t)^codim
      poincare[i] += (i % 2 == 0 ? 1 : -1) * mpz_class(static_cast<long>(mu));
    }
  }
  CharData out;
  out.chi = IntPoly(chi);
  out.poincare = IntPoly(poincare);
  for (int i = 0; i <= l; ++i) {
    out.betti.push_back((i % 2 == 0 ? 1 : -1) * out.chi.coefficient(l - i));
  }
  const bool nonempty = lattice.levels.size() > 1;
  if (nonempty) {
    DivRem dr = DivideWithRemainder(out.chi, IntPoly::Linear(1));
    if (!dr.remainder.is_zero()) {
      throw std::logic_error("t - 1 does not divide " + out.chi.ToString());
    }
    out.chi0 = dr.quotient;
    for (int i = 0; i <= l - 1; ++i) {
      out.betti_dec.push_back((i % 2 == 0 ? 1 : -1) *
                              out.chi0->coefficient(l - 1 - i));
    }
  }
  return out;
}

CharData ComputeCharData(const Arrangement& a) {
  return ComputeCharData(BuildLattice(a));
}

IntPoly CharPoly(const Arrangement& a) { return ComputeCharData(a).chi; }

IntPoly CharPoly0(const Arrangement& a) { return ComputeCharData(a).Chi0(); }

std::int64_t B2Deconed(const Arrangement& a) {
  const mpz_class c = CharPoly0(a).coefficient(a.dim() - 3);
  if (!c.fits_slong_p()) throw std::overflow_error("b2 does not fit in 64 bits");
  return c.get_si();
}

IntPoly EssentialCharPoly(const Arrangement& a) {
  if (a.empty()) return IntPoly({1});
  return CharPoly(Essentialize(a));
}

IntPoly WhitneyOracle(const Arrangement& a) {
  if (a.size() > kWhitneyCap) {
    throw std::invalid_argument("subset expansion is capped at " +
                                std::to_string(kWhitneyCap) + " hyperplanes, got " +
                                std::to_string(a.size()));
  }
  const int l = a.dim();
  // signed[r] = Σ over subsets of rank r of (-1)^|B|
  std::vector<long> signed_counts(l + 1, 0);
  std::function<void(int, const RowSpaceBuilder&, int)> walk =
      [&](int i, const RowSpaceBuilder& span, int size) {
        if (i == a.size()) {
          signed_counts[span.rank()] += (size % 2 == 0) ? 1 : -1;
          return;
        }
        walk(i + 1, span, size);
        RowSpaceBuilder with = span;
        with.Add(a.hyperplane(i));
        walk(i + 1, with, size + 1);
      };
  walk(0, RowSpaceBuilder(a.field(), l), 0);
  std::vector<mpz_class> coeffs(l + 1, 0);
  for (int r = 0; r <= l; ++r) coeffs[l - r] += signed_counts[r];
  return IntPoly(coeffs);
}

std::optional<Arrangement> ReduceModPrime(const Arrangement& a, std::uint64_t q) {
  if (!a.field().is_rational()) {
    throw std::invalid_argument("reduction mod q needs an arrangement over Q");
  }
  const FieldSpec fq = FieldSpec::Prime(q);
  std::vector<Vector> rows;
  for (const Vector& v : a.hyperplanes()) {
    mpz_class lcm = 1;
    for (const Scalar& s : v) lcm = ::lcm(lcm, mpz_class(s.rational().get_den()));
    std::vector<mpz_class> ints;
    mpz_class g = 0;
    for (const Scalar& s : v) {
      mpz_class n = s.rational().get_num() * (lcm / s.rational().get_den());
      g = gcd(g, n);
      ints.push_back(n);
    }
    Vector reduced;
    for (const mpz_class& n : ints) reduced.emplace_back(fq, mpz_class(n / g));
    if (IsZeroVector(reduced)) return std::nullopt;
    rows.push_back(std::move(reduced));
  }
  try {
    return Arrangement::Make(fq, a.dim(), rows);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

mpz_class PointCountOracle(const Arrangement& a, std::uint64_t q) {
  if (!IsPrime(q)) {
    throw std::invalid_argument(std::to_string(q) + " is not prime");
  }
  mpz_class total;
  mpz_ui_pow_ui(total.get_mpz_t(), q, a.dim());
  if (total > 100000000) {
    throw std::invalid_argument("point count over " + std::to_string(q) + "^" +
                                std::to_string(a.dim()) + " points is too large");
  }
  std::optional<Arrangement> reduced;
  if (a.field().is_rational()) {
    reduced = ReduceModPrime(a, q);
    if (!reduced) {
      throw std::invalid_argument("bad prime " + std::to_string(q) +
                                  ": hyperplanes collide at level 1");
    }
    const std::vector<int> over_q = BuildLattice(a).LevelSizes();
    const std::vector<int> over_fq = BuildLattice(*reduced).LevelSizes();
    for (std::size_t i = 0; i < std::max(over_q.size(), over_fq.size()); ++i) {
      const int lhs = i < over_q.size() ? over_q[i] : 0;
      const int rhs = i < over_fq.size() ? over_fq[i] : 0;
      if (lhs != rhs) {
        throw std::invalid_argument(
            "bad prime " + std::to_string(q) + ": level " + std::to_string(i) +
            " has " + std::to_string(rhs) + " flats mod q but " +
            std::to_string(lhs) + " over Q");
      }
    }
  } else {
    if (a.field().modulus() != q) {
      throw std::invalid_argument("an arrangement over " + a.field().ToString() +
                                  " can only be counted over its own field");
    }
    reduced = a;
  }

  const int l = a.dim();
  std::vector<std::vector<std::uint64_t>> normals;
  for (const Vector& v : reduced->hyperplanes()) {
    std::vector<std::uint64_t> row;
    for (const Scalar& s : v) row.push_back(s.residue());
    normals.push_back(std::move(row));
  }
  const std::uint64_t count = total.get_ui();
  std::vector<std::uint64_t> point(l, 0);
  std::uint64_t off = 0;
  for (std::uint64_t n = 0; n < count; ++n) {
    std::uint64_t rest = n;
    for (int c = 0; c < l; ++c) {
      point[c] = rest % q;
      rest /= q;
    }
    bool on_some = false;
    for (const auto& row : normals) {
      std::uint64_t acc = 0;
      for (int c = 0; c < l; ++c) acc = (acc + row[c] * point[c]) % q;
      if (acc == 0) {
        on_some = true;
        break;
      }
    }
    if (!on_some) ++off;
  }
  return mpz_class(static_cast<unsigned long>(off));
}

}  // namespace divflag

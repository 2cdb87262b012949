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

#include "divflag/freeness.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "divflag/lattice.h"
#include "divflag/multi.h"

namespace divflag {
namespace {

std::vector<int> SortedUnion(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

class DfSearch {
 public:
  explicit DfSearch(const Arrangement& a) : a_(a) {}

  std::optional<DivisionalFlag> Run() {
    std::vector<std::vector<int>> to_a;
    for (int i = 0; i < a_.size(); ++i) to_a.push_back({i});
    DivisionalFlag flag;
    const IntPoly chi = CharPoly(a_);
    flag.flats.push_back({});
    flag.charpolys.push_back(chi);
    if (!Descend({}, a_, to_a, chi, flag)) return std::nullopt;
    flag.exponents = LinearRoots(chi);
    return flag;
  }

 private:
  // r = A^X, where X has members `x`; to_a[j] lists the hyperplanes of A whose
  // trace on X is hyperplane j of r.
  bool Descend(const std::vector<int>& x, const Arrangement& r,
               const std::vector<std::vector<int>>& to_a, const IntPoly& chi_r,
               DivisionalFlag& flag) {
    if (r.dim() <= 2 || r.empty()) return true;
    struct Candidate {
      int index;
      Restriction restriction;
    };
    std::vector<Candidate> candidates;
    for (int j = 0; j < r.size(); ++j) candidates.push_back({j, RestrictTo(r, j)});
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& p, const Candidate& q) {
                       return p.restriction.arrangement.size() >
                              q.restriction.arrangement.size();
                     });
    for (const Candidate& c : candidates) {
      std::vector<int> y = x;
      for (int i : to_a[c.index]) y.push_back(i);
      std::sort(y.begin(), y.end());
      if (failed_.count(y)) continue;
      const IntPoly chi_y = CharPoly(c.restriction.arrangement);
      if (!Divides(chi_y, chi_r)) continue;
      std::vector<std::vector<int>> next_to_a;
      for (const auto& preimage : c.restriction.trace) {
        std::vector<int> merged;
        for (int i : preimage) merged = SortedUnion(merged, to_a[i]);
        next_to_a.push_back(std::move(merged));
      }
      flag.flats.push_back(y);
      flag.charpolys.push_back(chi_y);
      if (Descend(y, c.restriction.arrangement, next_to_a, chi_y, flag)) return true;
      flag.flats.pop_back();
      flag.charpolys.pop_back();
      failed_.insert(std::move(y));
    }
    return false;
  }

  const Arrangement& a_;
  std::set<std::vector<int>> failed_;
};

// Checks that flats[i] is the member list of a flat of codimension i and
// that the list is nested. Returns the restriction sizes |A^{X_i}|.
std::vector<int> CheckFlagShape(const Arrangement& a,
                                const std::vector<std::vector<int>>& flats) {
  std::vector<int> sizes;
  for (std::size_t i = 0; i < flats.size(); ++i) {
    std::vector<int> sorted = flats[i];
    std::sort(sorted.begin(), sorted.end());
    const Flat x = FlatOf(a, sorted);
    if (x.members != sorted) {
      throw std::invalid_argument("flag entry " + std::to_string(i) +
                                  " is not closed under intersection");
    }
    if (x.codim != static_cast<int>(i)) {
      throw std::invalid_argument("flag entry " + std::to_string(i) + " has codimension " +
                                  std::to_string(x.codim));
    }
    if (i > 0 && !std::includes(sorted.begin(), sorted.end(), flats[i - 1].begin(),
                                flats[i - 1].end())) {
      throw std::invalid_argument("flag entry " + std::to_string(i) +
                                  " does not contain entry " + std::to_string(i - 1));
    }
    sizes.push_back(Restrict(a, x).arrangement.size());
  }
  return sizes;
}

struct BudgetExceeded {};

// χ(A^H;t) for the hyperplane with index h; 1 when dim A = 1.
IntPoly RestrictionChi(const Arrangement& a, int h) {
  if (a.dim() == 1) return IntPoly({1});
  return CharPoly(RestrictTo(a, h).arrangement);
}

class IfSearch {
 public:
  explicit IfSearch(std::int64_t budget) : budget_(budget) {}

  std::shared_ptr<const IFCertificate> Run(const Arrangement& a) {
    const std::string key = a.CanonicalKey();
    if (refuted_.count(key)) return nullptr;
    if (auto it = certified_.find(key); it != certified_.end()) {
      return Reorder(it->second, a);
    }
    if (++nodes_ > budget_) throw BudgetExceeded{};
    auto cert = Search(a);
    if (cert) {
      certified_.emplace(key, cert);
    } else {
      refuted_.insert(key);
    }
    return cert;
  }

  std::int64_t nodes() const { return nodes_; }

 private:
  const IntPoly& Chi(const Arrangement& a) {
    const std::string key = a.CanonicalKey();
    auto it = chi_.find(key);
    if (it == chi_.end()) it = chi_.emplace(key, CharPoly(a)).first;
    return it->second;
  }

  std::shared_ptr<const IFCertificate> Search(const Arrangement& a) {
    if (a.dim() <= 2 || a.empty()) return Trivial(a);
    // Inductively free arrangements are free, so χ splits.
    if (!LinearRoots(Chi(a))) return nullptr;
    for (int h = 0; h < a.size(); ++h) {
      const Arrangement deleted = Deletion(a, h);
      const Arrangement restricted = RestrictTo(a, h).arrangement;
      const IntPoly chi_h = Chi(restricted);
      const IntPoly chi_del = Chi(deleted);
      if (!Divides(chi_h, chi_del)) continue;
      auto sub = Run(restricted);
      if (!sub) continue;
      auto del = Run(deleted);
      if (!del) continue;
      auto cert = std::make_shared<IFCertificate>(IFCertificate{a, {}});
      for (const IFStep& step : del->steps) {
        IFStep copy = step;
        copy.hyperplane = step.hyperplane < h ? step.hyperplane : step.hyperplane + 1;
        cert->steps.push_back(std::move(copy));
      }
      const bool needs_sub = restricted.dim() >= 3 && !restricted.empty();
      cert->steps.push_back(IFStep{h, chi_h, chi_del, needs_sub ? sub : nullptr});
      return cert;
    }
    return nullptr;
  }

  std::shared_ptr<const IFCertificate> Trivial(const Arrangement& a) {
    auto cert = std::make_shared<IFCertificate>(IFCertificate{a, {}});
    std::vector<int> added;
    for (int h = 0; h < a.size(); ++h) {
      const IntPoly chi_del = CharPoly(Subarrangement(a, added));
      added.push_back(h);
      const Arrangement now = Subarrangement(a, added);
      const IntPoly chi_h = RestrictionChi(now, h);
      cert->steps.push_back(IFStep{h, chi_h, chi_del, nullptr});
    }
    return cert;
  }

  // The same certificate with hyperplane indices referring to `a`, which has
  // the same hyperplanes as cert->arrangement in a possibly different order.
  // Nested restriction certificates are keyed by hyperplane set and stay as
  // they are.
  static std::shared_ptr<const IFCertificate> Reorder(
      const std::shared_ptr<const IFCertificate>& cert, const Arrangement& a) {
    if (cert->arrangement.hyperplanes() == a.hyperplanes()) return cert;
    auto out = std::make_shared<IFCertificate>(IFCertificate{a, {}});
    for (const IFStep& step : cert->steps) {
      IFStep copy = step;
      copy.hyperplane = a.IndexOf(cert->arrangement.hyperplane(step.hyperplane));
      out->steps.push_back(std::move(copy));
    }
    return out;
  }

  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  std::unordered_map<std::string, std::shared_ptr<const IFCertificate>> certified_;
  std::unordered_set<std::string> refuted_;
  std::unordered_map<std::string, IntPoly> chi_;
};

bool Present(const std::optional<bool>& v, bool want) { return !v || *v == want; }

}  // namespace

bool DivisionCheck(const Arrangement& a, int h) {
  return Divides(RestrictionChi(a, h), CharPoly(a));
}

std::optional<DivisionalFlag> DivisionalFlagSearch(const Arrangement& a) {
  return DfSearch(a).Run();
}

bool VerifyFlag(const Arrangement& a, const DivisionalFlag& flag) {
  if (flag.flats.empty() || flag.flats.size() != flag.charpolys.size()) return false;
  const int l = a.dim();
  const std::size_t full = static_cast<std::size_t>(std::max(1, l - 1));
  if (flag.flats.size() > full) return false;
  std::vector<Arrangement> restrictions;
  try {
    CheckFlagShape(a, flag.flats);
    for (const auto& members : flag.flats) {
      std::vector<int> sorted = members;
      std::sort(sorted.begin(), sorted.end());
      restrictions.push_back(Restrict(a, FlatOf(a, sorted)).arrangement);
    }
  } catch (const std::exception&) {
    return false;
  }
  if (flag.flats.size() < full && !restrictions.back().empty()) return false;
  for (std::size_t i = 0; i < restrictions.size(); ++i) {
    if (!(CharPoly(restrictions[i]) == flag.charpolys[i])) return false;
    if (i > 0 && !Divides(flag.charpolys[i], flag.charpolys[i - 1])) return false;
  }
  return true;
}

FlagB2 FlagB2Bound(const Arrangement& a, const std::vector<std::vector<int>>& flats) {
  const int l = a.dim();
  if (l < 3) throw std::invalid_argument("flag bound needs dimension >= 3");
  if (static_cast<int>(flats.size()) != l - 1) {
    throw std::invalid_argument("flag has " + std::to_string(flats.size()) +
                                " entries, expected " + std::to_string(l - 1));
  }
  const std::vector<int> sizes = CheckFlagShape(a, flats);
  FlagB2 out;
  out.lhs = B2Deconed(a);
  for (int i = 0; i + 1 < static_cast<int>(sizes.size()); ++i) {
    out.rhs += static_cast<std::int64_t>(sizes[i] - sizes[i + 1]) * (sizes[i + 1] - 1);
  }
  return out;
}

bool DfViaB2(const Arrangement& a, const std::vector<std::vector<int>>& flats) {
  const FlagB2 b = FlagB2Bound(a, flats);
  return b.lhs == b.rhs;
}

IFResult InductivelyFree(const Arrangement& a, std::int64_t budget) {
  IfSearch search(budget);
  IFResult result;
  try {
    result.certificate = search.Run(a);
    result.outcome = result.certificate ? IFOutcome::kCertified : IFOutcome::kNotIF;
  } catch (const BudgetExceeded&) {
    result.outcome = IFOutcome::kExhausted;
  }
  result.nodes = search.nodes();
  return result;
}

bool VerifyIFCertificate(const Arrangement& a, const IFCertificate& cert) {
  if (!(cert.arrangement.field() == a.field()) || cert.arrangement.dim() != a.dim() ||
      cert.arrangement.hyperplanes() != a.hyperplanes()) {
    return false;
  }
  if (static_cast<int>(cert.steps.size()) != a.size()) return false;
  std::vector<int> added;
  std::vector<bool> seen(a.size(), false);
  for (const IFStep& step : cert.steps) {
    const int h = step.hyperplane;
    if (h < 0 || h >= a.size() || seen[h]) return false;
    seen[h] = true;
    const IntPoly chi_del = CharPoly(Subarrangement(a, added));
    added.push_back(h);
    const Arrangement now = Subarrangement(a, added);
    const IntPoly chi_h = RestrictionChi(now, static_cast<int>(added.size()) - 1);
    if (!(chi_del == step.chi_deletion) || !(chi_h == step.chi_restriction)) return false;
    if (a.dim() <= 2) continue;
    if (!Divides(chi_h, chi_del)) return false;
    const Arrangement restricted =
        RestrictTo(now, static_cast<int>(added.size()) - 1).arrangement;
    if (restricted.dim() >= 3 && !restricted.empty()) {
      // The restriction's hyperplane order depends on the addition order, so
      // the nested certificate only has to match as a set.
      if (!step.restriction) return false;
      const Arrangement& nested = step.restriction->arrangement;
      if (nested.CanonicalKey() != restricted.CanonicalKey()) return false;
      if (!VerifyIFCertificate(nested, *step.restriction)) return false;
    }
  }
  return true;
}

HdfReport HereditarilyDf(const Arrangement& a) {
  const IntersectionLattice lat = BuildLattice(a);
  HdfReport report;
  for (const auto& level : lat.levels) {
    for (const Flat& x : level) {
      if (x.dim() < 1) continue;
      if (!DivisionalFlagSearch(Restrict(a, x).arrangement)) {
        report.ok = false;
        report.failing.push_back(x.members);
      }
    }
  }
  return report;
}

namespace {

Arrangement EssentialRank3(const Arrangement& a) {
  const int rank = a.rank();
  if (rank != 3) {
    throw std::invalid_argument("expected a rank-3 arrangement, got rank " +
                                std::to_string(rank));
  }
  return a.dim() == 3 ? a : Essentialize(a);
}

}  // namespace

Line3Flags Line3Conditions(const Arrangement& a, int h, int d1, int d2) {
  const Arrangement ess = EssentialRank3(a);
  Line3Flags flags;
  flags.a = CharPoly(ess) == IntPoly::FromRoots({1, d1, d2});
  flags.b = CharPoly(Deletion(ess, h)) == IntPoly::FromRoots({1, d1, d2 - 1});
  flags.c = RestrictTo(ess, h).arrangement.size() == d1 + 1;
  return flags;
}

mpz_class Div3Remainder(const Arrangement& a, int h) {
  const Arrangement ess = EssentialRank3(a);
  const int restricted = RestrictTo(ess, h).arrangement.size();
  const mpz_class value = CharPoly0(ess).Evaluate(restricted - 1);
  if (value < 0) {
    throw std::logic_error("negative value " + value.get_str() + " of χ0 at |A^H| - 1");
  }
  return value;
}

bool DivisionAdditionCheck(const Arrangement& a, std::span<const Scalar> covector) {
  const Arrangement bigger = Addition(a, covector);
  const Arrangement restricted = RestrictTo(bigger, bigger.size() - 1).arrangement;
  return Divides(CharPoly(restricted), CharPoly(a));
}

bool SameEqReport::AllHold() const {
  return c4 && c5 && c6 && Present(c7, true) && Present(c8, true);
}

bool SameEqReport::NoneHold() const {
  return !c4 && !c5 && !c6 && Present(c7, false) && Present(c8, false);
}

SameEqReport SameEquivalences(const Arrangement& a, int h) {
  if (a.empty()) throw std::invalid_argument("the empty arrangement has no triple");
  const int l = a.dim();
  const Arrangement deleted = Deletion(a, h);
  const Arrangement restricted = RestrictTo(a, h).arrangement;
  const IntPoly chi = CharPoly(a);
  const IntPoly chi_del = CharPoly(deleted);
  const IntPoly chi_h = CharPoly(restricted);
  SameEqReport report;
  report.c4 = Divides(chi_h, chi);
  report.c5 = Divides(chi_h, chi_del);
  report.c6 = GcdDegree(chi, chi_del) == l - 1;
  if (l >= 3 && a.size() >= 2) {
    report.c7 = RemainderDivision(a, h).r0 == 0;
    report.c8 = RemainderOf(CharPoly0(deleted), CharPoly0(restricted),
                            deleted.size() - restricted.size(), l)
                    .r0 == 0;
  }
  const int rank_h = restricted.rank();
  if (rank_h <= 2) {
    report.restriction_free = true;
  } else if (rank_h == 3) {
    report.restriction_free = Free3Decide(restricted).free;
  }
  if (report.restriction_free.value_or(false) && !report.AllHold() &&
      !report.NoneHold()) {
    throw std::logic_error("conditions disagree although the restriction is free");
  }
  return report;
}

}  // namespace divflag

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

#include "divflag/random.h"

#include <algorithm>
#include <stdexcept>

namespace divflag {

Arrangement RandomArrangement(std::mt19937_64& rng, const RandomSpec& spec) {
  const FieldSpec q = FieldSpec::Rationals();
  std::uniform_int_distribution<int> dim_dist(spec.min_dim, spec.max_dim);
  std::uniform_int_distribution<int> entry(-spec.range, spec.range);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const int dim = dim_dist(rng);
    const int lo = std::max(spec.min_size, spec.essential ? dim : 0);
    if (lo > spec.max_size) continue;
    const int target = std::uniform_int_distribution<int>(lo, spec.max_size)(rng);
    Arrangement a(q, dim);
    std::vector<Vector> rows;
    for (int tries = 0; tries < 50 * target && static_cast<int>(rows.size()) < target;
         ++tries) {
      Vector v;
      for (int c = 0; c < dim; ++c) v.emplace_back(q, entry(rng));
      if (IsZeroVector(v) || a.IndexOf(v) >= 0) continue;
      rows.push_back(v);
      a = Arrangement::Make(q, dim, rows);
    }
    if (a.size() < spec.min_size) continue;
    if (spec.essential && a.rank() != dim) continue;
    return a;
  }
  throw std::runtime_error("could not draw an arrangement matching the request");
}

Arrangement RandomSubarrangement(std::mt19937_64& rng, const Arrangement& pool,
                                 int min_size, int max_size) {
  max_size = std::min(max_size, pool.size());
  std::vector<int> order(pool.size());
  for (int i = 0; i < pool.size(); ++i) order[i] = i;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const int n = std::uniform_int_distribution<int>(min_size, max_size)(rng);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> keep(order.begin(), order.begin() + n);
    std::sort(keep.begin(), keep.end());
    Arrangement a = Subarrangement(pool, keep);
    if (a.rank() == pool.dim()) return a;
  }
  throw std::runtime_error("could not draw a full-rank subarrangement");
}

std::vector<std::vector<int>> RandomFlag(std::mt19937_64& rng, const Arrangement& a,
                                         int depth) {
  std::vector<std::vector<int>> flags{{}};
  Flat x = WholeSpace(a);
  for (int i = 0; i < depth; ++i) {
    std::vector<int> outside;
    for (int h = 0; h < a.size(); ++h) {
      if (!x.member_set.test(h)) outside.push_back(h);
    }
    if (outside.empty()) throw std::invalid_argument("rank is below the flag depth");
    const int h =
        outside[std::uniform_int_distribution<std::size_t>(0, outside.size() - 1)(rng)];
    x = Meet(a, x, h);
    flags.push_back(x.members);
  }
  return flags;
}

}  // namespace divflag

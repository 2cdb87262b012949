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

// Seeded generators for randomized checks.

#ifndef DIVFLAG_RANDOM_H_
#define DIVFLAG_RANDOM_H_

#include <random>
#include <vector>

#include "divflag/arrangement.h"

namespace divflag {

struct RandomSpec {
  int min_dim = 2;
  int max_dim = 4;
  int min_size = 1;
  int max_size = 10;
  // Covector entries are drawn from [-range, range].
  int range = 2;
  // Require rank = dim.
  bool essential = false;
};

// An arrangement over Q with distinct integer covectors. Sizes may fall
// short of the drawn target when the entry range has too few directions.
Arrangement RandomArrangement(std::mt19937_64& rng, const RandomSpec& spec);

// A random subset of `pool` (an arrangement over any field) of size in
// [min_size, max_size] and full rank.
Arrangement RandomSubarrangement(std::mt19937_64& rng, const Arrangement& pool,
                                 int min_size, int max_size);

// A random chain of flats V = X_0 ⊃ X_1 ⊃ ... ⊃ X_depth, each X_{i+1} the
// intersection of X_i with a hyperplane not containing it. Returns member
// lists; requires rank(A) >= depth.
std::vector<std::vector<int>> RandomFlag(std::mt19937_64& rng, const Arrangement& a,
                                         int depth);

}  // namespace divflag

#endif  // DIVFLAG_RANDOM_H_

// Copyright 2026 The mbprice Authors
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

#pragma once

#include <vector>

#include "mbprice/rational.hpp"

namespace mbprice::fast {

// Enumerates the weak compositions (p_0, ..., p_{r-1}) of `total`, each
// exactly once, carrying the multinomial coefficient total!/(p_0!...p_{r-1}!)
// along. Successive compositions differ by one move of the classical
// "next composition" step, so the coefficient is updated by one exact
// multiply-and-divide instead of recomputed from factorials.
class CompositionIterator {
 public:
  // Starts at (total, 0, ..., 0). Requires total >= 0 and parts >= 1.
  CompositionIterator(int total, int parts);

  const std::vector<int>& parts() const { return parts_; }
  const Integer& multinomial() const { return coefficient_; }

  // Advances to the next composition; false once the last one,
  // (0, ..., 0, total), has been visited.
  bool next();

 private:
  std::vector<int> parts_;
  Integer coefficient_;
};

// C(total + parts - 1, parts - 1).
Integer composition_count(int total, int parts);

Integer binomial(int n, int k);

}  // namespace mbprice::fast

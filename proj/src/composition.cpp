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

#include "mbprice/composition.hpp"

#include <stdexcept>

namespace mbprice::fast {

CompositionIterator::CompositionIterator(int total, int parts) : coefficient_(1) {
  if (total < 0 || parts < 1) throw std::invalid_argument("composition needs total >= 0 and parts >= 1");
  parts_.assign(static_cast<std::size_t>(parts), 0);
  parts_[0] = total;
}

bool CompositionIterator::next() {
  const std::size_t last = parts_.size() - 1;
  std::size_t h = 0;
  while (h < last && parts_[h] == 0) ++h;
  if (h == last) return false;
  // Move: p_h = t -> 0, p_0 -> t - 1, p_{h+1} = s -> s + 1. In both the h = 0
  // and h > 0 cases the coefficient changes by t / (s + 1).
  const int t = parts_[h];
  const int s = parts_[h + 1];
  parts_[h] = 0;
  parts_[0] = t - 1;
  parts_[h + 1] = s + 1;
  coefficient_ *= t;
  mpz_divexact_ui(coefficient_.get_mpz_t(), coefficient_.get_mpz_t(), static_cast<unsigned long>(s + 1));
  return true;
}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

Integer composition_count(int total, int parts) { return binomial(total + parts - 1, parts - 1); }

}  // namespace mbprice::fast

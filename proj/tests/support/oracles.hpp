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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mbprice/lattice.hpp"
#include "mbprice/rational.hpp"

// Reference computations for tests. They deliberately avoid the library's
// lattice helpers and work directly from bit strings and raw sums.
namespace mbprice::testing {

// Bit i (1-based, leftmost first) of the lexicographic index of a word over {0,1}^m.
int bit(std::uint32_t index, int i, int m);

// (-1)^{lambda(i)} evaluated straight from the index; i = 0 gives 1.
int parity(std::uint32_t index, int i, int m);

// Sum over all words of length n of F(word) * prod_j q(word_j).
Rational product_expectation(const std::function<Rational(const std::vector<std::uint32_t>&)>& f,
                             const std::vector<Rational>& q, int n);

// Cox-Ross-Rubinstein call price sum_k C(n,k) p^k (1-p)^(n-k) (S0 U^k D^(n-k) - C)^+.
Rational crr_call(const Rational& spot, const Rational& down, const Rational& up, const Rational& growth,
                  const Rational& strike, int n);

// n! / prod k_i! from factorials.
Integer multinomial(const std::vector<int>& parts);

// Fraction-free rank of a rational matrix given by rows.
std::size_t rank(std::vector<std::vector<Rational>> rows);

}  // namespace mbprice::testing

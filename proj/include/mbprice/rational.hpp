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

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace mbprice {

// Every quantity in the library is an exact rational. GMP handles the
// arithmetic; this header adds parsing, printing and a few helpers.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p/q", integers and decimals with an optional exponent
// ("-0.125", "3e-2"). Decimals are converted exactly, never via double.
// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// Comma separated list of rationals; whitespace around items is ignored.
std::vector<Rational> parse_rational_list(std::string_view text);

// Canonical form: "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

// base^exponent with 0^0 = 1.
Rational pow(const Rational& base, unsigned long exponent);

inline Rational positive_part(const Rational& value) {
  return sgn(value) > 0 ? value : Rational(0);
}

}  // namespace mbprice

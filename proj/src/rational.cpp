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

#include "mbprice/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace mbprice {
namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

bool all_digits(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void malformed(std::string_view text) {
  throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
}

Integer parse_signed_integer(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (!all_digits(text)) malformed(whole);
  Integer value(std::string(text), 10);
  return negative ? Integer(-value) : value;
}

Rational parse_decimal(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    const Integer exp_value = parse_signed_integer(text.substr(e + 1), whole);
    if (!exp_value.fits_slong_p() || abs(exp_value) > 100000) malformed(whole);
    exponent = exp_value.get_si();
    text = text.substr(0, e);
  }
  std::string digits;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) malformed(whole);
    if (!int_part.empty() && !all_digits(int_part)) malformed(whole);
    if (!frac_part.empty() && !all_digits(frac_part)) malformed(whole);
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(text)) malformed(whole);
    digits = std::string(text);
  }
  Rational value{Integer(digits, 10)};
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) {
    value *= scale;
  } else {
    value /= scale;
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = trim(text);
  if (whole.empty()) malformed(text);
  if (auto slash = whole.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_signed_integer(trim(whole.substr(0, slash)), whole);
    const std::string_view den_text = trim(whole.substr(slash + 1));
    const Integer den = parse_signed_integer(den_text, whole);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(whole) + "'");
    Rational value(num, den);
    value.canonicalize();
    return value;
  }
  return parse_decimal(whole, whole);
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> values;
  if (trim(text).empty()) return values;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    values.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational pow(const Rational& base, unsigned long exponent) {
  if (exponent == 0) return Rational(1);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  // Powers of a canonical fraction stay canonical.
  Rational result;
  mpq_set_num(result.get_mpq_t(), num.get_mpz_t());
  mpq_set_den(result.get_mpq_t(), den.get_mpz_t());
  return result;
}

}  // namespace mbprice

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

#include <string>
#include <vector>

#include "mbprice/lattice.hpp"
#include "mbprice/rational.hpp"

// Vectors of the form sum a_i ell_i with a_1..a_m > 0 ("ell-positive"),
// their truncations, and the one-step growth factors of the binomial model.
namespace mbprice::lpos {

using lattice::LatticeElement;
using lattice::LatticeVector;

enum class Basis { ell, ell_prime, ell_dprime };

struct EllCoefficients {
  int m;
  Basis basis;
  std::vector<Rational> coeffs;  // m+1 entries, index 0..m

  // Same vector expressed in another basis; exact and invertible.
  EllCoefficients to(Basis target) const;
  LatticeVector to_vector() const;
};

// Entrywise max(x, 0).
LatticeVector truncate(const LatticeVector& x);

enum class Verdict {
  positive,        // in span{ell_i} with a_1..a_m > 0
  borderline,      // in the span, all a_i >= 0 but some a_i = 0
  not_positive,    // in the span, some a_i < 0
  outside_span,    // reconstruction from <ell_i, x>/2^m leaves a residual
};

struct Positivity {
  Verdict verdict;
  // a_i = <ell_i, x>/2^m for i = 0..m (ell basis).
  EllCoefficients coefficients;

  bool positive() const { return verdict == Verdict::positive; }
};

Positivity classify(const LatticeVector& x);
bool is_ell_positive(const LatticeVector& x);
// Coefficient form: a_1..a_m > 0 after conversion to the ell basis.
bool is_ell_positive(const EllCoefficients& u);

std::string to_string(Verdict verdict);

// u_i(lambda) = U when lambda(i) = 0 and D when lambda(i) = 1, which is
// ((U-D)/2) ell_i + ((U+D)/2) ell_0. Requires 0 < D < U and 1 <= i <= m
// (std::invalid_argument otherwise).
LatticeVector one_step_factor(int i, const Rational& down, const Rational& up, int m);

// x(lambda) <= x(lambda') whenever lambda' <= lambda.
bool is_order_reversing(const LatticeVector& x);

// A constructive element of (U_ell-pos)^+: sum of truncations of
// ell-positive terms. Terms are validated on insertion.
class TruncatedSum {
 public:
  explicit TruncatedSum(int m);

  // Throws std::invalid_argument when the term is not ell-positive.
  void add(EllCoefficients term);

  int m() const { return m_; }
  const std::vector<EllCoefficients>& terms() const { return terms_; }
  LatticeVector evaluate() const;

 private:
  int m_;
  std::vector<EllCoefficients> terms_;
};

}  // namespace mbprice::lpos

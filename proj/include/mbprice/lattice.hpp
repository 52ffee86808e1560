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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mbprice/matrix.hpp"
#include "mbprice/rational.hpp"

// The lattice {0,1}^m of one-step outcomes, the parity vectors on it and the
// permutation action of the symmetric group on asset labels.
namespace mbprice::lattice {

inline constexpr int kMaxAssets = 16;

// Throws std::domain_error unless 1 <= m <= kMaxAssets.
void check_dimension(int m);

// An element of {0,1}^m. Coordinate i (1-based) is stored in bit m-i so the
// raw bits equal the lexicographic column index: lambda(1) is the most
// significant bit, matching labels such as 0101.
class LatticeElement {
 public:
  LatticeElement(int m, std::uint32_t index);

  static LatticeElement zeros(int m) { return {m, 0}; }
  static LatticeElement ones(int m) { return {m, (std::uint32_t{1} << m) - 1}; }
  // Parses a bit string such as "0101"; its length fixes m.
  static LatticeElement from_bits(std::string_view bits);

  int m() const { return m_; }
  std::uint32_t index() const { return bits_; }

  // lambda(i) for 0 <= i <= m+1, with the virtual values lambda(0) = 0 and
  // lambda(m+1) = 1.
  int operator()(int i) const;

  LatticeElement with(int i, int value) const;

  // lambda' <= lambda in the subset order.
  bool is_below(const LatticeElement& other) const;

  std::string to_bits() const;

  friend bool operator==(const LatticeElement&, const LatticeElement&) = default;
  friend auto operator<=>(const LatticeElement&, const LatticeElement&) = default;

 private:
  int m_;
  std::uint32_t bits_;
};

// A vector in R^Lambda: 2^m rationals indexed by lattice elements.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(int m);
  LatticeVector(int m, std::vector<Rational> entries);

  static LatticeVector basis(const LatticeElement& lambda);

  int m() const { return m_; }
  std::size_t size() const { return entries_.size(); }

  Rational& operator[](std::size_t index) { return entries_[index]; }
  const Rational& operator[](std::size_t index) const { return entries_[index]; }
  Rational& operator[](const LatticeElement& lambda) { return entries_[lambda.index()]; }
  const Rational& operator[](const LatticeElement& lambda) const { return entries_[lambda.index()]; }

  const std::vector<Rational>& entries() const { return entries_; }

  LatticeVector& operator+=(const LatticeVector& other);
  LatticeVector& operator-=(const LatticeVector& other);
  LatticeVector& operator*=(const Rational& scale);

  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(const Rational& s, LatticeVector a) { return a *= s; }
  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;

 private:
  int m_ = 0;
  std::vector<Rational> entries_;
};

// <x, y>; throws std::invalid_argument on dimension mismatch.
Rational inner(const LatticeVector& x, const LatticeVector& y);

// A bijection of {1..m}, stored 1-based: images()[i-1] = sigma(i).
class Permutation {
 public:
  // Throws std::invalid_argument unless images is a permutation of 1..m.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int m);
  static Permutation transposition(int m, int i, int j);

  int m() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// Parity vectors: ell_i(lambda) = (-1)^lambda(i); ell_0 is constant one.
LatticeVector ell(int i, int m);
// ell'_i = (ell_i - ell_{i+1})/2 for i < m, ell'_m = (ell_0 + ell_m)/2.
LatticeVector ell_prime(int i, int m);
// ell''_0 = ell_0, ell''_i = (ell_i + ell_0)/2; equals 1 - lambda(i).
LatticeVector ell_dprime(int i, int m);

// Column lambda of the ell' matrix: c(i) = lambda(i+1) - lambda(i).
std::vector<int> c_vector(const LatticeElement& lambda);

// mu_i: zeros in positions 1..i, ones after. mu_0 = 1...1, mu_m = 0...0.
LatticeElement mu(int i, int m);
// nu_i: all ones except a zero in position i; nu_0 = 1...1.
LatticeElement nu(int i, int m);

// sigma_*: the bit in position i moves to position sigma(i).
LatticeElement permute_lattice(const Permutation& sigma, const LatticeElement& lambda);
// (sigma_* x)(lambda) = x(sigma_*^{-1} lambda).
LatticeVector permute_vector(const Permutation& sigma, const LatticeVector& x);
// (sigma_* b)(sigma(i)) = b(i) for b in R^m.
std::vector<Rational> permute_coordinates(const Permutation& sigma, std::span<const Rational> b);

// Matrices with rows ell_0..ell_m, ell'_0..ell'_m and ell''_0..ell''_m,
// columns in lexicographic order.
Matrix ell_matrix(int m);
Matrix ell_prime_matrix(int m);
Matrix ell_dprime_matrix(int m);

// T with ell_prime_matrix = T * ell_matrix, and S with
// ell_dprime_matrix = S * ell_matrix.
Matrix ell_to_ell_prime(int m);
Matrix ell_to_ell_dprime(int m);

}  // namespace mbprice::lattice

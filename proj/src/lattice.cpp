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

#include "mbprice/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace mbprice::lattice {
namespace {

void check_index(int i, int m) {
  if (i < 0 || i > m) {
    throw std::domain_error("index " + std::to_string(i) + " outside 0.." + std::to_string(m));
  }
}

std::size_t lattice_size(int m) { return std::size_t{1} << m; }

}  // namespace

void check_dimension(int m) {
  if (m < 1 || m > kMaxAssets) {
    throw std::domain_error("number of assets m=" + std::to_string(m) + " outside 1.." +
                            std::to_string(kMaxAssets));
  }
}

LatticeElement::LatticeElement(int m, std::uint32_t index) : m_(m), bits_(index) {
  check_dimension(m);
  if (index >= lattice_size(m)) throw std::domain_error("lattice index out of range");
}

LatticeElement LatticeElement::from_bits(std::string_view bits) {
  const int m = static_cast<int>(bits.size());
  check_dimension(m);
  std::uint32_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("lattice element must be a 0/1 string");
    index = (index << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return {m, index};
}

int LatticeElement::operator()(int i) const {
  if (i == 0) return 0;
  if (i == m_ + 1) return 1;
  if (i < 0 || i > m_ + 1) throw std::domain_error("lattice coordinate out of range");
  return static_cast<int>((bits_ >> (m_ - i)) & 1U);
}

LatticeElement LatticeElement::with(int i, int value) const {
  if (i < 1 || i > m_) throw std::domain_error("lattice coordinate out of range");
  const std::uint32_t mask = std::uint32_t{1} << (m_ - i);
  return {m_, value ? (bits_ | mask) : (bits_ & ~mask)};
}

bool LatticeElement::is_below(const LatticeElement& other) const {
  return m_ == other.m_ && (bits_ & ~other.bits_) == 0;
}

std::string LatticeElement::to_bits() const {
  std::string s(static_cast<std::size_t>(m_), '0');
  for (int i = 1; i <= m_; ++i) s[static_cast<std::size_t>(i - 1)] = (*this)(i) ? '1' : '0';
  return s;
}

LatticeVector::LatticeVector(int m) : m_(m) {
  check_dimension(m);
  entries_.resize(lattice_size(m));
}

LatticeVector::LatticeVector(int m, std::vector<Rational> entries) : m_(m), entries_(std::move(entries)) {
  check_dimension(m);
  if (entries_.size() != lattice_size(m)) {
    throw std::invalid_argument("lattice vector needs 2^m = " + std::to_string(lattice_size(m)) +
                                " entries, got " + std::to_string(entries_.size()));
  }
}

LatticeVector LatticeVector::basis(const LatticeElement& lambda) {
  LatticeVector e(lambda.m());
  e[lambda] = 1;
  return e;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& other) {
  if (m_ != other.m_) throw std::invalid_argument("lattice vector dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& other) {
  if (m_ != other.m_) throw std::invalid_argument("lattice vector dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

LatticeVector& LatticeVector::operator*=(const Rational& scale) {
  for (auto& v : entries_) v *= scale;
  return *this;
}

Rational inner(const LatticeVector& x, const LatticeVector& y) {
  if (x.m() != y.m() || x.size() != y.size()) {
    throw std::invalid_argument("inner product dimension mismatch");
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += x[i] * y[i];
  return sum;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int m = static_cast<int>(images_.size());
  std::vector<bool> seen(images_.size(), false);
  for (int image : images_) {
    if (image < 1 || image > m || seen[static_cast<std::size_t>(image - 1)]) {
      throw std::invalid_argument("not a permutation of 1..m");
    }
    seen[static_cast<std::size_t>(image - 1)] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> images(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int m, int i, int j) {
  std::vector<int> images = identity(m).images();
  std::swap(images.at(static_cast<std::size_t>(i - 1)), images.at(static_cast<std::size_t>(j - 1)));
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(inv));
}

LatticeVector ell(int i, int m) {
  check_dimension(m);
  check_index(i, m);
  LatticeVector v(m);
  for (std::uint32_t k = 0; k < v.size(); ++k) {
    const LatticeElement lambda(m, k);
    v[k] = lambda(i) ? -1 : 1;
  }
  return v;
}

LatticeVector ell_prime(int i, int m) {
  check_dimension(m);
  check_index(i, m);
  LatticeVector v = (i < m) ? ell(i, m) - ell(i + 1, m) : ell(0, m) + ell(m, m);
  v *= Rational(1, 2);
  return v;
}

LatticeVector ell_dprime(int i, int m) {
  check_dimension(m);
  check_index(i, m);
  if (i == 0) return ell(0, m);
  LatticeVector v = ell(i, m) + ell(0, m);
  v *= Rational(1, 2);
  return v;
}

std::vector<int> c_vector(const LatticeElement& lambda) {
  const int m = lambda.m();
  std::vector<int> c(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) c[static_cast<std::size_t>(i)] = lambda(i + 1) - lambda(i);
  return c;
}

LatticeElement mu(int i, int m) {
  check_dimension(m);
  check_index(i, m);
  // Ones in positions i+1..m are the low m-i bits.
  return {m, (std::uint32_t{1} << (m - i)) - 1};
}

LatticeElement nu(int i, int m) {
  check_dimension(m);
  check_index(i, m);
  const LatticeElement top = LatticeElement::ones(m);
  return i == 0 ? top : top.with(i, 0);
}

LatticeElement permute_lattice(const Permutation& sigma, const LatticeElement& lambda) {
  const int m = lambda.m();
  if (sigma.m() != m) throw std::invalid_argument("permutation dimension mismatch");
  LatticeElement out = LatticeElement::zeros(m);
  for (int i = 1; i <= m; ++i) {
    if (lambda(i)) out = out.with(sigma(i), 1);
  }
  return out;
}

LatticeVector permute_vector(const Permutation& sigma, const LatticeVector& x) {
  const int m = x.m();
  if (sigma.m() != m) throw std::invalid_argument("permutation dimension mismatch");
  LatticeVector out(m);
  for (std::uint32_t k = 0; k < x.size(); ++k) {
    const LatticeElement lambda(m, k);
    out[permute_lattice(sigma, lambda)] = x[k];
  }
  return out;
}

std::vector<Rational> permute_coordinates(const Permutation& sigma, std::span<const Rational> b) {
  if (static_cast<int>(b.size()) != sigma.m()) throw std::invalid_argument("permutation dimension mismatch");
  std::vector<Rational> out(b.size());
  for (int i = 1; i <= sigma.m(); ++i) {
    out[static_cast<std::size_t>(sigma(i) - 1)] = b[static_cast<std::size_t>(i - 1)];
  }
  return out;
}

namespace {

template <typename RowFn>
Matrix rows_matrix(int m, RowFn row) {
  check_dimension(m);
  Matrix mat(static_cast<std::size_t>(m) + 1, lattice_size(m));
  for (int i = 0; i <= m; ++i) {
    const LatticeVector v = row(i, m);
    for (std::size_t c = 0; c < v.size(); ++c) mat(static_cast<std::size_t>(i), c) = v[c];
  }
  return mat;
}

}  // namespace

Matrix ell_matrix(int m) { return rows_matrix(m, ell); }
Matrix ell_prime_matrix(int m) { return rows_matrix(m, ell_prime); }
Matrix ell_dprime_matrix(int m) { return rows_matrix(m, ell_dprime); }

Matrix ell_to_ell_prime(int m) {
  check_dimension(m);
  const auto size = static_cast<std::size_t>(m) + 1;
  Matrix t(size, size);
  const Rational half(1, 2);
  for (std::size_t i = 0; i + 1 < size; ++i) {
    t(i, i) = half;
    t(i, i + 1) = -half;
  }
  t(size - 1, 0) = half;
  t(size - 1, size - 1) = half;
  return t;
}

Matrix ell_to_ell_dprime(int m) {
  check_dimension(m);
  const auto size = static_cast<std::size_t>(m) + 1;
  Matrix s(size, size);
  s(0, 0) = 1;
  const Rational half(1, 2);
  for (std::size_t i = 1; i < size; ++i) {
    s(i, 0) = half;
    s(i, i) = half;
  }
  return s;
}

}  // namespace mbprice::lattice

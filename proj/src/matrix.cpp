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

#include "mbprice/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace mbprice {

Matrix Matrix::identity(std::size_t size) {
  Matrix id(size, size);
  for (std::size_t i = 0; i < size; ++i) id(i, i) = 1;
  return id;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw std::domain_error("inverse of a non-square matrix");
  const std::size_t n = rows_;
  Matrix work = *this;
  Matrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(work(pivot, col)) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("matrix is singular");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work(pivot, c), work(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const Rational scale = 1 / work(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      work(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(work(r, col)) == 0) continue;
      const Rational factor = work(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        work(r, c) -= factor * work(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

std::size_t Matrix::rank() const {
  Matrix work = *this;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && sgn(work(pivot, col)) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank) {
      for (std::size_t c = 0; c < cols_; ++c) std::swap(work(pivot, c), work(rank, c));
    }
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (sgn(work(r, col)) == 0) continue;
      const Rational factor = work(r, col) / work(rank, col);
      for (std::size_t c = col; c < cols_; ++c) work(r, c) -= factor * work(rank, c);
    }
    ++rank;
  }
  return rank;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  std::vector<Rational> y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) y[r] += (*this)(r, c) * x[c];
  }
  return y;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (sgn(a(r, k)) == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) p(r, c) += a(r, k) * b(k, c);
    }
  }
  return p;
}

}  // namespace mbprice

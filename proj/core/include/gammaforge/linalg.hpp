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

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gammaforge {

using Integer = mpz_class;
// mpq_class keeps numerator/denominator coprime with a positive denominator
// as long as every mutation goes through its operators.
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> entries() const { return data_; }
  std::span<const T> row_view(std::size_t i) const {
    return std::span<const T>(data_).subspan(i * cols_, cols_);
  }
  std::vector<T> row(std::size_t i) const;
  std::vector<std::vector<T>> row_list() const;

  bool is_zero() const;
  bool row_is_zero(std::size_t i) const;
  Matrix transpose() const;
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  Matrix drop_zero_rows() const;
  // Appends zero rows until the matrix has `rows` rows.
  Matrix pad_rows(std::size_t rows) const;
  Matrix stack(const Matrix& below) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);

RatMatrix to_rational(const IntMatrix& m);

// Largest absolute entry; zero for an empty matrix.
Integer height(const IntMatrix& m);
Integer height(const IntVector& v);

struct HermiteForm {
  IntMatrix h;  // row-style Hermite normal form of the input
  IntMatrix u;  // unimodular, h == u * input
  std::size_t rank = 0;
};

// Row-style HNF: upper staircase, positive pivots, entries above a pivot
// reduced into [0, pivot), zero rows last.
HermiteForm hnf(const IntMatrix& m);

struct SmithForm {
  IntMatrix d;  // diagonal, d_1 | d_2 | ... , nonnegative
  IntMatrix left;
  IntMatrix right;  // d == left * input * right
  std::size_t rank = 0;
};

SmithForm snf(const IntMatrix& m);

// Primitive Z-basis of {v in Z^cols : m v = 0}, returned in HNF.
std::vector<IntVector> kernel_basis(const IntMatrix& m);

// Determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);
bool is_unimodular(const IntMatrix& m);

// Rank over Q by Gaussian elimination.
std::size_t rational_rank(const RatMatrix& m);
std::size_t rational_rank(const IntMatrix& m);

// Reduced row echelon form over Q with zero rows removed.
RatMatrix rref(const RatMatrix& m);
RatMatrix rref(const IntMatrix& m);

// Basis (as rows) of the right null space over Q.
std::vector<RatVector> rational_kernel(const RatMatrix& m);

// HNF basis of rowspace_Q(m) ∩ Z^cols with zero rows removed: one canonical
// integer matrix per rational row space.
IntMatrix saturated_row_basis(const IntMatrix& m);

bool same_rational_row_space(const IntMatrix& a, const IntMatrix& b);

// Scales a rational vector to a primitive integer vector with the same
// direction (first nonzero entry keeps its sign).
IntVector primitive_integer_vector(const RatVector& v);

}  // namespace gammaforge

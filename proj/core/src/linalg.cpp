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

#include "gammaforge/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <utility>

namespace gammaforge {

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    assert(r.size() == cols_);
    for (long v : r) data_.emplace_back(v);
  }
}

template <class T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

template <class T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    assert(rows[i].size() == cols);
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

template <class T>
std::vector<T> Matrix<T>::row(std::size_t i) const {
  auto v = row_view(i);
  return {v.begin(), v.end()};
}

template <class T>
std::vector<std::vector<T>> Matrix<T>::row_list() const {
  std::vector<std::vector<T>> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

template <class T>
bool Matrix<T>::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const T& v) { return v == 0; });
}

template <class T>
bool Matrix<T>::row_is_zero(std::size_t i) const {
  auto r = row_view(i);
  return std::all_of(r.begin(), r.end(), [](const T& v) { return v == 0; });
}

template <class T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

template <class T>
void Matrix<T>::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

template <class T>
void Matrix<T>::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

template <class T>
Matrix<T> Matrix<T>::drop_zero_rows() const {
  std::vector<std::vector<T>> kept;
  for (std::size_t i = 0; i < rows_; ++i)
    if (!row_is_zero(i)) kept.push_back(row(i));
  return from_rows(kept, cols_);
}

template <class T>
Matrix<T> Matrix<T>::pad_rows(std::size_t rows) const {
  assert(rows >= rows_);
  Matrix out(rows, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  return out;
}

template <class T>
Matrix<T> Matrix<T>::stack(const Matrix& below) const {
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  assert(below.cols_ == cols_);
  Matrix out(rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + data_.size());
  return out;
}

template <class T>
std::string Matrix<T>::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

template class Matrix<Integer>;
template class Matrix<Rational>;

namespace {

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  assert(a.cols() == b.rows());
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

// row[dst] = a*row[dst] + b*row[src], applied simultaneously with the partner
// update so that the 2x2 block [[a,b],[c,d]] acts on (row_i, row_j).
void combine_rows(IntMatrix& m, std::size_t i, std::size_t j, const Integer& a, const Integer& b,
                  const Integer& c, const Integer& d) {
  for (std::size_t k = 0; k < m.cols(); ++k) {
    Integer ri = m(i, k), rj = m(j, k);
    m(i, k) = a * ri + b * rj;
    m(j, k) = c * ri + d * rj;
  }
}

void combine_cols(IntMatrix& m, std::size_t i, std::size_t j, const Integer& a, const Integer& b,
                  const Integer& c, const Integer& d) {
  for (std::size_t k = 0; k < m.rows(); ++k) {
    Integer ci = m(k, i), cj = m(k, j);
    m(k, i) = a * ci + b * cj;
    m(k, j) = c * ci + d * cj;
  }
}

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  if (f == 0) return;
  for (std::size_t k = 0; k < m.cols(); ++k) m(dst, k) += f * m(src, k);
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  if (f == 0) return;
  for (std::size_t k = 0; k < m.rows(); ++k) m(k, dst) += f * m(k, src);
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = -m(i, k);
}

// Extended gcd: s*a + t*b == g with g >= 0.
void gcdext(Integer& g, Integer& s, Integer& t, const Integer& a, const Integer& b) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return multiply(a, b); }
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) { return multiply(a, b); }

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  assert(a.cols() == v.size());
  IntVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

Integer height(const IntMatrix& m) {
  Integer h = 0;
  for (const auto& e : m.entries()) h = std::max<Integer>(h, abs(e));
  return h;
}

Integer height(const IntVector& v) {
  Integer h = 0;
  for (const auto& e : v) h = std::max<Integer>(h, abs(e));
  return h;
}

HermiteForm hnf(const IntMatrix& m) {
  HermiteForm out{m, IntMatrix::identity(m.rows()), 0};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  std::size_t r = 0;
  Integer g, s, t;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (std::size_t i = r + 1; i < h.rows(); ++i) {
      if (h(i, c) == 0) continue;
      Integer a = h(r, c), b = h(i, c);
      gcdext(g, s, t, a, b);
      Integer ca = -b / g, cb = a / g;
      combine_rows(h, r, i, s, t, ca, cb);
      combine_rows(u, r, i, s, t, ca, cb);
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      add_row_multiple(h, i, r, -q);
      add_row_multiple(u, i, r, -q);
    }
    ++r;
  }
  out.rank = r;
  return out;
}

SmithForm snf(const IntMatrix& m) {
  SmithForm out{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), 0};
  IntMatrix& d = out.d;
  IntMatrix& left = out.left;
  IntMatrix& right = out.right;
  const std::size_t rows = d.rows(), cols = d.cols();
  Integer g, s, t;

  std::size_t k = 0;
  for (; k < std::min(rows, cols); ++k) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    bool found = false;
    std::size_t pi = k, pj = k;
    Integer best;
    for (std::size_t i = k; i < rows; ++i)
      for (std::size_t j = k; j < cols; ++j)
        if (d(i, j) != 0 && (!found || abs(d(i, j)) < best)) {
          found = true;
          best = abs(d(i, j));
          pi = i;
          pj = j;
        }
    if (!found) break;
    d.swap_rows(k, pi);
    left.swap_rows(k, pi);
    d.swap_cols(k, pj);
    right.swap_cols(k, pj);

    for (;;) {
      bool changed = false;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (d(i, k) == 0) continue;
        changed = true;
        if (d(i, k) % d(k, k) == 0) {
          const Integer q = d(i, k) / d(k, k);
          add_row_multiple(d, i, k, -q);
          add_row_multiple(left, i, k, -q);
          continue;
        }
        Integer a = d(k, k), b = d(i, k);
        gcdext(g, s, t, a, b);
        Integer ca = -b / g, cb = a / g;
        combine_rows(d, k, i, s, t, ca, cb);
        combine_rows(left, k, i, s, t, ca, cb);
        changed = true;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (d(k, j) == 0) continue;
        changed = true;
        if (d(k, j) % d(k, k) == 0) {
          const Integer q = d(k, j) / d(k, k);
          add_col_multiple(d, j, k, -q);
          add_col_multiple(right, j, k, -q);
          continue;
        }
        Integer a = d(k, k), b = d(k, j);
        gcdext(g, s, t, a, b);
        Integer ca = -b / g, cb = a / g;
        combine_cols(d, k, j, s, t, ca, cb);
        combine_cols(right, k, j, s, t, ca, cb);
        changed = true;
      }
      if (changed) continue;
      // Divisibility: fold any offending row into the pivot row and redo.
      bool divisible = true;
      for (std::size_t i = k + 1; i < rows && divisible; ++i)
        for (std::size_t j = k + 1; j < cols; ++j)
          if (d(i, j) % d(k, k) != 0) {
            add_row_multiple(d, k, i, 1);
            add_row_multiple(left, k, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (d(k, k) < 0) {
      negate_row(d, k);
      negate_row(left, k);
    }
  }
  out.rank = k;
  return out;
}

std::vector<IntVector> kernel_basis(const IntMatrix& m) {
  // u * m^T = h; rows of u facing zero rows of h span the integer kernel, and
  // being rows of a unimodular matrix they form a primitive basis.
  const auto form = hnf(m.transpose());
  std::vector<IntVector> basis;
  for (std::size_t i = form.rank; i < form.u.rows(); ++i) basis.push_back(form.u.row(i));
  if (basis.empty()) return basis;
  const auto canon = hnf(IntMatrix::from_rows(basis, m.cols()));
  basis.clear();
  for (std::size_t i = 0; i < canon.rank; ++i) basis.push_back(canon.h.row(i));
  return basis;
}

Integer determinant(const IntMatrix& m) {
  assert(m.rows() == m.cols());
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& m) {
  return m.rows() == m.cols() && abs(determinant(m)) == 1;
}

RatMatrix rref(const RatMatrix& input) {
  RatMatrix a = input;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return a.drop_zero_rows();
}

RatMatrix rref(const IntMatrix& m) { return rref(to_rational(m)); }

std::size_t rational_rank(const RatMatrix& m) { return rref(m).rows(); }
std::size_t rational_rank(const IntMatrix& m) { return rref(to_rational(m)).rows(); }

std::vector<RatVector> rational_kernel(const RatMatrix& m) {
  const RatMatrix e = rref(m);
  std::vector<std::size_t> pivots;
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t i = 0; i < e.rows(); ++i) {
    std::size_t c = 0;
    while (e(i, c) == 0) ++c;
    pivots.push_back(c);
    is_pivot[c] = true;
  }
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -e(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

IntVector primitive_integer_vector(const RatVector& v) {
  Integer l = 1;
  for (const auto& q : v) l = lcm(l, Integer(q.get_den()));
  IntVector out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational s = v[i] * l;
    out[i] = s.get_num();
    g = gcd(g, out[i]);
  }
  if (g > 1)
    for (auto& e : out) e /= g;
  return out;
}

IntMatrix saturated_row_basis(const IntMatrix& m) {
  const std::size_t n = m.cols();
  const std::size_t rk = rational_rank(m);
  if (rk == 0) return IntMatrix(0, n);
  if (rk == n) return IntMatrix::identity(n);
  // rowspace(m) is the orthogonal complement of ker(m); its integer points
  // are the integer kernel of a matrix whose rows span ker(m).
  std::vector<IntVector> orth;
  for (const auto& v : rational_kernel(to_rational(m))) orth.push_back(primitive_integer_vector(v));
  const auto basis = kernel_basis(IntMatrix::from_rows(orth, n));
  return IntMatrix::from_rows(basis, n);
}

bool same_rational_row_space(const IntMatrix& a, const IntMatrix& b) {
  return a.cols() == b.cols() && rref(a) == rref(b);
}

}  // namespace gammaforge

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

#include <random>

#include "doctest.h"
#include "gammaforge/linalg.hpp"

using namespace gammaforge;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

IntMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> factor(-2, 2);
  for (int step = 0; step < 8; ++step) {
    std::size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    const Integer f = factor(rng);
    for (std::size_t k = 0; k < n; ++k) u(a, k) += f * u(b, k);
    if (step % 3 == 0) u.swap_rows(a, b);
  }
  return u;
}

bool is_row_hnf(const IntMatrix& h) {
  std::size_t last_pivot = 0;
  bool seen_zero = false;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t c = 0;
    while (c < h.cols() && h(i, c) == 0) ++c;
    if (c == h.cols()) {
      seen_zero = true;
      continue;
    }
    if (seen_zero) return false;
    if (i > 0 && c <= last_pivot) return false;
    if (h(i, c) <= 0) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (h(k, c) < 0 || h(k, c) >= h(i, c)) return false;
    for (std::size_t k = i + 1; k < h.rows(); ++k)
      if (h(k, c) != 0) return false;
    last_pivot = c;
  }
  return true;
}

}  // namespace

TEST_CASE("hnf of identity is identity") {
  const auto f = hnf(IntMatrix::identity(2));
  CHECK(f.h == IntMatrix::identity(2));
  CHECK(f.u == IntMatrix::identity(2));
  CHECK(f.rank == 2);
}

TEST_CASE("hnf of [[2,4],[1,1]]") {
  const IntMatrix m{{2, 4}, {1, 1}};
  const auto f = hnf(m);
  // Oracle: direct multiplication and determinant of the transform.
  CHECK(f.u * m == f.h);
  CHECK(is_unimodular(f.u));
  CHECK(f.h == IntMatrix{{1, 1}, {0, 2}});
}

TEST_CASE("hnf of zero matrix") {
  const auto f = hnf(IntMatrix(2, 2));
  CHECK(f.h.is_zero());
  CHECK(f.u == IntMatrix::identity(2));
  CHECK(f.rank == 0);
}

TEST_CASE("snf examples") {
  {
    const auto s = snf(IntMatrix::identity(3));
    CHECK(s.d == IntMatrix::identity(3));
    CHECK(s.left == IntMatrix::identity(3));
    CHECK(s.right == IntMatrix::identity(3));
  }
  {
    const IntMatrix m{{2, 4}, {1, 1}};
    const auto s = snf(m);
    CHECK(s.left * m * s.right == s.d);
    CHECK(is_unimodular(s.left));
    CHECK(is_unimodular(s.right));
    // |det| = 2 and the entry gcd is 1, so the invariant factors are 1, 2.
    CHECK(s.d == IntMatrix{{1, 0}, {0, 2}});
  }
  {
    const IntMatrix m{{2, 0}, {0, 2}};
    CHECK(snf(m).d == m);
  }
}

TEST_CASE("kernel basis examples") {
  {
    const auto k = kernel_basis(IntMatrix{{1, -1}});
    REQUIRE(k.size() == 1);
    CHECK(k[0] == IntVector{1, 1});
  }
  CHECK(kernel_basis(IntMatrix::identity(3)).empty());
  {
    const auto k = kernel_basis(IntMatrix{{2, 4}});
    REQUIRE(k.size() == 1);
    CHECK(k[0] == IntVector{2, -1});
    CHECK(2 * k[0][0] + 4 * k[0][1] == 0);
    CHECK(gcd(k[0][0], k[0][1]) == 1);
  }
}

TEST_CASE("kernel basis is primitive and annihilated") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const auto m = random_matrix(rng, 1 + trial % 3, 2 + trial % 4, 4);
    const auto k = kernel_basis(m);
    CHECK(k.size() + rational_rank(m) == m.cols());
    for (const auto& v : k) CHECK(height(m * v) == 0);
    if (!k.empty()) {
      // Primitive: the kernel lattice basis has trivial Smith invariants.
      const auto s = snf(IntMatrix::from_rows(k, m.cols()));
      for (std::size_t i = 0; i < s.rank; ++i) CHECK(s.d(i, i) == 1);
    }
  }
}

TEST_CASE("property: hnf shape, transform and idempotence") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_matrix(rng, 1 + trial % 4, 1 + (trial / 4) % 5, 6);
    const auto f = hnf(m);
    CHECK(f.u * m == f.h);
    CHECK(is_unimodular(f.u));
    CHECK(is_row_hnf(f.h));
    CHECK(hnf(f.h).h == f.h);
  }
}

TEST_CASE("property: unimodular left factors keep the HNF and rational row space") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t rows = 1 + trial % 4, cols = 2 + trial % 3;
    const auto m = random_matrix(rng, rows, cols, 5);
    const auto u = random_unimodular(rng, rows);
    CHECK(hnf(u * m).h == hnf(m).h);
    CHECK(saturated_row_basis(u * m) == saturated_row_basis(m));
    CHECK(same_rational_row_space(u * m, m));
  }
}

TEST_CASE("property: distinct rational row spaces give distinct canonical bases") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const auto a = random_matrix(rng, 2, 3, 3);
    const auto b = random_matrix(rng, 2, 3, 3);
    CHECK((saturated_row_basis(a) == saturated_row_basis(b)) == (rref(a) == rref(b)));
  }
}

TEST_CASE("property: rank via Smith form equals rank via rational elimination") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    auto m = random_matrix(rng, 1 + trial % 5, 1 + (trial / 5) % 5, 3);
    if (trial % 3 == 0 && m.rows() > 1)  // force dependencies
      for (std::size_t j = 0; j < m.cols(); ++j) m(m.rows() - 1, j) = 2 * m(0, j) - m(1 % m.rows(), j);
    const auto s = snf(m);
    CHECK(s.rank == rational_rank(m));
    CHECK(s.left * m * s.right == s.d);
    for (std::size_t i = 0; i + 1 < s.rank; ++i) CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
  }
}

TEST_CASE("saturated row basis of non-saturated lattice") {
  // Row space of (2, 2) as a rational space is spanned by (1, 1).
  CHECK(saturated_row_basis(IntMatrix{{2, 2}}) == IntMatrix{{1, 1}});
  CHECK(saturated_row_basis(IntMatrix{{2, 4}, {1, 1}}) == IntMatrix::identity(2));
  CHECK(saturated_row_basis(IntMatrix(2, 3)).rows() == 0);
}

TEST_CASE("determinant by Bareiss") {
  CHECK(determinant(IntMatrix{{2, 4}, {1, 1}}) == -2);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}) == -3);
}

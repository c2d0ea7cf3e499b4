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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gammaforge/poly.hpp"

namespace gammaforge {

// Product of graded-reverse-lex blocks. Each block lists variable indices from
// largest to smallest; an earlier block dominates every later one. A block of
// one variable degenerates to lex on that variable.
class MonomialOrder {
 public:
  MonomialOrder() = default;

  // Single grevlex block, variable 0 largest.
  static MonomialOrder grevlex(std::size_t nvars);
  static MonomialOrder grevlex(std::vector<std::size_t> largest_first);
  static MonomialOrder lex(const std::vector<std::size_t>& largest_first);
  static MonomialOrder blocks(std::vector<std::vector<std::size_t>> blocks);
  // Elimination order: `eliminated` block (grevlex) above `kept` block.
  static MonomialOrder elimination(std::size_t nvars, const std::vector<std::size_t>& eliminated);

  std::size_t nvars() const { return nvars_; }
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  const std::vector<std::vector<std::size_t>>& block_list() const { return blocks_; }
  std::string descriptor() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  std::vector<std::vector<std::size_t>> blocks_;
  std::size_t nvars_ = 0;
};

// Caps that turn an out-of-scale computation into a ResourceLimit error.
struct Budget {
  std::size_t max_basis = 5000;
  std::uint32_t max_degree = 64;
  std::size_t max_pairs = 2'000'000;

  // Process-wide default used when no budget is passed explicitly.
  static Budget defaults();
  static void set_defaults(const Budget& b);
};

Monomial leading_monomial(const Poly& p, const MonomialOrder& order);
Rational leading_coefficient(const Poly& p, const MonomialOrder& order);
// Terms of p, largest first under `order`.
std::vector<Term> sorted_terms(const Poly& p, const MonomialOrder& order);

// Integer multiple with content 1 and positive leading coefficient.
Poly primitive_part(const Poly& p, const MonomialOrder& order);

Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order);

// Reduced Groebner basis, monic, sorted by ascending leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(MonomialOrder order, std::size_t nvars, std::vector<Poly> reduced);

  const MonomialOrder& order() const { return order_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Poly>& elements() const { return elements_; }
  const std::vector<Monomial>& leading_monomials() const { return leads_; }

  bool is_unit() const;
  bool is_zero_ideal() const { return elements_.empty(); }
  Poly normal_form(const Poly& p) const;
  bool contains(const Poly& p) const { return normal_form(p).is_zero(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.elements_ == b.elements_;
  }

 private:
  MonomialOrder order_;
  std::size_t nvars_ = 0;
  std::vector<Poly> elements_;
  std::vector<Monomial> leads_;
};

GroebnerBasis groebner(std::span<const Poly> generators, std::size_t nvars, const MonomialOrder& order,
                       const Budget& budget = Budget::defaults());

// Reduces p modulo the given list (not necessarily a Groebner basis).
Poly reduce(const Poly& p, std::span<const Poly> divisors, const MonomialOrder& order);

// Human-readable form, largest term first, integer coefficients printed as
// given (callers normalize with primitive_part first when they want the
// parseable form).
std::string format_poly(const Poly& p, const std::vector<std::string>& names, const MonomialOrder& order);

}  // namespace gammaforge

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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gammaforge/linalg.hpp"

namespace gammaforge {

// Exponent vector over a fixed ambient variable count.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const { return exps_; }

  std::uint32_t degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  // Monomials with disjoint support.
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  // Requires divides(other); returns other / *this.
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  // Lexicographic comparison of exponent vectors; storage order only.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

struct Term {
  Monomial mono;
  Rational coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse polynomial over Q in a fixed number of variables. Terms are stored
// in ascending exponent-lex order with no zero coefficients; monomial orders
// matter only to the Groebner engine and to printing.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t index);
  static Poly from_term(Monomial m, const Rational& c);
  // Builds from arbitrary (possibly repeated, possibly zero) terms.
  static Poly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<Rational> constant_value() const;
  std::uint32_t total_degree() const;
  // Degree in the variables of `vars` only.
  std::uint32_t degree_in(std::span<const std::size_t> vars) const;

  std::vector<bool> support() const;
  bool involves(std::size_t var) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly pow(std::uint32_t e) const;
  Poly mul_term(const Monomial& m, const Rational& c) const;

  friend bool operator==(const Poly&, const Poly&) = default;

  // Variable i of this polynomial becomes variable index_map[i] of a ring
  // with `nvars` variables.
  Poly remap(std::size_t nvars, std::span<const std::size_t> index_map) const;
  // Substitutes the given values for the variables that have one.
  Poly specialize(const std::vector<std::optional<Rational>>& values) const;
  Rational evaluate(std::span<const Rational> point) const;
  Poly derivative(std::size_t var) const;

  // Positive rational multiple with integer coefficients of content 1.
  Poly scaled_to_integers() const;

 private:
  void normalize();

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

// Polynomial string grammar: integer literals, identifiers
// [a-zA-Z][a-zA-Z0-9_]* drawn from `vars`, binary + - *, unary -, ^ with a
// non-negative integer exponent, parentheses. Errors carry the 1-based column.
Poly parse_poly(std::string_view text, const std::vector<std::string>& vars);

}  // namespace gammaforge

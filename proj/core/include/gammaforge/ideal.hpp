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

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gammaforge/groebner.hpp"
#include "gammaforge/poly.hpp"

namespace gammaforge {

// Polynomial ideal over Q in named variables. Immutable; Groebner bases are
// computed on demand and cached per monomial order (copies share the cache).
class Ideal {
 public:
  Ideal() : cache_(std::make_shared<Cache>()) {}
  Ideal(std::vector<std::string> vars, std::vector<Poly> generators);

  static Ideal parse(std::vector<std::string> vars, const std::vector<std::string>& generators);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<Poly>& generators() const { return gens_; }
  std::optional<std::size_t> index_of(const std::string& var) const;

  // Default order: grevlex with the first listed variable largest.
  const GroebnerBasis& groebner() const;
  const GroebnerBasis& groebner(const MonomialOrder& order) const;

  bool contains(const Poly& p) const { return groebner().contains(p); }
  bool is_unit() const { return groebner().is_unit(); }
  bool is_zero() const { return groebner().is_zero_ideal(); }

  Ideal with_generators(std::span<const Poly> extra) const;

  // Reduced grevlex basis as primitive integer polynomials, printed.
  std::vector<std::string> basis_strings() const;
  std::vector<std::string> basis_strings(const MonomialOrder& order) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::shared_ptr<const GroebnerBasis>> bases;
  };

  std::vector<std::string> vars_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

bool same_ideal(const Ideal& a, const Ideal& b);
// a ⊆ b; both over the same variable list.
bool contained_in(const Ideal& a, const Ideal& b);

// Dimension of V(I) over the algebraic closure: size of a largest variable set
// independent modulo the leading-term ideal of a grevlex basis.
std::size_t ideal_dim(const Ideal& ideal);

// Largest variable subset (indices) independent modulo the monomial ideal
// generated by `leads`; ties resolved toward lexicographically smallest.
std::vector<std::size_t> max_independent_set(std::span<const Monomial> leads, std::size_t nvars);

// I ∩ Q[keep]; the result lives in the ring of `keep` variables, listed in the
// given order.
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& keep);

// I : f^∞ via an auxiliary variable t with t*f - 1.
Ideal saturate(const Ideal& ideal, const Poly& f);

// Sum of ideals over a common ambient ring.
Ideal ideal_sum(const Ideal& a, const Ideal& b);

// Re-expresses the ideal in a larger or permuted ambient; every current
// variable must appear in `vars`.
Ideal embed(const Ideal& ideal, const std::vector<std::string>& vars);

// Renames variables; names not in `mapping` are kept.
Ideal rename(const Ideal& ideal, const std::map<std::string, std::string>& mapping);

// Heuristic reducibility probe: returns linear forms p, q (small integer
// coefficients) with p, q ∉ I but p*q ∈ I, if one is found among a bounded
// candidate set. Absence of a hint proves nothing.
std::optional<std::pair<Poly, Poly>> reducibility_hint(const Ideal& ideal, std::span<const std::size_t> vars);

}  // namespace gammaforge

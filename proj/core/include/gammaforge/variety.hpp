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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gammaforge/ideal.hpp"
#include "gammaforge/linalg.hpp"

namespace gammaforge {

struct BaseConstant {
  std::string name;
  std::string minimal_polynomial;  // in the variable `name`
  friend bool operator==(const BaseConstant&, const BaseConstant&) = default;
};

// A declared point of Γ(Fbase). Coordinates are polynomial expressions in the
// base constants. `kernel` marks a deliberate kernel generator (x = 0 or
// y = 1).
struct GammaElement {
  std::string x;
  std::string y;
  bool kernel = false;
  friend bool operator==(const GammaElement&, const GammaElement&) = default;
};

// Finitely presented base: algebraic constants over Q and declared Γ-points.
// Torsion (0, ζ) is in Γ implicitly.
class BasePresentation {
 public:
  BasePresentation() : BasePresentation(std::vector<BaseConstant>{}, {}) {}
  BasePresentation(std::vector<BaseConstant> constants, std::vector<GammaElement> gamma_elements);

  const std::vector<BaseConstant>& constants() const { return constants_; }
  const std::vector<GammaElement>& gamma_elements() const { return gamma_; }
  std::vector<std::string> constant_names() const;

  // Ideal of the constants in Q[constant names].
  const Ideal& base_ideal() const { return ideal_; }
  // Standard monomials of the base ideal: a Q-basis of the constant field.
  const std::vector<Poly>& field_basis() const { return field_basis_; }
  // Declared points as polynomials over the constant ring.
  const std::vector<std::pair<Poly, Poly>>& gamma_points() const { return points_; }

  // Whether (cx, cy), given over the constant ring, lies in the subgroup
  // generated by torsion and the declared points with coefficients bounded
  // by `height`. A missing coordinate matches anything.
  bool in_gamma(const std::optional<Poly>& cx, const std::optional<Poly>& cy, int height) const;
  bool is_root_of_unity(const Poly& c) const;

  friend bool operator==(const BasePresentation& a, const BasePresentation& b) {
    return a.constants_ == b.constants_ && a.gamma_ == b.gamma_;
  }

 private:
  std::vector<BaseConstant> constants_;
  std::vector<GammaElement> gamma_;
  Ideal ideal_;
  std::vector<Poly> field_basis_;
  std::vector<std::pair<Poly, Poly>> points_;
};

// Grevlex with y_n > ... > y_1 > x_n > ... > x_1 > constants: the order of
// printed and catalogued loci.
MonomialOrder canonical_order(std::size_t n, std::size_t constants);

std::string x_name(std::size_t j);  // 0-based block index -> "x1", ...
std::string y_name(std::size_t j);

// Constructible subset of G^n = (Ga × Gm)^n over the base, in variables
// x1..xn, y1..yn followed by the base constants. The stored ideal contains
// the base ideal and is saturated by y1*...*yn.
class VarietyPresentation {
 public:
  VarietyPresentation() = default;

  // Generators are over ambient_vars(base, n); saturation is applied.
  static VarietyPresentation from_generators(std::shared_ptr<const BasePresentation> base, std::size_t n,
                                             std::vector<Poly> generators, bool irreducible_asserted);
  static VarietyPresentation parse(std::shared_ptr<const BasePresentation> base, std::size_t n,
                                   const std::vector<std::string>& generators, bool irreducible_asserted);
  // Caller guarantees the ideal already contains the base ideal and is
  // saturated.
  static VarietyPresentation from_saturated(std::shared_ptr<const BasePresentation> base, std::size_t n,
                                            Ideal ideal, bool irreducible_asserted);

  static std::vector<std::string> ambient_vars(const BasePresentation& base, std::size_t n);

  std::size_t n() const { return n_; }
  const Ideal& ideal() const { return ideal_; }
  const BasePresentation& base() const { return *base_; }
  const std::shared_ptr<const BasePresentation>& base_ptr() const { return base_; }
  bool saturated() const { return true; }
  bool irreducible_asserted() const { return irreducible_; }
  bool is_empty() const { return ideal_.is_unit(); }

  std::size_t nvars() const { return ideal_.nvars(); }
  std::size_t x_index(std::size_t j) const { return j; }
  std::size_t y_index(std::size_t j) const { return n_ + j; }
  std::size_t constant_index(std::size_t k) const { return 2 * n_ + k; }

  // Constant-ring polynomial re-expressed in this ambient ring.
  Poly lift_constant(const Poly& c) const;
  // Ambient polynomial that involves only constants, pushed to the constant
  // ring.
  Poly lower_constant(const Poly& c) const;

  // Reduced grevlex basis, primitive integer form, as strings (constants'
  // minimal polynomials included).
  std::vector<std::string> basis_strings() const;
  // Canonical generator strings excluding the base ideal's own elements.
  std::vector<std::string> locus_strings() const;

 private:
  std::size_t n_ = 0;
  std::shared_ptr<const BasePresentation> base_;
  Ideal ideal_;
  bool irreducible_ = false;
};

// Dimension over the base: ideal_dim of the saturated ideal minus the
// dimension of the constants. Throws EmptyVariety on the unit ideal.
std::size_t variety_dim(const VarietyPresentation& v);

// Zariski closure of the image of v under the O-module map given by the rows
// of m (m.cols() == v.n()); the result lives in G^{m.rows()}.
VarietyPresentation apply_matrix(const IntMatrix& m, const VarietyPresentation& v);

// Projection onto the listed blocks, in the given order.
VarietyPresentation project_blocks(const VarietyPresentation& v, const std::vector<std::size_t>& blocks);

struct AdditiveWitness {
  IntVector r;
  std::string c;  // base element, printed over the constants
};

struct MultiplicativeWitness {
  IntVector r;
  std::string c;
};

struct FreenessReport {
  bool g1_free = true;
  std::optional<AdditiveWitness> g1_witness;
  bool g2_free = true;
  std::optional<MultiplicativeWitness> g2_witness;
  int g2_search_bound = 0;
};

// Base element c with Σ r_j x_j ≡ c on v, if any.
std::optional<Poly> additive_constant(const VarietyPresentation& v, const IntVector& r);
// Base element c with ∏ y_j^{r_j} ≡ c on v, if any.
std::optional<Poly> multiplicative_constant(const VarietyPresentation& v, const IntVector& r);

// Integer lattice of all r with Σ r_j x_j constant on v, as HNF rows; exact.
IntMatrix additive_relation_lattice(const VarietyPresentation& v);

// Primitive vectors with ‖r‖∞ <= bound and first nonzero entry positive,
// ordered by height, then lexicographically.
std::vector<IntVector> primitive_vectors(std::size_t n, int bound);

FreenessReport freeness(const VarietyPresentation& v, int g2_bound);

std::string format_constant(const BasePresentation& base, const Poly& c);

}  // namespace gammaforge

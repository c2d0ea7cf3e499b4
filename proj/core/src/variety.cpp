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

#include "gammaforge/variety.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>

#include "gammaforge/errors.hpp"

namespace gammaforge {

namespace {

constexpr int kMaxRootOfUnityOrder = 12;

// Coefficients a with target == Σ a_k columns[k], if solvable.
std::optional<RatVector> solve_in_span(const std::vector<Poly>& columns, const Poly& target) {
  std::map<Monomial, std::size_t> rows;
  auto index = [&](const Monomial& m) {
    auto it = rows.find(m);
    if (it == rows.end()) it = rows.emplace(m, rows.size()).first;
    return it->second;
  };
  for (const auto& c : columns)
    for (const auto& t : c.terms()) index(t.mono);
  for (const auto& t : target.terms()) index(t.mono);
  const std::size_t k = columns.size();
  RatMatrix aug(rows.size(), k + 1);
  for (std::size_t j = 0; j < k; ++j)
    for (const auto& t : columns[j].terms()) aug(rows[t.mono], j) = t.coeff;
  for (const auto& t : target.terms()) aug(rows[t.mono], k) = t.coeff;
  const RatMatrix e = rref(aug);
  RatVector sol(k);
  for (std::size_t i = 0; i < e.rows(); ++i) {
    std::size_t c = 0;
    while (e(i, c) == 0) ++c;
    if (c == k) return std::nullopt;  // pivot in the augmented column
    sol[c] = e(i, k);
  }
  return sol;
}

Poly combine(const std::vector<Poly>& basis, const RatVector& a, std::size_t nvars) {
  Poly out(nvars);
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (a[k] != 0) out += basis[k] * a[k];
  return out;
}

}  // namespace

BasePresentation::BasePresentation(std::vector<BaseConstant> constants, std::vector<GammaElement> gamma_elements)
    : constants_(std::move(constants)), gamma_(std::move(gamma_elements)) {
  const auto names = constant_names();
  std::vector<Poly> gens;
  for (const auto& c : constants_) {
    auto p = parse_poly(c.minimal_polynomial, names);
    if (p.is_zero() || p.is_constant())
      throw ValidationError("base", "minimal polynomial of '" + c.name + "' must be a nonconstant polynomial");
    gens.push_back(std::move(p));
  }
  ideal_ = Ideal(names, gens);
  if (ideal_.is_unit()) throw ValidationError("base", "base constants are inconsistent (unit ideal)");
  if (!names.empty() && ideal_dim(ideal_) != 0)
    throw ValidationError("base", "every base constant needs a minimal polynomial over Q");

  // Standard monomials, by breadth-first growth; finite because the ideal is
  // zero-dimensional.
  const auto& gb = ideal_.groebner();
  std::set<Monomial> seen;
  std::vector<Monomial> frontier{Monomial(names.size())};
  seen.insert(frontier.front());
  std::vector<Monomial> standard;
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier) {
      const bool divisible = std::any_of(gb.leading_monomials().begin(), gb.leading_monomials().end(),
                                         [&](const Monomial& l) { return l.divides(m); });
      if (divisible) continue;
      standard.push_back(m);
      for (std::size_t v = 0; v < names.size(); ++v) {
        Monomial up = m;
        up[v] += 1;
        if (seen.insert(up).second) next.push_back(up);
      }
    }
    frontier = std::move(next);
  }
  std::sort(standard.begin(), standard.end());
  for (auto& m : standard) field_basis_.push_back(Poly::from_term(std::move(m), 1));

  for (const auto& g : gamma_) {
    auto px = gb.normal_form(parse_poly(g.x, names));
    auto py = gb.normal_form(parse_poly(g.y, names));
    if (py.is_zero()) throw ValidationError("base", "declared Γ-element has y = 0, which is not in Gm");
    const bool x_zero = px.is_zero();
    const bool y_one = gb.normal_form(py - Poly::constant(names.size(), 1)).is_zero();
    if ((x_zero != y_one) && !g.kernel) {
      throw ValidationError(x_zero ? "ker2" : "ker1",
                            "declared Γ-element (" + g.x + ", " + g.y +
                                ") lies in a kernel; flag it as a kernel generator to declare it");
    }
    points_.emplace_back(std::move(px), std::move(py));
  }
}

std::vector<std::string> BasePresentation::constant_names() const {
  std::vector<std::string> names;
  for (const auto& c : constants_) names.push_back(c.name);
  return names;
}

bool BasePresentation::is_root_of_unity(const Poly& c) const {
  const auto& gb = ideal_.groebner();
  const Poly one = Poly::constant(ideal_.nvars(), 1);
  Poly power = one;
  for (int e = 1; e <= kMaxRootOfUnityOrder; ++e) {
    power = gb.normal_form(power * c);
    if (gb.normal_form(power - one).is_zero()) return true;
  }
  return false;
}

bool BasePresentation::in_gamma(const std::optional<Poly>& cx, const std::optional<Poly>& cy, int height) const {
  const auto& gb = ideal_.groebner();
  const std::size_t g = points_.size();
  const std::size_t nv = ideal_.nvars();
  const Poly one = Poly::constant(nv, 1);
  std::vector<int> k(g, -height);
  for (;;) {
    bool match = true;
    if (cx) {
      Poly sx = -*cx;
      for (std::size_t i = 0; i < g; ++i)
        if (k[i] != 0) sx += points_[i].first * Rational(k[i]);
      match = gb.normal_form(sx).is_zero();
    }
    if (match && cy) {
      // cy / prod gamma_y^k must be a root of unity: num^e == den^e for some e.
      Poly num = *cy, den = one;
      for (std::size_t i = 0; i < g; ++i) {
        if (k[i] == 0) continue;
        const Poly p = points_[i].second.pow(static_cast<std::uint32_t>(std::abs(k[i])));
        if (k[i] > 0)
          den = gb.normal_form(den * p);
        else
          num = gb.normal_form(num * p);
      }
      match = false;
      Poly ne = num, de = den;
      for (int e = 1; e <= kMaxRootOfUnityOrder && !match; ++e) {
        match = gb.normal_form(ne - de).is_zero();
        ne = gb.normal_form(ne * num);
        de = gb.normal_form(de * den);
      }
    }
    if (match) return true;
    std::size_t i = 0;
    while (i < g && k[i] == height) k[i++] = -height;
    if (i == g) return false;
    ++k[i];
  }
}

// Grevlex with y_n > ... > y_1 > x_n > ... > x_1 > constants.
MonomialOrder canonical_order(std::size_t n, std::size_t constants) {
  std::vector<std::size_t> largest_first;
  for (std::size_t j = n; j-- > 0;) largest_first.push_back(n + j);
  for (std::size_t j = n; j-- > 0;) largest_first.push_back(j);
  for (std::size_t k = constants; k-- > 0;) largest_first.push_back(2 * n + k);
  return MonomialOrder::grevlex(std::move(largest_first));
}

std::string x_name(std::size_t j) { return "x" + std::to_string(j + 1); }
std::string y_name(std::size_t j) { return "y" + std::to_string(j + 1); }

std::vector<std::string> VarietyPresentation::ambient_vars(const BasePresentation& base, std::size_t n) {
  std::vector<std::string> vars;
  for (std::size_t j = 0; j < n; ++j) vars.push_back(x_name(j));
  for (std::size_t j = 0; j < n; ++j) vars.push_back(y_name(j));
  for (const auto& c : base.constants()) vars.push_back(c.name);
  return vars;
}

VarietyPresentation VarietyPresentation::from_generators(std::shared_ptr<const BasePresentation> base, std::size_t n,
                                                         std::vector<Poly> generators, bool irreducible_asserted) {
  const auto vars = ambient_vars(*base, n);
  Ideal with_base = embed(base->base_ideal(), vars).with_generators(generators);
  Poly torus = Poly::constant(vars.size(), 1);
  for (std::size_t j = 0; j < n; ++j) torus = torus * Poly::variable(vars.size(), n + j);
  Ideal sat = n == 0 ? with_base : saturate(with_base, torus);
  return from_saturated(std::move(base), n, std::move(sat), irreducible_asserted);
}

VarietyPresentation VarietyPresentation::parse(std::shared_ptr<const BasePresentation> base, std::size_t n,
                                               const std::vector<std::string>& generators, bool irreducible_asserted) {
  const auto vars = ambient_vars(*base, n);
  std::vector<Poly> gens;
  for (const auto& g : generators) gens.push_back(parse_poly(g, vars));
  return from_generators(std::move(base), n, std::move(gens), irreducible_asserted);
}

VarietyPresentation VarietyPresentation::from_saturated(std::shared_ptr<const BasePresentation> base, std::size_t n,
                                                        Ideal ideal, bool irreducible_asserted) {
  VarietyPresentation v;
  v.n_ = n;
  v.base_ = std::move(base);
  assert(ideal.vars() == ambient_vars(*v.base_, n));
  // Keep the reduced basis as the generator list: smaller inputs downstream.
  const auto& gb = ideal.groebner();
  v.ideal_ = Ideal(ideal.vars(), gb.elements());
  v.irreducible_ = irreducible_asserted;
  return v;
}

Poly VarietyPresentation::lift_constant(const Poly& c) const {
  std::vector<std::size_t> index_map(c.nvars());
  for (std::size_t k = 0; k < index_map.size(); ++k) index_map[k] = constant_index(k);
  if (c.nvars() == 0 && c.is_zero()) return Poly(nvars());
  if (c.nvars() == 0) return Poly::constant(nvars(), *c.constant_value());
  return c.remap(nvars(), index_map);
}

Poly VarietyPresentation::lower_constant(const Poly& c) const {
  const std::size_t k = base_->constants().size();
  std::vector<Term> terms;
  for (const auto& t : c.terms()) {
    Monomial m(k);
    for (std::size_t i = 0; i < k; ++i) m[i] = t.mono[constant_index(i)];
    terms.push_back({std::move(m), t.coeff});
  }
  return Poly::from_terms(k, std::move(terms));
}

std::vector<std::string> VarietyPresentation::basis_strings() const {
  return ideal_.basis_strings(canonical_order(n_, base_->constants().size()));
}

std::vector<std::string> VarietyPresentation::locus_strings() const {
  const auto order = canonical_order(n_, base_->constants().size());
  std::vector<std::string> out;
  for (const auto& g : ideal_.groebner(order).elements()) {
    const auto s = g.support();
    bool coordinate = false;
    for (std::size_t v = 0; v < 2 * n_; ++v) coordinate = coordinate || s[v];
    if (coordinate) out.push_back(format_poly(primitive_part(g, order), ideal_.vars(), order));
  }
  return out;
}

std::size_t variety_dim(const VarietyPresentation& v) {
  if (v.is_empty()) throw EmptyVariety();
  const std::size_t total = ideal_dim(v.ideal());
  const std::size_t base = v.base().constants().empty() ? 0 : ideal_dim(v.base().base_ideal());
  return total - base;
}

VarietyPresentation project_blocks(const VarietyPresentation& v, const std::vector<std::size_t>& blocks) {
  const std::size_t m = blocks.size();
  std::vector<std::string> keep;
  std::map<std::string, std::string> names;
  for (std::size_t i = 0; i < m; ++i) {
    keep.push_back(x_name(blocks[i]));
    names[x_name(blocks[i])] = "_x" + std::to_string(i + 1);
  }
  for (std::size_t i = 0; i < m; ++i) {
    keep.push_back(y_name(blocks[i]));
    names[y_name(blocks[i])] = "_y" + std::to_string(i + 1);
  }
  for (const auto& c : v.base().constants()) keep.push_back(c.name);
  Ideal proj = eliminate(v.ideal(), keep);
  // Two-step rename so that target names never collide with source names.
  proj = rename(proj, names);
  std::map<std::string, std::string> finals;
  for (std::size_t i = 0; i < m; ++i) {
    finals["_x" + std::to_string(i + 1)] = x_name(i);
    finals["_y" + std::to_string(i + 1)] = y_name(i);
  }
  proj = rename(proj, finals);
  return VarietyPresentation::from_saturated(v.base_ptr(), m, std::move(proj), v.irreducible_asserted());
}

VarietyPresentation apply_matrix(const IntMatrix& m, const VarietyPresentation& v) {
  assert(m.cols() == v.n());
  const std::size_t n = v.n(), rows = m.rows();
  const std::size_t k = v.base().constants().size();

  // Projection fast path: distinct unit rows.
  {
    std::vector<std::size_t> blocks;
    std::set<std::size_t> used;
    bool unit_rows = true;
    for (std::size_t i = 0; i < rows && unit_rows; ++i) {
      std::size_t hits = 0, where = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (m(i, j) == 0) continue;
        if (m(i, j) != 1) unit_rows = false;
        ++hits;
        where = j;
      }
      if (hits != 1 || !used.insert(where).second) unit_rows = false;
      blocks.push_back(where);
    }
    if (unit_rows) return project_blocks(v, blocks);
  }

  // Ring: old x, old y, t, new x, new y, constants.
  std::vector<std::string> vars;
  for (std::size_t j = 0; j < n; ++j) vars.push_back("_o" + x_name(j));
  for (std::size_t j = 0; j < n; ++j) vars.push_back("_o" + y_name(j));
  vars.push_back("_t");
  const std::size_t t_idx = 2 * n;
  const std::size_t new_x = 2 * n + 1, new_y = 2 * n + 1 + rows;
  for (std::size_t i = 0; i < rows; ++i) vars.push_back(x_name(i));
  for (std::size_t i = 0; i < rows; ++i) vars.push_back(y_name(i));
  for (const auto& c : v.base().constants()) vars.push_back(c.name);
  const std::size_t nv = vars.size();
  const std::size_t const_off = 2 * n + 1 + 2 * rows;

  std::vector<std::size_t> index_map(v.nvars());
  for (std::size_t j = 0; j < 2 * n; ++j) index_map[j] = j;
  for (std::size_t c = 0; c < k; ++c) index_map[2 * n + c] = const_off + c;

  std::vector<Poly> gens;
  for (const auto& g : v.ideal().generators()) gens.push_back(g.remap(nv, index_map));
  Monomial torus(nv);
  torus[t_idx] = 1;
  for (std::size_t i = 0; i < rows; ++i) {
    Poly lin = Poly::variable(nv, new_x + i);
    Monomial pos(nv), neg(nv);
    neg[new_y + i] = 1;
    for (std::size_t j = 0; j < n; ++j) {
      const Integer& e = m(i, j);
      if (e == 0) continue;
      lin -= Poly::variable(nv, j) * Rational(e);
      if (!e.fits_sint_p()) throw ResourceLimit("apply_matrix: exponent too large");
      const long ev = e.get_si();
      if (ev > 0)
        pos[n + j] += static_cast<std::uint32_t>(ev);
      else
        neg[n + j] += static_cast<std::uint32_t>(-ev);
    }
    gens.push_back(std::move(lin));
    gens.push_back(Poly::from_term(neg, 1) - Poly::from_term(pos, 1));
    torus[new_y + i] = 1;
  }
  for (std::size_t j = 0; j < n; ++j) torus[n + j] = 1;
  gens.push_back(Poly::from_term(torus, 1) - Poly::constant(nv, 1));

  std::vector<std::string> keep;
  for (std::size_t i = 0; i < 2 * rows; ++i) keep.push_back(vars[new_x + i]);
  for (const auto& c : v.base().constants()) keep.push_back(c.name);
  Ideal image = eliminate(Ideal(vars, std::move(gens)), keep);
  return VarietyPresentation::from_saturated(v.base_ptr(), rows, std::move(image), v.irreducible_asserted());
}

namespace {

std::vector<Poly> lifted_field_basis(const VarietyPresentation& v, const GroebnerBasis& gb) {
  std::vector<Poly> out;
  for (const auto& b : v.base().field_basis()) out.push_back(gb.normal_form(v.lift_constant(b)));
  return out;
}

}  // namespace

std::optional<Poly> additive_constant(const VarietyPresentation& v, const IntVector& r) {
  const auto& gb = v.ideal().groebner();
  Poly lin(v.nvars());
  for (std::size_t j = 0; j < v.n(); ++j)
    if (r[j] != 0) lin += Poly::variable(v.nvars(), v.x_index(j)) * Rational(r[j]);
  const auto basis = lifted_field_basis(v, gb);
  const auto a = solve_in_span(basis, gb.normal_form(lin));
  if (!a) return std::nullopt;
  return combine(v.base().field_basis(), *a, v.base().constants().size());
}

std::optional<Poly> multiplicative_constant(const VarietyPresentation& v, const IntVector& r) {
  const auto& gb = v.ideal().groebner();
  Monomial pos(v.nvars()), neg(v.nvars());
  for (std::size_t j = 0; j < v.n(); ++j) {
    if (r[j] > 0) pos[v.y_index(j)] = static_cast<std::uint32_t>(r[j].get_si());
    if (r[j] < 0) neg[v.y_index(j)] = static_cast<std::uint32_t>(-r[j].get_si());
  }
  const Poly q = Poly::from_term(neg, 1);
  std::vector<Poly> columns;
  for (const auto& b : v.base().field_basis()) columns.push_back(gb.normal_form(v.lift_constant(b) * q));
  const auto a = solve_in_span(columns, gb.normal_form(Poly::from_term(pos, 1)));
  if (!a) return std::nullopt;
  return combine(v.base().field_basis(), *a, v.base().constants().size());
}

IntMatrix additive_relation_lattice(const VarietyPresentation& v) {
  const std::size_t n = v.n();
  if (n == 0) return IntMatrix(0, 0);
  const auto& gb = v.ideal().groebner();
  std::vector<Poly> columns;
  for (std::size_t j = 0; j < n; ++j) columns.push_back(gb.normal_form(Poly::variable(v.nvars(), v.x_index(j))));
  for (const auto& b : lifted_field_basis(v, gb)) columns.push_back(-b);
  std::map<Monomial, std::size_t> rows;
  for (const auto& c : columns)
    for (const auto& t : c.terms()) rows.emplace(t.mono, rows.size());
  RatMatrix a(rows.size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& t : columns[j].terms()) a(rows[t.mono], j) = t.coeff;
  std::vector<IntVector> r_parts;
  for (const auto& kv : rational_kernel(a)) {
    RatVector r(kv.begin(), kv.begin() + static_cast<std::ptrdiff_t>(n));
    if (std::all_of(r.begin(), r.end(), [](const Rational& q) { return q == 0; })) continue;
    r_parts.push_back(primitive_integer_vector(r));
  }
  if (r_parts.empty()) return IntMatrix(0, n);
  return saturated_row_basis(IntMatrix::from_rows(r_parts, n));
}

std::vector<IntVector> primitive_vectors(std::size_t n, int bound) {
  std::vector<IntVector> out;
  if (n == 0 || bound <= 0) return out;
  std::vector<long> cur(n, -bound);
  for (;;) {
    std::size_t first = 0;
    while (first < n && cur[first] == 0) ++first;
    if (first < n && cur[first] > 0) {
      long g = 0;
      for (auto e : cur) g = std::gcd(g, std::labs(e));
      if (g == 1) {
        IntVector v;
        for (auto e : cur) v.emplace_back(e);
        out.push_back(std::move(v));
      }
    }
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == bound) cur[--i] = -bound;
    if (i == 0) break;
    ++cur[i - 1];
  }
  std::stable_sort(out.begin(), out.end(), [](const IntVector& a, const IntVector& b) { return height(a) < height(b); });
  return out;
}

FreenessReport freeness(const VarietyPresentation& v, int g2_bound) {
  if (v.is_empty()) throw EmptyVariety();
  FreenessReport report;
  report.g2_search_bound = g2_bound;
  const auto lattice = additive_relation_lattice(v);
  if (lattice.rows() > 0) {
    report.g1_free = false;
    IntVector r = lattice.row(0);
    const auto c = additive_constant(v, r);
    assert(c.has_value());
    report.g1_witness = AdditiveWitness{std::move(r), format_constant(v.base(), *c)};
  }
  for (const auto& r : primitive_vectors(v.n(), g2_bound)) {
    const auto c = multiplicative_constant(v, r);
    if (!c) continue;
    report.g2_free = false;
    report.g2_witness = MultiplicativeWitness{r, format_constant(v.base(), *c)};
    break;
  }
  return report;
}

std::string format_constant(const BasePresentation& base, const Poly& c) {
  const auto names = base.constant_names();
  if (c.is_zero()) return "0";
  if (c.nvars() == 0 || names.empty()) return c.constant_value() ? c.constant_value()->get_str() : "0";
  return format_poly(c, names, MonomialOrder::grevlex(names.size()));
}

}  // namespace gammaforge

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

#include "gammaforge/gamma.hpp"

#include <algorithm>
#include <sstream>

namespace gammaforge {

namespace {

std::string format_vector(const IntVector& r) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
  out << ')';
  return out.str();
}

// Rank over the function field of an irreducible locus: fraction-free
// elimination with entries reduced modulo the basis.
std::size_t generic_rank(std::vector<std::vector<Poly>> rows, const GroebnerBasis& gb) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t best = rows.size();
    for (std::size_t i = rank; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      if (best == rows.size() || rows[i][c].size() < rows[best][c].size()) best = i;
    }
    if (best == rows.size()) continue;
    std::swap(rows[rank], rows[best]);
    const auto& piv = rows[rank];
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      const Poly factor = rows[i][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] = gb.normal_form(piv[c] * rows[i][k] - factor * piv[k]);
      // Rescale so that coefficients stay small.
      for (const auto& e : rows[i]) {
        if (e.is_zero()) continue;
        const Rational lead = e.terms().back().coeff;
        const Rational inv = Rational(1) / lead;
        for (auto& f : rows[i]) f *= inv;
        break;
      }
    }
    ++rank;
  }
  return rank;
}

IntMatrix pad_to(const IntMatrix& m, std::size_t n) { return m.rows() < n ? m.pad_rows(n) : m; }

}  // namespace

GammaPresentation GammaPresentation::create(VarietyPresentation locus, int validation_height) {
  validate_kernel_preservation(locus, validation_height);
  return unchecked(std::move(locus));
}

GammaPresentation GammaPresentation::unchecked(VarietyPresentation locus) {
  GammaPresentation p;
  p.locus_ = std::move(locus);
  return p;
}

GammaPresentation GammaPresentation::trivial(std::shared_ptr<const BasePresentation> base) {
  return unchecked(VarietyPresentation::from_generators(std::move(base), 0, {}, true));
}

std::size_t GammaPresentation::locus_dim() const {
  {
    std::lock_guard lock(cache_->mutex);
    if (cache_->dim) return *cache_->dim;
  }
  const std::size_t d = variety_dim(locus_);
  std::lock_guard lock(cache_->mutex);
  cache_->dim = d;
  return d;
}

std::size_t GammaPresentation::jacobian_image_dim(const IntMatrix& basis) const {
  const std::size_t n = this->n(), r = basis.rows();
  const auto& gb = locus_.ideal().groebner();
  const std::size_t dim = locus_dim();
  {
    std::lock_guard lock(cache_->mutex);
    if (!cache_->jacobian_rank) {
      std::vector<std::vector<Poly>> rows;
      for (const auto& g : gb.elements()) {
        std::vector<Poly> row;
        bool nonzero = false;
        for (std::size_t j = 0; j < n; ++j) row.push_back(gb.normal_form(g.derivative(locus_.x_index(j))));
        for (std::size_t j = 0; j < n; ++j)
          row.push_back(gb.normal_form(g.derivative(locus_.y_index(j)) *
                                       Poly::variable(locus_.nvars(), locus_.y_index(j))));
        for (const auto& e : row) nonzero = nonzero || !e.is_zero();
        if (nonzero) rows.push_back(std::move(row));
      }
      cache_->log_jacobian = rows;
      cache_->jacobian_rank = generic_rank(std::move(rows), gb);
    }
  }
  // Tangent spaces have the expected size only on a reduced irreducible locus;
  // otherwise the caller falls back to elimination.
  if (*cache_->jacobian_rank + dim != 2 * n) return static_cast<std::size_t>(-1);

  // Restrict the tangent space to ker(M ⊕ M): rank(J·K) with K a kernel basis.
  RatMatrix a(2 * r, 2 * n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = basis(i, j);
      a(r + i, n + j) = basis(i, j);
    }
  const auto kernel = rational_kernel(a);
  std::vector<std::vector<Poly>> rows;
  for (const auto& jrow : cache_->log_jacobian) {
    std::vector<Poly> row;
    for (const auto& k : kernel) {
      Poly e(locus_.nvars());
      for (std::size_t c = 0; c < 2 * n; ++c)
        if (k[c] != 0 && !jrow[c].is_zero()) e += jrow[c] * k[c];
      row.push_back(std::move(e));
    }
    rows.push_back(std::move(row));
  }
  const std::size_t rank = kernel.empty() ? 0 : generic_rank(std::move(rows), gb);
  return dim + rank + 2 * r - 2 * n;
}

std::size_t GammaPresentation::image_dim(const IntMatrix& m, ImageDimMethod method) const {
  const IntMatrix basis = canonical_subspace(m);
  if (basis.rows() == 0) return 0;
  if (basis.rows() == n()) return locus_dim();
  const std::string key = (method == ImageDimMethod::Auto ? "a" : "e") + basis.to_string();
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->images.find(key);
    if (it != cache_->images.end()) return it->second;
  }
  std::size_t d = static_cast<std::size_t>(-1);
  if (method == ImageDimMethod::Auto) d = jacobian_image_dim(basis);
  if (d == static_cast<std::size_t>(-1)) d = variety_dim(apply_matrix(basis, locus_));
  std::lock_guard lock(cache_->mutex);
  cache_->images.emplace(key, d);
  return d;
}

void validate_kernel_preservation(const VarietyPresentation& locus, int height) {
  if (locus.is_empty()) throw ValidationError("empty", "locus is empty after torus saturation");
  if (!locus.irreducible_asserted())
    throw ValidationError("irreducible", "locus must be asserted irreducible");
  const auto& base = locus.base();
  const IntMatrix lattice = additive_relation_lattice(locus);
  const std::size_t lrank = lattice.rows();
  for (const auto& r : primitive_vectors(locus.n(), height)) {
    std::optional<Poly> c;
    if (lrank > 0 && rational_rank(lattice.stack(IntMatrix::from_rows({r}, locus.n()))) == lrank)
      c = additive_constant(locus, r);
    const std::optional<Poly> cm = multiplicative_constant(locus, r);
    if (!c && !cm) continue;
    const std::string where = " for r = " + format_vector(r);
    if (c && cm) {
      if (base.in_gamma(c, cm, height)) continue;
      const std::string pair = "(" + format_constant(base, *c) + ", " + format_constant(base, *cm) + ")";
      if (c->is_zero())
        throw ValidationError("ker2", "r·b = " + pair + " would add a new element to ker2" + where);
      if (base.is_root_of_unity(*cm))
        throw ValidationError("ker1", "r·b = " + pair + " would add a new element to ker1" + where);
      throw ValidationError("gamma-base", "r·b = " + pair + " is a base point outside the declared Γ" + where);
    }
    if (c && base.in_gamma(c, std::nullopt, height))
      throw ValidationError("ker2", "x-part of r·b equals a Γ-point's x but y-part is not constant" + where);
    if (cm && base.in_gamma(std::nullopt, cm, height))
      throw ValidationError("ker1", "y-part of r·b equals a Γ-point's y but x-part is not constant" + where);
  }
}

std::vector<IntMatrix> enumerate_subspaces(std::size_t n, int height, std::size_t min_rank, std::size_t max_rank) {
  std::vector<IntMatrix> out;
  if (height < 1) return out;
  max_rank = std::min(max_rank, n);
  for (std::size_t r = std::max<std::size_t>(min_rank, 1); r <= max_rank; ++r) {
    std::vector<IntMatrix> level;
    // Pivot columns: r-subsets of {0..n-1} in lexicographic order.
    std::vector<std::size_t> piv(r);
    for (std::size_t i = 0; i < r; ++i) piv[i] = i;
    for (;;) {
      std::vector<int> pv(r, 1);
      for (;;) {
        // Free cells and their ranges.
        struct Cell {
          std::size_t i, j;
          int lo, hi;
        };
        std::vector<Cell> cells;
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = piv[i] + 1; j < n; ++j) {
            const auto it = std::find(piv.begin(), piv.end(), j);
            if (it != piv.end())
              cells.push_back({i, j, 0, pv[static_cast<std::size_t>(it - piv.begin())] - 1});
            else
              cells.push_back({i, j, -height, height});
          }
        std::vector<int> val(cells.size());
        for (std::size_t k = 0; k < cells.size(); ++k) val[k] = cells[k].lo;
        for (;;) {
          IntMatrix m(r, n);
          for (std::size_t i = 0; i < r; ++i) m(i, piv[i]) = pv[i];
          for (std::size_t k = 0; k < cells.size(); ++k) m(cells[k].i, cells[k].j) = val[k];
          if (saturated_row_basis(m) == m) level.push_back(std::move(m));
          std::size_t k = 0;
          while (k < cells.size() && val[k] == cells[k].hi) {
            val[k] = cells[k].lo;
            ++k;
          }
          if (k == cells.size()) break;
          ++val[k];
        }
        std::size_t i = 0;
        while (i < r && pv[i] == height) pv[i++] = 1;
        if (i == r) break;
        ++pv[i];
      }
      // Next subset.
      std::size_t i = r;
      while (i > 0 && piv[i - 1] == n - r + (i - 1)) --i;
      if (i == 0) break;
      ++piv[i - 1];
      for (std::size_t k = i; k < r; ++k) piv[k] = piv[k - 1] + 1;
    }
    std::sort(level.begin(), level.end(),
              [](const IntMatrix& a, const IntMatrix& b) {
                const auto ea = a.entries(), eb = b.entries();
                return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
              });
    for (auto& m : level) out.push_back(std::move(m));
  }
  return out;
}

IntMatrix canonical_subspace(const IntMatrix& m) {
  if (m.rows() == 0) return IntMatrix(0, m.cols());
  return saturated_row_basis(m);
}

IntMatrix subspace_sum(const IntMatrix& a, const IntMatrix& b) { return canonical_subspace(a.stack(b)); }

IntMatrix subspace_intersection(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.cols();
  // Annihilators, then the common kernel.
  std::vector<IntVector> ann;
  for (const auto* m : {&a, &b}) {
    if (m->rows() == 0) {
      for (std::size_t j = 0; j < n; ++j) {
        IntVector e(n);
        e[j] = 1;
        ann.push_back(std::move(e));
      }
      continue;
    }
    for (const auto& v : rational_kernel(to_rational(*m))) ann.push_back(primitive_integer_vector(v));
  }
  if (ann.empty()) return IntMatrix::identity(n);
  std::vector<IntVector> rows;
  for (const auto& v : rational_kernel(to_rational(IntMatrix::from_rows(ann, n))))
    rows.push_back(primitive_integer_vector(v));
  if (rows.empty()) return IntMatrix(0, n);
  return canonical_subspace(IntMatrix::from_rows(rows, n));
}

bool subspace_contains(const IntMatrix& outer, const IntMatrix& inner) {
  if (inner.rows() == 0) return true;
  if (outer.rows() == 0) return rational_rank(inner) == 0;
  return rational_rank(outer.stack(inner)) == rational_rank(outer);
}

int delta(const GammaPresentation& p) {
  return static_cast<int>(p.locus_dim()) - kGroupDim * static_cast<int>(p.n());
}

int delta(const GammaPresentation& p, const IntMatrix& subspace) {
  const IntMatrix w = canonical_subspace(subspace);
  return static_cast<int>(p.image_dim(w)) - kGroupDim * static_cast<int>(w.rows());
}

int relative_delta(const GammaPresentation& p, const IntMatrix& w, const IntMatrix& u) {
  const IntMatrix cw = canonical_subspace(w), cu = canonical_subspace(u);
  return static_cast<int>(p.image_dim(cw)) - static_cast<int>(p.image_dim(cu)) -
         kGroupDim * (static_cast<int>(cw.rows()) - static_cast<int>(cu.rows()));
}

std::string to_string(RotundityVerdict v) {
  switch (v) {
    case RotundityVerdict::NotFree:
      return "NotFree";
    case RotundityVerdict::NotRotund:
      return "NotRotund";
    case RotundityVerdict::RotundUpTo:
      return "RotundUpTo";
    case RotundityVerdict::StronglyRotundUpTo:
      return "StronglyRotundUpTo";
  }
  return "?";
}

namespace {

RotundityReport sweep(const GammaPresentation& p, const RotundityOptions& opts, bool strict) {
  RotundityReport report;
  report.bound = opts.height;
  if (!opts.skip_freeness) {
    auto f = freeness(p.locus(), opts.g2_bound);
    if (!f.g1_free || !f.g2_free) {
      report.verdict = RotundityVerdict::NotFree;
      report.freeness = std::move(f);
      return report;
    }
  }
  std::optional<IntMatrix> equality;
  std::size_t eq_dim = 0;
  for (const auto& m : enumerate_subspaces(p.n(), opts.height)) {
    ++report.matrices_checked;
    const std::size_t dim = p.image_dim(m);
    const std::size_t bound = kGroupDim * m.rows();
    if (dim < bound) {
      report.verdict = RotundityVerdict::NotRotund;
      report.witness = pad_to(m, p.n());
      report.witness_dim = dim;
      report.witness_rank = m.rows();
      return report;
    }
    if (strict && dim == bound && !equality) {
      equality = m;
      eq_dim = dim;
    }
  }
  if (!strict) {
    report.verdict = RotundityVerdict::RotundUpTo;
  } else if (equality) {
    report.verdict = RotundityVerdict::RotundUpTo;
    report.witness_rank = equality->rows();
    report.witness_dim = eq_dim;
    report.witness = pad_to(*equality, p.n());
  } else {
    report.verdict = RotundityVerdict::StronglyRotundUpTo;
  }
  return report;
}

}  // namespace

RotundityReport is_strong(const GammaPresentation& p, const RotundityOptions& opts) { return sweep(p, opts, false); }

RotundityReport is_strongly_rotund(const GammaPresentation& p, const RotundityOptions& opts) {
  return sweep(p, opts, true);
}

HullResult hull(const GammaPresentation& p, const IntMatrix& seed, int height) {
  const std::size_t n = p.n();
  const IntMatrix s = canonical_subspace(seed);
  std::vector<IntMatrix> candidates;
  if (s.rows() == 0) candidates.emplace_back(0, n);
  for (auto& w : enumerate_subspaces(n, height, std::max<std::size_t>(s.rows(), 1), n))
    if (subspace_contains(w, s)) candidates.push_back(std::move(w));
  if (s.rows() > 0 && std::find(candidates.begin(), candidates.end(), s) == candidates.end())
    candidates.insert(candidates.begin(), s);

  std::vector<int> deltas;
  int best = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    deltas.push_back(delta(p, candidates[i]));
    if (i == 0 || deltas[i] < best) best = deltas[i];
  }
  // Minimizers are closed under intersection; take the meet of all of them.
  std::optional<IntMatrix> meet;
  const IntMatrix* smallest = nullptr;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (deltas[i] != best) continue;
    meet = meet ? subspace_intersection(*meet, candidates[i]) : candidates[i];
    if (!smallest || candidates[i].rows() < smallest->rows()) smallest = &candidates[i];
  }
  HullResult result;
  result.certified_up_to = height;
  result.delta_value = best;
  if (meet && delta(p, *meet) == best)
    result.subspace = *meet;
  else
    result.subspace = *smallest;
  return result;
}

int gammadim(const GammaPresentation& p, const IntMatrix& seed, int height) {
  return hull(p, seed, height).delta_value;
}

std::string to_string(ExtensionClass c) {
  switch (c) {
    case ExtensionClass::Invalid:
      return "Invalid";
    case ExtensionClass::NotStrong:
      return "NotStrong";
    case ExtensionClass::StrongGammaAlgebraic:
      return "StrongGammaAlgebraic";
    case ExtensionClass::StrongMixed:
      return "StrongMixed";
    case ExtensionClass::PurelyGammaTranscendental:
      return "PurelyGammaTranscendental";
  }
  return "?";
}

Classification classify(const GammaPresentation& p, const RotundityOptions& opts) {
  Classification c;
  c.bound = opts.height;
  if (!p.locus().irreducible_asserted()) {
    c.reason = "locus not asserted irreducible";
    return c;
  }
  RotundityOptions sweep_opts = opts;
  sweep_opts.skip_freeness = true;
  const auto report = is_strongly_rotund(p, sweep_opts);
  c.delta_value = delta(p);
  if (report.verdict == RotundityVerdict::NotRotund) {
    c.kind = ExtensionClass::NotStrong;
    c.witness = report.witness;
    return c;
  }
  const auto f = freeness(p.locus(), opts.g2_bound);
  if (!f.g1_free || !f.g2_free) {
    c.reason = f.g1_free ? "locus not free (multiplicative relation)" : "locus not free (additive relation)";
    return c;
  }
  if (report.verdict == RotundityVerdict::StronglyRotundUpTo)
    c.kind = ExtensionClass::PurelyGammaTranscendental;
  else if (c.delta_value == 0)
    c.kind = ExtensionClass::StrongGammaAlgebraic;
  else
    c.kind = ExtensionClass::StrongMixed;
  return c;
}

}  // namespace gammaforge

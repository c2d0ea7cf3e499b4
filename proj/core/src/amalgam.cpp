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

#include "gammaforge/amalgam.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gammaforge {

namespace {

bool involves_coordinates(const Poly& g, std::size_t n) {
  const auto s = g.support();
  for (std::size_t v = 0; v < 2 * n; ++v)
    if (s[v]) return true;
  return false;
}

std::vector<Poly> coordinate_basis(const VarietyPresentation& v, const MonomialOrder& order) {
  std::vector<Poly> out;
  for (const auto& g : v.ideal().groebner(order).elements())
    if (involves_coordinates(g, v.n())) out.push_back(primitive_part(g, order));
  return out;
}

// Orders canonical bases: lower maximal degree first, then term by term.
struct LocusKey {
  std::uint32_t max_degree = 0;
  std::vector<std::vector<Term>> gens;
};

LocusKey locus_key(const VarietyPresentation& v, const MonomialOrder& order) {
  LocusKey k;
  for (const auto& g : coordinate_basis(v, order)) {
    k.max_degree = std::max(k.max_degree, g.total_degree());
    k.gens.push_back(sorted_terms(g, order));
  }
  return k;
}

int compare_keys(const LocusKey& a, const LocusKey& b, const MonomialOrder& order) {
  if (a.max_degree != b.max_degree) return a.max_degree < b.max_degree ? -1 : 1;
  for (std::size_t i = 0; i < std::min(a.gens.size(), b.gens.size()); ++i) {
    const auto& ta = a.gens[i];
    const auto& tb = b.gens[i];
    for (std::size_t j = 0; j < std::min(ta.size(), tb.size()); ++j) {
      const auto c = order.compare(ta[j].mono, tb[j].mono);
      if (c != 0) return c < 0 ? -1 : 1;
      if (ta[j].coeff != tb[j].coeff) return ta[j].coeff < tb[j].coeff ? -1 : 1;
    }
    if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
  }
  if (a.gens.size() != b.gens.size()) return a.gens.size() < b.gens.size() ? -1 : 1;
  return 0;
}

// Locus of b' with b'_{perm[j]} = sign[j]·b_j + (0, tor[j]).
VarietyPresentation transform_locus(const VarietyPresentation& v, const std::vector<std::size_t>& perm,
                                    const std::vector<int>& sign, const std::vector<int>& tor) {
  const std::size_t n = v.n(), nv = v.nvars();
  std::vector<Poly> gens;
  for (const auto& g : coordinate_basis(v, v.ideal().groebner().order())) {
    // Degrees in inverted y's, to clear denominators.
    std::vector<std::uint32_t> deg(n, 0);
    for (const auto& t : g.terms())
      for (std::size_t j = 0; j < n; ++j) deg[j] = std::max(deg[j], t.mono[v.y_index(j)]);
    Poly out(nv);
    for (const auto& t : g.terms()) {
      Monomial m(nv);
      Rational c = t.coeff;
      for (std::size_t j = 0; j < n; ++j) {
        const std::uint32_t ex = t.mono[v.x_index(j)], ey = t.mono[v.y_index(j)];
        m[v.x_index(perm[j])] += ex;
        if (sign[j] < 0 && ex % 2) c = -c;
        // y_j = tor·y'^{sign}; for sign -1 multiply through by y'^{deg}.
        if (tor[j] < 0 && ey % 2) c = -c;
        m[v.y_index(perm[j])] += sign[j] > 0 ? ey : deg[j] - ey;
      }
      for (std::size_t k = 2 * n; k < nv; ++k) m[k] = t.mono[k];
      out += Poly::from_term(std::move(m), c);
    }
    gens.push_back(std::move(out));
  }
  for (const auto& g : v.ideal().generators())
    if (!involves_coordinates(g, n)) gens.push_back(g);
  return VarietyPresentation::from_generators(v.base_ptr(), n, std::move(gens), v.irreducible_asserted());
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "; " : "") + parts[i];
  return out;
}

// Symmetric matrix of a quadric in homogeneous coordinates (1, v_1, ...).
RatMatrix quadric_matrix(const Poly& g, const std::vector<std::size_t>& vars) {
  const std::size_t k = vars.size() + 1;
  RatMatrix q(k, k);
  auto slot = [&](std::size_t var) -> std::size_t {
    return static_cast<std::size_t>(std::find(vars.begin(), vars.end(), var) - vars.begin()) + 1;
  };
  for (const auto& t : g.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t v = 0; v < t.mono.size(); ++v)
      for (std::uint32_t e = 0; e < t.mono[v]; ++e) idx.push_back(slot(v));
    while (idx.size() < 2) idx.insert(idx.begin(), 0);
    if (idx[0] == idx[1]) {
      q(idx[0], idx[0]) += t.coeff;
    } else {
      q(idx[0], idx[1]) += t.coeff / 2;
      q(idx[1], idx[0]) += t.coeff / 2;
    }
  }
  return q;
}

// Generators of bounded degree and coefficient height, primitive, first
// nonzero coefficient positive, nonconstant.
std::vector<Poly> candidate_polynomials(std::size_t n, unsigned deg, int height, std::size_t nv,
                                        std::size_t limit, bool& truncated) {
  std::vector<Monomial> monos;
  {
    std::vector<Monomial> frontier{Monomial(nv)};
    monos.push_back(frontier.front());
    for (unsigned d = 1; d <= deg; ++d) {
      std::set<Monomial> next;
      for (const auto& m : frontier)
        for (std::size_t v = 0; v < 2 * n; ++v) {
          Monomial u = m;
          u[v] += 1;
          next.insert(u);
        }
      frontier.assign(next.begin(), next.end());
      for (const auto& m : frontier) monos.push_back(m);
    }
  }
  const MonomialOrder order = canonical_order(n, nv - 2 * n);
  std::sort(monos.begin(), monos.end(), [&](const Monomial& a, const Monomial& b) { return order.greater(b, a); });
  std::vector<Poly> out;
  std::vector<int> c(monos.size(), -height);
  for (;;) {
    // Leading (largest) monomial is last; require its coefficient positive.
    std::size_t last = c.size();
    while (last > 0 && c[last - 1] == 0) --last;
    if (last > 1 && c[last - 1] > 0) {
      int g = 0;
      for (int x : c) g = std::gcd(g, std::abs(x));
      if (g == 1) {
        std::vector<Term> terms;
        for (std::size_t i = 0; i < c.size(); ++i)
          if (c[i]) terms.push_back({monos[i], Rational(c[i])});
        out.push_back(Poly::from_terms(nv, std::move(terms)));
        if (out.size() > limit) {
          truncated = true;
          return out;
        }
      }
    }
    std::size_t i = 0;
    while (i < c.size() && c[i] == height) c[i++] = -height;
    if (i == c.size()) break;
    ++c[i];
  }
  return out;
}

}  // namespace

GammaPresentation free_amalgam(const BasePresentation& a0, const GammaPresentation& l, const GammaPresentation& r) {
  if (!(l.base() == a0) || !(r.base() == a0))
    throw BaseMismatch("free_amalgam: factors are not presented over the same base");
  const std::size_t nl = l.n(), nr = r.n(), n = nl + nr;
  const std::size_t k = a0.constants().size();
  const auto vars = VarietyPresentation::ambient_vars(a0, n);
  std::vector<Poly> gens;
  auto add = [&](const GammaPresentation& p, std::size_t offset) {
    const std::size_t m = p.n();
    std::vector<std::size_t> map(2 * m + k);
    for (std::size_t j = 0; j < m; ++j) {
      map[j] = offset + j;
      map[m + j] = n + offset + j;
    }
    for (std::size_t c = 0; c < k; ++c) map[2 * m + c] = 2 * n + c;
    for (const auto& g : p.locus().ideal().groebner().elements()) gens.push_back(g.remap(vars.size(), map));
  };
  add(l, 0);
  add(r, nl);
  // A sum of torus-saturated primes in disjoint variables over a field is
  // again saturated: the y's stay non-zero-divisors in the tensor product.
  auto locus = VarietyPresentation::from_saturated(l.base_ptr(), n, Ideal(vars, std::move(gens)),
                                                   l.locus().irreducible_asserted() &&
                                                       r.locus().irreducible_asserted());
  auto out = GammaPresentation::unchecked(std::move(locus));
  auto copy_history = [&](const GammaPresentation& p, std::size_t offset, const char* label) {
    if (p.history().empty() && p.n() > 0) {
      HistoryEntry h{label, {}};
      for (std::size_t j = 0; j < p.n(); ++j) h.columns.push_back(offset + j);
      out.history().push_back(std::move(h));
      return;
    }
    for (auto h : p.history()) {
      for (auto& c : h.columns) c += offset;
      out.history().push_back(std::move(h));
    }
  };
  copy_history(l, 0, "L");
  copy_history(r, nl, "R");
  return out;
}

std::string to_string(CatalogFilter f) {
  switch (f) {
    case CatalogFilter::All:
      return "all";
    case CatalogFilter::GammaAlgebraic:
      return "algebraic";
    case CatalogFilter::PurelyTranscendental:
      return "transcendental";
  }
  return "?";
}

std::optional<bool> certify_irreducible(const VarietyPresentation& v) {
  const std::size_t n = v.n();
  const auto order = canonical_order(n, v.base().constants().size());
  const auto gens = coordinate_basis(v, order);
  if (gens.empty()) return true;
  if (gens.size() != 1) return std::nullopt;
  const Poly& g = gens.front();
  std::vector<std::size_t> coords;
  for (std::size_t var = 0; var < 2 * n; ++var) coords.push_back(var);
  if (g.degree_in(coords) <= 1) return true;
  for (std::size_t c = 2 * n; c < v.nvars(); ++c)
    if (g.involves(c)) return std::nullopt;
  if (g.total_degree() != 2) return std::nullopt;
  std::vector<std::size_t> used;
  for (std::size_t var = 0; var < 2 * n; ++var)
    if (g.involves(var)) used.push_back(var);
  // A quadric factors over C exactly when its homogeneous matrix has rank <= 2.
  return rational_rank(quadric_matrix(g, used)) >= 3;
}

VarietyPresentation canonical_representative(const VarietyPresentation& v) {
  const std::size_t n = v.n();
  const auto order = canonical_order(n, v.base().constants().size());
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<VarietyPresentation> best;
  LocusKey best_key;
  do {
    for (std::size_t s = 0; s < (1u << n); ++s)
      for (std::size_t t = 0; t < (1u << n); ++t) {
        std::vector<int> sign(n), tor(n);
        for (std::size_t j = 0; j < n; ++j) {
          sign[j] = (s >> j) & 1 ? -1 : 1;
          tor[j] = (t >> j) & 1 ? -1 : 1;
        }
        auto w = transform_locus(v, perm, sign, tor);
        auto key = locus_key(w, order);
        if (!best || compare_keys(key, best_key, order) < 0) {
          best = std::move(w);
          best_key = std::move(key);
        }
      }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

std::string catalog_key(const VarietyPresentation& v) {
  return std::to_string(v.n()) + ":" + join(v.locus_strings());
}

ExtensionCatalog enumerate_extensions(std::shared_ptr<const BasePresentation> a0, ComplexityCap cap,
                                      CatalogFilter filter, const EnumerationOptions& opts) {
  ExtensionCatalog cat;
  cat.cap = cap;
  cat.filter = filter;
  std::set<std::string> seen;
  std::vector<std::pair<LocusKey, CatalogEntry>> found;

  auto consider = [&](VarietyPresentation locus) {
    ++cat.candidates;
    if (locus.is_empty()) {
      ++cat.rejected_invalid;
      return;
    }
    const auto irreducible = certify_irreducible(locus);
    if (!irreducible) {
      ++cat.uncertified;
      return;
    }
    if (!*irreducible) {
      ++cat.rejected_reducible;
      return;
    }
    auto rep = canonical_representative(locus);
    const std::string key = catalog_key(rep);
    if (!seen.insert(key).second) return;
    GammaPresentation p;
    try {
      p = GammaPresentation::create(rep, cap.height_max);
    } catch (const ValidationError&) {
      ++cat.rejected_invalid;
      return;
    }
    const auto f = freeness(p.locus(), opts.g2_bound);
    if (!f.g1_free || !f.g2_free) {
      ++cat.rejected_not_free;
      return;
    }
    const auto report = is_strongly_rotund(p, {cap.height_max, opts.g2_bound, true});
    if (report.verdict == RotundityVerdict::NotRotund) {
      ++cat.rejected_not_strong;
      return;
    }
    CatalogEntry e;
    e.delta = delta(p);
    e.strongly_rotund = report.verdict == RotundityVerdict::StronglyRotundUpTo;
    e.key = key;
    e.presentation = std::move(p);
    const auto order = canonical_order(rep.n(), rep.base().constants().size());
    found.emplace_back(locus_key(rep, order), std::move(e));
  };

  consider(VarietyPresentation::from_generators(a0, 0, {}, true));
  for (std::size_t n = 1; n <= cap.n_max && !cat.truncated; ++n) {
    const std::size_t nv = 2 * n + a0->constants().size();
    const auto polys = candidate_polynomials(n, cap.deg_max, cap.height_max, nv, opts.max_candidates, cat.truncated);
    // Generator sets of size 0..n, lexicographic in candidate order.
    for (std::size_t size = 0; size <= n && !cat.truncated; ++size) {
      if (size > polys.size()) break;
      std::vector<std::size_t> pick(size);
      std::iota(pick.begin(), pick.end(), 0);
      for (;;) {
        if (cat.candidates >= opts.max_candidates) {
          cat.truncated = true;
          break;
        }
        std::vector<Poly> gens;
        for (auto i : pick) gens.push_back(polys[i]);
        consider(VarietyPresentation::from_generators(a0, n, std::move(gens), true));
        std::size_t i = size;
        while (i > 0 && pick[i - 1] == polys.size() - size + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }

  std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.second.presentation.n() != b.second.presentation.n())
      return a.second.presentation.n() < b.second.presentation.n();
    const auto order = canonical_order(a.second.presentation.n(), a.second.presentation.base().constants().size());
    return compare_keys(a.first, b.first, order) < 0;
  });
  for (auto& [key, e] : found) {
    const bool keep = filter == CatalogFilter::All || e.presentation.n() == 0 ||
                      (filter == CatalogFilter::GammaAlgebraic && e.delta == 0) ||
                      (filter == CatalogFilter::PurelyTranscendental && e.strongly_rotund);
    if (keep) cat.entries.push_back(std::move(e));
  }
  return cat;
}

StagePresentation build_stage(std::shared_ptr<const BasePresentation> a0, int k, const EnumerationOptions& opts) {
  const ComplexityCap cap{static_cast<std::size_t>(std::max(k, 0)), static_cast<unsigned>(std::max(k, 0)),
                          std::max(k, 0)};
  return build_stage(std::move(a0), cap, k, opts);
}

StagePresentation build_stage(std::shared_ptr<const BasePresentation> a0, ComplexityCap cap, int stage,
                              const EnumerationOptions& opts) {
  StagePresentation s;
  s.stage = stage;
  s.cap = cap;
  s.current = GammaPresentation::trivial(a0);
  if (cap.n_max == 0 && stage == 0) return s;
  const auto cat = enumerate_extensions(a0, cap, CatalogFilter::All, opts);
  s.truncated = cat.truncated;
  std::size_t id = 0;
  for (const auto& e : cat.entries) {
    ++id;
    if (e.presentation.n() == 0) continue;
    StageLogEntry log;
    log.id = "E" + std::to_string(id);
    log.locus = e.presentation.locus().locus_strings();
    log.n = e.presentation.n();
    for (std::size_t j = 0; j < log.n; ++j) log.columns.push_back(s.current.n() + j);
    auto next = free_amalgam(*a0, s.current, e.presentation);
    next.history().clear();
    s.current = std::move(next);
    s.log.push_back(std::move(log));
  }
  for (const auto& l : s.log) s.current.history().push_back({l.id, l.columns});
  return s;
}

bool verify_stage(const StagePresentation& s, std::string* failure) {
  auto fail = [&](const std::string& why) {
    if (failure) *failure = why;
    return false;
  };
  int sum = 0;
  for (const auto& l : s.log) {
    const auto proj = project_blocks(s.current.locus(), l.columns);
    std::vector<std::string> gens = l.locus;
    const auto ext = VarietyPresentation::parse(s.current.base_ptr(), l.n, gens, true);
    if (!contained_in(proj.ideal(), ext.ideal())) return fail("embedding of " + l.id + " is unsound");
    sum += delta(GammaPresentation::unchecked(ext));
  }
  if (delta(s.current) != sum) return fail("delta of the stage differs from the sum over its factors");
  return true;
}

bool point_lies_on(const GammaPresentation& stage, const IntMatrix& m, const std::vector<int>& torsion,
                   const VarietyPresentation& v) {
  const auto& sl = stage.locus();
  const std::size_t rows = m.rows(), cols = m.cols(), nv = sl.nvars();
  std::vector<Poly> xs, num, den;
  for (std::size_t i = 0; i < rows; ++i) {
    Poly x(nv);
    Monomial pos(nv), neg(nv);
    for (std::size_t j = 0; j < cols; ++j) {
      const long e = m(i, j).get_si();
      if (e == 0) continue;
      x += Poly::variable(nv, sl.x_index(j)) * Rational(e);
      if (e > 0) pos[sl.y_index(j)] += static_cast<std::uint32_t>(e);
      if (e < 0) neg[sl.y_index(j)] += static_cast<std::uint32_t>(-e);
    }
    xs.push_back(std::move(x));
    num.push_back(Poly::from_term(pos, torsion.empty() ? 1 : torsion[i]));
    den.push_back(Poly::from_term(neg, 1));
  }
  const auto& gb = sl.ideal().groebner();
  for (const auto& g : v.ideal().groebner().elements()) {
    std::vector<std::uint32_t> deg(rows, 0);
    for (const auto& t : g.terms())
      for (std::size_t i = 0; i < rows; ++i) deg[i] = std::max(deg[i], t.mono[v.y_index(i)]);
    Poly acc(nv);
    for (const auto& t : g.terms()) {
      Poly term = Poly::constant(nv, t.coeff);
      for (std::size_t i = 0; i < rows; ++i) {
        if (t.mono[v.x_index(i)]) term = term * xs[i].pow(t.mono[v.x_index(i)]);
        const std::uint32_t ey = t.mono[v.y_index(i)];
        if (ey) term = term * num[i].pow(ey);
        if (deg[i] > ey) term = term * den[i].pow(deg[i] - ey);
      }
      Monomial c(nv);
      bool any = false;
      for (std::size_t k = 0; k < v.base().constants().size(); ++k) {
        c[sl.constant_index(k)] = t.mono[v.constant_index(k)];
        any = any || c[sl.constant_index(k)] > 0;
      }
      if (any) term = term * Poly::from_term(c, 1);
      acc += term;
    }
    if (!gb.normal_form(acc).is_zero()) return false;
  }
  return true;
}

GammaPointResult find_gamma_point(const StagePresentation& s, const VarietyPresentation& v,
                                  const std::vector<std::size_t>& a, int height, int g2_bound,
                                  std::size_t max_candidates) {
  if (!(v.base() == s.current.base())) throw BaseMismatch("find_gamma_point: variety over a different base");
  const auto f = freeness(v, g2_bound);
  if (!f.g1_free || !f.g2_free) throw PrecheckFailed("find_gamma_point: variety is not free");
  const auto vp = GammaPresentation::unchecked(v);
  if (is_strong(vp, {height, g2_bound, true}).verdict != RotundityVerdict::RotundUpTo)
    throw PrecheckFailed("find_gamma_point: variety is not rotund");
  if (variety_dim(v) != kGroupDim * v.n())
    throw PrecheckFailed("find_gamma_point: variety dimension must equal d·n");

  GammaPointResult result;
  result.height = height;
  const std::size_t m = v.n(), big = s.current.n();
  IntMatrix ea(a.size(), big);
  for (std::size_t i = 0; i < a.size(); ++i) ea(i, a[i]) = 1;
  auto independent = [&](const IntMatrix& cand) {
    return rational_rank(a.empty() ? cand : cand.stack(ea)) == m + a.size();
  };
  auto try_candidate = [&](const IntMatrix& cand, bool from_log) -> bool {
    ++result.candidates_checked;
    if (!independent(cand)) return false;
    for (std::size_t t = 0; t < (1u << m); ++t) {
      std::vector<int> tor(m);
      for (std::size_t i = 0; i < m; ++i) tor[i] = (t >> i) & 1 ? -1 : 1;
      if (point_lies_on(s.current, cand, tor, v)) {
        result.witness = GammaPointWitness{cand, tor, from_log};
        return true;
      }
    }
    return false;
  };

  for (const auto& l : s.log) {
    if (l.n != m) continue;
    IntMatrix sel(m, big);
    for (std::size_t i = 0; i < m; ++i) sel(i, l.columns[i]) = 1;
    if (try_candidate(sel, true)) return result;
  }
  if (big == 0 || m == 0) return result;

  // Bounded search: matrices by height, then lexicographically.
  const std::size_t cells = m * big;
  for (int h = 1; h <= height; ++h) {
    std::vector<int> val(cells, -h);
    for (;;) {
      const bool at_height = std::any_of(val.begin(), val.end(), [&](int x) { return std::abs(x) == h; });
      if (at_height) {
        if (result.candidates_checked >= max_candidates) {
          result.exhausted = false;
          return result;
        }
        IntMatrix cand(m, big);
        for (std::size_t c = 0; c < cells; ++c) cand(c / big, c % big) = val[c];
        if (try_candidate(cand, false)) return result;
      }
      std::size_t c = cells;
      while (c > 0 && val[c - 1] == h) val[--c] = -h;
      if (c == 0) break;
      ++val[c - 1];
    }
  }
  return result;
}

SchanuelResult schanuel_sweep(const GammaPresentation& p, int height) {
  SchanuelResult r;
  r.height = height;
  for (const auto& w : enumerate_subspaces(p.n(), height)) {
    ++r.subspaces_checked;
    const int d = delta(p, w);
    if (d < 0) {
      r.pass = false;
      r.subspace = w;
      r.delta = d;
      return r;
    }
  }
  return r;
}

}  // namespace gammaforge

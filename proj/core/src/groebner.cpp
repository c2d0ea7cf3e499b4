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

#include "gammaforge/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <mutex>
#include <numeric>
#include <sstream>

#include "gammaforge/errors.hpp"

namespace gammaforge {

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
  std::vector<std::size_t> vars(nvars);
  std::iota(vars.begin(), vars.end(), 0);
  return grevlex(std::move(vars));
}

MonomialOrder MonomialOrder::grevlex(std::vector<std::size_t> largest_first) {
  return blocks({std::move(largest_first)});
}

MonomialOrder MonomialOrder::lex(const std::vector<std::size_t>& largest_first) {
  std::vector<std::vector<std::size_t>> b;
  for (auto v : largest_first) b.push_back({v});
  return blocks(std::move(b));
}

MonomialOrder MonomialOrder::blocks(std::vector<std::vector<std::size_t>> blocks) {
  MonomialOrder o;
  std::erase_if(blocks, [](const auto& b) { return b.empty(); });
  for (const auto& b : blocks) o.nvars_ += b.size();
  o.blocks_ = std::move(blocks);
  return o;
}

MonomialOrder MonomialOrder::elimination(std::size_t nvars, const std::vector<std::size_t>& eliminated) {
  std::vector<bool> gone(nvars, false);
  for (auto v : eliminated) gone[v] = true;
  std::vector<std::size_t> kept;
  for (std::size_t v = 0; v < nvars; ++v)
    if (!gone[v]) kept.push_back(v);
  return blocks({eliminated, kept});
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& block : blocks_) {
    std::uint32_t da = 0, db = 0;
    for (auto v : block) {
      da += a[v];
      db += b[v];
    }
    if (da != db) return da <=> db;
    // Reverse lex tie-break: the smaller exponent in the smallest differing
    // variable wins.
    for (auto it = block.rbegin(); it != block.rend(); ++it) {
      if (a[*it] != b[*it]) return b[*it] <=> a[*it];
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::descriptor() const {
  std::ostringstream os;
  for (const auto& b : blocks_) {
    os << '[';
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
    os << ']';
  }
  return os.str();
}

namespace {

std::mutex& budget_mutex() {
  static std::mutex m;
  return m;
}

Budget& budget_storage() {
  static Budget b;
  return b;
}

}  // namespace

Budget Budget::defaults() {
  std::lock_guard lock(budget_mutex());
  return budget_storage();
}

void Budget::set_defaults(const Budget& b) {
  std::lock_guard lock(budget_mutex());
  budget_storage() = b;
}

std::vector<Term> sorted_terms(const Poly& p, const MonomialOrder& order) {
  std::vector<Term> t = p.terms();
  std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
  return t;
}

Monomial leading_monomial(const Poly& p, const MonomialOrder& order) {
  assert(!p.is_zero());
  const Term* best = &p.terms().front();
  for (const auto& t : p.terms())
    if (order.greater(t.mono, best->mono)) best = &t;
  return best->mono;
}

Rational leading_coefficient(const Poly& p, const MonomialOrder& order) {
  if (p.is_zero()) return 0;
  const Term* best = &p.terms().front();
  for (const auto& t : p.terms())
    if (order.greater(t.mono, best->mono)) best = &t;
  return best->coeff;
}

Poly primitive_part(const Poly& p, const MonomialOrder& order) {
  if (p.is_zero()) return p;
  Poly q = p.scaled_to_integers();
  if (leading_coefficient(q, order) < 0) q = -q;
  return q;
}

namespace {

// Polynomial in descending order for the engine.
using Ordered = std::vector<Term>;

Ordered to_ordered(const Poly& p, const MonomialOrder& order) { return sorted_terms(p, order); }

Poly from_ordered(std::size_t nvars, Ordered t) { return Poly::from_terms(nvars, std::move(t)); }

// a - c * m * b, both descending; result descending.
Ordered sub_scaled(const Ordered& a, std::size_t a_start, const Ordered& b, const Monomial& m, const Rational& c,
                   const MonomialOrder& order) {
  Ordered out;
  out.reserve(a.size() - a_start + b.size());
  std::size_t i = a_start, j = 0;
  Monomial bm;
  bool have_bm = false;
  while (i < a.size() || j < b.size()) {
    if (j < b.size() && !have_bm) {
      bm = b[j].mono * m;
      have_bm = true;
    }
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    if (i == a.size()) {
      out.push_back({std::move(bm), -c * b[j].coeff});
      have_bm = false;
      ++j;
      continue;
    }
    const auto cmp = order.compare(a[i].mono, bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(bm), -c * b[j].coeff});
      have_bm = false;
      ++j;
    } else {
      Rational v = a[i].coeff - c * b[j].coeff;
      if (v != 0) out.push_back({a[i].mono, std::move(v)});
      ++i;
      ++j;
      have_bm = false;
    }
  }
  return out;
}

void make_monic(Ordered& p) {
  if (p.empty()) return;
  const Rational inv = 1 / p.front().coeff;
  for (auto& t : p) t.coeff *= inv;
}

// Full reduction of p by `basis` (descending polys). `skip` excludes one index.
Ordered full_reduce(Ordered p, const std::vector<Ordered>& basis, const MonomialOrder& order,
                    std::size_t skip = static_cast<std::size_t>(-1)) {
  Ordered rem;
  std::size_t head = 0;
  while (head < p.size()) {
    const Term& lt = p[head];
    std::size_t k = 0;
    for (; k < basis.size(); ++k) {
      if (k == skip || basis[k].empty()) continue;
      if (basis[k].front().mono.divides(lt.mono)) break;
    }
    if (k == basis.size()) {
      rem.push_back(lt);
      ++head;
      continue;
    }
    const Monomial q = basis[k].front().mono.quotient_of(lt.mono);
    const Rational c = lt.coeff / basis[k].front().coeff;
    p = sub_scaled(p, head, basis[k], q, c, order);
    head = 0;
  }
  return rem;
}

Ordered s_poly_ordered(const Ordered& f, const Ordered& g, const MonomialOrder& order) {
  const Monomial l = f.front().mono.lcm(g.front().mono);
  const Monomial mf = f.front().mono.quotient_of(l);
  const Monomial mg = g.front().mono.quotient_of(l);
  Ordered fm;
  fm.reserve(f.size());
  const Rational cf = 1 / f.front().coeff;
  for (const auto& t : f) fm.push_back({t.mono * mf, t.coeff * cf});
  return sub_scaled(fm, 0, g, mg, 1 / g.front().coeff, order);
}

std::uint32_t max_degree(const Ordered& p) {
  std::uint32_t d = 0;
  for (const auto& t : p) d = std::max(d, t.mono.degree());
  return d;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(std::size_t nvars, const MonomialOrder& order, const Budget& budget)
      : nvars_(nvars), order_(order), budget_(budget) {}

  void add_input(const Poly& p) {
    Ordered o = full_reduce(to_ordered(p, order_), basis_, order_);
    if (o.empty()) return;
    make_monic(o);
    insert(std::move(o));
  }

  void run() {
    while (!pairs_.empty()) {
      if (unit_) return;
      // Normal strategy: smallest lcm first, ties by index for determinism.
      auto best = pairs_.begin();
      for (auto it = pairs_.begin() + 1; it != pairs_.end(); ++it) {
        const auto c = order_.compare(it->lcm, best->lcm);
        if (c < 0 || (c == 0 && std::tie(it->j, it->i) < std::tie(best->j, best->i))) best = it;
      }
      Pair pr = std::move(*best);
      pairs_.erase(best);
      set_pending(pr.i, pr.j, false);
      if (chain_criterion(pr)) continue;
      Ordered s = s_poly_ordered(basis_[pr.i], basis_[pr.j], order_);
      s = full_reduce(std::move(s), basis_, order_);
      if (s.empty()) continue;
      make_monic(s);
      insert(std::move(s));
    }
  }

  std::vector<Poly> reduced() const {
    if (unit_) return {Poly::constant(nvars_, 1)};
    // Minimalize.
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (i == j) continue;
        const auto& li = basis_[i].front().mono;
        const auto& lj = basis_[j].front().mono;
        if (lj.divides(li) && (lj != li || j < i)) redundant = true;
      }
      if (!redundant) keep.push_back(i);
    }
    std::vector<Ordered> minimal;
    for (auto i : keep) minimal.push_back(basis_[i]);
    // Interreduce tails.
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      Ordered tail(minimal[i].begin() + 1, minimal[i].end());
      Ordered red = full_reduce(std::move(tail), minimal, order_, i);
      Ordered full;
      full.reserve(red.size() + 1);
      full.push_back(minimal[i].front());
      full.insert(full.end(), red.begin(), red.end());
      make_monic(full);
      minimal[i] = std::move(full);
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const Ordered& a, const Ordered& b) { return order_.greater(b.front().mono, a.front().mono); });
    std::vector<Poly> out;
    for (auto& m : minimal) out.push_back(from_ordered(nvars_, std::move(m)));
    return out;
  }

 private:
  void insert(Ordered g) {
    if (g.front().mono.is_one()) {
      unit_ = true;
      return;
    }
    if (max_degree(g) > budget_.max_degree)
      throw ResourceLimit("groebner: polynomial degree exceeds budget (" + std::to_string(budget_.max_degree) + ")");
    if (basis_.size() + 1 > budget_.max_basis)
      throw ResourceLimit("groebner: basis size exceeds budget (" + std::to_string(budget_.max_basis) + ")");
    const std::size_t k = basis_.size();
    basis_.push_back(std::move(g));
    pending_.resize(basis_.size());
    for (auto& row : pending_) row.resize(basis_.size(), false);
    for (std::size_t i = 0; i < k; ++i) {
      const auto& li = basis_[i].front().mono;
      const auto& lk = basis_[k].front().mono;
      // Product criterion: coprime leading monomials reduce to zero.
      if (li.coprime(lk)) continue;
      pairs_.push_back({i, k, li.lcm(lk)});
      set_pending(i, k, true);
    }
    if (pairs_.size() > budget_.max_pairs)
      throw ResourceLimit("groebner: S-pair queue exceeds budget (" + std::to_string(budget_.max_pairs) + ")");
  }

  void set_pending(std::size_t i, std::size_t j, bool v) {
    pending_[i][j] = v;
    pending_[j][i] = v;
  }

  // Buchberger's chain criterion: (i,j) is redundant when some k has
  // LM(k) | lcm(i,j) and neither (i,k) nor (j,k) is still pending.
  bool chain_criterion(const Pair& p) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      if (!basis_[k].front().mono.divides(p.lcm)) continue;
      if (!pending_[p.i][k] && !pending_[p.j][k]) return true;
    }
    return false;
  }

  std::size_t nvars_;
  const MonomialOrder& order_;
  Budget budget_;
  std::vector<Ordered> basis_;
  std::vector<Pair> pairs_;
  std::vector<std::vector<bool>> pending_;
  bool unit_ = false;
};

}  // namespace

Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order) {
  return from_ordered(f.nvars(), s_poly_ordered(to_ordered(f, order), to_ordered(g, order), order));
}

Poly reduce(const Poly& p, std::span<const Poly> divisors, const MonomialOrder& order) {
  std::vector<Ordered> basis;
  for (const auto& d : divisors)
    if (!d.is_zero()) basis.push_back(to_ordered(d, order));
  return from_ordered(p.nvars(), full_reduce(to_ordered(p, order), basis, order));
}

GroebnerBasis::GroebnerBasis(MonomialOrder order, std::size_t nvars, std::vector<Poly> reduced)
    : order_(std::move(order)), nvars_(nvars), elements_(std::move(reduced)) {
  for (const auto& e : elements_) leads_.push_back(leading_monomial(e, order_));
}

bool GroebnerBasis::is_unit() const {
  return elements_.size() == 1 && elements_.front().is_constant() && !elements_.front().is_zero();
}

Poly GroebnerBasis::normal_form(const Poly& p) const {
  if (is_unit()) return Poly(p.nvars());
  return reduce(p, elements_, order_);
}

GroebnerBasis groebner(std::span<const Poly> generators, std::size_t nvars, const MonomialOrder& order,
                       const Budget& budget) {
  assert(order.nvars() == nvars);
  Buchberger engine(nvars, order, budget);
  // Feed low-degree generators first; the reduced basis does not depend on it.
  std::vector<const Poly*> sorted;
  for (const auto& g : generators)
    if (!g.is_zero()) sorted.push_back(&g);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Poly* a, const Poly* b) { return a->total_degree() < b->total_degree(); });
  for (const auto* g : sorted) engine.add_input(*g);
  engine.run();
  return GroebnerBasis(order, nvars, engine.reduced());
}

std::string format_poly(const Poly& p, const std::vector<std::string>& names, const MonomialOrder& order) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : sorted_terms(p, order)) {
    Rational c = t.coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const bool unit = (c == 1);
    bool wrote = false;
    if (!unit || t.mono.is_one()) {
      os << c;
      wrote = true;
    }
    for (std::size_t v = 0; v < t.mono.size(); ++v) {
      if (!t.mono[v]) continue;
      if (wrote) os << '*';
      os << names[v];
      if (t.mono[v] > 1) os << '^' << t.mono[v];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace gammaforge

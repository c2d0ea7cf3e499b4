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

#include "gammaforge/ideal.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "gammaforge/errors.hpp"

namespace gammaforge {

Ideal::Ideal(std::vector<std::string> vars, std::vector<Poly> generators)
    : vars_(std::move(vars)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    assert(g.nvars() == vars_.size() || g.is_zero());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::parse(std::vector<std::string> vars, const std::vector<std::string>& generators) {
  std::vector<Poly> gens;
  for (const auto& s : generators) gens.push_back(parse_poly(s, vars));
  return Ideal(std::move(vars), std::move(gens));
}

std::optional<std::size_t> Ideal::index_of(const std::string& var) const {
  const auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

const GroebnerBasis& Ideal::groebner() const {
  static thread_local std::map<std::size_t, MonomialOrder> orders;
  auto it = orders.find(vars_.size());
  if (it == orders.end()) it = orders.emplace(vars_.size(), MonomialOrder::grevlex(vars_.size())).first;
  return groebner(it->second);
}

const GroebnerBasis& Ideal::groebner(const MonomialOrder& order) const {
  const std::string key = order.descriptor();
  {
    std::lock_guard lock(cache_->mutex);
    const auto it = cache_->bases.find(key);
    if (it != cache_->bases.end()) return *it->second;
  }
  auto basis = std::make_shared<const GroebnerBasis>(gammaforge::groebner(gens_, vars_.size(), order));
  std::lock_guard lock(cache_->mutex);
  return *cache_->bases.emplace(key, std::move(basis)).first->second;
}

Ideal Ideal::with_generators(std::span<const Poly> extra) const {
  std::vector<Poly> gens = gens_;
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal(vars_, std::move(gens));
}

std::vector<std::string> Ideal::basis_strings() const {
  return basis_strings(MonomialOrder::grevlex(vars_.size()));
}

std::vector<std::string> Ideal::basis_strings(const MonomialOrder& order) const {
  std::vector<std::string> out;
  for (const auto& g : groebner(order).elements()) out.push_back(format_poly(primitive_part(g, order), vars_, order));
  return out;
}

bool same_ideal(const Ideal& a, const Ideal& b) {
  return a.vars() == b.vars() && a.groebner() == b.groebner();
}

bool contained_in(const Ideal& a, const Ideal& b) {
  assert(a.vars() == b.vars());
  const auto& gb = b.groebner();
  return std::all_of(a.generators().begin(), a.generators().end(), [&](const Poly& p) { return gb.contains(p); });
}

std::vector<std::size_t> max_independent_set(std::span<const Monomial> leads, std::size_t nvars) {
  // Complement of a minimum hitting set of the lead supports.
  std::vector<std::vector<std::size_t>> supports;
  for (const auto& m : leads) {
    std::vector<std::size_t> s;
    for (std::size_t v = 0; v < nvars; ++v)
      if (m[v]) s.push_back(v);
    supports.push_back(std::move(s));
  }
  std::sort(supports.begin(), supports.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  // Drop supersets of other supports.
  std::vector<std::vector<std::size_t>> minimal;
  for (const auto& s : supports) {
    const bool dominated = std::any_of(minimal.begin(), minimal.end(), [&](const auto& m) {
      return std::includes(s.begin(), s.end(), m.begin(), m.end());
    });
    if (!dominated) minimal.push_back(s);
  }

  std::vector<bool> hit(nvars, false);
  std::vector<bool> best;
  std::size_t best_size = nvars + 1;
  std::size_t chosen = 0;
  std::function<void()> search = [&]() {
    if (chosen >= best_size) return;
    const auto unhit = std::find_if(minimal.begin(), minimal.end(), [&](const auto& s) {
      return std::none_of(s.begin(), s.end(), [&](std::size_t v) { return hit[v]; });
    });
    if (unhit == minimal.end()) {
      best = hit;
      best_size = chosen;
      return;
    }
    for (auto v : *unhit) {
      hit[v] = true;
      ++chosen;
      search();
      --chosen;
      hit[v] = false;
    }
  };
  search();
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < nvars; ++v)
    if (!best[v]) out.push_back(v);
  return out;
}

std::size_t ideal_dim(const Ideal& ideal) {
  const auto& gb = ideal.groebner();
  if (gb.is_unit()) throw DimensionOfUnitIdeal();
  return max_independent_set(gb.leading_monomials(), ideal.nvars()).size();
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& keep) {
  std::vector<std::size_t> keep_idx;
  std::vector<bool> kept(ideal.nvars(), false);
  for (const auto& name : keep) {
    const auto i = ideal.index_of(name);
    if (!i) throw Error("eliminate: unknown variable '" + name + "'");
    keep_idx.push_back(*i);
    kept[*i] = true;
  }
  std::vector<std::size_t> gone;
  for (std::size_t v = 0; v < ideal.nvars(); ++v)
    if (!kept[v]) gone.push_back(v);
  const auto order = MonomialOrder::blocks({gone, keep_idx});
  const auto& gb = ideal.groebner(order);

  std::vector<std::size_t> index_map(ideal.nvars(), 0);
  for (std::size_t k = 0; k < keep_idx.size(); ++k) index_map[keep_idx[k]] = k;
  std::vector<Poly> out;
  for (const auto& g : gb.elements()) {
    const auto s = g.support();
    const bool only_kept = std::none_of(gone.begin(), gone.end(), [&](std::size_t v) { return s[v]; });
    if (only_kept) out.push_back(g.remap(keep.size(), index_map));
  }
  return Ideal(keep, std::move(out));
}

Ideal saturate(const Ideal& ideal, const Poly& f) {
  assert(!f.is_zero());
  std::string t = "_t";
  while (ideal.index_of(t)) t += "_";
  std::vector<std::string> vars = ideal.vars();
  vars.push_back(t);
  const std::size_t n = vars.size();
  std::vector<std::size_t> index_map(ideal.nvars());
  for (std::size_t i = 0; i < index_map.size(); ++i) index_map[i] = i;
  std::vector<Poly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.remap(n, index_map));
  gens.push_back(Poly::variable(n, n - 1) * f.remap(n, index_map) - Poly::constant(n, 1));
  return eliminate(Ideal(vars, std::move(gens)), ideal.vars());
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  assert(a.vars() == b.vars());
  return a.with_generators(b.generators());
}

Ideal embed(const Ideal& ideal, const std::vector<std::string>& vars) {
  std::vector<std::size_t> index_map;
  for (const auto& v : ideal.vars()) {
    const auto it = std::find(vars.begin(), vars.end(), v);
    if (it == vars.end()) throw Error("embed: variable '" + v + "' missing from target ring");
    index_map.push_back(static_cast<std::size_t>(it - vars.begin()));
  }
  std::vector<Poly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.remap(vars.size(), index_map));
  return Ideal(vars, std::move(gens));
}

Ideal rename(const Ideal& ideal, const std::map<std::string, std::string>& mapping) {
  std::vector<std::string> vars = ideal.vars();
  for (auto& v : vars) {
    const auto it = mapping.find(v);
    if (it != mapping.end()) v = it->second;
  }
  return Ideal(std::move(vars), ideal.generators());
}

std::optional<std::pair<Poly, Poly>> reducibility_hint(const Ideal& ideal, std::span<const std::size_t> vars) {
  if (vars.size() > 3) return std::nullopt;
  const std::size_t n = ideal.nvars();
  std::vector<Poly> candidates;
  const std::size_t slots = vars.size() + 1;
  std::size_t total = 1;
  for (std::size_t i = 0; i < slots; ++i) total *= 3;
  const auto& gb = ideal.groebner();
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    Poly p = Poly::constant(n, static_cast<long>(c % 3) - 1);
    c /= 3;
    bool has_var = false;
    for (auto v : vars) {
      const long coeff = static_cast<long>(c % 3) - 1;
      c /= 3;
      if (coeff) {
        p += Poly::variable(n, v) * Rational(coeff);
        has_var = true;
      }
    }
    if (has_var && !gb.contains(p)) candidates.push_back(std::move(p));
  }
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = i; j < candidates.size(); ++j)
      if (gb.contains(candidates[i] * candidates[j])) return std::make_pair(candidates[i], candidates[j]);
  return std::nullopt;
}

}  // namespace gammaforge

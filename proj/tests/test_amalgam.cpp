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

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "gammaforge/amalgam.hpp"
#include "support/random_loci.hpp"

using namespace gammaforge;

namespace {

const auto kBase = std::make_shared<const BasePresentation>();

VarietyPresentation loc(std::size_t n, const std::vector<std::string>& gens) {
  return VarietyPresentation::parse(kBase, n, gens, true);
}

GammaPresentation pres(std::size_t n, const std::vector<std::string>& gens) {
  return GammaPresentation::create(loc(n, gens), 3);
}

std::vector<std::string> keys(const ExtensionCatalog& c) {
  std::vector<std::string> out;
  for (const auto& e : c.entries) out.push_back(e.key);
  return out;
}

bool has(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

// Certified-strong random presentations with n = 1.
std::vector<GammaPresentation> strong_corpus(std::mt19937& rng, std::size_t count) {
  std::vector<GammaPresentation> out;
  for (auto& p : testing::random_presentations(rng, 4 * count, 1, 2, 1)) {
    if (out.size() == count) break;
    if (is_strong(p, {3, 4, false}).verdict == RotundityVerdict::RotundUpTo) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

TEST_CASE("free_amalgam examples") {
  const auto curve = pres(1, {"y1 - x1 - 1"});
  const auto trivial = GammaPresentation::trivial(kBase);
  {
    const auto a = free_amalgam(*kBase, trivial, curve);
    CHECK(a.n() == 1);
    CHECK(same_ideal(a.locus().ideal(), curve.locus().ideal()));
  }
  {
    const auto a = free_amalgam(*kBase, curve, curve);
    CHECK(a.n() == 2);
    CHECK(same_ideal(a.locus().ideal(), loc(2, {"y1 - x1 - 1", "y2 - x2 - 1"}).ideal()));
    CHECK(variety_dim(a.locus()) == 2);
    CHECK(delta(a) == 0);
  }
  {
    const auto generic = pres(1, {});
    const auto a = free_amalgam(*kBase, generic, curve);
    CHECK(delta(a) == 1);
    const IntMatrix left{{1, 0}};
    CHECK(relative_delta(a, IntMatrix::identity(2), left) == delta(curve));
    REQUIRE(a.history().size() == 2);
    CHECK(a.history()[1].columns == std::vector<std::size_t>{1});
  }
  const auto other = std::make_shared<const BasePresentation>(std::vector<BaseConstant>{{"s", "s^2 - 2"}},
                                                              std::vector<GammaElement>{});
  CHECK_THROWS_AS(free_amalgam(*other, curve, curve), BaseMismatch);
}

TEST_CASE("irreducibility certificates") {
  CHECK(certify_irreducible(loc(1, {})) == std::optional<bool>(true));
  CHECK(certify_irreducible(loc(1, {"y1 - x1^2"})) == std::optional<bool>(true));
  CHECK(certify_irreducible(loc(1, {"x1*y1 - 1"})) == std::optional<bool>(true));
  CHECK(certify_irreducible(loc(1, {"x1^2 - y1^2"})) == std::optional<bool>(false));
  CHECK(certify_irreducible(loc(1, {"x1^2 - 2"})) == std::optional<bool>(false));
  CHECK_FALSE(certify_irreducible(loc(1, {"y1 - x1^3"})).has_value());
}

TEST_CASE("canonical representative under basis changes") {
  CHECK(catalog_key(canonical_representative(loc(1, {"y1 + x1 + 1"}))) == "1:y1 - x1 - 1");
  CHECK(catalog_key(canonical_representative(loc(1, {"y1 - x1 - 1"}))) == "1:y1 - x1 - 1");
  // y -> 1/y maps y - x - 1 to x*y - y + 1, which is of higher degree.
  CHECK(catalog_key(canonical_representative(loc(1, {"x1*y1 - y1 + 1"}))) == "1:y1 - x1 - 1");
  CHECK(catalog_key(canonical_representative(loc(2, {"y2 - x2 - 1"}))) ==
        catalog_key(canonical_representative(loc(2, {"y1 - x1 - 1"}))));
}

TEST_CASE("enumerate_extensions examples") {
  const auto alg = enumerate_extensions(kBase, {1, 1, 1}, CatalogFilter::GammaAlgebraic);
  CHECK(has(keys(alg), "1:y1 - x1 - 1"));
  CHECK_FALSE(has(keys(alg), "1:x1"));
  CHECK_FALSE(has(keys(alg), "1:"));
  CHECK_FALSE(alg.truncated);

  const auto tr = enumerate_extensions(kBase, {1, 1, 1}, CatalogFilter::PurelyTranscendental);
  CHECK(has(keys(tr), "1:"));
  for (const auto& e : tr.entries) CHECK((e.presentation.n() == 0 || e.delta > 0));

  const auto zero = enumerate_extensions(kBase, {0, 3, 3}, CatalogFilter::All);
  REQUIRE(zero.entries.size() == 1);
  CHECK(zero.entries[0].presentation.n() == 0);

  const auto all = enumerate_extensions(kBase, {1, 1, 1}, CatalogFilter::All);
  const auto all_keys = keys(all);
  const std::set<std::string> distinct(all_keys.begin(), all_keys.end());
  CHECK(distinct.size() == all.entries.size());
  for (const auto& e : all.entries) {
    CHECK(is_strong(e.presentation, {1, 4, false}).verdict == RotundityVerdict::RotundUpTo);
    CHECK(e.presentation.locus().basis_strings() ==
          canonical_representative(e.presentation.locus()).basis_strings());
  }
}

TEST_CASE("enumeration truncates on budget") {
  const auto c = enumerate_extensions(kBase, {1, 2, 1}, CatalogFilter::All, {4, 10});
  CHECK(c.truncated);
  CHECK(c.candidates <= 10);
}

TEST_CASE("build_stage examples") {
  const auto s0 = build_stage(kBase, 0);
  CHECK(s0.current.n() == 0);
  CHECK(s0.log.empty());

  const auto s1 = build_stage(kBase, 1);
  CHECK(s1.current.n() == 4);
  CHECK(delta(s1.current) == 1);
  std::set<std::string> logged;
  for (const auto& l : s1.log) logged.insert(std::to_string(l.n) + ":" + [&] {
    std::string j;
    for (std::size_t i = 0; i < l.locus.size(); ++i) j += (i ? "; " : "") + l.locus[i];
    return j;
  }());
  CHECK(logged.count("1:"));
  CHECK(logged.count("1:y1 - x1 - 1"));
  for (const auto& e : enumerate_extensions(kBase, {1, 1, 1}, CatalogFilter::All).entries)
    if (e.presentation.n() > 0) CHECK(logged.count(e.key));
  std::string why;
  CHECK(verify_stage(s1, &why));

  const auto again = build_stage(kBase, 1);
  CHECK(again.current.locus().basis_strings() == s1.current.locus().basis_strings());
  CHECK(again.log == s1.log);
}

TEST_CASE("find_gamma_point examples") {
  const auto s1 = build_stage(kBase, 1);
  for (const auto& l : s1.log) {
    const auto v = loc(l.n, l.locus);
    if (variety_dim(v) != static_cast<int>(l.n)) continue;
    const auto r = find_gamma_point(s1, v, {}, 1);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->from_log);
    for (std::size_t i = 0; i < l.n; ++i) CHECK(r.witness->m(i, l.columns[i]) == 1);
    CHECK(point_lies_on(s1.current, r.witness->m, r.witness->torsion, v));
  }
  {
    // The mirror curve is reached through a torsion shift.
    const auto r = find_gamma_point(s1, loc(1, {"y1 + x1 + 1"}), {}, 1);
    REQUIRE(r.witness.has_value());
    CHECK(point_lies_on(s1.current, r.witness->m, r.witness->torsion, loc(1, {"y1 + x1 + 1"})));
  }
  const auto conic = loc(1, {"y1 - x1^2 - 1"});
  const auto miss = find_gamma_point(s1, conic, {}, 1);
  CHECK_FALSE(miss.witness.has_value());
  CHECK(miss.exhausted);
  const auto s2 = build_stage(kBase, {1, 2, 1}, 2);
  const auto hit = find_gamma_point(s2, conic, {}, 1);
  REQUIRE(hit.witness.has_value());
  CHECK(point_lies_on(s2.current, hit.witness->m, hit.witness->torsion, conic));

  CHECK_THROWS_AS(find_gamma_point(s1, loc(1, {"x1 - 2"}), {}, 1), PrecheckFailed);
  CHECK_THROWS_AS(find_gamma_point(s1, loc(1, {}), {}, 1), PrecheckFailed);
  CHECK_THROWS_AS(find_gamma_point(s1, loc(2, {"x2 - x1", "y2 - y1"}), {}, 1), PrecheckFailed);
}

TEST_CASE("find_gamma_point respects independence from the given columns") {
  const auto s1 = build_stage(kBase, 1);
  const auto curve = loc(1, {"y1 - x1 - 1"});
  const auto first = find_gamma_point(s1, curve, {}, 1);
  REQUIRE(first.witness.has_value());
  std::vector<std::size_t> used;
  for (std::size_t j = 0; j < s1.current.n(); ++j)
    if (first.witness->m(0, j) != 0) used.push_back(j);
  const auto second = find_gamma_point(s1, curve, used, 1);
  if (second.witness) {
    IntMatrix ea(used.size(), s1.current.n());
    for (std::size_t i = 0; i < used.size(); ++i) ea(i, used[i]) = 1;
    CHECK(rational_rank(second.witness->m.stack(ea)) == 1 + used.size());
    CHECK(point_lies_on(s1.current, second.witness->m, second.witness->torsion, curve));
  }
}

TEST_CASE("schanuel_sweep examples") {
  CHECK(schanuel_sweep(GammaPresentation::trivial(kBase), 2).pass);
  const auto bad = GammaPresentation::unchecked(loc(1, {"x1 - 1", "y1 - 3"}));
  const auto r = schanuel_sweep(bad, 2);
  CHECK_FALSE(r.pass);
  CHECK(r.delta == -1);
  CHECK(*r.subspace == IntMatrix{{1}});
  CHECK(schanuel_sweep(build_stage(kBase, 1).current, 1).pass);
}

TEST_CASE("property: free amalgams add delta, stay disjoint and strong") {
  std::mt19937 rng(211);
  const auto corpus = strong_corpus(rng, 12);
  REQUIRE(corpus.size() >= 8);
  const RotundityOptions opts{3, 4, true};
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& l = corpus[i];
    const auto& r = corpus[(i * 5 + 3) % corpus.size()];
    const auto a = free_amalgam(*kBase, l, r);
    CHECK(delta(a) == delta(l) + delta(r));
    const IntMatrix left{{1, 0}}, right{{0, 1}};
    CHECK(subspace_intersection(left, right).rows() == 0);
    const auto ra = is_strongly_rotund(a, opts).verdict;
    CHECK(ra != RotundityVerdict::NotRotund);
    const bool both = is_strongly_rotund(l, opts).verdict == RotundityVerdict::StronglyRotundUpTo &&
                      is_strongly_rotund(r, opts).verdict == RotundityVerdict::StronglyRotundUpTo;
    if (both) CHECK(ra == RotundityVerdict::StronglyRotundUpTo);
  }
}

TEST_CASE("property: stage logs grow monotonically with the cap") {
  const auto s1 = build_stage(kBase, 1);
  const auto s2 = build_stage(kBase, {1, 2, 1}, 2);
  std::set<std::vector<std::string>> later;
  for (const auto& l : s2.log) later.insert(l.locus);
  for (const auto& l : s1.log) CHECK(later.count(l.locus));
}

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
#include "gammaforge/gamma.hpp"
#include "support/random_loci.hpp"

using namespace gammaforge;

namespace {

std::shared_ptr<const BasePresentation> rational_base() { return std::make_shared<const BasePresentation>(); }

GammaPresentation pres(std::size_t n, const std::vector<std::string>& gens) {
  return GammaPresentation::create(VarietyPresentation::parse(rational_base(), n, gens, true), 3);
}

GammaPresentation raw(std::size_t n, const std::vector<std::string>& gens) {
  return GammaPresentation::unchecked(VarietyPresentation::parse(rational_base(), n, gens, true));
}

IntMatrix e(std::size_t n, std::size_t i) {
  IntMatrix m(1, n);
  m(0, i) = 1;
  return m;
}

const RotundityOptions kH3{3, 4, false};

}  // namespace

TEST_CASE("delta examples") {
  CHECK(delta(pres(2, {})) == 2);
  CHECK(delta(GammaPresentation::trivial(rational_base())) == 0);
  CHECK(delta(pres(1, {"y1 - x1 - 1"})) == 0);
  const auto diag = raw(2, {"x2 - x1", "y2 - y1"});
  CHECK(delta(diag, IntMatrix{{1, -1}}) == -1);
  CHECK(delta(diag, IntMatrix{{2, -2}, {0, 0}}) == -1);
}

TEST_CASE("is_strong examples") {
  const auto curve = pres(1, {"y1 - x1 - 1"});
  const auto r = is_strong(curve, kH3);
  CHECK(r.verdict == RotundityVerdict::RotundUpTo);
  CHECK(r.bound == 3);

  const auto diag = raw(2, {"x2 - x1", "y2 - y1"});
  const auto nf = is_strong(diag, {1, 4, false});
  CHECK(nf.verdict == RotundityVerdict::NotFree);
  REQUIRE(nf.freeness.has_value());
  CHECK(nf.freeness->g1_witness->r == IntVector{1, -1});
  const auto nr = is_strong(diag, {1, 4, true});
  CHECK(nr.verdict == RotundityVerdict::NotRotund);
  CHECK(*nr.witness == IntMatrix{{1, -1}, {0, 0}});
  CHECK(variety_dim(apply_matrix(*nr.witness, diag.locus())) == 0);

  const auto generic = pres(1, {});
  CHECK(is_strong(generic, kH3).verdict == RotundityVerdict::RotundUpTo);
  CHECK(is_strongly_rotund(generic, kH3).verdict == RotundityVerdict::StronglyRotundUpTo);
}

TEST_CASE("is_strongly_rotund examples") {
  const auto curve = pres(1, {"y1 - x1 - 1"});
  const auto r = is_strongly_rotund(curve, kH3);
  CHECK(r.verdict == RotundityVerdict::RotundUpTo);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == IntMatrix{{1}});
  CHECK(r.witness_dim == 1);

  const auto diag = raw(2, {"x2 - x1", "y2 - y1"});
  const auto d = is_strongly_rotund(diag, {1, 4, true});
  CHECK(d.verdict == RotundityVerdict::NotRotund);
  CHECK(*d.witness == IntMatrix{{1, -1}, {0, 0}});
}

TEST_CASE("hull and gammadim examples") {
  const auto p = pres(2, {"x2 - x1^2", "y2 - 2*y1"});
  const auto full = IntMatrix::identity(2);
  {
    const auto h = hull(p, full, 2);
    CHECK(h.subspace == full);
    CHECK(h.delta_value == delta(p));
  }
  CHECK(delta(p, e(2, 0)) == 1);
  CHECK(delta(p) == 0);
  {
    const auto h = hull(p, e(2, 0), 2);
    CHECK(h.subspace == full);
    CHECK(h.delta_value == 0);
    CHECK(h.certified_up_to == 2);
  }
  CHECK(gammadim(p, e(2, 0), 2) == 0);

  const auto generic = pres(2, {});
  {
    const auto h = hull(generic, e(2, 0), 2);
    CHECK(h.subspace == e(2, 0));
    CHECK(h.delta_value == 1);
  }
  CHECK(gammadim(generic, full, 2) == 2);
  CHECK(gammadim(generic, IntMatrix(0, 2), 2) == 0);
  CHECK(gammadim(pres(3, {}), IntMatrix::identity(3), 1) == 3);
}

TEST_CASE("classify examples") {
  CHECK(classify(pres(1, {"y1 - x1 - 1"}), kH3).kind == ExtensionClass::StrongGammaAlgebraic);
  CHECK(classify(pres(1, {}), kH3).kind == ExtensionClass::PurelyGammaTranscendental);
  const auto c = classify(raw(2, {"x2 - x1", "y2 - y1"}), kH3);
  CHECK(c.kind == ExtensionClass::NotStrong);
  CHECK(*c.witness == IntMatrix{{1, -1}, {0, 0}});
  CHECK(classify(pres(1, {"x1 - 3"}), kH3).kind == ExtensionClass::Invalid);
  CHECK(classify(pres(2, {"y2 - x2 - 1"}), kH3).kind == ExtensionClass::StrongMixed);
  CHECK(classify(pres(2, {"y2 - x1 - 1"}), kH3).kind == ExtensionClass::PurelyGammaTranscendental);
  CHECK(classify(GammaPresentation::trivial(rational_base()), kH3).kind ==
        ExtensionClass::PurelyGammaTranscendental);
}

TEST_CASE("kernel preservation validation") {
  auto clause_of = [](std::size_t n, const std::vector<std::string>& gens) -> std::string {
    try {
      pres(n, gens);
    } catch (const ValidationError& e) {
      return e.clause();
    }
    return "";
  };
  CHECK(clause_of(1, {"x1", "y1 - 3"}) == "ker2");
  CHECK(clause_of(1, {"x1 - 2", "y1 - 1"}) == "ker1");
  CHECK(clause_of(1, {"x1 - 1", "y1 - 3"}) == "gamma-base");
  CHECK(clause_of(1, {"x1", "y1 - x1 - 1"}) == "");  // identity element
  CHECK(clause_of(1, {"x1"}) == "ker2");             // x ≡ 0 with y transcendental
  CHECK(clause_of(1, {"y1 + 1"}) == "ker1");         // y ≡ -1, a torsion point
  CHECK(clause_of(2, {"x2 - x1", "y2 - y1"}) == "");
  CHECK(clause_of(1, {"y1^2"}) == "empty");
  CHECK_THROWS_AS(GammaPresentation::create(VarietyPresentation::parse(rational_base(), 1, {}, false), 3),
                  ValidationError);

  // A declared base point makes the corresponding basis point legitimate.
  auto base = std::make_shared<const BasePresentation>(std::vector<BaseConstant>{},
                                                       std::vector<GammaElement>{{"1", "3", false}});
  CHECK_NOTHROW(GammaPresentation::create(VarietyPresentation::parse(base, 1, {"x1 - 2", "y1 - 9"}, true), 3));
}

TEST_CASE("subspace enumeration against a brute-force oracle") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (int h = 1; h <= 2; ++h) {
      std::set<std::vector<Integer>> oracle;
      const std::size_t rmax = n == 3 ? 2 : n;
      for (std::size_t r = 1; r <= rmax; ++r) {
        const std::size_t cells = r * n;
        std::vector<int> v(cells, -h);
        for (;;) {
          IntMatrix m(r, n);
          for (std::size_t k = 0; k < cells; ++k) m(k / n, k % n) = v[k];
          if (rational_rank(m) == r) {
            const auto c = canonical_subspace(m);
            if (height(c) <= h) oracle.insert(std::vector<Integer>(c.entries().begin(), c.entries().end()));
          }
          std::size_t k = 0;
          while (k < cells && v[k] == h) v[k++] = -h;
          if (k == cells) break;
          ++v[k];
        }
      }
      std::set<std::vector<Integer>> got;
      const auto all = enumerate_subspaces(n, h, 1, rmax);
      for (const auto& m : all) got.insert(std::vector<Integer>(m.entries().begin(), m.entries().end()));
      CHECK(got.size() == all.size());
      CHECK(got == oracle);
    }
  const auto two = enumerate_subspaces(2, 1);
  REQUIRE(two.size() == 5);
  CHECK(two[0] == IntMatrix{{0, 1}});
  CHECK(two[1] == IntMatrix{{1, -1}});
  CHECK(two[4] == IntMatrix::identity(2));
}

TEST_CASE("subspace lattice operations") {
  const IntMatrix a{{1, 0, 0}, {0, 1, 0}}, b{{0, 1, 0}, {0, 0, 1}};
  CHECK(subspace_intersection(a, b) == IntMatrix{{0, 1, 0}});
  CHECK(subspace_sum(a, b) == IntMatrix::identity(3));
  CHECK(subspace_intersection(IntMatrix{{1, 1}}, IntMatrix{{1, -1}}).rows() == 0);
  CHECK(subspace_contains(a, IntMatrix{{2, 3, 0}}));
  CHECK_FALSE(subspace_contains(a, IntMatrix{{0, 0, 1}}));
}

TEST_CASE("property: tangent-rank image dimension agrees with elimination") {
  std::mt19937 rng(101);
  auto corpus = testing::random_presentations(rng, 25, 2, 2, 2);
  corpus.push_back(pres(2, {"x2 - x1^2", "y2 - 2*y1"}));
  corpus.push_back(raw(2, {"x2 - x1", "y2 - y1"}));
  corpus.push_back(pres(2, {"y1*y2 - x1 - 1"}));
  // Elimination is slow on monomial maps with larger exponents, so the random
  // corpus is compared on height-1 directions and the fixed loci on height 2.
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (const auto& m : enumerate_subspaces(2, i + 3 >= corpus.size() ? 2 : 1, 1, 1))
      CHECK(corpus[i].image_dim(m) == corpus[i].image_dim(m, ImageDimMethod::Elimination));
}

TEST_CASE("property: addition formula and submodularity") {
  std::mt19937 rng(103);
  const auto corpus = testing::random_presentations(rng, 15, 2, 2, 2);
  for (const auto& p : corpus) {
    auto subs = enumerate_subspaces(2, 2);
    subs.insert(subs.begin(), IntMatrix(0, 2));
    for (const auto& u : subs)
      for (const auto& w : subs) {
        if (subspace_contains(w, u)) CHECK(delta(p, w) == relative_delta(p, w, u) + delta(p, u));
        CHECK(delta(p, subspace_sum(u, w)) + delta(p, subspace_intersection(u, w)) <= delta(p, u) + delta(p, w));
      }
  }
}

TEST_CASE("property: hull is monotone, idempotent and delta-minimal") {
  std::mt19937 rng(107);
  auto corpus = testing::random_presentations(rng, 10, 2, 2, 2);
  corpus.push_back(pres(2, {"x2 - x1^2", "y2 - 2*y1"}));
  for (const auto& p : corpus) {
    auto seeds = enumerate_subspaces(2, 1);
    seeds.insert(seeds.begin(), IntMatrix(0, 2));
    for (const auto& x : seeds) {
      const auto hx = hull(p, x, 2);
      CHECK(subspace_contains(hx.subspace, x));
      CHECK(hull(p, hx.subspace, 2).subspace == hx.subspace);
      for (const auto& w : enumerate_subspaces(2, 2))
        if (subspace_contains(w, x)) CHECK(hx.delta_value <= delta(p, w));
      for (const auto& y : seeds)
        if (subspace_contains(y, x)) CHECK(subspace_contains(hull(p, y, 2).subspace, hx.subspace));
    }
  }
}

TEST_CASE("property: rotundity invariant under block permutation and unimodular change of basis") {
  std::mt19937 rng(109);
  const auto corpus = testing::random_presentations(rng, 10, 2, 2, 1);
  const IntMatrix swap{{0, 1}, {1, 0}};
  const IntMatrix shear{{1, 1}, {0, 1}};
  const RotundityOptions opts{2, 3, true};
  for (const auto& p : corpus) {
    const auto verdict = is_strongly_rotund(p, opts).verdict;
    for (const auto* u : {&swap, &shear}) {
      const auto q = GammaPresentation::unchecked(apply_matrix(*u, p.locus()));
      CHECK(delta(q) == delta(p));
      if (u == &swap) CHECK(is_strongly_rotund(q, opts).verdict == verdict);
      // Under a shear the height bound is not preserved, so compare exact
      // strongness only where the sweep is complete for rank-1 directions of
      // both bases: the images of e1, e2 and their sum.
      for (const auto& m : enumerate_subspaces(2, 1))
        CHECK(q.image_dim(m) == p.image_dim(m * *u));
    }
  }
}

TEST_CASE("property: delta zero over a strong subspace keeps strongness") {
  // Curve copies amalgamated with a generic point: each basis direction with
  // delta 0 over a strong subspace gives a strong sum.
  const auto p = pres(2, {"y2 - x2 - 1"});
  const auto u = e(2, 0), w = e(2, 1);
  CHECK(delta(p, u) >= 0);
  CHECK(relative_delta(p, subspace_sum(u, w), u) == 0);
  CHECK(is_strong(p, {2, 3, false}).verdict == RotundityVerdict::RotundUpTo);
}

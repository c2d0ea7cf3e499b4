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

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "gammaforge/errors.hpp"
#include "gammaforge/gamma.hpp"

namespace gammaforge::testing {

// Random polynomial string of total degree <= max_deg in the given
// variables.
inline std::string random_poly_string(std::mt19937& rng, const std::vector<std::string>& vars, unsigned max_deg,
                                      int coeff, int terms) {
  std::uniform_int_distribution<int> c(-coeff, coeff);
  std::uniform_int_distribution<std::size_t> var(0, vars.size() - 1);
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  std::string out = "0";
  for (int t = 0; t < terms; ++t) {
    const int k = c(rng);
    if (k == 0) continue;
    out += " + (" + std::to_string(k) + ")";
    const unsigned d = vars.empty() ? 0 : deg(rng);
    for (unsigned i = 0; i < d; ++i) out += "*" + vars[var(rng)];
  }
  return out;
}

// A random graph locus: coordinates coords[0..e) are solved as
// rhs[i] / lead[i] in the remaining (free) coordinates.
struct GraphLocus {
  GammaPresentation presentation;
  std::vector<std::string> coords;
  std::size_t solved = 0;
  std::vector<std::string> rhs;
  std::vector<int> lead;
};

// Valid presentations over Q with n blocks cut out by up to `equations`
// random equations; invalid or empty draws are skipped. Each equation solves
// for its own coordinate in terms of the unsolved ones, so the locus is the
// graph of a polynomial map and hence irreducible.
inline std::vector<GraphLocus> random_graph_loci(std::mt19937& rng, std::size_t count, std::size_t n,
                                                 unsigned max_deg, std::size_t min_equations,
                                                 std::size_t max_equations, int validation_height = 2) {
  auto base = std::make_shared<const BasePresentation>();
  std::vector<GraphLocus> out;
  std::uniform_int_distribution<std::size_t> k(min_equations, max_equations);
  for (int attempts = 0; out.size() < count && attempts < 50 * static_cast<int>(count); ++attempts) {
    GraphLocus g;
    for (std::size_t j = 0; j < n; ++j) g.coords.push_back(x_name(j));
    for (std::size_t j = 0; j < n; ++j) g.coords.push_back(y_name(j));
    std::shuffle(g.coords.begin(), g.coords.end(), rng);
    g.solved = std::min(k(rng), g.coords.size());
    const std::vector<std::string> free(g.coords.begin() + static_cast<std::ptrdiff_t>(g.solved), g.coords.end());
    std::uniform_int_distribution<int> lead(1, 2);
    std::vector<std::string> gens;
    for (std::size_t i = 0; i < g.solved; ++i) {
      g.lead.push_back(lead(rng));
      g.rhs.push_back(random_poly_string(rng, free, max_deg, 3, 4));
      gens.push_back(std::to_string(g.lead.back()) + "*" + g.coords[i] + " - (" + g.rhs.back() + ")");
    }
    try {
      auto v = VarietyPresentation::parse(base, n, gens, true);
      if (v.is_empty()) continue;
      g.presentation = GammaPresentation::create(std::move(v), validation_height);
      out.push_back(std::move(g));
    } catch (const ValidationError&) {
    }
  }
  return out;
}

inline std::vector<GammaPresentation> random_presentations(std::mt19937& rng, std::size_t count, std::size_t n,
                                                           unsigned max_deg, std::size_t equations) {
  std::vector<GammaPresentation> out;
  for (auto& g : random_graph_loci(rng, count, n, max_deg, 0, equations)) out.push_back(std::move(g.presentation));
  return out;
}

}  // namespace gammaforge::testing

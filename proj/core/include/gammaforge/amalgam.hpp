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

#include "gammaforge/gamma.hpp"

namespace gammaforge {

// Free amalgam over the base: ideal sum in disjoint blocks, basis L then R.
// Throws BaseMismatch when L, R and A0 disagree.
GammaPresentation free_amalgam(const BasePresentation& a0, const GammaPresentation& l, const GammaPresentation& r);

struct ComplexityCap {
  std::size_t n_max = 1;
  unsigned deg_max = 1;
  int height_max = 1;
  friend bool operator==(const ComplexityCap&, const ComplexityCap&) = default;
};

enum class CatalogFilter { All, GammaAlgebraic, PurelyTranscendental };
std::string to_string(CatalogFilter f);

struct CatalogEntry {
  GammaPresentation presentation;
  std::string key;  // n and canonical locus, e.g. "1:x1 - y1 + 1"
  int delta = 0;
  bool strongly_rotund = false;
};

struct ExtensionCatalog {
  std::vector<CatalogEntry> entries;
  ComplexityCap cap;
  CatalogFilter filter = CatalogFilter::All;
  bool truncated = false;
  std::size_t candidates = 0;
  std::size_t rejected_invalid = 0;
  std::size_t rejected_not_free = 0;
  std::size_t rejected_not_strong = 0;
  std::size_t rejected_reducible = 0;
  std::size_t uncertified = 0;  // irreducibility could not be decided
};

struct EnumerationOptions {
  int g2_bound = 4;
  std::size_t max_candidates = 20000;
};

ExtensionCatalog enumerate_extensions(std::shared_ptr<const BasePresentation> a0, ComplexityCap cap,
                                      CatalogFilter filter, const EnumerationOptions& opts = {});

// Irreducibility of a locus: true or false when decided, nullopt otherwise.
// Decides principal loci of degree <= 2 (quadric rank) and the zero ideal.
std::optional<bool> certify_irreducible(const VarietyPresentation& v);

// Representative of the locus under basis changes b -> U b + t with U a
// signed permutation and t a torsion point (0, ±1)^n.
VarietyPresentation canonical_representative(const VarietyPresentation& v);
std::string catalog_key(const VarietyPresentation& v);

struct StageLogEntry {
  std::string id;
  std::vector<std::string> locus;
  std::size_t n = 0;
  std::vector<std::size_t> columns;
  friend bool operator==(const StageLogEntry&, const StageLogEntry&) = default;
};

struct StagePresentation {
  GammaPresentation current;
  std::vector<StageLogEntry> log;
  int stage = 0;
  ComplexityCap cap;
  bool truncated = false;
};

// Stage k amalgamates every catalog entry at cap (k, k, k).
StagePresentation build_stage(std::shared_ptr<const BasePresentation> a0, int k,
                              const EnumerationOptions& opts = {});
StagePresentation build_stage(std::shared_ptr<const BasePresentation> a0, ComplexityCap cap, int stage,
                              const EnumerationOptions& opts = {});

// Embedding soundness and δ additivity for every log entry.
bool verify_stage(const StagePresentation& s, std::string* failure = nullptr);

struct GammaPointWitness {
  IntMatrix m;               // rows: combinations of the stage basis
  std::vector<int> torsion;  // sign of the torsion shift (0, ±1) per row
  bool from_log = false;
};

struct GammaPointResult {
  std::optional<GammaPointWitness> witness;
  int height = 0;
  std::size_t candidates_checked = 0;
  bool exhausted = true;  // false when the candidate budget stopped the search
};

// Whether (M·b) * t lies in v for the generic stage basis b.
bool point_lies_on(const GammaPresentation& stage, const IntMatrix& m, const std::vector<int>& torsion,
                   const VarietyPresentation& v);

// Throws PrecheckFailed unless v is free, rotund up to `height` and of
// dimension v.n().
GammaPointResult find_gamma_point(const StagePresentation& s, const VarietyPresentation& v,
                                  const std::vector<std::size_t>& a, int height, int g2_bound = 4,
                                  std::size_t max_candidates = 200000);

struct SchanuelResult {
  bool pass = true;
  std::optional<IntMatrix> subspace;
  int delta = 0;
  int height = 0;
  std::size_t subspaces_checked = 0;
};

SchanuelResult schanuel_sweep(const GammaPresentation& p, int height);

}  // namespace gammaforge

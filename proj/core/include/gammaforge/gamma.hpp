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
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gammaforge/errors.hpp"
#include "gammaforge/variety.hpp"

namespace gammaforge {

// Group dimension. Formulas below are written with d so that a Ga^d variant
// changes one constant.
inline constexpr int kGroupDim = 1;

struct Config {
  int d = kGroupDim;
  std::string case_name = "DEQ";
  std::string ground = "Ga x Gm over Z";
  friend bool operator==(const Config&, const Config&) = default;
};

struct Bounds {
  int matrix_height = 3;
  int subspace_height = 2;
  int g2_bound = 4;
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

// Columns of an embedded sub-presentation inside a larger basis.
struct HistoryEntry {
  std::string label;
  std::vector<std::size_t> columns;
  friend bool operator==(const HistoryEntry&, const HistoryEntry&) = default;
};

enum class ImageDimMethod { Auto, Elimination };

// Finitely generated kernel-preserving extension of a presented base, given
// by the locus of a basis.
class GammaPresentation {
 public:
  GammaPresentation() = default;

  // Checks nonemptiness, the irreducibility assertion, and kernel
  // preservation up to `validation_height`. Throws ValidationError.
  static GammaPresentation create(VarietyPresentation locus, int validation_height);
  static GammaPresentation unchecked(VarietyPresentation locus);
  // The trivial extension (n = 0).
  static GammaPresentation trivial(std::shared_ptr<const BasePresentation> base);

  std::size_t n() const { return locus_.n(); }
  const VarietyPresentation& locus() const { return locus_; }
  const BasePresentation& base() const { return locus_.base(); }
  const std::shared_ptr<const BasePresentation>& base_ptr() const { return locus_.base_ptr(); }

  std::vector<HistoryEntry>& history() { return history_; }
  const std::vector<HistoryEntry>& history() const { return history_; }

  // dim of the Zariski closure of M·locus, cached by rational row space.
  std::size_t image_dim(const IntMatrix& m, ImageDimMethod method = ImageDimMethod::Auto) const;
  std::size_t locus_dim() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::optional<std::size_t> dim;
    std::optional<std::size_t> jacobian_rank;
    std::vector<std::vector<Poly>> log_jacobian;  // rows over coordinates (x, y), y-columns scaled by y
    std::map<std::string, std::size_t> images;
  };
  std::size_t jacobian_image_dim(const IntMatrix& basis) const;

  VarietyPresentation locus_;
  std::vector<HistoryEntry> history_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Throws ValidationError naming the violated clause ("ker1", "ker2",
// "gamma-base", "irreducible", "empty").
void validate_kernel_preservation(const VarietyPresentation& locus, int height);

// Canonical integer matrices (saturated HNF, entries within [-height,
// height]) for every rational subspace of Q^n with rank in [min_rank,
// max_rank]; ordered by rank, then row-major lexicographically.
std::vector<IntMatrix> enumerate_subspaces(std::size_t n, int height, std::size_t min_rank, std::size_t max_rank);
inline std::vector<IntMatrix> enumerate_subspaces(std::size_t n, int height) {
  return enumerate_subspaces(n, height, 1, n);
}

// Canonical form of the rational row space of m (zero rows dropped).
IntMatrix canonical_subspace(const IntMatrix& m);
IntMatrix subspace_sum(const IntMatrix& a, const IntMatrix& b);
IntMatrix subspace_intersection(const IntMatrix& a, const IntMatrix& b);
bool subspace_contains(const IntMatrix& outer, const IntMatrix& inner);

int delta(const GammaPresentation& p);
int delta(const GammaPresentation& p, const IntMatrix& subspace);
// δ(W over U) for U ⊆ W.
int relative_delta(const GammaPresentation& p, const IntMatrix& w, const IntMatrix& u);

enum class RotundityVerdict { NotFree, NotRotund, RotundUpTo, StronglyRotundUpTo };
std::string to_string(RotundityVerdict v);

struct RotundityReport {
  RotundityVerdict verdict = RotundityVerdict::RotundUpTo;
  std::optional<IntMatrix> witness;  // padded to n rows
  std::size_t witness_dim = 0;
  std::size_t witness_rank = 0;
  int bound = 0;
  std::size_t matrices_checked = 0;
  std::optional<FreenessReport> freeness;  // set when verdict is NotFree
};

struct RotundityOptions {
  int height = 3;
  int g2_bound = 4;
  bool skip_freeness = false;
};

RotundityReport is_strong(const GammaPresentation& p, const RotundityOptions& opts);
RotundityReport is_strongly_rotund(const GammaPresentation& p, const RotundityOptions& opts);

struct HullResult {
  IntMatrix subspace;  // canonical rows
  int delta_value = 0;
  int certified_up_to = 0;
};

HullResult hull(const GammaPresentation& p, const IntMatrix& seed, int height);
int gammadim(const GammaPresentation& p, const IntMatrix& seed, int height);

enum class ExtensionClass { Invalid, NotStrong, StrongGammaAlgebraic, StrongMixed, PurelyGammaTranscendental };
std::string to_string(ExtensionClass c);

struct Classification {
  ExtensionClass kind = ExtensionClass::Invalid;
  std::string reason;  // for Invalid
  std::optional<IntMatrix> witness;  // for NotStrong
  int delta_value = 0;
  int bound = 0;
};

Classification classify(const GammaPresentation& p, const RotundityOptions& opts);

}  // namespace gammaforge

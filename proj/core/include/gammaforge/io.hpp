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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gammaforge/amalgam.hpp"

namespace gammaforge {

struct StageInfo {
  int k = 0;
  ComplexityCap cap;
  bool truncated = false;
  std::vector<StageLogEntry> log;
  friend bool operator==(const StageInfo&, const StageInfo&) = default;
};

// In-memory form of a presentation file. A stage file is a presentation file
// with a `stage` section and a content hash.
struct PresentationFile {
  Config config;
  GammaPresentation presentation;
  Bounds bounds;
  std::optional<std::size_t> budget;  // Groebner basis-size cap
  std::optional<StageInfo> stage;
};

struct ParseOptions {
  // Run the kernel-preservation check at bounds.matrix_height. Stage files
  // are never re-validated; their content hash is checked instead.
  bool validate = true;
};

// Throws ParseError (with 1-based line/column into `text`), UnsupportedConfig
// or ValidationError.
PresentationFile parse_presentation_file(std::string_view text, const ParseOptions& opts = {});
GammaPresentation parse_presentation(std::string_view text);

// Sorted-key JSON with a trailing newline. Stage files get `content_hash`,
// the SHA-256 of the serialization without it.
std::string serialize_presentation(const PresentationFile& f);

PresentationFile stage_file(const StagePresentation& s, const Bounds& bounds, const Config& config = {});
// Throws ValidationError("stage") when the file has no stage section.
StagePresentation to_stage(const PresentationFile& f);

bool same_presentation(const PresentationFile& a, const PresentationFile& b);

std::string sha256_hex(std::string_view data);

}  // namespace gammaforge

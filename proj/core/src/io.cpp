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

#include "gammaforge/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cstring>
#include <map>
#include <regex>
#include <set>

#include "json.hpp"

namespace gammaforge {

using nlohmann::json;

namespace {

// Byte offset of every value in a (valid) JSON text, keyed by JSON pointer.
class OffsetIndex {
 public:
  explicit OffsetIndex(std::string_view text) : t_(text) { value(""); }

  std::optional<std::size_t> at(const std::string& ptr) const {
    auto it = offsets_.find(ptr);
    if (it == offsets_.end()) return std::nullopt;
    return it->second;
  }

 private:
  void ws() {
    while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
  }
  std::string read_string() {
    std::string out;
    ++pos_;
    while (pos_ < t_.size() && t_[pos_] != '"') {
      if (t_[pos_] == '\\' && pos_ + 1 < t_.size()) ++pos_;
      out += t_[pos_++];
    }
    ++pos_;
    return out;
  }
  static std::string escape(const std::string& key) {
    std::string out;
    for (char c : key) {
      if (c == '~') out += "~0";
      else if (c == '/') out += "~1";
      else out += c;
    }
    return out;
  }
  void value(const std::string& ptr) {
    ws();
    if (pos_ >= t_.size()) return;
    offsets_[ptr] = pos_;
    const char c = t_[pos_];
    if (c == '{' || c == '[') {
      ++pos_;
      ws();
      const char close = c == '{' ? '}' : ']';
      for (std::size_t i = 0; pos_ < t_.size() && t_[pos_] != close; ++i) {
        std::string child = ptr + "/" + std::to_string(i);
        if (c == '{') {
          child = ptr + "/" + escape(read_string());
          ws();
          ++pos_;  // ':'
        }
        value(child);
        ws();
        if (pos_ < t_.size() && t_[pos_] == ',') ++pos_;
        ws();
      }
      ++pos_;
    } else if (c == '"') {
      read_string();
    } else {
      while (pos_ < t_.size() && !std::strchr(",}] \t\r\n", t_[pos_])) ++pos_;
    }
  }

  std::string_view t_;
  std::size_t pos_ = 0;
  std::map<std::string, std::size_t> offsets_;
};

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
      ++col;
    }
  }
  return {line, col};
}

class Reader {
 public:
  Reader(std::string_view text, const json& root) : text_(text), index_(text), root_(root) {}

  [[noreturn]] void fail(const std::string& ptr, const std::string& what) const {
    const auto off = index_.at(ptr).value_or(0);
    const auto [line, col] = line_column(text_, off);
    throw ParseError(what, line, col, ptr);
  }

  const json* find(const std::string& ptr) const {
    const json::json_pointer p(ptr);
    return root_.contains(p) ? &root_.at(p) : nullptr;
  }
  const json& get(const std::string& ptr) const {
    const json* j = find(ptr);
    if (!j) {
      const auto parent = ptr.substr(0, ptr.rfind('/'));
      fail(parent, "missing field " + ptr);
    }
    return *j;
  }
  const json& object(const std::string& ptr) const {
    const json& j = get(ptr);
    if (!j.is_object()) fail(ptr, ptr + ": expected an object");
    return j;
  }
  const json& array(const std::string& ptr) const {
    const json& j = get(ptr);
    if (!j.is_array()) fail(ptr, ptr + ": expected an array");
    return j;
  }
  std::string string(const std::string& ptr) const {
    const json& j = get(ptr);
    if (!j.is_string()) fail(ptr, ptr + ": expected a string");
    return j.get<std::string>();
  }
  long long integer(const std::string& ptr, long long min) const {
    const json& j = get(ptr);
    if (!j.is_number_integer() || j.get<long long>() < min)
      fail(ptr, ptr + ": expected an integer >= " + std::to_string(min));
    return j.get<long long>();
  }
  bool boolean(const std::string& ptr) const {
    const json& j = get(ptr);
    if (!j.is_boolean()) fail(ptr, ptr + ": expected a boolean");
    return j.get<bool>();
  }
  std::vector<std::string> strings(const std::string& ptr) const {
    std::vector<std::string> out;
    const json& a = array(ptr);
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(string(ptr + "/" + std::to_string(i)));
    return out;
  }
  // Rejects keys outside `allowed` so typos do not pass silently.
  void keys(const std::string& ptr, std::initializer_list<const char*> allowed) const {
    for (const auto& [k, v] : object(ptr).items()) {
      if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; }))
        fail(ptr + "/" + k, "unknown field " + ptr + "/" + k);
    }
  }

  Poly poly(const std::string& ptr, const std::vector<std::string>& vars) const {
    const std::string s = string(ptr);
    try {
      return parse_poly(s, vars);
    } catch (const ParseError& e) {
      const auto off = index_.at(ptr).value_or(0) + e.column();  // past the opening quote
      const auto [line, col] = line_column(text_, off);
      throw ParseError(e.what(), line, col, ptr);
    }
  }

 private:
  std::string_view text_;
  OffsetIndex index_;
  const json& root_;
};

std::string normalize_ground(std::string g) {
  std::string out;
  for (std::size_t i = 0; i < g.size();) {
    if (g.compare(i, 2, "\xC3\x97") == 0) {  // ×
      out += 'x';
      i += 2;
    } else if (g.compare(i, 3, "\xE2\x84\xA4") == 0) {  // ℤ
      out += 'z';
      i += 3;
    } else {
      if (!std::isspace(static_cast<unsigned char>(g[i]))) out += static_cast<char>(std::tolower(g[i]));
      ++i;
    }
  }
  return out;
}

Config read_config(const Reader& r) {
  Config c;
  if (!r.find("/config")) return c;
  r.keys("/config", {"d", "case", "ground"});
  if (r.find("/config/d")) {
    const auto d = r.integer("/config/d", 1);
    if (d != kGroupDim) throw UnsupportedConfig("config.d = " + std::to_string(d) + " (only d = 1 is supported)");
  }
  if (r.find("/config/case")) {
    const auto name = r.string("/config/case");
    if (name != "DEQ") throw UnsupportedConfig("config.case = " + name + " (only DEQ is supported)");
  }
  if (r.find("/config/ground")) {
    const auto g = normalize_ground(r.string("/config/ground"));
    static const std::set<std::string> accepted{"gaxgmoverz", "gaxgm/z", "gaxgm", "gaxgmz"};
    if (!accepted.count(g)) throw UnsupportedConfig("config.ground must be Ga x Gm over Z");
  }
  return c;
}

bool reserved_name(const std::string& s) {
  static const std::regex coord("[xy][0-9]+");
  return std::regex_match(s, coord);
}

std::shared_ptr<const BasePresentation> read_base(const Reader& r) {
  std::vector<BaseConstant> constants;
  std::vector<GammaElement> points;
  if (!r.find("/base")) return std::make_shared<const BasePresentation>();
  r.keys("/base", {"constants", "gamma_elements", "kernel"});
  static const std::regex ident("[a-zA-Z][a-zA-Z0-9_]*");
  std::vector<std::string> names;
  if (r.find("/base/constants")) {
    const auto& a = r.array("/base/constants");
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto p = "/base/constants/" + std::to_string(i);
      r.keys(p, {"name", "minimal_polynomial"});
      const auto name = r.string(p + "/name");
      if (!std::regex_match(name, ident) || reserved_name(name) ||
          std::find(names.begin(), names.end(), name) != names.end())
        r.fail(p + "/name", "invalid or duplicate constant name '" + name + "'");
      names.push_back(name);
      constants.push_back({name, r.string(p + "/minimal_polynomial")});
    }
    for (std::size_t i = 0; i < a.size(); ++i)
      r.poly("/base/constants/" + std::to_string(i) + "/minimal_polynomial", {constants[i].name});
  }
  for (const char* list : {"gamma_elements", "kernel"}) {
    const auto ptr = std::string("/base/") + list;
    if (!r.find(ptr)) continue;
    const auto& a = r.array(ptr);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto p = ptr + "/" + std::to_string(i);
      r.keys(p, {"x", "y"});
      r.poly(p + "/x", names);
      r.poly(p + "/y", names);
      points.push_back({r.string(p + "/x"), r.string(p + "/y"), std::string(list) == "kernel"});
    }
  }
  return std::make_shared<const BasePresentation>(std::move(constants), std::move(points));
}

Bounds read_bounds(const Reader& r, std::optional<std::size_t>& budget) {
  Bounds b;
  if (!r.find("/bounds")) return b;
  r.keys("/bounds", {"matrix_height", "subspace_height", "g2_bound", "budget"});
  if (r.find("/bounds/matrix_height")) b.matrix_height = static_cast<int>(r.integer("/bounds/matrix_height", 1));
  if (r.find("/bounds/subspace_height"))
    b.subspace_height = static_cast<int>(r.integer("/bounds/subspace_height", 1));
  if (r.find("/bounds/g2_bound")) b.g2_bound = static_cast<int>(r.integer("/bounds/g2_bound", 1));
  if (r.find("/bounds/budget")) budget = static_cast<std::size_t>(r.integer("/bounds/budget", 1));
  return b;
}

std::vector<std::size_t> read_columns(const Reader& r, const std::string& ptr, std::size_t n) {
  std::vector<std::size_t> cols;
  const auto& a = r.array(ptr);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto c = r.integer(ptr + "/" + std::to_string(i), 0);
    if (static_cast<std::size_t>(c) >= n) r.fail(ptr + "/" + std::to_string(i), "column out of range");
    cols.push_back(static_cast<std::size_t>(c));
  }
  return cols;
}

StageInfo read_stage(const Reader& r, std::size_t n) {
  StageInfo s;
  r.keys("/stage", {"k", "cap", "truncated", "log"});
  s.k = static_cast<int>(r.integer("/stage/k", 0));
  r.keys("/stage/cap", {"n_max", "deg_max", "height_max"});
  s.cap.n_max = static_cast<std::size_t>(r.integer("/stage/cap/n_max", 0));
  s.cap.deg_max = static_cast<unsigned>(r.integer("/stage/cap/deg_max", 0));
  s.cap.height_max = static_cast<int>(r.integer("/stage/cap/height_max", 0));
  s.truncated = r.boolean("/stage/truncated");
  const auto& log = r.array("/stage/log");
  for (std::size_t i = 0; i < log.size(); ++i) {
    const auto p = "/stage/log/" + std::to_string(i);
    r.keys(p, {"id", "n", "locus", "columns"});
    StageLogEntry e;
    e.id = r.string(p + "/id");
    e.n = static_cast<std::size_t>(r.integer(p + "/n", 0));
    e.locus = r.strings(p + "/locus");
    e.columns = read_columns(r, p + "/columns", n);
    if (e.columns.size() != e.n) r.fail(p + "/columns", "log entry needs one column per block");
    s.log.push_back(std::move(e));
  }
  return s;
}

json base_json(const BasePresentation& base) {
  json b = json::object();
  json consts = json::array(), points = json::array(), kernel = json::array();
  for (const auto& c : base.constants()) consts.push_back({{"name", c.name}, {"minimal_polynomial", c.minimal_polynomial}});
  for (const auto& g : base.gamma_elements()) (g.kernel ? kernel : points).push_back({{"x", g.x}, {"y", g.y}});
  b["constants"] = consts;
  b["gamma_elements"] = points;
  b["kernel"] = kernel;
  return b;
}

json file_json(const PresentationFile& f) {
  json j;
  j["config"] = {{"d", f.config.d}, {"case", f.config.case_name}, {"ground", f.config.ground}};
  j["base"] = base_json(f.presentation.base());
  json ext;
  ext["n"] = f.presentation.n();
  ext["ideal"] = f.presentation.locus().locus_strings();
  ext["irreducible"] = f.presentation.locus().irreducible_asserted();
  if (!f.presentation.history().empty()) {
    json h = json::array();
    for (const auto& e : f.presentation.history()) h.push_back({{"label", e.label}, {"columns", e.columns}});
    ext["history"] = h;
  }
  j["extension"] = ext;
  j["bounds"] = {{"matrix_height", f.bounds.matrix_height},
                 {"subspace_height", f.bounds.subspace_height},
                 {"g2_bound", f.bounds.g2_bound}};
  if (f.budget) j["bounds"]["budget"] = *f.budget;
  if (f.stage) {
    json log = json::array();
    for (const auto& e : f.stage->log)
      log.push_back({{"id", e.id}, {"n", e.n}, {"locus", e.locus}, {"columns", e.columns}});
    j["stage"] = {{"k", f.stage->k},
                  {"cap",
                   {{"n_max", f.stage->cap.n_max},
                    {"deg_max", f.stage->cap.deg_max},
                    {"height_max", f.stage->cap.height_max}}},
                  {"truncated", f.stage->truncated},
                  {"log", log}};
  }
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

PresentationFile parse_presentation_file(std::string_view text, const ParseOptions& opts) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(std::string("json: ") + e.what(), line, col);
  }
  const Reader r(text, root);
  if (!root.is_object()) r.fail("", "top level must be an object");
  r.keys("", {"config", "base", "extension", "bounds", "stage", "content_hash"});

  PresentationFile f;
  f.config = read_config(r);
  const auto base = read_base(r);
  f.bounds = read_bounds(r, f.budget);

  std::size_t n = 0;
  std::vector<std::string> xs, ys;
  std::vector<Poly> gens;
  bool irreducible = true;
  std::vector<HistoryEntry> history;
  if (r.find("/extension")) {
    r.keys("/extension", {"n", "variables", "ideal", "irreducible", "history"});
    n = static_cast<std::size_t>(r.integer("/extension/n", 0));
    for (std::size_t j = 0; j < n; ++j) {
      xs.push_back(x_name(j));
      ys.push_back(y_name(j));
    }
    if (r.find("/extension/variables")) {
      r.keys("/extension/variables", {"x", "y"});
      xs = r.strings("/extension/variables/x");
      ys = r.strings("/extension/variables/y");
      if (xs.size() != n || ys.size() != n) r.fail("/extension/variables", "variable lists must have n entries each");
    }
    std::vector<std::string> vars = xs;
    vars.insert(vars.end(), ys.begin(), ys.end());
    for (const auto& c : base->constants()) vars.push_back(c.name);
    std::set<std::string> seen;
    static const std::regex ident("[a-zA-Z][a-zA-Z0-9_]*");
    for (const auto& v : vars)
      if (!std::regex_match(v, ident) || !seen.insert(v).second)
        r.fail("/extension/variables", "invalid or duplicate variable name '" + v + "'");
    if (r.find("/extension/ideal")) {
      const auto& a = r.array("/extension/ideal");
      for (std::size_t i = 0; i < a.size(); ++i) gens.push_back(r.poly("/extension/ideal/" + std::to_string(i), vars));
    }
    if (r.find("/extension/irreducible")) irreducible = r.boolean("/extension/irreducible");
    if (r.find("/extension/history")) {
      const auto& h = r.array("/extension/history");
      for (std::size_t i = 0; i < h.size(); ++i) {
        const auto p = "/extension/history/" + std::to_string(i);
        r.keys(p, {"label", "columns"});
        history.push_back({r.string(p + "/label"), read_columns(r, p + "/columns", n)});
      }
    }
  }

  if (r.find("/stage")) {
    f.stage = read_stage(r, n);
    if (!r.find("/content_hash")) throw ValidationError("hash", "stage file has no content_hash");
    const auto declared = r.string("/content_hash");
    json body = root;
    body.erase("content_hash");
    if (sha256_hex(dump(body)) != declared) throw ValidationError("hash", "stage file content hash mismatch");
    // Stage loci are stored as reduced, saturated bases.
    const auto vars = VarietyPresentation::ambient_vars(*base, n);
    Ideal ideal = embed(base->base_ideal(), vars).with_generators(gens);
    f.presentation = GammaPresentation::unchecked(
        VarietyPresentation::from_saturated(base, n, std::move(ideal), irreducible));
  } else {
    auto locus = VarietyPresentation::from_generators(base, n, std::move(gens), irreducible);
    f.presentation = opts.validate ? GammaPresentation::create(std::move(locus), f.bounds.matrix_height)
                                   : GammaPresentation::unchecked(std::move(locus));
  }
  f.presentation.history() = std::move(history);
  return f;
}

GammaPresentation parse_presentation(std::string_view text) { return parse_presentation_file(text).presentation; }

std::string serialize_presentation(const PresentationFile& f) {
  json j = file_json(f);
  if (f.stage) j["content_hash"] = sha256_hex(dump(j));
  return dump(j);
}

PresentationFile stage_file(const StagePresentation& s, const Bounds& bounds, const Config& config) {
  PresentationFile f;
  f.config = config;
  f.presentation = s.current;
  f.bounds = bounds;
  f.stage = StageInfo{s.stage, s.cap, s.truncated, s.log};
  return f;
}

StagePresentation to_stage(const PresentationFile& f) {
  if (!f.stage) throw ValidationError("stage", "file has no stage section");
  StagePresentation s;
  s.current = f.presentation;
  s.log = f.stage->log;
  s.stage = f.stage->k;
  s.cap = f.stage->cap;
  s.truncated = f.stage->truncated;
  return s;
}

bool same_presentation(const PresentationFile& a, const PresentationFile& b) {
  const auto& pa = a.presentation;
  const auto& pb = b.presentation;
  return a.config == b.config && a.bounds == b.bounds && a.budget == b.budget && a.stage == b.stage &&
         pa.base() == pb.base() && pa.n() == pb.n() && pa.history() == pb.history() &&
         pa.locus().irreducible_asserted() == pb.locus().irreducible_asserted() &&
         same_ideal(pa.locus().ideal(), pb.locus().ideal());
}

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

}  // namespace gammaforge

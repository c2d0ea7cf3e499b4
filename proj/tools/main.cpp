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

// gammaforge command-line front end. Reports are sorted-key JSON on stdout.
// Exit codes: 0 computed, 1 validation failure, 2 resource budget exceeded,
// 3 usage error.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gammaforge/groebner.hpp"
#include "gammaforge/io.hpp"
#include "json.hpp"

using namespace gammaforge;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::optional<int> height, subspace_height, g2_bound;
  std::optional<std::size_t> budget;
  std::optional<int> k;
  std::string out;
  bool skip_freeness = false;
  bool timings = false;
  std::string filter = "all";
  std::string cap;
  std::string subspace;
  std::string columns;
  std::vector<std::string> files;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write " + path);
    out << content;
    if (!out.flush()) throw UsageError("cannot write " + path);
  }
  std::filesystem::rename(tmp, path);
}

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json vector_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

IntMatrix parse_matrix(const std::string& text, std::size_t n) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error&) {
    throw UsageError("matrix must be a JSON array of rows, e.g. [[1,0]]");
  }
  if (!j.is_array()) throw UsageError("matrix must be a JSON array of rows");
  IntMatrix m(j.size(), n);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != n) throw UsageError("matrix rows must have n = " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) {
      if (!j[i][c].is_number_integer()) throw UsageError("matrix entries must be integers");
      m(i, c) = Integer(static_cast<long>(j[i][c].get<long long>()));
    }
  }
  return m;
}

std::vector<std::size_t> parse_columns(const std::string& text, std::size_t n) {
  std::vector<std::size_t> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = -1;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      throw UsageError("--columns must be comma-separated indices");
    }
    if (used != item.size() || v < 0 || static_cast<std::size_t>(v) >= n)
      throw UsageError("--columns entry out of range: " + item);
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

ComplexityCap parse_cap(const Flags& f) {
  if (f.cap.empty()) {
    const std::size_t k = static_cast<std::size_t>(std::max(f.k.value_or(1), 0));
    return {k, static_cast<unsigned>(k), static_cast<int>(k)};
  }
  std::stringstream ss(f.cap);
  std::vector<long> parts;
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      parts.push_back(std::stol(item));
    } catch (const std::exception&) {
      throw UsageError("--cap must be n_max,deg_max,height_max");
    }
  }
  if (parts.size() != 3 || parts[0] < 0 || parts[1] < 0 || parts[2] < 0)
    throw UsageError("--cap must be three non-negative integers n_max,deg_max,height_max");
  return {static_cast<std::size_t>(parts[0]), static_cast<unsigned>(parts[1]), static_cast<int>(parts[2])};
}

CatalogFilter parse_filter(const std::string& s) {
  if (s == "all") return CatalogFilter::All;
  if (s == "algebraic") return CatalogFilter::GammaAlgebraic;
  if (s == "transcendental") return CatalogFilter::PurelyTranscendental;
  throw UsageError("--filter must be all, algebraic or transcendental");
}

json freeness_json(const FreenessReport& r) {
  json j{{"g1_free", r.g1_free}, {"g2_free", r.g2_free}, {"g2_search_bound", r.g2_search_bound}};
  j["g1_witness"] = r.g1_witness ? json{{"r", vector_json(r.g1_witness->r)}, {"c", r.g1_witness->c}} : json();
  j["g2_witness"] = r.g2_witness ? json{{"r", vector_json(r.g2_witness->r)}, {"c", r.g2_witness->c}} : json();
  return j;
}

json rotundity_json(const RotundityReport& r) {
  json j{{"verdict", to_string(r.verdict)},
         {"bound", r.bound},
         {"matrices_checked", r.matrices_checked},
         {"witness", r.witness ? matrix_json(*r.witness) : json()}};
  if (r.witness) {
    j["witness_dim"] = r.witness_dim;
    j["witness_rank"] = r.witness_rank;
  }
  if (r.freeness) j["freeness"] = freeness_json(*r.freeness);
  return j;
}

class Session {
 public:
  explicit Session(const Flags& f) : flags_(f) {}

  PresentationFile load(const std::string& path, bool validate) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto text = read_file(path);
    inputs_.push_back(sha256_hex(text));
    if (!first_) apply_budget(file_budget(text));
    auto f = parse_presentation_file(text, {validate});
    if (!first_) first_ = f;
    parse_ms_ += ms_since(t0);
    return f;
  }

  Bounds bounds() const {
    Bounds b = first_ ? first_->bounds : Bounds{};
    if (flags_.height) b.matrix_height = *flags_.height;
    if (flags_.subspace_height) b.subspace_height = *flags_.subspace_height;
    if (flags_.g2_bound) b.g2_bound = *flags_.g2_bound;
    return b;
  }

  RotundityOptions rotundity() const {
    const auto b = bounds();
    return {b.matrix_height, b.g2_bound, flags_.skip_freeness};
  }

  json report(const std::string& command, json result) const {
    const auto b = bounds();
    json j{{"command", command},
           {"inputs", inputs_},
           {"bounds",
            {{"matrix_height", b.matrix_height},
             {"subspace_height", b.subspace_height},
             {"g2_bound", b.g2_bound},
             {"budget", Budget::defaults().max_basis},
             {"skip_freeness", flags_.skip_freeness}}},
           {"result", std::move(result)}};
    if (flags_.timings) j["timings"] = {{"parse_ms", parse_ms_}, {"total_ms", ms_since(start_)}};
    return j;
  }

  json error_report(const std::string& command, json error) const {
    json j{{"command", command}, {"inputs", inputs_}, {"error", std::move(error)}};
    if (flags_.timings) j["timings"] = {{"parse_ms", parse_ms_}, {"total_ms", ms_since(start_)}};
    return j;
  }

 private:
  static double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }

  // File value, then GAMMAFORGE_BUDGET, then --budget.
  static std::optional<std::size_t> file_budget(const std::string& text) {
    const auto j = json::parse(text, nullptr, false);
    const json::json_pointer ptr("/bounds/budget");
    if (j.is_discarded() || !j.is_object() || !j.contains(ptr) || !j.at(ptr).is_number_unsigned()) return std::nullopt;
    return j.at(ptr).get<std::size_t>();
  }

  void apply_budget(std::optional<std::size_t> from_file) const {
    Budget b = Budget::defaults();
    if (from_file) b.max_basis = *from_file;
    if (const char* env = std::getenv("GAMMAFORGE_BUDGET")) {
      try {
        const long v = std::stol(env);
        if (v <= 0) throw std::invalid_argument(env);
        b.max_basis = static_cast<std::size_t>(v);
      } catch (const std::exception&) {
        throw UsageError("GAMMAFORGE_BUDGET must be a positive integer");
      }
    }
    if (flags_.budget) b.max_basis = *flags_.budget;
    Budget::set_defaults(b);
  }

  const Flags& flags_;
  std::optional<PresentationFile> first_;
  json inputs_ = json::array();
  double parse_ms_ = 0;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit_file(Session&, const Flags& f, json& result, const std::string& text) {
  result["file_sha256"] = sha256_hex(text);
  if (f.out.empty()) {
    result["file"] = json::parse(text);
  } else {
    write_atomic(f.out, text);
  }
}

json run_command(const std::string& cmd, const Flags& f, Session& s) {
  const auto& files = f.files;
  auto need = [&](std::size_t count) {
    if (files.size() != count)
      throw UsageError(cmd + " expects " + std::to_string(count) + " file argument" + (count == 1 ? "" : "s"));
  };

  if (cmd == "delta") {
    need(1);
    const auto p = s.load(files[0], true).presentation;
    json r;
    if (f.subspace.empty()) {
      r["delta"] = delta(p);
      r["subspace"] = nullptr;
    } else {
      const auto w = canonical_subspace(parse_matrix(f.subspace, p.n()));
      r["delta"] = delta(p, w);
      r["subspace"] = matrix_json(w);
    }
    return r;
  }
  if (cmd == "dim") {
    need(1);
    const auto p = s.load(files[0], true).presentation;
    return {{"n", p.n()}, {"dim", variety_dim(p.locus())}};
  }
  if (cmd == "free") {
    need(1);
    const auto p = s.load(files[0], true).presentation;
    auto r = freeness_json(freeness(p.locus(), s.bounds().g2_bound));
    r["free"] = r["g1_free"].get<bool>() && r["g2_free"].get<bool>();
    return r;
  }
  if (cmd == "rotund") {
    need(1);
    const auto p = s.load(files[0], true).presentation;
    return rotundity_json(is_strong(p, s.rotundity()));
  }
  if (cmd == "strongly-rotund") {
    need(1);
    const auto p = s.load(files[0], true).presentation;
    return rotundity_json(is_strongly_rotund(p, s.rotundity()));
  }
  if (cmd == "classify") {
    need(1);
    const auto p = s.load(files[0], true).presentation;
    const auto c = classify(p, s.rotundity());
    json r{{"class", to_string(c.kind)}, {"bound", c.bound}, {"delta", c.delta_value}};
    r["reason"] = c.reason.empty() ? json() : json(c.reason);
    r["witness"] = c.witness ? matrix_json(*c.witness) : json();
    return r;
  }
  if (cmd == "hull" || cmd == "gammadim") {
    need(1);
    const auto p = s.load(files[0], true).presentation;
    if (f.subspace.empty()) throw UsageError(cmd + " needs --subspace");
    const auto seed = parse_matrix(f.subspace, p.n());
    const int h = s.bounds().subspace_height;
    if (cmd == "gammadim") return {{"seed", matrix_json(canonical_subspace(seed))}, {"gammadim", gammadim(p, seed, h)}, {"bound", h}};
    const auto res = hull(p, seed, h);
    return {{"seed", matrix_json(canonical_subspace(seed))},
            {"subspace", matrix_json(res.subspace)},
            {"delta", res.delta_value},
            {"certified_up_to", res.certified_up_to}};
  }
  if (cmd == "amalgamate") {
    need(2);
    const auto l = s.load(files[0], true);
    const auto r = s.load(files[1], true);
    PresentationFile out = l;
    out.stage.reset();
    out.presentation = free_amalgam(l.presentation.base(), l.presentation, r.presentation);
    json res{{"n", out.presentation.n()},
             {"delta", delta(out.presentation)},
             {"delta_left", delta(l.presentation)},
             {"delta_right", delta(r.presentation)}};
    emit_file(s, f, res, serialize_presentation(out));
    return res;
  }
  if (cmd == "enumerate") {
    need(1);
    const auto base = s.load(files[0], true).presentation.base_ptr();
    const auto cat = enumerate_extensions(base, parse_cap(f), parse_filter(f.filter), {s.bounds().g2_bound});
    json entries = json::array();
    for (const auto& e : cat.entries)
      entries.push_back({{"key", e.key},
                         {"n", e.presentation.n()},
                         {"locus", e.presentation.locus().locus_strings()},
                         {"delta", e.delta},
                         {"strongly_rotund", e.strongly_rotund}});
    return {{"cap", {{"n_max", cat.cap.n_max}, {"deg_max", cat.cap.deg_max}, {"height_max", cat.cap.height_max}}},
            {"filter", to_string(cat.filter)},
            {"truncated", cat.truncated},
            {"entries", entries},
            {"counts",
             {{"candidates", cat.candidates},
              {"rejected_invalid", cat.rejected_invalid},
              {"rejected_not_free", cat.rejected_not_free},
              {"rejected_not_strong", cat.rejected_not_strong},
              {"rejected_reducible", cat.rejected_reducible},
              {"uncertified", cat.uncertified}}}};
  }
  if (cmd == "build-stage") {
    need(1);
    const auto in = s.load(files[0], true);
    const int k = f.k.value_or(1);
    const auto stage = build_stage(in.presentation.base_ptr(), parse_cap(f), k, {s.bounds().g2_bound});
    auto file = stage_file(stage, s.bounds(), in.config);
    file.budget = in.budget;
    json res{{"k", k},
             {"n", stage.current.n()},
             {"delta", delta(stage.current)},
             {"entries", stage.log.size()},
             {"truncated", stage.truncated}};
    emit_file(s, f, res, serialize_presentation(file));
    return res;
  }
  if (cmd == "witness") {
    need(2);
    const auto stage = to_stage(s.load(files[0], false));
    const auto vf = s.load(files[1], false);
    if (!(vf.presentation.base() == stage.current.base()))
      throw BaseMismatch("variety and stage are over different bases");
    const auto v = VarietyPresentation::from_saturated(stage.current.base_ptr(), vf.presentation.n(),
                                                       vf.presentation.locus().ideal(),
                                                       vf.presentation.locus().irreducible_asserted());
    const auto a = parse_columns(f.columns, stage.current.n());
    const int h = f.height.value_or(s.bounds().subspace_height);
    const auto r = find_gamma_point(stage, v, a, h, s.bounds().g2_bound);
    json res{{"verdict", r.witness ? "Found" : "NotFoundAtStage"},
             {"height", r.height},
             {"candidates_checked", r.candidates_checked},
             {"exhausted", r.exhausted},
             {"columns", a}};
    if (r.witness) {
      res["m"] = matrix_json(r.witness->m);
      res["torsion"] = r.witness->torsion;
      res["from_log"] = r.witness->from_log;
    }
    return res;
  }
  if (cmd == "schanuel") {
    need(1);
    const auto p = s.load(files[0], false).presentation;
    const int h = f.height.value_or(s.bounds().subspace_height);
    const auto r = schanuel_sweep(p, h);
    return {{"verdict", r.pass ? "pass" : "Violation"},
            {"pass", r.pass},
            {"height", r.height},
            {"subspaces_checked", r.subspaces_checked},
            {"subspace", r.subspace ? matrix_json(*r.subspace) : json()},
            {"delta", r.subspace ? json(r.delta) : json()}};
  }
  if (cmd == "validate") {
    need(1);
    const auto file = s.load(files[0], true);
    const auto& p = file.presentation;
    json res{{"valid", true}, {"n", p.n()}, {"dim", variety_dim(p.locus())}, {"delta", delta(p)}};
    if (file.stage) {
      std::string why;
      if (!verify_stage(to_stage(file), &why)) throw ValidationError("stage", why);
      res["stage_verified"] = true;
    }
    return res;
  }
  throw UsageError("unknown command " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gammaforge: predimension, rotundity and amalgam computations on Γ-field presentations"};
  app.require_subcommand(1);
  Flags flags;

  const std::vector<std::pair<std::string, std::string>> commands{
      {"delta", "predimension of a presentation or of a subspace (--subspace)"},
      {"dim", "dimension of the locus over the base"},
      {"free", "freeness report"},
      {"rotund", "rotundity sweep up to --height"},
      {"strongly-rotund", "strong rotundity sweep up to --height"},
      {"classify", "extension class with certification bound"},
      {"hull", "δ-minimizing hull of --subspace"},
      {"gammadim", "Γ-dimension of --subspace"},
      {"amalgamate", "free amalgam of two presentations over a common base"},
      {"enumerate", "catalog of strong extensions under a complexity cap"},
      {"build-stage", "stage presentation amalgamating a catalog"},
      {"witness", "Γ-point search in a stage for a variety"},
      {"schanuel", "predimension sweep; unvalidated input"},
      {"validate", "parse and validate; stage files are re-verified"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("files", flags.files, "input files")->required();
    sub->add_option("--height", flags.height, "matrix height bound")->check(CLI::PositiveNumber);
    sub->add_option("--subspace-height", flags.subspace_height, "subspace height bound")->check(CLI::PositiveNumber);
    sub->add_option("--g2-bound", flags.g2_bound, "multiplicative freeness search bound")->check(CLI::PositiveNumber);
    sub->add_option("--budget", flags.budget, "Groebner basis-size budget")->check(CLI::PositiveNumber);
    sub->add_flag("--skip-freeness", flags.skip_freeness, "skip the freeness precheck");
    sub->add_flag("--timings", flags.timings, "add wall-clock timings to the report");
    if (name == "delta" || name == "hull" || name == "gammadim")
      sub->add_option("--subspace", flags.subspace, "subspace rows as JSON, e.g. [[1,0]]");
    if (name == "enumerate" || name == "build-stage") {
      sub->add_option("--k", flags.k, "stage index; cap (k,k,k) unless --cap is given")->check(CLI::NonNegativeNumber);
      sub->add_option("--cap", flags.cap, "n_max,deg_max,height_max");
    }
    if (name == "enumerate") sub->add_option("--filter", flags.filter, "all|algebraic|transcendental");
    if (name == "amalgamate" || name == "build-stage") sub->add_option("--out", flags.out, "output file");
    if (name == "witness") sub->add_option("--columns", flags.columns, "stage columns the point must avoid, e.g. 0,2");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  Session session(flags);
  int code = 0;
  json out;
  try {
    out = session.report(cmd, run_command(cmd, flags, session));
  } catch (const UsageError& e) {
    std::cerr << "gammaforge: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    code = 1;
    out = session.error_report(cmd, {{"kind", "ParseError"},
                                     {"message", e.what()},
                                     {"line", e.line()},
                                     {"column", e.column()},
                                     {"context", e.context()}});
  } catch (const ValidationError& e) {
    code = 1;
    out = session.error_report(cmd, {{"kind", "ValidationError"}, {"clause", e.clause()}, {"message", e.what()}});
  } catch (const UnsupportedConfig& e) {
    code = 1;
    out = session.error_report(cmd, {{"kind", "UnsupportedConfig"}, {"message", e.what()}});
  } catch (const BaseMismatch& e) {
    code = 1;
    out = session.error_report(cmd, {{"kind", "BaseMismatch"}, {"message", e.what()}});
  } catch (const PrecheckFailed& e) {
    code = 1;
    out = session.error_report(cmd, {{"kind", "PrecheckFailed"}, {"message", e.what()}});
  } catch (const EmptyVariety& e) {
    code = 1;
    out = session.error_report(cmd, {{"kind", "EmptyVariety"}, {"message", e.what()}});
  } catch (const ResourceLimit& e) {
    code = 2;
    out = session.error_report(cmd, {{"kind", "ResourceLimit"}, {"message", e.what()}});
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "gammaforge: " << e.what() << "\n";
    return 3;
  }
  std::cout << out.dump(2) << "\n";
  return code;
}

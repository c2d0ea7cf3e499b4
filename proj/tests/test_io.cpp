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

#include <random>

#include "doctest.h"
#include "gammaforge/io.hpp"
#include "support/random_loci.hpp"

using namespace gammaforge;

namespace {

const char* kCurve = R"({
  "config": {"d": 1, "case": "DEQ", "ground": "Ga x Gm over Z"},
  "extension": {
    "n": 1,
    "ideal": ["y1 - x1 - 1"]
  },
  "bounds": {"matrix_height": 3}
})";

template <class E>
E thrown(const std::string& text) {
  try {
    parse_presentation_file(text);
  } catch (const E& e) {
    return e;
  }
  FAIL("expected an exception");
  throw;
}

}  // namespace

TEST_CASE("parse a curve file") {
  const auto f = parse_presentation_file(kCurve);
  CHECK(f.presentation.n() == 1);
  CHECK(f.bounds.matrix_height == 3);
  CHECK(f.bounds.subspace_height == 2);
  CHECK(f.bounds.g2_bound == 4);
  CHECK_FALSE(f.budget.has_value());
  CHECK(f.presentation.locus().irreducible_asserted());
  CHECK(classify(f.presentation, {f.bounds.matrix_height, f.bounds.g2_bound, false}).kind ==
        ExtensionClass::StrongGammaAlgebraic);
}

TEST_CASE("custom variable names map onto the coordinate blocks") {
  const auto f = parse_presentation_file(R"({"extension": {"n": 1, "variables": {"x": ["a"], "y": ["b"]},
    "ideal": ["b - a - 1"]}})");
  CHECK(f.presentation.locus().locus_strings() == std::vector<std::string>{"y1 - x1 - 1"});
  CHECK(thrown<ParseError>(R"({"extension": {"n": 2, "variables": {"x": ["a"], "y": ["b"]}, "ideal": []}})")
            .context() == "/extension/variables");
}

TEST_CASE("kernel violations are reported by clause") {
  const auto e = thrown<ValidationError>(R"({"extension": {"n": 1, "ideal": ["x1", "y1 - 3"]}})");
  CHECK(e.clause() == "ker2");
  CHECK(thrown<ValidationError>(R"({"extension": {"n": 1, "ideal": ["x1 - 2", "y1 - 1"]}})").clause() == "ker1");
  const auto ok = parse_presentation_file(R"({"extension": {"n": 1, "ideal": ["x1", "y1 - 3"]}})", {false});
  CHECK(ok.presentation.n() == 1);
}

TEST_CASE("unsupported configurations") {
  CHECK_THROWS_AS(parse_presentation_file(R"({"config": {"d": 2}})"), UnsupportedConfig);
  CHECK_THROWS_AS(parse_presentation_file(R"({"config": {"case": "EXP"}})"), UnsupportedConfig);
  CHECK_THROWS_AS(parse_presentation_file(R"({"config": {"ground": "Ga x E over Z"}})"), UnsupportedConfig);
  CHECK_NOTHROW(parse_presentation_file("{\"config\": {\"ground\": \"Ga \xC3\x97 Gm over \xE2\x84\xA4\"}}"));
}

TEST_CASE("parse errors carry line and column") {
  {
    const auto e = thrown<ParseError>("{\n  \"extension\": {\"n\": 1,\n    \"ideal\": [\"y1 - x1 +* 1\"]}}");
    CHECK(e.line() == 3);
    CHECK(e.column() == 25);
    CHECK(e.context() == "/extension/ideal/0");
  }
  {
    const auto e = thrown<ParseError>("{\n  \"extension\": {\"n\": 1,,}\n}");
    CHECK(e.line() == 2);
    CHECK(e.column() == 24);
  }
  {
    const auto e = thrown<ParseError>("{\"extension\": {\"n\": 1, \"ideal\": [\"z1\"]}}");
    CHECK(e.line() == 1);
    CHECK(e.column() == 35);
  }
  CHECK(thrown<ParseError>(R"({"extension": {"n": -1}})").context() == "/extension/n");
  CHECK(thrown<ParseError>(R"({"bounds": {"matrix_height": 0}})").context() == "/bounds/matrix_height");
  CHECK(thrown<ParseError>(R"({"extnsion": {}})").context() == "/extnsion");
  CHECK(thrown<ParseError>(R"({"base": {"constants": [{"name": "x1", "minimal_polynomial": "x1"}]}})").context() ==
        "/base/constants/0/name");
}

TEST_CASE("base sections") {
  const auto f = parse_presentation_file(R"({
    "base": {"constants": [{"name": "s", "minimal_polynomial": "s^2 - 2"}],
             "gamma_elements": [{"x": "s", "y": "3"}],
             "kernel": []},
    "extension": {"n": 1, "ideal": ["x1 - s", "y1 - 3"]}})");
  CHECK(f.presentation.base().constants().size() == 1);
  CHECK(delta(f.presentation) == -1);
  CHECK(thrown<ValidationError>(R"({"base": {"constants": [{"name": "s", "minimal_polynomial": "3"}]}})").clause() ==
        "base");
  const auto e = thrown<ParseError>(R"({"base": {"constants": [{"name": "s", "minimal_polynomial": "s^^2"}]}})");
  CHECK(e.context() == "/base/constants/0/minimal_polynomial");
}

TEST_CASE("round trip of presentation files") {
  std::vector<std::string> texts{
      kCurve,
      R"({"extension": {"n": 2, "ideal": []}, "bounds": {"budget": 700, "g2_bound": 3}})",
      R"({"extension": {"n": 2, "ideal": ["x2 - x1^2", "y2 - 2*y1"]}})",
      R"({"base": {"constants": [{"name": "s", "minimal_polynomial": "s^2 - 2"}]},
          "extension": {"n": 1, "ideal": ["y1 - x1 - s"], "irreducible": true,
                        "history": [{"label": "L", "columns": [0]}]}})",
  };
  for (const auto& t : texts) {
    const auto f = parse_presentation_file(t);
    const auto s = serialize_presentation(f);
    const auto g = parse_presentation_file(s);
    CHECK(same_presentation(f, g));
    CHECK(serialize_presentation(g) == s);
  }
}

TEST_CASE("property: round trip over random presentations") {
  std::mt19937 rng(97);
  const auto base = std::make_shared<const BasePresentation>();
  int checked = 0;
  for (std::size_t n = 1; n <= 2; ++n) {
    for (auto& p : testing::random_presentations(rng, 15, n, 2, n)) {
      PresentationFile f;
      f.presentation = p;
      f.bounds.matrix_height = 2;
      const auto g = parse_presentation_file(serialize_presentation(f));
      CHECK(same_presentation(f, g));
      ++checked;
    }
  }
  CHECK(checked >= 20);
}

TEST_CASE("stage files") {
  const auto base = std::make_shared<const BasePresentation>();
  const auto s = build_stage(base, 1);
  const auto text = serialize_presentation(stage_file(s, Bounds{}));
  CHECK(text == serialize_presentation(stage_file(build_stage(base, 1), Bounds{})));
  const auto f = parse_presentation_file(text);
  REQUIRE(f.stage.has_value());
  const auto back = to_stage(f);
  CHECK(back.log == s.log);
  CHECK(back.current.n() == 4);
  CHECK(same_ideal(back.current.locus().ideal(), s.current.locus().ideal()));
  CHECK(delta(back.current) == 1);
  CHECK(verify_stage(back));
  CHECK(serialize_presentation(f) == text);

  auto tampered = text;
  tampered.replace(tampered.find("\"k\": 1"), 6, "\"k\": 2");
  CHECK(thrown<ValidationError>(tampered).clause() == "hash");
  CHECK_THROWS_AS(to_stage(parse_presentation_file(kCurve)), ValidationError);
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

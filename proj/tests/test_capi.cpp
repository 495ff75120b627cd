// Copyright 2026 The rlamalg Authors.
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


#include <doctest.h>

#include <string>
#include <vector>

#include "rlamalg/rlamalg.h"

namespace {

std::string Path(const std::string& file) { return std::string(RLAMALG_FIXTURE_DIR) + "/" + file; }

std::string Take(char* text) {
  std::string out = text ? text : "";
  rla_string_free(text);
  return out;
}

}  // namespace

TEST_CASE("algebra handles") {
  rla_algebra* a = nullptr;
  REQUIRE(rla_algebra_load(Path("invol-C.alg").c_str(), &a) == RLA_OK);
  CHECK(rla_algebra_size(a) == 7);
  int value = -1;
  CHECK(rla_algebra_predicate(a, "involutive", &value) == RLA_OK);
  CHECK(value == 1);
  CHECK(rla_algebra_predicate(a, "modular", &value) == RLA_ERR_INVALID_ARGUMENT);
  CHECK(std::string(rla_last_error()).find("modular") != std::string::npos);
  char* text = nullptr;
  REQUIRE(rla_algebra_hasse(a, &text) == RLA_OK);
  CHECK(Take(text).find("cb") != std::string::npos);
  rla_algebra_free(a);
}

TEST_CASE("errors come back as status codes") {
  rla_algebra* a = nullptr;
  CHECK(rla_algebra_load(Path("nope.alg").c_str(), &a) == RLA_ERR_IO);
  CHECK(a == nullptr);
  CHECK(rla_algebra_parse("{", &a) == RLA_ERR_PARSE);
  CHECK(std::string(rla_status_name(RLA_ERR_PARSE)).size() > 0);
  CHECK(std::string(rla_version()) == "0.1.0");
}

TEST_CASE("amalgamation through the C API") {
  rla_span* s = nullptr;
  REQUIRE(rla_span_load(Path("idem.span").c_str(), &s) == RLA_OK);
  rla_search_options o;
  rla_search_options_init(&o);
  o.max_size = 6;
  rla_outcome outcome = RLA_FOUND;
  char* json = nullptr;
  double wall = -1;
  REQUIRE(rla_amalgamate(s, &o, &outcome, &json, &wall) == RLA_OK);
  CHECK(outcome == RLA_NONE_UP_TO_BOUND);
  CHECK(Take(json).find("NoneUpToBound") != std::string::npos);
  CHECK(wall >= 0);
  o.flags = "distributive";
  CHECK(rla_amalgamate(s, &o, &outcome, &json, &wall) == RLA_ERR_INCONSISTENT_CONSTRAINTS);
  rla_span_free(s);
}

TEST_CASE("certificates and fixtures through the C API") {
  int valid = 0;
  char* result = nullptr;
  REQUIRE(rla_certify(Path("distrib.cert").c_str(), nullptr, nullptr, &valid, &result) == RLA_OK);
  CHECK(valid == 1);
  rla_string_free(result);
  REQUIRE(rla_certify(Path("distrib.cert").c_str(), nullptr, "", &valid, &result) == RLA_OK);
  CHECK(valid == 0);
  CHECK(Take(result).find("MEET-JOIN-DIST") != std::string::npos);
  int passed = 0;
  char* report = nullptr;
  REQUIRE(rla_fixtures_verify(RLAMALG_FIXTURE_DIR, 0, 1, &passed, &report) == RLA_OK);
  CHECK(passed == 1);
  rla_string_free(report);
}

TEST_CASE("enumeration through a sink") {
  std::vector<std::string> texts;
  std::size_t count = 0;
  auto sink = [](const char* text, void* user) -> int {
    static_cast<std::vector<std::string>*>(user)->push_back(text);
    return 1;
  };
  REQUIRE(rla_enumerate(3, nullptr, 0, sink, &texts, &count) == RLA_OK);
  CHECK(count == 3);
  CHECK(texts.size() == 3);
}

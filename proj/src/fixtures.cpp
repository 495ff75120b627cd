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


#include "rlamalg/fixtures.hpp"

#include <filesystem>

#include <json.hpp>

#include "rlamalg/certificate.hpp"
#include "rlamalg/error.hpp"
#include "rlamalg/io.hpp"
#include "rlamalg/morphism.hpp"
#include "rlamalg/search.hpp"
#include "rlamalg/variety.hpp"

namespace rlamalg {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

const std::vector<std::string> kPredicates = {"commutative", "idempotent", "integral",
                                              "distributive", "involutive", "cyclic", "odd"};

FixtureItem CheckAlgebraFixture(const fs::path& path, const Json& predicates) {
  FixtureItem item{"algebra", path.filename().string(), false, ""};
  try {
    const std::string text = ReadFile(path.string());
    const PartialAlgebraSpec spec = ParseSpec(text);
    if (SerializeSpec(spec) != text) {
      item.detail = "does not round-trip";
      return item;
    }
    const auto completions = CompletePartialProduct(spec, 2);
    if (completions.size() != 1) {
      item.detail = std::to_string(completions.size()) + " completions";
      return item;
    }
    const Algebra& alg = completions[0];
    const AxiomReport axioms = CheckAxioms(alg.tables());
    if (!axioms.passed) {
      item.detail = "axiom violated: " + axioms.violations[0].axiom;
      return item;
    }
    std::string summary;
    for (const auto& [name, expected] : predicates.items()) {
      const bool actual = EvaluatePredicate(alg, name);
      if (actual != expected.get<bool>()) {
        item.detail = name + " is " + (actual ? "true" : "false");
        return item;
      }
      summary += (summary.empty() ? "" : " ") + std::string(actual ? "" : "not-") + name;
    }
    item.passed = true;
    item.detail = "size " + std::to_string(alg.size()) + ", " + summary;
  } catch (const Error& e) {
    item.detail = std::string(ErrorCodeName(e.code())) + ": " + e.what();
  }
  return item;
}

}  // namespace

const std::vector<std::string>& PredicateNames() { return kPredicates; }

bool EvaluatePredicate(const Algebra& alg, std::string_view name) {
  if (name == "commutative") return IsCommutative(alg);
  if (name == "idempotent") return IsIdempotent(alg);
  if (name == "integral") return IsIntegral(alg);
  if (name == "distributive") return IsDistributive(alg);
  if (name == "involutive") return IsInvolutive(alg);
  if (name == "cyclic") return IsCyclic(alg);
  if (name == "odd") return IsOdd(alg);
  throw Error(ErrorCode::kInvalidArgument, "unknown predicate '" + std::string(name) + "'");
}

bool FixtureReport::passed() const {
  for (const auto& item : items) {
    if (!item.passed) return false;
  }
  return !items.empty();
}

int FixtureReport::count(std::string_view kind, bool passed_only) const {
  int n = 0;
  for (const auto& item : items) {
    if (item.kind == kind && (item.passed || !passed_only)) ++n;
  }
  return n;
}

FixtureReport VerifyFixtures(const std::string& dir, const FixtureOptions& options) {
  const fs::path root(dir);
  Json manifest;
  try {
    manifest = Json::parse(ReadFile((root / "manifest.json").string()));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("manifest.json: ") + e.what());
  }
  for (const char* key : {"algebras", "spans", "certificates"}) {
    if (!manifest.contains(key) || !manifest[key].is_array()) {
      throw Error(ErrorCode::kParse, std::string("manifest.json: field '") + key +
                                         "' must be an array");
    }
  }
  FixtureReport report;
  for (const auto& a : manifest["algebras"]) {
    report.items.push_back(CheckAlgebraFixture(root / a.at("file").get<std::string>(),
                                               a.value("predicates", Json::object())));
  }
  for (const auto& s : manifest["spans"]) {
    const std::string file = s.at("file");
    FixtureItem item{"span", file, false, ""};
    std::optional<Span> span;
    try {
      span = LoadSpanFile((root / file).string());
      item.passed = IsEmbedding(span->LeftLeg()) && IsEmbedding(span->RightLeg());
      item.detail = item.passed ? "both legs are embeddings" : "a leg is not an embedding";
    } catch (const Error& e) {
      item.detail = std::string(ErrorCodeName(e.code())) + ": " + e.what();
    }
    report.items.push_back(item);
    if (!options.search || !span) continue;
    for (const auto& q : s.value("searches", Json::array())) {
      const auto flags = VarietyConstraints::FromNames(q.at("flags").get<std::vector<std::string>>());
      SearchOptions so;
      so.max_size = q.at("max_size");
      so.threads = options.threads;
      FixtureItem result{"search", file + " [" + flags.ToString() + "]", false, ""};
      try {
        const SearchOutcome out = SearchAmalgam(*span, flags, so);
        result.passed = out.kind == OutcomeKind::kNoneUpToBound;
        result.detail = std::string(OutcomeName(out.kind)) + "(" + std::to_string(so.max_size) +
                        "), " + std::to_string(out.stats.nodes) + " nodes";
      } catch (const Error& e) {
        result.detail = std::string(ErrorCodeName(e.code())) + ": " + e.what();
      }
      report.items.push_back(result);
    }
  }
  for (const auto& c : manifest["certificates"]) {
    const std::string file = c.at("file");
    FixtureItem item{"certificate", file, false, ""};
    try {
      const auto cert = LoadCertificateFile((root / file).string());
      const Span span = LoadSpanFile((root / cert.span).string());
      const auto result = CheckCertificate(span, cert);
      item.passed = result.valid;
      item.detail = result.valid ? "Valid, " + std::to_string(cert.steps.size()) + " steps"
                                 : "InvalidStep(" + std::to_string(result.step) + ", " +
                                       result.reason + ")";
    } catch (const Error& e) {
      item.detail = std::string(ErrorCodeName(e.code())) + ": " + e.what();
    }
    report.items.push_back(item);
  }
  return report;
}

std::string SerializeFixtureReport(const FixtureReport& report) {
  Json j;
  j["passed"] = report.passed();
  for (const char* kind : {"algebra", "span", "search", "certificate"}) {
    j["summary"][kind] = {{"passed", report.count(kind, true)}, {"total", report.count(kind, false)}};
  }
  j["items"] = Json::array();
  for (const auto& item : report.items) {
    j["items"].push_back(
        {{"kind", item.kind}, {"file", item.file}, {"passed", item.passed}, {"detail", item.detail}});
  }
  return j.dump(2);
}

}  // namespace rlamalg

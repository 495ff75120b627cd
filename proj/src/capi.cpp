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


#include "rlamalg/rlamalg.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "rlamalg/algebra.hpp"
#include "rlamalg/certificate.hpp"
#include "rlamalg/enumerate.hpp"
#include "rlamalg/error.hpp"
#include "rlamalg/fixtures.hpp"
#include "rlamalg/io.hpp"
#include "rlamalg/morphism.hpp"
#include "rlamalg/search.hpp"
#include "rlamalg/variety.hpp"

struct rla_algebra {
  rlamalg::Algebra alg;
};

struct rla_span {
  rlamalg::Span span;
};

namespace {

using rlamalg::Error;
using rlamalg::ErrorCode;
using Json = nlohmann::ordered_json;

thread_local std::string last_error;

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
rla_status Guard(F&& body) {
  last_error.clear();
  try {
    body();
    return RLA_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<rla_status>(static_cast<int>(e.code()));
  } catch (const std::exception& e) {
    last_error = e.what();
    return RLA_ERR_INTERNAL;
  }
}

void Require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

rlamalg::VarietyConstraints Flags(const char* flags) {
  if (!flags || !*flags) return {};
  return rlamalg::VarietyConstraints::Parse(flags);
}

Json Labels(const rlamalg::Algebra& alg, bool (*pred)(const rlamalg::Algebra&, rlamalg::Index)) {
  Json out = Json::array();
  for (rlamalg::Index i = 0; i < alg.size(); ++i) {
    if (pred(alg, i)) out.push_back(alg.label(i));
  }
  return out;
}

Json Describe(const rlamalg::Algebra& alg) {
  Json j;
  j["name"] = alg.name();
  j["size"] = alg.size();
  j["passed"] = true;
  j["violations"] = Json::array();
  Json preds = Json::object();
  for (const auto& name : rlamalg::PredicateNames()) {
    const bool pointed = name == "involutive" || name == "cyclic" || name == "odd";
    if (pointed && !alg.pointed()) continue;
    preds[name] = rlamalg::EvaluatePredicate(alg, name);
  }
  j["predicates"] = preds;
  j["central"] = Labels(alg, rlamalg::IsCentralElement);
  j["idempotent_elements"] = Labels(alg, rlamalg::IsIdempotentElement);
  if (alg.size() <= rlamalg::kMaxHasseSize) j["hasse"] = rlamalg::RenderHasse(alg);
  return j;
}

}  // namespace

extern "C" {

const char* rla_version(void) { return rlamalg::kToolVersion; }

const char* rla_status_name(rla_status status) {
  if (status == RLA_OK) return "Ok";
  if (status == RLA_ERR_INTERNAL) return "Internal";
  return rlamalg::ErrorCodeName(static_cast<ErrorCode>(static_cast<int>(status)));
}

const char* rla_last_error(void) { return last_error.c_str(); }

void rla_string_free(char* s) { std::free(s); }

rla_status rla_digest_files(const char* const* paths, size_t count, char** digest) {
  return Guard([&] {
    Require(digest && (paths || count == 0), "null argument");
    std::vector<std::string> texts;
    for (size_t i = 0; i < count; ++i) texts.push_back(rlamalg::ReadFile(paths[i]));
    *digest = Dup(rlamalg::DigestInputs(texts));
  });
}

rla_status rla_digest_span(const char* path, char** digest) {
  return Guard([&] {
    Require(path && digest, "null argument");
    std::vector<std::string> texts;
    for (const auto& input : rlamalg::SpanInputs(path)) texts.push_back(rlamalg::ReadFile(input));
    *digest = Dup(rlamalg::DigestInputs(texts));
  });
}

rla_status rla_run_report(const char* command, const char* digest, const char* outcome_json,
                          const char* stats_json, char** report) {
  return Guard([&] {
    Require(command && digest && outcome_json && stats_json && report, "null argument");
    rlamalg::RunReport r;
    r.command = command;
    r.inputs_digest = digest;
    r.outcome = outcome_json;
    r.stats = stats_json;
    *report = Dup(rlamalg::SerializeRunReport(r));
  });
}

rla_status rla_algebra_load(const char* path, rla_algebra** out) {
  return Guard([&] {
    Require(path && out, "null argument");
    *out = new rla_algebra{rlamalg::LoadAlgebraFile(path)};
  });
}

rla_status rla_algebra_parse(const char* text, rla_algebra** out) {
  return Guard([&] {
    Require(text && out, "null argument");
    *out = new rla_algebra{rlamalg::CompleteUnique(rlamalg::ParseSpec(text))};
  });
}

void rla_algebra_free(rla_algebra* alg) { delete alg; }

int rla_algebra_size(const rla_algebra* alg) { return alg ? alg->alg.size() : 0; }

rla_status rla_algebra_serialize(const rla_algebra* alg, char** text) {
  return Guard([&] {
    Require(alg && text, "null argument");
    *text = Dup(rlamalg::SerializeAlgebra(alg->alg));
  });
}

rla_status rla_algebra_hasse(const rla_algebra* alg, char** text) {
  return Guard([&] {
    Require(alg && text, "null argument");
    *text = Dup(rlamalg::RenderHasse(alg->alg));
  });
}

rla_status rla_algebra_predicate(const rla_algebra* alg, const char* name, int* value) {
  return Guard([&] {
    Require(alg && name && value, "null argument");
    *value = rlamalg::EvaluatePredicate(alg->alg, name) ? 1 : 0;
  });
}

rla_status rla_check_file(const char* path, int* passed, char** report) {
  return Guard([&] {
    Require(path && passed && report, "null argument");
    const rlamalg::PartialAlgebraSpec spec = rlamalg::LoadSpecFile(path);
    const int n = spec.size;
    if (spec.product_constraints.size() == static_cast<size_t>(n) * n) {
      std::vector<rlamalg::Index> prod(n * n);
      for (const auto& c : spec.product_constraints) prod[c.left * n + c.right] = c.value;
      const auto tables = rlamalg::DeriveTables(n, spec.leq, prod, spec.unit, spec.zero);
      const auto axioms = rlamalg::CheckAxioms(tables);
      if (!axioms.passed) {
        Json j;
        j["name"] = spec.name;
        j["size"] = n;
        j["passed"] = false;
        j["violations"] = Json::array();
        for (const auto& v : axioms.violations) {
          j["violations"].push_back({{"axiom", v.axiom}, {"witness", v.witness}});
        }
        *passed = 0;
        *report = Dup(j.dump(2));
        return;
      }
    }
    *passed = 1;
    *report = Dup(Describe(rlamalg::CompleteUnique(spec)).dump(2));
  });
}

rla_status rla_complete_file(const char* path, size_t limit, size_t* count, char** completions) {
  return Guard([&] {
    Require(path && count && completions, "null argument");
    Require(limit >= 1, "limit must be at least 1");
    const auto algebras = rlamalg::CompletePartialProduct(rlamalg::LoadSpecFile(path), limit);
    Json j = Json::array();
    for (const auto& a : algebras) j.push_back(rlamalg::SerializeAlgebra(a));
    *count = algebras.size();
    *completions = Dup(j.dump());
  });
}

rla_status rla_embeddings(const rla_algebra* source, const rla_algebra* target, uint64_t budget,
                          size_t* count, char** maps) {
  return Guard([&] {
    Require(source && target && count && maps, "null argument");
    const auto found = rlamalg::EnumerateEmbeddings(source->alg, target->alg, budget);
    Json j = Json::array();
    for (const auto& m : found) j.push_back(m.map);
    *count = found.size();
    *maps = Dup(j.dump());
  });
}

rla_status rla_span_load(const char* path, rla_span** out) {
  return Guard([&] {
    Require(path && out, "null argument");
    *out = new rla_span{rlamalg::LoadSpanFile(path)};
  });
}

void rla_span_free(rla_span* span) { delete span; }

void rla_search_options_init(rla_search_options* options) {
  if (!options) return;
  options->max_size = 8;
  options->budget = rlamalg::kDefaultSearchBudget;
  options->threads = 1;
  options->mode = RLA_MODE_SEEDED;
  options->flags = nullptr;
}

rla_status rla_amalgamate(const rla_span* span, const rla_search_options* options,
                          rla_outcome* outcome, char** outcome_json, double* wall_ms) {
  return Guard([&] {
    Require(span && options && outcome && outcome_json, "null argument");
    Require(options->budget > 0, "budget must be positive");
    Require(options->threads >= 1, "threads must be at least 1");
    rlamalg::SearchOptions so;
    so.max_size = options->max_size;
    so.budget = options->budget;
    so.threads = options->threads;
    so.mode = options->mode == RLA_MODE_SQUARE ? rlamalg::SearchMode::kSquare
                                               : rlamalg::SearchMode::kSeeded;
    const auto result = rlamalg::SearchAmalgam(span->span, Flags(options->flags), so);
    *outcome = static_cast<rla_outcome>(static_cast<int>(result.kind));
    *outcome_json = Dup(rlamalg::SerializeOutcome(result));
    if (wall_ms) *wall_ms = result.stats.wall_ms;
  });
}

rla_status rla_enumerate(int size, const char* flags, uint64_t budget, rla_text_sink sink,
                         void* user, size_t* count) {
  return Guard([&] {
    Require(sink, "null sink");
    size_t n = 0;
    rlamalg::EnumerateAlgebras(
        size, Flags(flags),
        [&](const rlamalg::Algebra& alg) {
          ++n;
          return sink(rlamalg::SerializeAlgebra(alg).c_str(), user) != 0;
        },
        budget ? budget : rlamalg::kDefaultEnumerateBudget);
    if (count) *count = n;
  });
}

void rla_hunt_options_init(rla_hunt_options* options) {
  if (!options) return;
  const rlamalg::HuntOptions d;
  options->apex_max = d.apex_max;
  options->leg_max = d.leg_max;
  options->search_bound = d.search_bound;
  options->budget = d.budget;
  options->threads = d.threads;
  options->resume_after = d.resume_after;
  options->flags = nullptr;
}

rla_status rla_span_hunt(const rla_hunt_options* options, rla_text_sink sink, void* user) {
  return Guard([&] {
    Require(options && sink, "null argument");
    rlamalg::HuntOptions ho;
    ho.apex_max = options->apex_max;
    ho.leg_max = options->leg_max;
    ho.search_bound = options->search_bound;
    ho.budget = options->budget;
    ho.threads = options->threads;
    ho.resume_after = options->resume_after;
    ho.constraints = Flags(options->flags);
    rlamalg::GenerateCandidateSpans(ho, [&](const rlamalg::HuntRecord& r) {
      Json j;
      j["cursor"] = r.cursor;
      j["apex"] = {r.apex_size, r.apex_id};
      j["B"] = {r.left_size, r.left_id};
      j["C"] = {r.right_size, r.right_id};
      j["phi_B"] = r.phi_left;
      j["phi_C"] = r.phi_right;
      j["outcome"] = rlamalg::OutcomeName(r.outcome);
      j["found_size"] = r.found_size;
      j["nodes"] = r.nodes;
      j["candidate"] = r.candidate();
      if (r.candidate() && r.span) {
        j["span"] = {{"apex", Json::parse(rlamalg::SerializeAlgebra(r.span->apex))},
                     {"B", Json::parse(rlamalg::SerializeAlgebra(r.span->left))},
                     {"C", Json::parse(rlamalg::SerializeAlgebra(r.span->right))}};
      }
      return sink(j.dump().c_str(), user) != 0;
    });
  });
}

rla_status rla_certify(const char* cert_path, const char* span_path, const char* flags, int* valid,
                       char** result) {
  return Guard([&] {
    Require(cert_path && valid && result, "null argument");
    const auto cert = rlamalg::LoadCertificateFile(cert_path);
    const std::string span_file =
        span_path ? std::string(span_path)
                  : (std::filesystem::path(cert_path).parent_path() / cert.span).string();
    const rlamalg::Span span = rlamalg::LoadSpanFile(span_file);
    const auto constraints = flags ? Flags(flags) : cert.flags;
    const auto r = rlamalg::CheckCertificate(span, cert, constraints);
    Json j;
    j["name"] = cert.name;
    j["steps"] = cert.steps.size();
    j["flags"] = constraints.Names();
    j["valid"] = r.valid;
    if (!r.valid) {
      j["step"] = r.step;
      j["reason"] = r.reason;
    }
    *valid = r.valid ? 1 : 0;
    *result = Dup(j.dump(2));
  });
}

rla_status rla_fixtures_verify(const char* dir, int search, int threads, int* passed,
                               char** report) {
  return Guard([&] {
    Require(dir && passed && report, "null argument");
    Require(threads >= 1, "threads must be at least 1");
    rlamalg::FixtureOptions options;
    options.search = search != 0;
    options.threads = threads;
    const auto r = rlamalg::VerifyFixtures(dir, options);
    *passed = r.passed() ? 1 : 0;
    *report = Dup(rlamalg::SerializeFixtureReport(r));
  });
}

}  // extern "C"

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

// Text formats for algebras, spans, amalgams and run reports, plus the
// ASCII Hasse renderer. All formats are JSON objects. Parse failures throw
// Error(kParse) with a message naming the offending field; missing files
// throw Error(kIo).

#ifndef RLAMALG_IO_HPP_
#define RLAMALG_IO_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include "rlamalg/algebra.hpp"
#include "rlamalg/morphism.hpp"
#include "rlamalg/search.hpp"

namespace rlamalg {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kMaxHasseSize = 32;

// Algebra files: name, size, labels, leq (rows, or alternatively "covers"
// as [lower, upper] pairs), product (-1 for unknown), unit, and optional
// zero, central and idempotent_elements. Residual tables are rejected.
PartialAlgebraSpec ParseSpec(std::string_view text);
// Canonical layout: one key per line, one matrix row per line.
// SerializeSpec(ParseSpec(t)) == t for every canonically written file.
std::string SerializeSpec(const PartialAlgebraSpec& spec);
std::string SerializeAlgebra(const Algebra& alg);

// The unique completion of a spec. Throws Error(kInconsistentSpec) when the
// spec has no completion or more than one.
Algebra CompleteUnique(const PartialAlgebraSpec& spec);

std::string ReadFile(const std::string& path);
PartialAlgebraSpec LoadSpecFile(const std::string& path);
Algebra LoadAlgebraFile(const std::string& path);

// Span files: {"name", "apex", "B", "C", "phi_B", "phi_C"}; the three
// algebra paths are relative to the span file. The legs are checked to be
// embeddings (Error(kInvalidSpan)).
Span LoadSpanFile(const std::string& path);
// The span file itself followed by the resolved paths of its apex, B and C.
std::vector<std::string> SpanInputs(const std::string& path);

// {"target": <algebra>, "psi_B": [...], "psi_C": [...]}
std::string SerializeAmalgam(const Amalgam& amalgam);
Amalgam ParseAmalgam(std::string_view text);

// Search outcome as JSON text (wall time excluded so reports compare
// byte-for-byte).
std::string SerializeOutcome(const SearchOutcome& outcome);

struct RunReport {
  std::string command;
  std::string inputs_digest;
  std::string outcome;  // JSON text
  std::string stats;    // JSON text
  std::string tool_version = kToolVersion;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};
std::string SerializeRunReport(const RunReport& report);
RunReport ParseRunReport(std::string_view text);

// Lowercase hex SHA-256 of the concatenated input texts.
std::string DigestInputs(const std::vector<std::string>& texts);

// Levels by height from the bottom, one line per level, top level first.
// Markers follow the node convention: (*) central idempotent, ( ) central,
// [*] non-central idempotent, [ ] non-central. Throws Error(kTooLarge)
// above kMaxHasseSize elements.
std::string RenderHasse(const Algebra& alg);

}  // namespace rlamalg

#endif  // RLAMALG_IO_HPP_

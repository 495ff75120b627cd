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


// The bundled fixture set and its verification gate.

#ifndef RLAMALG_FIXTURES_HPP_
#define RLAMALG_FIXTURES_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "rlamalg/algebra.hpp"

namespace rlamalg {

// commutative, idempotent, integral, distributive, involutive, cyclic, odd.
const std::vector<std::string>& PredicateNames();
// Throws Error(kInvalidArgument) on an unknown name and Error(kNoZeroConstant)
// for a pointed predicate on an unpointed algebra.
bool EvaluatePredicate(const Algebra& alg, std::string_view name);

struct FixtureOptions {
  bool search = true;  // run the bounded searches listed in the manifest
  int threads = 1;
};

struct FixtureItem {
  std::string kind;  // algebra, span, search, certificate
  std::string file;
  bool passed = false;
  std::string detail;
};

struct FixtureReport {
  std::vector<FixtureItem> items;
  bool passed() const;
  int count(std::string_view kind, bool passed_only) const;
};

// Reads `dir`/manifest.json and checks every listed fixture: algebras parse,
// round-trip, complete uniquely, pass the axioms and match their claimed
// predicates; spans have embedding legs and admit no amalgam up to the
// listed bounds; certificates check valid. Failures are data; only a
// missing or malformed manifest throws.
FixtureReport VerifyFixtures(const std::string& dir, const FixtureOptions& options = {});

// JSON text, items in manifest order.
std::string SerializeFixtureReport(const FixtureReport& report);

}  // namespace rlamalg

#endif  // RLAMALG_FIXTURES_HPP_

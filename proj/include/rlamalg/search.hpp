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

// Bounded amalgam search.
//
// For each carrier size n the engine places B and C into {0..n-1}, decides
// the order of D as a lattice extending both, and then fills D's product
// table with a propagating backtracker. Fixed product cells, residual
// preservation of the legs and the variety flags all become domain
// constraints on the table.

#ifndef RLAMALG_SEARCH_HPP_
#define RLAMALG_SEARCH_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "rlamalg/morphism.hpp"
#include "rlamalg/variety.hpp"

namespace rlamalg {

inline constexpr std::uint64_t kDefaultSearchBudget = 2'000'000'000;
inline constexpr int kMaxSearchSize = 16;

enum class OutcomeKind { kFound, kNoneUpToBound, kBudgetExhausted };
const char* OutcomeName(OutcomeKind kind);

// kSeeded looks for strong amalgams only: B occupies indices 0..|B|-1 and
// C \ A the next |C|-|A| indices. kSquare searches both legs and also admits
// amalgams in which B and C overlap outside A.
enum class SearchMode { kSeeded, kSquare };
const char* SearchModeName(SearchMode mode);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t propagation_failures = 0;
  std::uint64_t lattices = 0;
  int first_size = 0;
  int last_size = 0;
  // Wall time is informative only and excluded from reports.
  double wall_ms = 0.0;
};

struct SearchOutcome {
  OutcomeKind kind = OutcomeKind::kNoneUpToBound;
  std::optional<Amalgam> amalgam;
  int bound = 0;
  // Carrier size of the amalgam, or the size being searched when the budget
  // ran out.
  int size = 0;
  SearchStats stats;
};

struct SearchOptions {
  int max_size = 8;
  std::uint64_t budget = kDefaultSearchBudget;
  int threads = 1;
  SearchMode mode = SearchMode::kSeeded;
};

// Iterative deepening from |B|+|C|-|A| (seeded) or max(|B|,|C|) (square) up
// to options.max_size. Outcomes and node counts do not depend on
// options.threads. Throws Error(kInvalidSpan) for a span whose legs are not
// embeddings and Error(kInconsistentConstraints) when the span algebras do
// not satisfy `constraints`.
SearchOutcome SearchAmalgam(const Span& span, const VarietyConstraints& constraints,
                            const SearchOptions& options);

SearchOutcome SearchAmalgamUnrestrictedSquare(
    const Span& span, int max_size, std::uint64_t budget,
    const VarietyConstraints& constraints = {}, int threads = 1);

}  // namespace rlamalg

#endif  // RLAMALG_SEARCH_HPP_

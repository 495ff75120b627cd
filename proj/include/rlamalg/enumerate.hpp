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

// Enumeration of small residuated lattices up to isomorphism, and the span
// generator built on top of it.

#ifndef RLAMALG_ENUMERATE_HPP_
#define RLAMALG_ENUMERATE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rlamalg/algebra.hpp"
#include "rlamalg/morphism.hpp"
#include "rlamalg/search.hpp"
#include "rlamalg/variety.hpp"

namespace rlamalg {

inline constexpr int kMaxEnumerateSize = 8;
inline constexpr std::uint64_t kDefaultEnumerateBudget = 1'000'000'000;

// Lattice orders on {0..n-1} up to isomorphism, each in canonical form:
// 0 is the bottom, n-1 the top, and the matrix is the lexicographically
// least over all linear extensions. Deterministic order.
std::vector<std::vector<std::uint8_t>> EnumerateLatticeOrders(int n);

// Return false to stop the enumeration.
using AlgebraSink = std::function<bool(const Algebra&)>;

// All residuated lattices of the given size satisfying `constraints`, one
// per isomorphism class, sorted by (lattice, unit, product table). Pointed
// flags produce pointed algebras with every admissible zero. Throws
// Error(kTooLarge) above kMaxEnumerateSize and Error(kBudgetExceeded) when
// the product search uses more than `budget` nodes.
void EnumerateAlgebras(int size, const VarietyConstraints& constraints,
                       const AlgebraSink& sink,
                       std::uint64_t budget = kDefaultEnumerateBudget);
std::vector<Algebra> EnumerateAlgebras(int size, const VarietyConstraints& constraints,
                                       std::uint64_t budget = kDefaultEnumerateBudget);

struct HuntOptions {
  int apex_max = 1;
  int leg_max = 2;
  int search_bound = 4;
  std::uint64_t budget = 10'000'000;  // per span search
  VarietyConstraints constraints;
  int threads = 1;
  // Spans with cursor <= resume_after are skipped.
  std::int64_t resume_after = -1;
};

// One examined span. `cursor` numbers spans in generation order.
struct HuntRecord {
  std::int64_t cursor = 0;
  int apex_size = 0;
  int apex_id = 0;
  int left_size = 0;
  int left_id = 0;
  int right_size = 0;
  int right_id = 0;
  std::vector<Index> phi_left;
  std::vector<Index> phi_right;
  std::optional<Span> span;
  OutcomeKind outcome = OutcomeKind::kFound;
  int found_size = 0;
  std::uint64_t nodes = 0;
  bool candidate() const { return outcome != OutcomeKind::kFound; }
};

// Return false to stop the hunt.
using HuntSink = std::function<bool(const HuntRecord&)>;

// Enumerates apexes of size 1..apex_max and unordered pairs of extensions of
// size |A|..leg_max with one embedding per Aut(B)-orbit, runs the square
// search (amalgams need not be strong) on each span and reports every
// examined span in order. Throws Error(kInvalidArgument) unless
// 1 <= apex_max <= leg_max <= search_bound.
void GenerateCandidateSpans(const HuntOptions& options, const HuntSink& sink);

}  // namespace rlamalg

#endif  // RLAMALG_ENUMERATE_HPP_

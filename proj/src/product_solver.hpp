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

// Propagating backtracker for residuated products over a fixed finite
// lattice. Shared by partial-product completion, algebra enumeration and the
// amalgam search.

#ifndef RLAMALG_SRC_PRODUCT_SOLVER_HPP_
#define RLAMALG_SRC_PRODUCT_SOLVER_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "rlamalg/algebra.hpp"

namespace rlamalg::internal {

// Element sets; carriers are limited to kMaxCarrier elements.
using Mask = std::uint64_t;
inline constexpr int kMaxCarrier = 64;

inline Mask Bit(Index i) { return Mask{1} << i; }

struct LatticeData {
  int n = 0;
  std::vector<std::uint8_t> leq;
  std::vector<Index> join;
  std::vector<Index> meet;
  Index bottom = 0;
  Index top = 0;
  std::vector<Mask> down;  // down[w] = {v : v <= w}
  std::vector<Mask> up;    // up[w] = {v : w <= v}
  std::vector<std::pair<Index, Index>> covers;
  // (y, z, y v z) for every incomparable pair y < z.
  std::vector<std::array<Index, 3>> incomparable_joins;

  bool le(Index a, Index b) const { return leq[a * n + b] != 0; }
  Index join_of(Index a, Index b) const { return join[a * n + b]; }
  Index meet_of(Index a, Index b) const { return meet[a * n + b]; }

  // nullopt when `leq` (assumed a partial order) is not a lattice.
  static std::optional<LatticeData> FromOrder(int n,
                                              std::vector<std::uint8_t> leq);
};

bool IsPartialOrder(int n, const std::vector<std::uint8_t>& leq);
bool IsDistributiveLattice(const LatticeData& lattice);

struct ProductProblem {
  const LatticeData* lattice = nullptr;
  Index unit = 0;
  // Initial domain per cell (row-major); empty means "everything".
  std::vector<Mask> domains;
  // Cells forced equal, e.g. commutativity or a central element.
  std::vector<std::pair<int, int>> equal_cells;
};

struct SolverStats {
  std::uint64_t nodes = 0;
  std::uint64_t failures = 0;
};

enum class SolveStatus { kExhausted, kStopped, kBudget };

// Return false to stop the search.
using SolutionCallback = std::function<bool(const std::vector<Index>& prod)>;

class ProductSolver {
 public:
  explicit ProductSolver(const ProductProblem& problem);

  // Domains after unit, absorption and root propagation; nullopt if the root
  // already fails.
  std::optional<std::vector<Mask>> RootDomains() const;

  // Depth-first search, branching on the first undetermined cell in
  // row-major order with ascending values. Each branch counts as one node;
  // the search stops with kBudget once stats.nodes exceeds `budget`.
  SolveStatus Solve(std::uint64_t budget, SolverStats& stats,
                    const SolutionCallback& on_solution) const;

 private:
  bool Propagate(std::vector<Mask>& dom) const;
  SolveStatus Search(std::vector<Mask>& dom, std::uint64_t budget,
                     SolverStats& stats,
                     const SolutionCallback& on_solution) const;
  Mask JoinSet(Mask a, Mask b) const;

  const LatticeData& lat_;
  int n_;
  std::vector<Mask> initial_;
  std::vector<std::pair<int, int>> equal_cells_;
};

}  // namespace rlamalg::internal

#endif  // RLAMALG_SRC_PRODUCT_SOLVER_HPP_

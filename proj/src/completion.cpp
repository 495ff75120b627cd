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

#include <algorithm>
#include <limits>
#include <string>

#include "product_solver.hpp"
#include "rlamalg/algebra.hpp"
#include "rlamalg/error.hpp"

namespace rlamalg {

using internal::Bit;
using internal::LatticeData;
using internal::Mask;

namespace {

void ValidateSpec(const PartialAlgebraSpec& spec) {
  const int n = spec.size;
  auto in_range = [n](Index i) { return i >= 0 && i < n; };
  if (n <= 0) throw Error(ErrorCode::kInvalidArgument, "size must be positive");
  if (n > internal::kMaxCarrier) {
    throw Error(ErrorCode::kTooLarge, "carrier exceeds " +
                                          std::to_string(internal::kMaxCarrier));
  }
  if (static_cast<int>(spec.leq.size()) != n * n) {
    throw Error(ErrorCode::kInvalidArgument, "leq must be a size x size matrix");
  }
  if (!in_range(spec.unit)) throw Error(ErrorCode::kInvalidArgument, "unit out of range");
  if (spec.zero && !in_range(*spec.zero)) {
    throw Error(ErrorCode::kInvalidArgument, "zero out of range");
  }
  if (!spec.labels.empty() && static_cast<int>(spec.labels.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument, "labels must name every element");
  }
  for (const auto& c : spec.product_constraints) {
    if (!in_range(c.left) || !in_range(c.right) || !in_range(c.value)) {
      throw Error(ErrorCode::kInvalidArgument, "product constraint out of range");
    }
    for (const auto& d : spec.product_constraints) {
      if (c.left == d.left && c.right == d.right && c.value != d.value) {
        throw Error(ErrorCode::kInconsistentSpec,
                    "product (" + std::to_string(c.left) + "," +
                        std::to_string(c.right) + ") asserted twice with different values");
      }
    }
  }
  for (const auto* list : {&spec.central, &spec.idempotent_elements}) {
    if (!*list) continue;
    for (Index i : **list) {
      if (!in_range(i)) throw Error(ErrorCode::kInvalidArgument, "flagged element out of range");
    }
  }
}

bool Listed(const std::optional<std::vector<Index>>& list, Index i) {
  return std::find(list->begin(), list->end(), i) != list->end();
}

}  // namespace

std::vector<Algebra> CompletePartialProduct(const PartialAlgebraSpec& spec,
                                            std::size_t limit) {
  ValidateSpec(spec);
  if (limit == 0) throw Error(ErrorCode::kInvalidArgument, "limit must be at least 1");
  const int n = spec.size;
  if (!internal::IsPartialOrder(n, spec.leq)) {
    throw Error(ErrorCode::kNotALattice, "leq is not a partial order");
  }
  const auto lattice = LatticeData::FromOrder(n, spec.leq);
  if (!lattice) throw Error(ErrorCode::kNotALattice, "order is not a lattice");

  internal::ProductProblem problem;
  problem.lattice = &*lattice;
  problem.unit = spec.unit;
  const Mask full = n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  problem.domains.assign(n * n, full);
  for (const auto& c : spec.product_constraints) {
    problem.domains[c.left * n + c.right] &= Bit(c.value);
  }
  if (spec.central) {
    for (Index x : *spec.central) {
      for (Index y = 0; y < n; ++y) {
        if (x != y) problem.equal_cells.emplace_back(x * n + y, y * n + x);
      }
    }
  }
  if (spec.idempotent_elements) {
    for (Index x = 0; x < n; ++x) {
      if (Listed(spec.idempotent_elements, x)) {
        problem.domains[x * n + x] &= Bit(x);
      } else {
        problem.domains[x * n + x] &= ~Bit(x);
      }
    }
  }

  internal::ProductSolver solver(problem);
  if (!solver.RootDomains()) {
    throw Error(ErrorCode::kInconsistentSpec,
                "constraints of '" + spec.name + "' contradict the residuated lattice axioms");
  }

  std::vector<Algebra> out;
  internal::SolverStats stats;
  solver.Solve(std::numeric_limits<std::uint64_t>::max(), stats,
               [&](const std::vector<Index>& prod) {
                 Algebra alg = Algebra::FromTables(n, spec.leq, prod, spec.unit, spec.zero,
                                                   spec.labels, spec.name);
                 if (spec.central) {
                   for (Index x = 0; x < n; ++x) {
                     if (!Listed(spec.central, x) && IsCentralElement(alg, x)) return true;
                   }
                 }
                 out.push_back(std::move(alg));
                 return out.size() < limit;
               });
  return out;
}

PartialAlgebraSpec SpecFromAlgebra(const Algebra& alg) {
  PartialAlgebraSpec spec;
  spec.name = alg.name();
  spec.size = alg.size();
  spec.leq = alg.tables().leq;
  spec.unit = alg.unit();
  spec.zero = alg.zero();
  spec.labels = alg.labels();
  for (Index a = 0; a < alg.size(); ++a) {
    for (Index b = 0; b < alg.size(); ++b) {
      spec.product_constraints.push_back({a, b, alg.prod(a, b)});
    }
  }
  return spec;
}

}  // namespace rlamalg

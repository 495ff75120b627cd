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

// Finite (pointed) residuated lattices on the carrier {0, ..., n-1}.
//
// The order and the monoid product are the only primary data. Joins, meets
// and both residuals are derived from them; an algebra value always holds
// fully verified tables.

#ifndef RLAMALG_ALGEBRA_HPP_
#define RLAMALG_ALGEBRA_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rlamalg {

using Index = int;
inline constexpr Index kUndefined = -1;

// Row-major n×n tables. `lres` holds x\z at [x][z], `rres` holds z/y at
// [z][y]. Entries that could not be derived are kUndefined.
struct AlgebraTables {
  int size = 0;
  std::vector<std::uint8_t> leq;
  std::vector<Index> join;
  std::vector<Index> meet;
  std::vector<Index> prod;
  std::vector<Index> lres;
  std::vector<Index> rres;
  Index unit = 0;
  std::optional<Index> zero;

  std::size_t cell(Index a, Index b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(size) +
           static_cast<std::size_t>(b);
  }
  bool le(Index a, Index b) const { return leq[cell(a, b)] != 0; }

  friend bool operator==(const AlgebraTables&, const AlgebraTables&) = default;
};

struct Violation {
  std::string axiom;
  std::vector<Index> witness;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// passed == violations.empty(). At most one violation per axiom, carrying the
// lexicographically least witness.
struct AxiomReport {
  bool passed = true;
  std::vector<Violation> violations;
};

// Fills in join, meet and residual tables from order and product. Undefined
// entries (no lub, no maximum) are left as kUndefined; nothing is verified.
AlgebraTables DeriveTables(int size, std::vector<std::uint8_t> leq,
                           std::vector<Index> prod, Index unit,
                           std::optional<Index> zero);

// Exhaustive check of the partial order, lattice, monoid and residuation
// axioms over all pairs and triples. Violations are data, never errors.
AxiomReport CheckAxioms(const AlgebraTables& tables);

// Reflexive-transitive closure of a relation given as an n×n 0/1 matrix.
std::vector<std::uint8_t> ReflexiveTransitiveClosure(
    int size, const std::vector<std::uint8_t>& relation);

class Algebra {
 public:
  // Builds and verifies a residuated lattice. Throws Error with kNotALattice,
  // kNotAMonoid or kNotResiduated (checked in that order), or
  // kInvalidArgument for malformed input.
  static Algebra FromTables(int size, std::vector<std::uint8_t> leq,
                            std::vector<Index> prod, Index unit,
                            std::optional<Index> zero = std::nullopt,
                            std::vector<std::string> labels = {},
                            std::string name = {});

  // The one-element algebra.
  static Algebra Trivial();

  int size() const { return tables_->size; }
  bool leq(Index a, Index b) const { return tables_->le(a, b); }
  Index join(Index a, Index b) const { return tables_->join[tables_->cell(a, b)]; }
  Index meet(Index a, Index b) const { return tables_->meet[tables_->cell(a, b)]; }
  Index prod(Index a, Index b) const { return tables_->prod[tables_->cell(a, b)]; }
  // x\z
  Index lres(Index x, Index z) const { return tables_->lres[tables_->cell(x, z)]; }
  // z/y
  Index rres(Index z, Index y) const { return tables_->rres[tables_->cell(z, y)]; }
  Index unit() const { return tables_->unit; }
  std::optional<Index> zero() const { return tables_->zero; }
  bool pointed() const { return tables_->zero.has_value(); }
  Index bottom() const { return bottom_; }
  Index top() const { return top_; }

  const AlgebraTables& tables() const { return *tables_; }
  const std::vector<std::string>& labels() const { return *labels_; }
  // The display label, or the decimal index when no labels are attached.
  std::string label(Index i) const;
  // Index of a label, if present.
  std::optional<Index> find_label(const std::string& name) const;
  const std::string& name() const { return *name_; }

  // Same tables with a different distinguished zero.
  Algebra WithZero(std::optional<Index> zero) const;
  Algebra WithLabels(std::vector<std::string> labels) const;
  Algebra WithName(std::string name) const;

  // Equal tables (order, operations, constants); labels and name ignored.
  bool SameTables(const Algebra& other) const {
    return *tables_ == *other.tables_;
  }

 private:
  Algebra() = default;

  std::shared_ptr<const AlgebraTables> tables_;
  std::shared_ptr<const std::vector<std::string>> labels_;
  std::shared_ptr<const std::string> name_;
  Index bottom_ = 0;
  Index top_ = 0;
};

bool IsCommutative(const Algebra& alg);
bool IsIdempotent(const Algebra& alg);
bool IsIntegral(const Algebra& alg);
bool IsDistributive(const Algebra& alg);
// The pointed predicates throw Error(kNoZeroConstant) when zero is absent.
bool IsInvolutive(const Algebra& alg);
bool IsCyclic(const Algebra& alg);
bool IsOdd(const Algebra& alg);
bool IsCentralElement(const Algebra& alg, Index i);
bool IsIdempotentElement(const Algebra& alg, Index i);

struct ProductConstraint {
  Index left = 0;
  Index right = 0;
  Index value = 0;

  friend bool operator==(const ProductConstraint&,
                         const ProductConstraint&) = default;
};

// An order plus partially specified product, as read off a labelled Hasse
// diagram. `central` and `idempotent_elements`, when present, are exact:
// elements not listed are constrained to be non-central / non-idempotent.
struct PartialAlgebraSpec {
  std::string name;
  int size = 0;
  std::vector<std::uint8_t> leq;
  Index unit = 0;
  std::optional<Index> zero;
  std::vector<ProductConstraint> product_constraints;
  std::vector<std::string> labels;
  std::optional<std::vector<Index>> central;
  std::optional<std::vector<Index>> idempotent_elements;

  friend bool operator==(const PartialAlgebraSpec&,
                         const PartialAlgebraSpec&) = default;
};

// All total products (at most `limit`) that turn the spec into a residuated
// lattice, as literal tables on the fixed carrier, in row-major lexicographic
// order of the product table. Throws Error(kInconsistentSpec) when the given
// constraints contradict a forced consequence, kNotALattice when the order is
// not a lattice.
std::vector<Algebra> CompletePartialProduct(const PartialAlgebraSpec& spec,
                                            std::size_t limit);

// A spec carrying every product entry of `alg` and no node flags.
PartialAlgebraSpec SpecFromAlgebra(const Algebra& alg);

}  // namespace rlamalg

#endif  // RLAMALG_ALGEBRA_HPP_

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

#ifndef RLAMALG_MORPHISM_HPP_
#define RLAMALG_MORPHISM_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rlamalg/algebra.hpp"

namespace rlamalg {

inline constexpr std::uint64_t kDefaultMorphismBudget = 50'000'000;

struct Morphism {
  Algebra source;
  Algebra target;
  std::vector<Index> map;
};

struct HomomorphismCheck {
  bool ok = true;
  // Name of the first operation that is not preserved ("join", "meet",
  // "prod", "lres", "rres", "unit", "zero") and its arguments.
  std::string operation;
  std::vector<Index> witness;
};

// Checks preservation of join, meet, product, both residuals and the unit,
// plus the zero when both algebras are pointed. Throws
// Error(kSignatureMismatch) when exactly one side is pointed and
// Error(kInvalidArgument) for a malformed map.
HomomorphismCheck CheckHomomorphism(const Morphism& m);
bool IsEmbedding(const Morphism& m);

// All embeddings source -> target in lexicographic order of the map array.
// Throws Error(kBudgetExceeded) after `budget` partial assignments.
std::vector<Morphism> EnumerateEmbeddings(
    const Algebra& source, const Algebra& target,
    std::uint64_t budget = kDefaultMorphismBudget);

// The lexicographically least isomorphism, if any.
std::optional<Morphism> AreIsomorphic(
    const Algebra& a, const Algebra& b,
    std::uint64_t budget = kDefaultMorphismBudget);

// second ∘ first
Morphism Compose(const Morphism& first, const Morphism& second);
// Inverse of a bijective morphism.
Morphism Inverse(const Morphism& iso);
Morphism Identity(const Algebra& alg);

struct Span {
  std::string name;
  Algebra apex;
  Algebra left;   // B
  Algebra right;  // C
  std::vector<Index> phi_left;
  std::vector<Index> phi_right;

  Morphism LeftLeg() const { return {apex, left, phi_left}; }
  Morphism RightLeg() const { return {apex, right, phi_right}; }
};

// Throws Error(kInvalidSpan) unless both legs are embeddings.
Span MakeSpan(Algebra apex, Algebra left, Algebra right,
              std::vector<Index> phi_left, std::vector<Index> phi_right,
              std::string name = {});

struct Amalgam {
  Algebra target;
  std::vector<Index> psi_left;
  std::vector<Index> psi_right;
};

struct AmalgamCheck {
  bool valid = false;
  bool strong = false;
  std::string reason;
};

// Both legs are embeddings into the same target and the square commutes;
// with `strong` the image intersection must also equal the image of the apex.
AmalgamCheck CheckAmalgam(const Span& span, const Amalgam& amalgam, bool strong);
bool ValidateAmalgam(const Span& span, const Amalgam& amalgam, bool strong);

}  // namespace rlamalg

#endif  // RLAMALG_MORPHISM_HPP_

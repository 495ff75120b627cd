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

#ifndef RLAMALG_VARIETY_HPP_
#define RLAMALG_VARIETY_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "rlamalg/algebra.hpp"

namespace rlamalg {

// Subvariety selector. The last three flags only make sense for pointed
// algebras; `odd` pins the zero to the unit.
struct VarietyConstraints {
  bool commutative = false;
  bool idempotent = false;
  bool integral = false;
  bool distributive = false;
  bool involutive = false;
  bool cyclic = false;
  bool odd = false;

  bool pointed() const { return involutive || cyclic || odd; }
  bool empty() const {
    return !(commutative || idempotent || integral || distributive || pointed());
  }

  // Comma-separated flag names, e.g. "distributive,idempotent". Throws
  // Error(kInvalidArgument) on an unknown name.
  static VarietyConstraints Parse(std::string_view text);
  static VarietyConstraints FromNames(const std::vector<std::string>& names);
  std::vector<std::string> Names() const;
  std::string ToString() const;

  // Membership of a single algebra. Pointed flags require a zero.
  bool Admits(const Algebra& alg) const;

  friend bool operator==(const VarietyConstraints&,
                         const VarietyConstraints&) = default;
};

}  // namespace rlamalg

#endif  // RLAMALG_VARIETY_HPP_

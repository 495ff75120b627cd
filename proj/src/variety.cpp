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

#include "rlamalg/variety.hpp"

#include <utility>

#include "rlamalg/error.hpp"

namespace rlamalg {

namespace {

using FlagMember = bool VarietyConstraints::*;

constexpr std::pair<const char*, FlagMember> kFlags[] = {
    {"commutative", &VarietyConstraints::commutative},
    {"idempotent", &VarietyConstraints::idempotent},
    {"integral", &VarietyConstraints::integral},
    {"distributive", &VarietyConstraints::distributive},
    {"involutive", &VarietyConstraints::involutive},
    {"cyclic", &VarietyConstraints::cyclic},
    {"odd", &VarietyConstraints::odd},
};

}  // namespace

VarietyConstraints VarietyConstraints::FromNames(const std::vector<std::string>& names) {
  VarietyConstraints c;
  for (const auto& name : names) {
    if (name.empty() || name == "none") continue;
    bool known = false;
    for (const auto& [flag, member] : kFlags) {
      if (name == flag) {
        c.*member = true;
        known = true;
      }
    }
    if (!known) throw Error(ErrorCode::kInvalidArgument, "unknown variety flag '" + name + "'");
  }
  return c;
}

VarietyConstraints VarietyConstraints::Parse(std::string_view text) {
  std::vector<std::string> names;
  std::string current;
  for (char ch : text) {
    if (ch == ',') {
      names.push_back(current);
      current.clear();
    } else if (ch != ' ') {
      current.push_back(ch);
    }
  }
  names.push_back(current);
  return FromNames(names);
}

std::vector<std::string> VarietyConstraints::Names() const {
  std::vector<std::string> out;
  for (const auto& [flag, member] : kFlags) {
    if (this->*member) out.emplace_back(flag);
  }
  return out;
}

std::string VarietyConstraints::ToString() const {
  std::string out;
  for (const auto& name : Names()) {
    if (!out.empty()) out += ",";
    out += name;
  }
  return out.empty() ? "none" : out;
}

bool VarietyConstraints::Admits(const Algebra& alg) const {
  if (commutative && !IsCommutative(alg)) return false;
  if (idempotent && !IsIdempotent(alg)) return false;
  if (integral && !IsIntegral(alg)) return false;
  if (distributive && !IsDistributive(alg)) return false;
  if (pointed() && !alg.pointed()) return false;
  if (involutive && !IsInvolutive(alg)) return false;
  if (cyclic && !IsCyclic(alg)) return false;
  if (odd && !IsOdd(alg)) return false;
  return true;
}

}  // namespace rlamalg

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

#include "rlamalg/morphism.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "rlamalg/error.hpp"

namespace rlamalg {

namespace {

enum class Op { kJoin, kMeet, kProd, kLres, kRres };
constexpr std::array<std::pair<Op, const char*>, 5> kBinaryOps = {{
    {Op::kJoin, "join"}, {Op::kMeet, "meet"}, {Op::kProd, "prod"},
    {Op::kLres, "lres"}, {Op::kRres, "rres"}}};

Index Apply(const Algebra& alg, Op op, Index a, Index b) {
  switch (op) {
    case Op::kJoin: return alg.join(a, b);
    case Op::kMeet: return alg.meet(a, b);
    case Op::kProd: return alg.prod(a, b);
    case Op::kLres: return alg.lres(a, b);
    case Op::kRres: return alg.rres(a, b);
  }
  return kUndefined;
}

void RequireCompatible(const Algebra& source, const Algebra& target) {
  if (source.pointed() != target.pointed()) {
    throw Error(ErrorCode::kSignatureMismatch,
                "cannot map between a pointed and an unpointed algebra");
  }
}

// Partial map; kUndefined marks unassigned entries. Checks every operation
// instance whose arguments and result are all assigned.
bool ConsistentSoFar(const Algebra& s, const Algebra& t,
                     const std::vector<Index>& map) {
  const int n = s.size();
  for (Index x = 0; x < n; ++x) {
    if (map[x] == kUndefined) continue;
    for (Index y = 0; y < n; ++y) {
      if (map[y] == kUndefined) continue;
      for (const auto& [op, name] : kBinaryOps) {
        const Index r = Apply(s, op, x, y);
        if (map[r] != kUndefined && map[r] != Apply(t, op, map[x], map[y])) {
          return false;
        }
      }
    }
  }
  return true;
}

struct ElementProfile {
  int below = 0;
  int above = 0;
  bool idempotent = false;
  bool central = false;
  bool unit = false;
  bool zero = false;

  friend bool operator==(const ElementProfile&, const ElementProfile&) = default;
};

ElementProfile Profile(const Algebra& alg, Index i) {
  ElementProfile p;
  for (Index j = 0; j < alg.size(); ++j) {
    p.below += alg.leq(j, i);
    p.above += alg.leq(i, j);
  }
  p.idempotent = IsIdempotentElement(alg, i);
  p.central = IsCentralElement(alg, i);
  p.unit = alg.unit() == i;
  p.zero = alg.zero() == i;
  return p;
}

}  // namespace

HomomorphismCheck CheckHomomorphism(const Morphism& m) {
  const Algebra& s = m.source;
  const Algebra& t = m.target;
  if (static_cast<int>(m.map.size()) != s.size()) {
    throw Error(ErrorCode::kInvalidArgument, "map length does not match source size");
  }
  for (Index v : m.map) {
    if (v < 0 || v >= t.size()) {
      throw Error(ErrorCode::kInvalidArgument, "map entry out of range");
    }
  }
  RequireCompatible(s, t);
  HomomorphismCheck out;
  auto fail = [&](const char* op, std::vector<Index> witness) {
    out.ok = false;
    out.operation = op;
    out.witness = std::move(witness);
    return out;
  };
  if (m.map[s.unit()] != t.unit()) return fail("unit", {s.unit()});
  if (s.zero() && m.map[*s.zero()] != *t.zero()) return fail("zero", {*s.zero()});
  for (const auto& [op, name] : kBinaryOps) {
    for (Index a = 0; a < s.size(); ++a) {
      for (Index b = 0; b < s.size(); ++b) {
        if (m.map[Apply(s, op, a, b)] != Apply(t, op, m.map[a], m.map[b])) {
          return fail(name, {a, b});
        }
      }
    }
  }
  return out;
}

bool IsEmbedding(const Morphism& m) {
  if (!CheckHomomorphism(m).ok) return false;
  std::set<Index> image(m.map.begin(), m.map.end());
  return image.size() == m.map.size();
}

std::vector<Morphism> EnumerateEmbeddings(const Algebra& source,
                                          const Algebra& target,
                                          std::uint64_t budget) {
  RequireCompatible(source, target);
  std::vector<Morphism> out;
  const int n = source.size();
  const int m = target.size();
  if (n > m) return out;
  std::vector<Index> map(n, kUndefined);
  std::vector<bool> used(m, false);
  std::uint64_t nodes = 0;

  auto allowed = [&](Index a, Index v) {
    if (a == source.unit() && v != target.unit()) return false;
    if (source.zero() && a == *source.zero() && v != *target.zero()) return false;
    // Injective maps reflect idempotency as well as preserve it.
    return IsIdempotentElement(source, a) == IsIdempotentElement(target, v);
  };

  auto recurse = [&](auto&& self, Index a) -> void {
    if (a == n) {
      out.push_back({source, target, map});
      return;
    }
    for (Index v = 0; v < m; ++v) {
      if (used[v] || !allowed(a, v)) continue;
      if (++nodes > budget) {
        throw Error(ErrorCode::kBudgetExceeded, "embedding enumeration budget exceeded");
      }
      map[a] = v;
      used[v] = true;
      if (ConsistentSoFar(source, target, map)) self(self, a + 1);
      used[v] = false;
      map[a] = kUndefined;
    }
  };
  recurse(recurse, 0);
  return out;
}

std::optional<Morphism> AreIsomorphic(const Algebra& a, const Algebra& b,
                                      std::uint64_t budget) {
  if (a.size() != b.size() || a.pointed() != b.pointed()) return std::nullopt;
  const int n = a.size();
  std::vector<ElementProfile> pa(n), pb(n);
  for (Index i = 0; i < n; ++i) {
    pa[i] = Profile(a, i);
    pb[i] = Profile(b, i);
  }
  std::vector<Index> map(n, kUndefined);
  std::vector<bool> used(n, false);
  std::uint64_t nodes = 0;
  auto recurse = [&](auto&& self, Index i) -> bool {
    if (i == n) return true;
    for (Index v = 0; v < n; ++v) {
      if (used[v] || !(pa[i] == pb[v])) continue;
      if (++nodes > budget) {
        throw Error(ErrorCode::kBudgetExceeded, "isomorphism search budget exceeded");
      }
      map[i] = v;
      used[v] = true;
      bool order_ok = true;
      for (Index j = 0; j < i && order_ok; ++j) {
        order_ok = a.leq(i, j) == b.leq(v, map[j]) && a.leq(j, i) == b.leq(map[j], v);
      }
      if (order_ok && ConsistentSoFar(a, b, map) && self(self, i + 1)) return true;
      used[v] = false;
      map[i] = kUndefined;
    }
    return false;
  };
  if (!recurse(recurse, 0)) return std::nullopt;
  return Morphism{a, b, map};
}

Morphism Compose(const Morphism& first, const Morphism& second) {
  if (first.target.size() != second.source.size()) {
    throw Error(ErrorCode::kInvalidArgument, "morphisms are not composable");
  }
  Morphism out{first.source, second.target, {}};
  out.map.reserve(first.map.size());
  for (Index v : first.map) out.map.push_back(second.map[v]);
  return out;
}

Morphism Inverse(const Morphism& iso) {
  if (iso.source.size() != iso.target.size()) {
    throw Error(ErrorCode::kInvalidArgument, "morphism is not bijective");
  }
  Morphism out{iso.target, iso.source, std::vector<Index>(iso.map.size(), kUndefined)};
  for (Index i = 0; i < static_cast<Index>(iso.map.size()); ++i) {
    if (out.map[iso.map[i]] != kUndefined) {
      throw Error(ErrorCode::kInvalidArgument, "morphism is not bijective");
    }
    out.map[iso.map[i]] = i;
  }
  return out;
}

Morphism Identity(const Algebra& alg) {
  Morphism out{alg, alg, std::vector<Index>(alg.size())};
  for (Index i = 0; i < alg.size(); ++i) out.map[i] = i;
  return out;
}

Span MakeSpan(Algebra apex, Algebra left, Algebra right,
              std::vector<Index> phi_left, std::vector<Index> phi_right,
              std::string name) {
  Span span{std::move(name), std::move(apex), std::move(left), std::move(right),
            std::move(phi_left), std::move(phi_right)};
  try {
    if (!IsEmbedding(span.LeftLeg())) {
      throw Error(ErrorCode::kInvalidSpan, "left leg is not an embedding");
    }
    if (!IsEmbedding(span.RightLeg())) {
      throw Error(ErrorCode::kInvalidSpan, "right leg is not an embedding");
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInvalidSpan) throw;
    throw Error(ErrorCode::kInvalidSpan, e.what());
  }
  return span;
}

AmalgamCheck CheckAmalgam(const Span& span, const Amalgam& amalgam, bool strong) {
  AmalgamCheck out;
  const Morphism left{span.left, amalgam.target, amalgam.psi_left};
  const Morphism right{span.right, amalgam.target, amalgam.psi_right};
  if (static_cast<int>(left.map.size()) != span.left.size() ||
      static_cast<int>(right.map.size()) != span.right.size()) {
    out.reason = "leg length does not match its source";
    return out;
  }
  for (const Morphism* leg : {&left, &right}) {
    for (Index v : leg->map) {
      if (v < 0 || v >= amalgam.target.size()) {
        out.reason = "leg maps outside the target";
        return out;
      }
    }
  }
  const HomomorphismCheck lc = CheckHomomorphism(left);
  if (!lc.ok) {
    out.reason = "left leg does not preserve " + lc.operation;
    return out;
  }
  const HomomorphismCheck rc = CheckHomomorphism(right);
  if (!rc.ok) {
    out.reason = "right leg does not preserve " + rc.operation;
    return out;
  }
  if (!IsEmbedding(left) || !IsEmbedding(right)) {
    out.reason = "a leg is not injective";
    return out;
  }
  std::set<Index> apex_image;
  for (Index a = 0; a < span.apex.size(); ++a) {
    const Index via_left = left.map[span.phi_left[a]];
    const Index via_right = right.map[span.phi_right[a]];
    if (via_left != via_right) {
      out.reason = "square does not commute at apex element " + span.apex.label(a);
      return out;
    }
    apex_image.insert(via_left);
  }
  std::set<Index> left_image(left.map.begin(), left.map.end());
  std::set<Index> common;
  for (Index v : right.map) {
    if (left_image.count(v)) common.insert(v);
  }
  out.strong = common == apex_image;
  if (strong && !out.strong) {
    out.reason = "images intersect outside the image of the apex";
    return out;
  }
  out.valid = true;
  return out;
}

bool ValidateAmalgam(const Span& span, const Amalgam& amalgam, bool strong) {
  return CheckAmalgam(span, amalgam, strong).valid;
}

}  // namespace rlamalg

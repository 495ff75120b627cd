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


#include "sweeps.hpp"

#include "rlamalg/error.hpp"

namespace oracle {

using rlamalg::Algebra;
using rlamalg::Claim;
using rlamalg::Index;
using rlamalg::Term;
using Kind = Term::Kind;

namespace {

Term G(Index i) { return Term::Generator("e" + std::to_string(i)); }
Term P(Term a, Term b) { return Term::Binary(Kind::kProd, std::move(a), std::move(b)); }
Term J(Term a, Term b) { return Term::Binary(Kind::kJoin, std::move(a), std::move(b)); }
Term M(Term a, Term b) { return Term::Binary(Kind::kMeet, std::move(a), std::move(b)); }
Claim Eq(Term a, Term b) { return {Claim::Kind::kEq, std::move(a), std::move(b)}; }
Claim Le(Term a, Term b) { return {Claim::Kind::kLeq, std::move(a), std::move(b)}; }

struct Instance {
  std::string rule;
  Claim claim;
  std::vector<Claim> premises;
  rlamalg::Instantiation terms;
};

}  // namespace

SoundnessResult RuleSoundness(const Algebra& alg) {
  const int n = alg.size();
  auto resolve = [&](const std::string& name) -> std::optional<Index> {
    const int i = std::stoi(name.substr(1));
    if (i < 0 || i >= n) return std::nullopt;
    return i;
  };
  auto holds = [&](const Claim& c) { return *rlamalg::Holds(c, alg, resolve); };
  rlamalg::RuleContext context;
  context.distributive = rlamalg::IsDistributive(alg);
  context.ground = [&](const Claim& c, const std::optional<std::string>&) {
    return rlamalg::Holds(c, alg, resolve);
  };

  SoundnessResult result;
  auto run = [&](const Instance& inst) {
    for (const auto& p : inst.premises) {
      if (!holds(p)) return;
    }
    if (!rlamalg::CheckRule(inst.rule, inst.claim, inst.premises, inst.terms, context).empty()) {
      return;
    }
    ++result.instances;
    if (!holds(inst.claim)) {
      result.failures.push_back(inst.rule + ": " + rlamalg::ToString(inst.claim));
    }
  };
  const Term one = Term::Unit();
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const Term s = G(a), t = G(b);
      run({"GROUND-FACT", Eq(P(s, t), G(alg.prod(a, b))), {}, {}});
      run({"GROUND-FACT", Le(s, t), {}, {}});
      run({"EQ-REFL", Eq(s, s), {}, {}});
      run({"LEQ-REFL", Le(s, s), {}, {}});
      run({"EQ-SYM", Eq(t, s), {Eq(s, t)}, {}});
      run({"EQ-TO-LEQ", Le(s, t), {Eq(s, t)}, {}});
      run({"EQ-TO-LEQ", Le(t, s), {Eq(s, t)}, {}});
      run({"ANTISYM", Eq(s, t), {Le(s, t), Le(t, s)}, {}});
      run({"UNIT", Eq(P(one, s), s), {}, {}});
      run({"UNIT", Eq(s, P(s, one)), {}, {}});
      run({"JOIN-UB", Le(s, J(s, t)), {}, {}});
      run({"JOIN-UB", Le(t, J(s, t)), {}, {}});
      run({"MEET-LB", Le(M(s, t), s), {}, {}});
      run({"MEET-LB", Le(M(s, t), t), {}, {}});
      run({"JOIN-COMM", Eq(J(s, t), J(t, s)), {}, {}});
      run({"MEET-COMM", Eq(M(s, t), M(t, s)), {}, {}});
      for (Index c = 0; c < n; ++c) {
        const Term u = G(c);
        run({"EQ-TRANS", Eq(s, u), {Eq(s, t), Eq(t, u)}, {}});
        run({"EQ-TRANS", Eq(s, u), {Eq(t, s), Eq(u, t)}, {}});
        run({"LEQ-TRANS", Le(s, u), {Le(s, t), Le(t, u)}, {}});
        run({"LEQ-TRANS", Le(s, u), {Eq(t, s), Le(t, u)}, {}});
        run({"ASSOC", Eq(P(P(s, t), u), P(s, P(t, u))), {}, {}});
        run({"JOIN-ASSOC", Eq(J(J(s, t), u), J(s, J(t, u))), {}, {}});
        run({"MEET-ASSOC", Eq(M(s, M(t, u)), M(M(s, t), u)), {}, {}});
        run({"PROD-JOIN-DIST", Eq(P(u, J(s, t)), J(P(u, s), P(u, t))), {}, {}});
        run({"PROD-JOIN-DIST", Eq(J(P(s, u), P(t, u)), P(J(s, t), u)), {}, {}});
        run({"PROD-MONO", Le(P(u, s), P(u, t)), {Le(s, t)}, {}});
        run({"PROD-MONO", Le(P(s, u), P(t, u)), {Le(s, t)}, {}});
        run({"JOIN-LUB", Le(J(s, t), u), {Le(s, u), Le(t, u)}, {}});
        run({"MEET-GLB", Le(u, M(s, t)), {Le(u, s), Le(u, t)}, {}});
        run({"MEET-JOIN-DIST", Eq(M(s, J(t, u)), J(M(s, t), M(s, u))), {}, {}});
        // Congruence in every one-hole context of depth one and two.
        for (Kind k : {Kind::kProd, Kind::kJoin, Kind::kMeet}) {
          const Term l1 = Term::Binary(k, s, u), r1 = Term::Binary(k, t, u);
          const Term l2 = Term::Binary(k, u, s), r2 = Term::Binary(k, u, t);
          run({"CONGRUENCE", Eq(l1, r1), {Eq(s, t)}, {}});
          run({"CONGRUENCE", Eq(l2, r2), {Eq(s, t)}, {}});
          run({"CONGRUENCE", Eq(P(u, l1), P(u, r1)), {Eq(s, t)}, {}});
          rlamalg::Instantiation at;
          at.position = std::vector<int>{1, 0};
          run({"CONGRUENCE", Eq(J(u, l1), J(u, r1)), {Eq(s, t)}, at});
        }
      }
    }
  }
  return result;
}

std::vector<std::size_t> DeletionSurvivors(const rlamalg::Span& span,
                                           const rlamalg::DerivationCertificate& cert) {
  std::vector<std::size_t> survivors;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    auto mutant = cert;
    mutant.steps.erase(mutant.steps.begin() + static_cast<std::ptrdiff_t>(i));
    for (auto& step : mutant.steps) {
      for (int& p : step.premises) {
        if (p > static_cast<int>(i)) --p;
      }
    }
    try {
      if (rlamalg::CheckCertificate(span, mutant).valid) survivors.push_back(i);
    } catch (const rlamalg::Error&) {
    }
  }
  return survivors;
}

bool RelativeComplementsUnique(const Algebra& alg) {
  const int n = alg.size();
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (!alg.leq(a, b)) continue;
      for (Index x = 0; x < n; ++x) {
        if (!alg.leq(a, x) || !alg.leq(x, b)) continue;
        std::optional<Index> first;
        for (Index y = 0; y < n; ++y) {
          if (alg.meet(x, y) != a || alg.join(x, y) != b) continue;
          if (first && *first != y) return false;
          first = y;
        }
      }
    }
  }
  return true;
}

}  // namespace oracle

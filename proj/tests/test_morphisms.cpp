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


#include <doctest.h>

#include "common.hpp"
#include "oracle/naive.hpp"
#include "rlamalg/error.hpp"
#include "rlamalg/search.hpp"

using namespace rlamalg;
using testing::At;
using testing::Fixture;

TEST_CASE("inclusions and identities are homomorphisms") {
  const Span s = testing::SpanFixture("idem.span");
  CHECK(CheckHomomorphism(s.LeftLeg()).ok);
  CHECK(IsEmbedding(s.LeftLeg()));
  CHECK(IsEmbedding(s.RightLeg()));
  for (const auto& f : testing::AlgebraFixtures()) {
    CHECK(IsEmbedding(Identity(Fixture(f))));
  }
  const Span d = testing::SpanFixture("distrib.span");
  CHECK(IsEmbedding(d.RightLeg()));
}

TEST_CASE("sending top to a is not a homomorphism") {
  const Algebra a = Fixture("idem-A.alg");
  const Algebra b = Fixture("idem-B.alg");
  const Morphism m{a, b, {At(b, "bot"), At(b, "1"), At(b, "a")}};
  const auto check = CheckHomomorphism(m);
  CHECK_FALSE(check.ok);
  CHECK_FALSE(check.operation.empty());
  CHECK_FALSE(check.witness.empty());
}

TEST_CASE("the trivial algebra embeds at the unit") {
  for (const auto& f : testing::AlgebraFixtures()) {
    const Algebra b = Fixture(f);
    if (b.pointed()) continue;
    CHECK(IsEmbedding(Morphism{Algebra::Trivial(), b, {b.unit()}}));
  }
}

TEST_CASE("non-injective homomorphisms are not embeddings") {
  const Algebra c = Fixture("idem-C.alg");
  const Algebra t = Algebra::Trivial();
  const Morphism collapse{c, t, std::vector<Index>(c.size(), 0)};
  CHECK(CheckHomomorphism(collapse).ok);
  CHECK_FALSE(IsEmbedding(collapse));
}

TEST_CASE("embedding enumeration on the fixtures") {
  const Algebra a = Fixture("idem-A.alg");
  const auto self = EnumerateEmbeddings(a, a);
  REQUIRE(self.size() == 1);
  CHECK(self[0].map == std::vector<Index>{0, 1, 2});
  CHECK(EnumerateEmbeddings(Fixture("idem-B.alg"), a).empty());
  const Span s = testing::SpanFixture("idem.span");
  bool has_inclusion = false;
  for (const auto& m : EnumerateEmbeddings(s.apex, s.right)) {
    has_inclusion = has_inclusion || m.map == s.phi_right;
  }
  CHECK(has_inclusion);
}

TEST_CASE("pointed and unpointed algebras do not mix") {
  const Algebra a = Fixture("idem-A.alg");
  const Algebra p = Fixture("invol-A.alg");
  bool threw = false;
  try {
    CheckHomomorphism(Morphism{a, p, {0, 1, 2}});
  } catch (const Error& e) {
    threw = e.code() == ErrorCode::kSignatureMismatch;
  }
  CHECK(threw);
}

TEST_CASE("embedding enumeration matches the scan over all injections") {
  const auto algebras = testing::SmallAlgebras(4);
  for (const auto& a : algebras) {
    for (const auto& b : algebras) {
      std::vector<std::vector<Index>> maps;
      for (const auto& m : EnumerateEmbeddings(a, b)) {
        maps.push_back(m.map);
        // Residuals are preserved by every reported embedding.
        for (Index x = 0; x < a.size(); ++x) {
          for (Index y = 0; y < a.size(); ++y) {
            REQUIRE(m.map[a.lres(x, y)] == b.lres(m.map[x], m.map[y]));
            REQUIRE(m.map[a.rres(x, y)] == b.rres(m.map[x], m.map[y]));
          }
        }
      }
      REQUIRE(maps == oracle::Embeddings(a, b, true));
    }
  }
}

TEST_CASE("lattice-monoid embeddings need not preserve residuals") {
  // 2-element Boolean algebra into the 3-chain, 0 -> bot and 1 -> 1: join,
  // meet, product and unit are preserved but 0\0 = 1 while bot\bot = top.
  const Algebra two = Algebra::FromTables(2, {1, 1, 0, 1}, {0, 0, 0, 1}, 1);
  const Algebra chain = Fixture("idem-A.alg");
  const auto loose = oracle::Embeddings(two, chain, false);
  CHECK(loose == std::vector<std::vector<Index>>{{0, 1}});
  CHECK(EnumerateEmbeddings(two, chain).empty());
  const auto check = CheckHomomorphism(Morphism{two, chain, {0, 1}});
  CHECK_FALSE(check.ok);
  CHECK((check.operation == "lres" || check.operation == "rres"));
}

TEST_CASE("amalgam validation") {
  const Algebra a = Fixture("idem-A.alg");
  const Span identity = MakeSpan(a, a, a, {0, 1, 2}, {0, 1, 2});
  const Amalgam square{a, {0, 1, 2}, {0, 1, 2}};
  CHECK(ValidateAmalgam(identity, square, false));
  CHECK(ValidateAmalgam(identity, square, true));

  // B and C glued over A: bot, 1, b, a, c, top with b, c incomparable and
  // a = 1 v b. A product of all bot is not even a monoid.
  const Span s = testing::SpanFixture("distrib-idem.span");
  const std::vector<std::vector<int>> le_rows = {
      {1, 1, 1, 1, 1, 1}, {0, 1, 0, 1, 0, 1}, {0, 0, 1, 1, 0, 1},
      {0, 0, 0, 1, 0, 1}, {0, 0, 0, 0, 1, 1}, {0, 0, 0, 0, 0, 1}};
  std::vector<std::uint8_t> le;
  for (const auto& r : le_rows) le.insert(le.end(), r.begin(), r.end());
  const auto broken = CheckAxioms(DeriveTables(6, le, std::vector<Index>(36, 0), 1, std::nullopt));
  CHECK_FALSE(broken.passed);

  // A genuine amalgam found by the search, then a leg with two images
  // swapped: no longer an embedding or no longer commuting.
  const auto found = SearchAmalgam(s, {}, SearchOptions{6, 1'000'000, 1, SearchMode::kSeeded});
  REQUIRE(found.kind == OutcomeKind::kFound);
  CHECK(ValidateAmalgam(s, *found.amalgam, true));
  Amalgam bad = *found.amalgam;
  std::swap(bad.psi_right[1], bad.psi_right[2]);
  const auto verdict = CheckAmalgam(s, bad, false);
  CHECK_FALSE(verdict.valid);
  CHECK_FALSE(verdict.reason.empty());
}

TEST_CASE("isomorphism testing") {
  CHECK_FALSE(AreIsomorphic(Fixture("distrib-B.alg"), Fixture("distrib-C.alg")));
  for (const auto& f : testing::AlgebraFixtures()) {
    const Algebra a = Fixture(f);
    const auto self = AreIsomorphic(a, a);
    REQUIRE(self);
    CHECK(self->map == Identity(a).map);
  }
  const auto iso = AreIsomorphic(Fixture("idem-A.alg"), Fixture("invol-A.alg").WithZero(std::nullopt));
  REQUIRE(iso);
  CHECK(iso->map == std::vector<Index>{0, 1, 2});
}

TEST_CASE("isomorphism witnesses compose and invert") {
  const auto algebras = testing::SmallAlgebras(4);
  for (const auto& a : algebras) {
    // A relabelled copy: reverse the linear extension order.
    const int n = a.size();
    std::vector<Index> p(n);
    for (Index i = 0; i < n; ++i) p[i] = n - 1 - i;
    std::vector<std::uint8_t> le(n * n);
    std::vector<Index> prod(n * n);
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        le[p[x] * n + p[y]] = a.leq(x, y);
        prod[p[x] * n + p[y]] = p[a.prod(x, y)];
      }
    }
    const Algebra b = Algebra::FromTables(n, le, prod, p[a.unit()]);
    const auto f = AreIsomorphic(a, b);
    REQUIRE(f);
    CHECK(IsEmbedding(*f));
    const Morphism g = Inverse(*f);
    CHECK(IsEmbedding(g));
    CHECK(Compose(*f, g).map == Identity(a).map);
    CHECK(Compose(g, *f).map == Identity(b).map);
  }
}

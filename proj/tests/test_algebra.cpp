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

#include <set>

#include "common.hpp"
#include "oracle/naive.hpp"
#include "rlamalg/error.hpp"

using namespace rlamalg;
using testing::At;
using testing::Fixture;

namespace {

// The 3-chain bot < 1 < top with top*top = top.
const std::vector<std::uint8_t> kChainLeq = {1, 1, 1, 0, 1, 1, 0, 0, 1};
const std::vector<Index> kChainProd = {0, 0, 0, 0, 1, 2, 0, 2, 2};

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::kParse;
}

bool HasAxiom(const AxiomReport& r, const std::string& prefix) {
  for (const auto& v : r.violations) {
    if (v.axiom.rfind(prefix, 0) == 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("tables build the 3-chain and the trivial algebra") {
  const Algebra a = Algebra::FromTables(3, kChainLeq, kChainProd, 1);
  CHECK(a.size() == 3);
  CHECK(a.bottom() == 0);
  CHECK(a.top() == 2);
  CHECK(a.lres(2, 1) == 0);  // top\1: largest y with top*y <= 1
  CHECK(a.rres(1, 2) == 0);
  CHECK(a.lres(1, 1) == 1);
  const Algebra t = Algebra::Trivial();
  CHECK(t.size() == 1);
  CHECK(CheckAxioms(t.tables()).passed);
}

TEST_CASE("a broken product on the 3-chain is rejected") {
  auto prod = kChainProd;
  prod[2 * 3 + 2] = 1;
  const ErrorCode code = CodeOf([&] { Algebra::FromTables(3, kChainLeq, prod, 1); });
  CHECK((code == ErrorCode::kNotResiduated || code == ErrorCode::kNotAMonoid));
  // Independent scan: some triple breaks the adjunction or monotonicity.
  const auto report = CheckAxioms(DeriveTables(3, kChainLeq, prod, 1, std::nullopt));
  CHECK_FALSE(report.passed);
}

TEST_CASE("non-lattice orders are rejected") {
  // Two incomparable maximal elements.
  const std::vector<std::uint8_t> vee = {1, 1, 1, 0, 1, 0, 0, 0, 1};
  const std::vector<Index> prod = {0, 0, 0, 0, 1, 2, 0, 2, 2};
  CHECK(CodeOf([&] { Algebra::FromTables(3, vee, prod, 1); }) == ErrorCode::kNotALattice);
}

TEST_CASE("every fixture passes the axioms") {
  for (const auto& f : testing::AlgebraFixtures()) {
    CAPTURE(f);
    CHECK(CheckAxioms(Fixture(f).tables()).passed);
  }
}

TEST_CASE("raising p*p above p in distrib-B breaks the axioms") {
  const Algebra b = Fixture("distrib-B.alg");
  auto prod = b.tables().prod;
  const Index p = At(b, "p");
  prod[p * b.size() + p] = At(b, "a");
  const auto report =
      CheckAxioms(DeriveTables(b.size(), b.tables().leq, prod, b.unit(), std::nullopt));
  CHECK_FALSE(report.passed);
  CHECK(HasAxiom(report, "residuation"));
  for (const auto& v : report.violations) CHECK_FALSE(v.witness.empty());
}

TEST_CASE("partial specs complete uniquely") {
  for (const auto& f : testing::AlgebraFixtures()) {
    CAPTURE(f);
    const auto spec = LoadSpecFile(testing::FixturePath(f));
    const auto all = CompletePartialProduct(spec, 5);
    REQUIRE(all.size() == 1);
    for (const auto& c : spec.product_constraints) {
      CHECK(all[0].prod(c.left, c.right) == c.value);
    }
  }
  const Algebra c = Fixture("invol-C.alg");
  const Index cb = At(c, "cb");
  CHECK(c.prod(cb, cb) == c.bottom());
}

TEST_CASE("a full table completes to itself") {
  const Algebra a = Algebra::FromTables(3, kChainLeq, kChainProd, 1);
  const auto all = CompletePartialProduct(SpecFromAlgebra(a), 3);
  REQUIRE(all.size() == 1);
  CHECK(all[0].tables() == a.tables());
}

TEST_CASE("contradictory constraints are inconsistent") {
  auto spec = SpecFromAlgebra(Fixture("idem-A.alg"));
  // top*top = bot contradicts 1 <= top and monotonicity with top*1 = top.
  for (auto& c : spec.product_constraints) {
    if (c.left == 2 && c.right == 2) c.value = 0;
  }
  CHECK(CodeOf([&] { CompletePartialProduct(spec, 2); }) == ErrorCode::kInconsistentSpec);
}

TEST_CASE("completion agrees with the naive table scan up to size 4") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& le : oracle::LatticeOrders(n)) {
      for (Index unit = 0; unit < n; ++unit) {
        CAPTURE(n);
        CAPTURE(unit);
        PartialAlgebraSpec spec;
        spec.size = n;
        spec.leq = le;
        spec.unit = unit;
        std::set<std::vector<Index>> found;
        try {
          for (const auto& a : CompletePartialProduct(spec, 1'000'000)) {
            CHECK(CheckAxioms(a.tables()).passed);
            found.insert(a.tables().prod);
          }
        } catch (const Error& e) {
          // Forced contradictions surface before any table is tried.
          CHECK(e.code() == ErrorCode::kInconsistentSpec);
        }
        const auto tables = oracle::ProductTables(n, le, unit);
        const std::set<std::vector<Index>> naive(tables.begin(), tables.end());
        CHECK(found == naive);
      }
    }
  }
}

TEST_CASE("variety predicates on the fixtures") {
  for (const char* f : {"distrib-A.alg", "distrib-B.alg", "distrib-C.alg"}) {
    const Algebra a = Fixture(f);
    CHECK(IsIntegral(a));
    CHECK(IsCommutative(a));
    CHECK(IsDistributive(a));
  }
  const Algebra c = Fixture("idem-C.alg");
  CHECK(IsIdempotent(c));
  CHECK(IsCommutative(c));
  CHECK_FALSE(IsIdempotent(Fixture("invol-B.alg")));
  for (const char* f : {"invol-A.alg", "invol-B.alg", "invol-C.alg"}) {
    const Algebra a = Fixture(f);
    CHECK(IsInvolutive(a));
    CHECK(IsCyclic(a));
    CHECK(IsOdd(a));
  }
}

TEST_CASE("pointed predicates") {
  const Algebra t = Algebra::Trivial().WithZero(0);
  CHECK(IsInvolutive(t));
  CHECK(IsCyclic(t));
  CHECK(IsOdd(t));
  const Algebra b = Fixture("idem-B.alg");
  CHECK_FALSE(IsInvolutive(b.WithZero(b.bottom())));
  CHECK(CodeOf([&] { IsInvolutive(b); }) == ErrorCode::kNoZeroConstant);
}

TEST_CASE("central and idempotent elements") {
  const Algebra b = Fixture("idem-B.alg");
  CHECK_FALSE(IsCentralElement(b, At(b, "b")));
  CHECK(IsIdempotentElement(b, At(b, "b")));
  const Algebra c = Fixture("invol-C.alg");
  CHECK_FALSE(IsCentralElement(c, At(c, "cb")));
  CHECK_FALSE(IsIdempotentElement(c, At(c, "cb")));
  for (const auto& f : testing::AlgebraFixtures()) {
    const Algebra a = Fixture(f);
    CHECK(IsCentralElement(a, a.unit()));
    CHECK(IsIdempotentElement(a, a.unit()));
  }
}

TEST_CASE("adjunction, absorption and distribution hold everywhere") {
  auto algebras = testing::SmallAlgebras(4);
  for (const auto& f : testing::AlgebraFixtures()) algebras.push_back(Fixture(f));
  for (const auto& a : algebras) {
    const int n = a.size();
    for (Index x = 0; x < n; ++x) {
      CHECK(a.prod(a.bottom(), x) == a.bottom());
      CHECK(a.prod(x, a.bottom()) == a.bottom());
      for (Index y = 0; y < n; ++y) {
        for (Index z = 0; z < n; ++z) {
          const bool p = a.leq(a.prod(x, y), z);
          REQUIRE(p == a.leq(y, a.lres(x, z)));
          REQUIRE(p == a.leq(x, a.rres(z, y)));
          REQUIRE(a.prod(x, a.join(y, z)) == a.join(a.prod(x, y), a.prod(x, z)));
          REQUIRE(a.prod(a.join(y, z), x) == a.join(a.prod(y, x), a.prod(z, x)));
        }
      }
    }
  }
}

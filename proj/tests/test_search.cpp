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
using testing::Fixture;

namespace {

SearchOptions Options(int max_size, SearchMode mode = SearchMode::kSeeded, int threads = 1) {
  SearchOptions o;
  o.max_size = max_size;
  o.budget = 50'000'000;
  o.threads = threads;
  o.mode = mode;
  return o;
}

Span IdentitySpan(const Algebra& a) {
  std::vector<Index> id(a.size());
  for (Index i = 0; i < a.size(); ++i) id[i] = i;
  return MakeSpan(a, a, a, id, id);
}

}  // namespace

TEST_CASE("identity spans amalgamate at their own size") {
  const Algebra a = Fixture("idem-A.alg");
  const auto out = SearchAmalgam(IdentitySpan(a), {}, Options(3));
  REQUIRE(out.kind == OutcomeKind::kFound);
  CHECK(out.size == 3);
  CHECK(AreIsomorphic(out.amalgam->target, a));
  const auto trivial =
      SearchAmalgamUnrestrictedSquare(IdentitySpan(Algebra::Trivial()), 1, 1000);
  REQUIRE(trivial.kind == OutcomeKind::kFound);
  CHECK(trivial.size == 1);
}

TEST_CASE("seeded and square modes agree on the idem span at size 6") {
  const Span s = testing::SpanFixture("idem.span");
  const auto seeded = SearchAmalgam(s, {}, Options(6));
  const auto square = SearchAmalgamUnrestrictedSquare(s, 6, 50'000'000);
  CHECK(seeded.kind == OutcomeKind::kNoneUpToBound);
  CHECK(square.kind == OutcomeKind::kNoneUpToBound);
  CHECK(square.bound == 6);
}

TEST_CASE("distrib span without flags has a non-distributive amalgam") {
  const Span s = testing::SpanFixture("distrib.span");
  for (int bound : {7, 8}) {
    const auto out = SearchAmalgam(s, {}, Options(bound));
    REQUIRE(out.kind == OutcomeKind::kFound);
    CHECK(out.size == 7);
    CHECK(ValidateAmalgam(s, *out.amalgam, true));
    CHECK_FALSE(IsDistributive(out.amalgam->target));
  }
  const auto square = SearchAmalgam(s, {}, Options(7, SearchMode::kSquare));
  REQUIRE(square.kind == OutcomeKind::kFound);
  CHECK(square.size <= 7);
  CHECK(ValidateAmalgam(s, *square.amalgam, false));
}

TEST_CASE("outcomes and node counts do not depend on the thread count") {
  const Span s = testing::SpanFixture("idem.span");
  const auto one = SearchAmalgam(s, {}, Options(7, SearchMode::kSeeded, 1));
  const auto four = SearchAmalgam(s, {}, Options(7, SearchMode::kSeeded, 4));
  CHECK(SerializeOutcome(one) == SerializeOutcome(four));
  const Span d = testing::SpanFixture("distrib.span");
  CHECK(SerializeOutcome(SearchAmalgam(d, {}, Options(7, SearchMode::kSquare, 1))) ==
        SerializeOutcome(SearchAmalgam(d, {}, Options(7, SearchMode::kSquare, 3))));
}

TEST_CASE("a small budget is reported as exhausted") {
  const Span s = testing::SpanFixture("idem.span");
  SearchOptions o = Options(8);
  o.budget = 10;
  const auto out = SearchAmalgam(s, {}, o);
  CHECK(out.kind == OutcomeKind::kBudgetExhausted);
  CHECK(out.stats.nodes == 10);
  CHECK_FALSE(out.amalgam);
}

TEST_CASE("constraints the span violates are rejected") {
  const Span s = testing::SpanFixture("idem.span");
  bool threw = false;
  try {
    SearchAmalgam(s, VarietyConstraints::Parse("distributive"), Options(8));
  } catch (const Error& e) {
    threw = e.code() == ErrorCode::kInconsistentConstraints;
  }
  CHECK(threw);
}

TEST_CASE("search agrees with the scan over all targets up to size 5") {
  // Candidate targets: the naive oracle up to size 4, the enumerator
  // (checked against the oracle elsewhere) at size 5.
  std::vector<std::vector<Algebra>> by_size(6);
  for (int n = 1; n <= 4; ++n) by_size[n] = oracle::Algebras(n, false);
  by_size[5] = EnumerateAlgebras(5, {});
  REQUIRE(by_size[5].size() == 149);

  HuntOptions h;
  h.apex_max = 2;
  h.leg_max = 3;
  h.search_bound = 5;
  int spans = 0;
  GenerateCandidateSpans(h, [&](const HuntRecord& r) {
    const Span& s = *r.span;
    ++spans;
    CAPTURE(r.cursor);
    const int strong_from = s.left.size() + s.right.size() - s.apex.size();
    const int any_from = std::max(s.left.size(), s.right.size());
    const auto seeded = SearchAmalgam(s, {}, Options(5));
    const int strong = oracle::SmallestAmalgam(s, by_size, strong_from, 5, true);
    if (strong < 0) {
      CHECK(seeded.kind == OutcomeKind::kNoneUpToBound);
    } else {
      REQUIRE(seeded.kind == OutcomeKind::kFound);
      CHECK(seeded.size == strong);
      CHECK(ValidateAmalgam(s, *seeded.amalgam, true));
    }
    const auto square = SearchAmalgam(s, {}, Options(5, SearchMode::kSquare));
    const int any = oracle::SmallestAmalgam(s, by_size, any_from, 5, false);
    if (any < 0) {
      CHECK(square.kind == OutcomeKind::kNoneUpToBound);
    } else {
      REQUIRE(square.kind == OutcomeKind::kFound);
      CHECK(square.size == any);
      CHECK(ValidateAmalgam(s, *square.amalgam, false));
    }
    if (seeded.kind == OutcomeKind::kFound) {
      // Square mode finds an amalgam no larger than the seeded one.
      REQUIRE(square.kind == OutcomeKind::kFound);
      CHECK(square.size <= seeded.size);
    }
    return true;
  });
  CHECK(spans > 10);
}

TEST_CASE("enumeration counts") {
  const int all[] = {1, 1, 3, 20, 149};
  const int idempotent[] = {1, 1, 2, 8, 32};
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(EnumerateAlgebras(n, {}).size() == all[n - 1]);
    CHECK(EnumerateAlgebras(n, VarietyConstraints::Parse("idempotent")).size() ==
          idempotent[n - 1]);
  }
  CHECK(EnumerateLatticeOrders(5).size() == 5);
  CHECK(EnumerateLatticeOrders(6).size() == 15);
}

TEST_CASE("enumerated algebras are pairwise non-isomorphic and admitted") {
  const auto flags = VarietyConstraints::Parse("commutative");
  const auto algebras = EnumerateAlgebras(4, flags);
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    CHECK(flags.Admits(algebras[i]));
    CHECK(CheckAxioms(algebras[i].tables()).passed);
    for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(AreIsomorphic(algebras[i], algebras[j]));
  }
}

TEST_CASE("the idempotent 3-element algebras include the 3-chain") {
  const Algebra chain = Fixture("idem-A.alg");
  bool found = false;
  for (const auto& a : EnumerateAlgebras(3, VarietyConstraints::Parse("idempotent"))) {
    found = found || AreIsomorphic(a, chain).has_value();
  }
  CHECK(found);
}

TEST_CASE("enumeration refuses sizes above the cap") {
  bool threw = false;
  try {
    EnumerateAlgebras(kMaxEnumerateSize + 1, {});
  } catch (const Error& e) {
    threw = e.code() == ErrorCode::kTooLarge;
  }
  CHECK(threw);
}

TEST_CASE("span hunt over the trivial apex finds no candidates") {
  HuntOptions h;
  h.apex_max = 1;
  h.leg_max = 2;
  h.search_bound = 4;
  int spans = 0;
  GenerateCandidateSpans(h, [&](const HuntRecord& r) {
    ++spans;
    CHECK_FALSE(r.candidate());
    return true;
  });
  CHECK(spans == 3);
}

TEST_CASE("span hunt lists the idem span among its candidates") {
  const Algebra b = Fixture("idem-B.alg");
  const Algebra c = Fixture("idem-C.alg");
  HuntOptions h;
  h.apex_max = 3;
  h.leg_max = 5;
  h.search_bound = 6;
  bool found = false;
  GenerateCandidateSpans(h, [&](const HuntRecord& r) {
    if (!r.candidate() || r.apex_size != 3) return true;
    const Span& s = *r.span;
    const bool legs = (AreIsomorphic(s.left, b) && AreIsomorphic(s.right, c)) ||
                      (AreIsomorphic(s.left, c) && AreIsomorphic(s.right, b));
    if (legs) found = true;
    return !found;
  });
  CHECK(found);
}

TEST_CASE("span hunt resumes after a cursor and is thread independent") {
  HuntOptions h;
  h.apex_max = 2;
  h.leg_max = 3;
  h.search_bound = 4;
  std::vector<std::pair<std::int64_t, OutcomeKind>> full, threaded, resumed;
  GenerateCandidateSpans(h, [&](const HuntRecord& r) {
    full.emplace_back(r.cursor, r.outcome);
    return true;
  });
  h.threads = 3;
  GenerateCandidateSpans(h, [&](const HuntRecord& r) {
    threaded.emplace_back(r.cursor, r.outcome);
    return true;
  });
  CHECK(full == threaded);
  REQUIRE(full.size() > 4);
  h.resume_after = full[3].first;
  GenerateCandidateSpans(h, [&](const HuntRecord& r) {
    resumed.emplace_back(r.cursor, r.outcome);
    return true;
  });
  CHECK(std::vector(full.begin() + 4, full.end()) == resumed);
}

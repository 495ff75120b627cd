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


// One line per acceptance criterion; exit status 0 when all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "common.hpp"
#include "oracle/naive.hpp"
#include "oracle/sweeps.hpp"
#include "rlamalg/certificate.hpp"
#include "rlamalg/enumerate.hpp"
#include "rlamalg/error.hpp"
#include "rlamalg/fixtures.hpp"
#include "rlamalg/io.hpp"
#include "rlamalg/search.hpp"

using namespace rlamalg;

namespace {

// Counts produced by oracle::Algebras, frozen.
const std::vector<std::size_t> kOracleCounts = {1, 1, 3, 20};
const std::vector<std::size_t> kOracleIdempotentCounts = {1, 1, 2, 8};

constexpr double kFixtureSeconds = 5;
constexpr double kSearchSeconds = 600;
constexpr double kIdentitySeconds = 1;
constexpr double kAdjunctionSeconds = 30;
constexpr double kOracleSeconds = 600;
constexpr int kSearchBound = 8;
constexpr int kThreads = 4;

struct Verdict {
  bool passed = true;
  std::string detail;

  void Fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

int failures = 0;

void Run(int number, const char* title, double limit_s, const std::function<Verdict()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.Fail(std::string("exception: ") + e.what());
  }
  const double s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && s > limit_s) v.Fail("took longer than the limit");
  if (!v.passed) ++failures;
  std::printf("%s %2d %s (%.2fs%s)%s%s\n", v.passed ? "PASS" : "FAIL", number, title, s,
              limit_s > 0 ? (" of " + std::to_string(static_cast<int>(limit_s)) + "s").c_str() : "",
              v.detail.empty() ? "" : ": ", v.detail.c_str());
  std::fflush(stdout);
}

struct SpanSearch {
  std::string span;
  std::string flags;
};

const std::vector<SpanSearch>& Searches() {
  static const std::vector<SpanSearch> s = {{"idem.span", ""},
                                            {"invol.span", "involutive"},
                                            {"invol.span", ""},
                                            {"distrib.span", "distributive"},
                                            {"distrib-idem.span", "idempotent,distributive"}};
  return s;
}

Span IdentitySpan() {
  const Algebra a = testing::Fixture("idem-A.alg");
  return MakeSpan(a, a, a, {0, 1, 2}, {0, 1, 2}, "identity");
}

std::string EnumerationText(int n, bool idempotent) {
  VarietyConstraints c;
  c.idempotent = idempotent;
  std::string out;
  for (const auto& a : EnumerateAlgebras(n, c)) out += SerializeAlgebra(a);
  return out;
}

// Outcome texts of criteria 3 (seeded, then square) and 4.
std::vector<std::string> SearchReports(int threads) {
  std::vector<std::string> out;
  for (const auto mode : {SearchMode::kSeeded, SearchMode::kSquare}) {
    for (const auto& s : Searches()) {
      const Span span = testing::SpanFixture(s.span);
      const auto r = SearchAmalgam(span, VarietyConstraints::Parse(s.flags),
                                   SearchOptions{kSearchBound, kDefaultSearchBudget, threads,
                                                 mode});
      out.push_back(SerializeOutcome(r));
    }
  }
  out.push_back(SerializeOutcome(
      SearchAmalgam(IdentitySpan(), {}, SearchOptions{3, kDefaultSearchBudget, threads,
                                                      SearchMode::kSeeded})));
  return out;
}

bool Adjoint(const Algebra& a) {
  const int n = a.size();
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z) {
        const bool p = a.leq(a.prod(x, y), z);
        if (p != a.leq(y, a.lres(x, z)) || p != a.leq(x, a.rres(z, y))) return false;
      }
  return true;
}

}  // namespace

int main() {
  Run(1, "fixture algebras complete uniquely with the expected predicates", kFixtureSeconds, [] {
    // Predicates each fixture group must satisfy.
    const std::map<std::string, std::vector<std::string>> expected = {
        {"idem-", {"idempotent"}},
        {"invol-", {"odd", "cyclic", "involutive"}},
        {"distrib-", {"integral", "commutative", "distributive"}},
        {"distrib-idem-", {"commutative", "distributive", "idempotent"}}};
    Verdict v;
    int count = 0;
    for (const auto& f : testing::AlgebraFixtures()) {
      const auto spec = LoadSpecFile(testing::FixturePath(f));
      const auto all = CompletePartialProduct(spec, 2);
      if (all.size() != 1) {
        v.Fail(f + " has " + std::to_string(all.size()) + " completions");
        continue;
      }
      if (!CheckAxioms(all[0].tables()).passed) v.Fail(f + " fails the axioms");
      std::string group;
      for (const auto& [prefix, names] : expected)
        if (f.rfind(prefix, 0) == 0 && prefix.size() > group.size()) group = prefix;
      for (const auto& p : expected.at(group))
        if (!EvaluatePredicate(all[0], p)) v.Fail(f + " is not " + p);
      ++count;
    }
    // The fourth span reuses the first span's apex.
    const Algebra a = testing::Fixture("idem-A.alg");
    for (const auto& p : expected.at("distrib-idem-"))
      if (!EvaluatePredicate(a, p)) v.Fail("idem-A is not " + p);
    if (count != 11) v.Fail("expected 11 fixtures");
    return v;
  });

  Run(2, "bundled spans have embedding legs", 0, [] {
    Verdict v;
    for (const auto& f : testing::SpanFixtures()) {
      const Span s = testing::SpanFixture(f);
      if (!IsEmbedding(s.LeftLeg()) || !IsEmbedding(s.RightLeg())) v.Fail(f);
    }
    return v;
  });

  std::vector<std::string> single;
  Run(3, "no amalgam up to size 8 for any bundled span, strong or not", kSearchSeconds, [&] {
    Verdict v;
    single = SearchReports(1);
    for (std::size_t i = 0; i + 1 < single.size(); ++i) {
      const auto& s = Searches()[i % Searches().size()];
      const std::string label = s.span + " [" + s.flags + "]" +
                                (i < Searches().size() ? " seeded" : " square");
      if (single[i].find("\"NoneUpToBound\"") == std::string::npos)
        v.Fail(label + ": " + single[i]);
      if (single[i].find("\"bound\":" + std::to_string(kSearchBound)) == std::string::npos &&
          single[i].find("\"bound\": " + std::to_string(kSearchBound)) == std::string::npos)
        v.Fail(label + " not searched to " + std::to_string(kSearchBound));
    }
    return v;
  });

  Run(4, "identity span amalgamates at size 3", kIdentitySeconds, [] {
    Verdict v;
    const Span s = IdentitySpan();
    const auto r = SearchAmalgam(s, {}, SearchOptions{3, kDefaultSearchBudget, 1,
                                                      SearchMode::kSeeded});
    if (r.kind != OutcomeKind::kFound || r.size != 3) return Verdict{false, "not found at 3"};
    if (!AreIsomorphic(r.amalgam->target, s.apex)) v.Fail("amalgam is not isomorphic to A");
    if (!ValidateAmalgam(s, *r.amalgam, true)) v.Fail("amalgam does not validate");
    return v;
  });

  Run(5, "certificates replay and every single-step deletion fails", 0, [] {
    Verdict v;
    for (const char* f : {"idem.cert", "invol.cert", "distrib.cert", "distrib-idem.cert"}) {
      const auto cert = LoadCertificateFile(testing::FixturePath(f));
      const Span span = testing::SpanFixture(cert.span);
      if (!CheckCertificate(span, cert).valid) v.Fail(std::string(f) + " is invalid");
      const auto survivors = oracle::DeletionSurvivors(span, cert);
      if (!survivors.empty())
        v.Fail(std::string(f) + " survives deleting step " + std::to_string(survivors[0]));
    }
    return v;
  });

  Run(6, "residuation adjunction on all algebras up to size 4 and the fixtures",
      kAdjunctionSeconds, [] {
        Verdict v;
        auto all = testing::SmallAlgebras(4);
        for (const auto& f : testing::AlgebraFixtures()) all.push_back(testing::Fixture(f));
        for (const auto& a : all)
          if (!Adjoint(a)) v.Fail(a.name() + " violates the adjunction");
        if (all.size() != 25 + 11) v.Fail("unexpected number of algebras");
        return v;
      });

  Run(7, "enumeration matches the naive oracle for sizes 1 to 4", kOracleSeconds, [] {
    Verdict v;
    for (int n = 1; n <= 4; ++n) {
      for (bool idem : {false, true}) {
        const auto& frozen = idem ? kOracleIdempotentCounts : kOracleCounts;
        const std::size_t naive = oracle::Algebras(n, idem).size();
        VarietyConstraints c;
        c.idempotent = idem;
        const std::size_t fast = EnumerateAlgebras(n, c).size();
        const std::string label =
            "size " + std::to_string(n) + (idem ? " idempotent" : "") + ": ";
        if (naive != frozen[n - 1]) v.Fail(label + "oracle gives " + std::to_string(naive));
        if (fast != naive) v.Fail(label + "enumerator gives " + std::to_string(fast));
      }
    }
    return v;
  });

  Run(8, "no rule derives a false claim on algebras up to size 5", 0, [] {
    Verdict v;
    std::uint64_t instances = 0;
    for (const auto& a : testing::SmallAlgebras(5)) {
      const auto r = oracle::RuleSoundness(a);
      instances += r.instances;
      if (!r.failures.empty()) v.Fail(r.failures.front());
    }
    if (instances == 0) v.Fail("no instances checked");
    v.detail = v.passed ? std::to_string(instances) + " instances" : v.detail;
    return v;
  });

  Run(9, "relative complements are unique in distributive reducts up to size 6", 0, [] {
    Verdict v;
    std::set<std::vector<std::uint8_t>> seen;
    int lattices = 0;
    for (int n = 1; n <= 6; ++n) {
      for (const auto& a : EnumerateAlgebras(n, {})) {
        if (!IsDistributive(a) || !seen.insert(a.tables().leq).second) continue;
        ++lattices;
        if (!oracle::RelativeComplementsUnique(a)) v.Fail(a.name());
      }
    }
    // Negative control: the diamond M3 is not distributive and the atoms
    // are distinct complements of each other in [bot, top].
    if (oracle::RelativeComplementsUnique(testing::Fixture("idem-C.alg")))
      v.Fail("control M3 reported unique complements");
    if (v.passed) v.detail = std::to_string(lattices) + " distributive lattices";
    return v;
  });

  Run(10, "reports are identical with 1 and 4 threads", 0, [&] {
    Verdict v;
    if (single.empty()) single = SearchReports(1);
    const auto multi = SearchReports(kThreads);
    for (std::size_t i = 0; i < single.size(); ++i)
      if (single[i] != multi[i]) v.Fail("search report " + std::to_string(i) + " differs");
    for (int n = 1; n <= 4; ++n)
      for (bool idem : {false, true})
        if (EnumerationText(n, idem) != EnumerationText(n, idem))
          v.Fail("enumeration at size " + std::to_string(n) + " differs");
    return v;
  });

  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}

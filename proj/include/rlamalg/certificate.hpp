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

// Ground derivation certificates over the free extension of a span.
//
// Terms are prefix S-expressions over the generators (element names of B and
// C, identified over A) with (* s t), (v s t), (^ s t) and the constant 1.
// A claim is (= s t) or (<= s t). Every step names a rule and the earlier
// steps it uses as premises; the rule set is sound in every residuated
// lattice, except MEET-JOIN-DIST which needs the distributive flag.

#ifndef RLAMALG_CERTIFICATE_HPP_
#define RLAMALG_CERTIFICATE_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rlamalg/algebra.hpp"
#include "rlamalg/morphism.hpp"
#include "rlamalg/variety.hpp"

namespace rlamalg {

struct Term {
  enum class Kind { kGenerator, kUnit, kProd, kJoin, kMeet };
  Kind kind = Kind::kUnit;
  std::string name;        // generators only
  std::vector<Term> args;  // two for binary operations

  static Term Generator(std::string name);
  static Term Unit();
  static Term Binary(Kind kind, Term left, Term right);

  friend bool operator==(const Term&, const Term&) = default;
};

// Throws Error(kParse).
Term ParseTerm(std::string_view text);
std::string ToString(const Term& term);

struct Claim {
  enum class Kind { kEq, kLeq };
  Kind kind = Kind::kEq;
  Term lhs;
  Term rhs;

  friend bool operator==(const Claim&, const Claim&) = default;
};

Claim ParseClaim(std::string_view text);
std::string ToString(const Claim& claim);

// Rule parameters beyond the claim itself: the source algebra of a ground
// fact ("B" or "C") and the position of a congruence rewrite (a path of
// argument indices into the left-hand side).
struct Instantiation {
  std::optional<std::string> source;
  std::optional<std::vector<int>> position;

  friend bool operator==(const Instantiation&, const Instantiation&) = default;
};

struct DerivationStep {
  Claim claim;
  std::string rule;
  std::vector<int> premises;
  Instantiation terms;

  friend bool operator==(const DerivationStep&, const DerivationStep&) = default;
};

struct DerivationCertificate {
  std::string name;
  std::string span;  // path of the span file, relative to the certificate
  VarietyConstraints flags;
  std::pair<std::string, std::string> goal;
  std::vector<DerivationStep> steps;

  friend bool operator==(const DerivationCertificate&,
                         const DerivationCertificate&) = default;
};

DerivationCertificate ParseCertificate(std::string_view text);
std::string SerializeCertificate(const DerivationCertificate& cert);
DerivationCertificate LoadCertificateFile(const std::string& path);

const std::vector<std::string>& RuleNames();

struct RuleContext {
  bool distributive = false;
  // Truth of a ground claim in one source algebra; nullopt when the claim
  // does not live in the requested (or any single) source.
  std::function<std::optional<bool>(const Claim&, const std::optional<std::string>& source)>
      ground;
};

// Checks one rule application. Returns an empty string when the claim
// follows from the premises by the rule, otherwise the reason. Throws
// Error(kUnknownRule) and Error(kMalformedInstantiation).
std::string CheckRule(const std::string& rule, const Claim& claim,
                      const std::vector<Claim>& premises, const Instantiation& terms,
                      const RuleContext& context);

// Evaluates a term in one algebra; nullopt if some generator does not
// resolve.
std::optional<Index> Evaluate(
    const Term& term, const Algebra& alg,
    const std::function<std::optional<Index>(const std::string&)>& resolve);
std::optional<bool> Holds(
    const Claim& claim, const Algebra& alg,
    const std::function<std::optional<Index>(const std::string&)>& resolve);

// Generator names of a span: apex labels for the shared elements, then the
// labels of B and C outside the apex image.
class GeneratorTable {
 public:
  // Throws Error(kUnknownGenerator) when a name would denote two different
  // elements.
  explicit GeneratorTable(const Span& span);

  bool contains(const std::string& name) const;
  std::optional<Index> in_left(const std::string& name) const;
  std::optional<Index> in_right(const std::string& name) const;

 private:
  struct Entry {
    std::string name;
    std::optional<Index> left;
    std::optional<Index> right;
  };
  const Entry* find(const std::string& name) const;
  std::vector<Entry> entries_;
};

struct CertificateResult {
  bool valid = false;
  std::size_t step = 0;  // index of the first invalid step
  std::string reason;
};

// Replays every step against the span. `flags` are the variety flags in
// force (the certificate's own flags unless overridden by the caller).
// Throws Error(kUnknownGenerator), Error(kUnknownRule) and
// Error(kMalformedInstantiation).
CertificateResult CheckCertificate(const Span& span, const DerivationCertificate& cert,
                                   const VarietyConstraints& flags);
CertificateResult CheckCertificate(const Span& span, const DerivationCertificate& cert);

}  // namespace rlamalg

#endif  // RLAMALG_CERTIFICATE_HPP_

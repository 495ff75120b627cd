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

#include "rlamalg/certificate.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rlamalg/error.hpp"
#include "rlamalg/io.hpp"

namespace rlamalg {

using Kind = Term::Kind;

Term Term::Generator(std::string name) {
  Term t;
  t.kind = Kind::kGenerator;
  t.name = std::move(name);
  return t;
}

Term Term::Unit() { return Term{}; }

Term Term::Binary(Kind kind, Term left, Term right) {
  Term t;
  t.kind = kind;
  t.args = {std::move(left), std::move(right)};
  return t;
}

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  // "(", ")" or an atom; empty at end of input.
  std::string Next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == text_.size()) return {};
    if (text_[pos_] == '(' || text_[pos_] == ')') return std::string(1, text_[pos_++]);
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')') {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text() const { return text_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

[[noreturn]] void BadTerm(std::string_view text, const std::string& what) {
  throw Error(ErrorCode::kParse, "term '" + std::string(text) + "': " + what);
}

Term ParseTermFrom(Lexer& lex, const std::string& first) {
  if (first.empty()) BadTerm(lex.text(), "unexpected end");
  if (first == ")") BadTerm(lex.text(), "unexpected ')'");
  if (first != "(") return first == "1" ? Term::Unit() : Term::Generator(first);
  const std::string op = lex.Next();
  Kind kind;
  if (op == "*") {
    kind = Kind::kProd;
  } else if (op == "v") {
    kind = Kind::kJoin;
  } else if (op == "^") {
    kind = Kind::kMeet;
  } else {
    BadTerm(lex.text(), "unknown operation '" + op + "'");
  }
  Term left = ParseTermFrom(lex, lex.Next());
  Term right = ParseTermFrom(lex, lex.Next());
  if (lex.Next() != ")") BadTerm(lex.text(), "operations are binary");
  return Term::Binary(kind, std::move(left), std::move(right));
}

const char* OpSymbol(Kind kind) {
  switch (kind) {
    case Kind::kProd: return "*";
    case Kind::kJoin: return "v";
    case Kind::kMeet: return "^";
    default: return "";
  }
}

bool Is(const Term& t, Kind kind) { return t.kind == kind; }
const Term& L(const Term& t) { return t.args[0]; }
const Term& R(const Term& t) { return t.args[1]; }

bool IsEq(const Claim& c) { return c.kind == Claim::Kind::kEq; }
bool IsLeq(const Claim& c) { return c.kind == Claim::Kind::kLeq; }

// Both orientations of an equation schema.
bool EitherWay(const Claim& c, const std::function<bool(const Term&, const Term&)>& match) {
  return IsEq(c) && (match(c.lhs, c.rhs) || match(c.rhs, c.lhs));
}

// s and t are equal except at one position, where one holds l and the
// other r.
bool RewritesOnce(const Term& s, const Term& t, const Term& l, const Term& r) {
  if ((s == l && t == r) || (s == r && t == l)) return true;
  if (s.kind != t.kind || s.name != t.name || s.args.size() != t.args.size()) return false;
  int differing = -1;
  for (std::size_t i = 0; i < s.args.size(); ++i) {
    if (s.args[i] == t.args[i]) continue;
    if (differing >= 0) return false;
    differing = static_cast<int>(i);
  }
  if (differing < 0) return s == t && l == r;
  return RewritesOnce(s.args[differing], t.args[differing], l, r);
}

std::string RewritesAt(const Term& s, const Term& t, const Term& l, const Term& r,
                       const std::vector<int>& path) {
  const Term* a = &s;
  const Term* b = &t;
  for (int step : path) {
    if (a->args.empty() || b->args.empty()) return "position leaves the term";
    if (a->kind != b->kind) return "terms differ above the position";
    if (a->args[1 - step] != b->args[1 - step]) return "terms differ outside the position";
    a = &a->args[step];
    b = &b->args[step];
  }
  if ((*a == l && *b == r) || (*a == r && *b == l)) return {};
  return "subterms at the position are not the premise's sides";
}

const std::vector<std::string> kRules = {
    "GROUND-FACT",   "EQ-REFL",    "EQ-SYM",    "EQ-TRANS",       "LEQ-REFL",
    "LEQ-TRANS",     "ANTISYM",    "EQ-TO-LEQ", "CONGRUENCE",     "ASSOC",
    "UNIT",          "PROD-JOIN-DIST", "PROD-MONO", "JOIN-UB",    "JOIN-LUB",
    "MEET-LB",       "MEET-GLB",   "MEET-JOIN-DIST", "JOIN-COMM", "JOIN-ASSOC",
    "MEET-COMM",     "MEET-ASSOC",
};

std::string Need(bool ok, const std::string& reason) { return ok ? std::string() : reason; }

std::string PremiseCount(const std::vector<Claim>& premises, std::size_t n) {
  return premises.size() == n ? std::string()
                              : "rule takes " + std::to_string(n) + " premise(s), got " +
                                    std::to_string(premises.size());
}

bool Commutes(const Term& a, const Term& b, Kind kind) {
  return Is(a, kind) && Is(b, kind) && L(a) == R(b) && R(a) == L(b);
}

bool Associates(const Term& a, const Term& b, Kind kind) {
  // (x y) z  vs  x (y z)
  return Is(a, kind) && Is(L(a), kind) && Is(b, kind) && Is(R(b), kind) &&
         L(L(a)) == L(b) && R(L(a)) == L(R(b)) && R(a) == R(R(b));
}

}  // namespace

Term ParseTerm(std::string_view text) {
  Lexer lex(text);
  Term t = ParseTermFrom(lex, lex.Next());
  if (!lex.Next().empty()) BadTerm(text, "trailing input");
  return t;
}

std::string ToString(const Term& term) {
  switch (term.kind) {
    case Kind::kGenerator: return term.name;
    case Kind::kUnit: return "1";
    default:
      return std::string("(") + OpSymbol(term.kind) + " " + ToString(L(term)) + " " +
             ToString(R(term)) + ")";
  }
}

Claim ParseClaim(std::string_view text) {
  Lexer lex(text);
  auto bad = [&](const std::string& what) {
    throw Error(ErrorCode::kParse, "claim '" + std::string(text) + "': " + what);
  };
  if (lex.Next() != "(") bad("expected '('");
  const std::string rel = lex.Next();
  Claim c;
  if (rel == "=") {
    c.kind = Claim::Kind::kEq;
  } else if (rel == "<=") {
    c.kind = Claim::Kind::kLeq;
  } else {
    bad("relation must be = or <=");
  }
  c.lhs = ParseTermFrom(lex, lex.Next());
  c.rhs = ParseTermFrom(lex, lex.Next());
  if (lex.Next() != ")" || !lex.Next().empty()) bad("expected exactly two terms");
  return c;
}

std::string ToString(const Claim& claim) {
  return std::string("(") + (IsEq(claim) ? "=" : "<=") + " " + ToString(claim.lhs) + " " +
         ToString(claim.rhs) + ")";
}

const std::vector<std::string>& RuleNames() { return kRules; }

std::string CheckRule(const std::string& rule, const Claim& claim,
                      const std::vector<Claim>& premises, const Instantiation& terms,
                      const RuleContext& context) {
  if (std::find(kRules.begin(), kRules.end(), rule) == kRules.end()) {
    throw Error(ErrorCode::kUnknownRule, "unknown rule '" + rule + "'");
  }
  if (terms.source && rule != "GROUND-FACT") {
    throw Error(ErrorCode::kMalformedInstantiation, rule + " takes no source");
  }
  if (terms.position && rule != "CONGRUENCE") {
    throw Error(ErrorCode::kMalformedInstantiation, rule + " takes no position");
  }
  const Term& s = claim.lhs;
  const Term& t = claim.rhs;

  if (rule == "GROUND-FACT") {
    if (auto r = PremiseCount(premises, 0); !r.empty()) return r;
    const auto holds = context.ground(claim, terms.source);
    if (!holds) return "claim does not live in a single source algebra";
    return Need(*holds, "claim is false in its source algebra");
  }
  if (rule == "EQ-REFL") {
    if (auto r = PremiseCount(premises, 0); !r.empty()) return r;
    return Need(IsEq(claim) && s == t, "not an instance of s = s");
  }
  if (rule == "LEQ-REFL") {
    if (auto r = PremiseCount(premises, 0); !r.empty()) return r;
    return Need(IsLeq(claim) && s == t, "not an instance of s <= s");
  }
  if (rule == "EQ-SYM") {
    if (auto r = PremiseCount(premises, 1); !r.empty()) return r;
    const Claim& p = premises[0];
    return Need(IsEq(claim) && IsEq(p) && p.lhs == t && p.rhs == s,
                "claim is not the premise reversed");
  }
  if (rule == "EQ-TRANS" || rule == "LEQ-TRANS") {
    const bool eq = rule == "EQ-TRANS";
    if (premises.size() < 2) return "rule takes at least 2 premises";
    if (eq != IsEq(claim)) return eq ? "claim must be an equation" : "claim must be an inequation";
    // Equations may be used in either direction, inequations forwards.
    Term current = s;
    for (std::size_t i = 0; i < premises.size(); ++i) {
      const Claim& p = premises[i];
      if (eq && !IsEq(p)) return "premise " + std::to_string(i) + " is not an equation";
      if (p.lhs == current) {
        current = p.rhs;
      } else if (IsEq(p) && p.rhs == current) {
        current = p.lhs;
      } else {
        return "premise " + std::to_string(i) + " does not continue the chain";
      }
    }
    return Need(current == t, "chain does not end at the right-hand side");
  }
  if (rule == "ANTISYM") {
    if (auto r = PremiseCount(premises, 2); !r.empty()) return r;
    const Claim& a = premises[0];
    const Claim& b = premises[1];
    return Need(IsEq(claim) && IsLeq(a) && IsLeq(b) && a.lhs == s && a.rhs == t &&
                    b.lhs == t && b.rhs == s,
                "premises must be s <= t and t <= s");
  }
  if (rule == "EQ-TO-LEQ") {
    if (auto r = PremiseCount(premises, 1); !r.empty()) return r;
    const Claim& p = premises[0];
    return Need(IsLeq(claim) && IsEq(p) &&
                    ((p.lhs == s && p.rhs == t) || (p.lhs == t && p.rhs == s)),
                "claim is not an inequation between the premise's sides");
  }
  if (rule == "CONGRUENCE") {
    if (auto r = PremiseCount(premises, 1); !r.empty()) return r;
    const Claim& p = premises[0];
    if (!IsEq(claim) || !IsEq(p)) return "claim and premise must be equations";
    if (terms.position) {
      for (int step : *terms.position) {
        if (step != 0 && step != 1) {
          throw Error(ErrorCode::kMalformedInstantiation, "position entries must be 0 or 1");
        }
      }
      return RewritesAt(s, t, p.lhs, p.rhs, *terms.position);
    }
    return Need(RewritesOnce(s, t, p.lhs, p.rhs),
                "sides do not differ by one rewrite with the premise");
  }
  if (rule == "ASSOC") {
    if (auto r = PremiseCount(premises, 0); !r.empty()) return r;
    return Need(EitherWay(claim, [](const Term& a, const Term& b) {
                  return Associates(a, b, Kind::kProd);
                }),
                "not an instance of (x y) z = x (y z)");
  }
  if (rule == "JOIN-ASSOC" || rule == "MEET-ASSOC") {
    if (auto r = PremiseCount(premises, 0); !r.empty()) return r;
    const Kind k = rule == "JOIN-ASSOC" ? Kind::kJoin : Kind::kMeet;
    return Need(EitherWay(claim, [k](const Term& a, const Term& b) { return Associates(a, b, k); }),
                "not an instance of associativity");
  }
  if (rule == "JOIN-COMM" || rule == "MEET-COMM") {
    if (auto r = PremiseCount(premises, 0); !r.empty()) return r;
    const Kind k = rule == "JOIN-COMM" ? Kind::kJoin : Kind::kMeet;
    return Need(IsEq(claim) && Commutes(s, t, k), "not an instance of commutativity");
  }
  if (rule == "UNIT") {
    if (auto r = PremiseCount(premises, 0); !r.empty()) return r;
    return Need(EitherWay(claim,
                          [](const Term& a, const Term& b) {
                            return Is(a, Kind::kProd) &&
                                   ((Is(L(a), Kind::kUnit) && R(a) == b) ||
                                    (Is(R(a), Kind::kUnit) && L(a) == b));
                          }),
                "not an instance of 1 s = s = s 1");
  }
  if (rule == "PROD-JOIN-DIST") {
    if (auto r = PremiseCount(premises, 0); !r.empty()) return r;
    return Need(
        EitherWay(claim,
                  [](const Term& a, const Term& b) {
                    if (!Is(a, Kind::kProd) || !Is(b, Kind::kJoin) || !Is(L(b), Kind::kProd) ||
                        !Is(R(b), Kind::kProd)) {
                      return false;
                    }
                    // u (x v y) = u x v u y
                    if (Is(R(a), Kind::kJoin) && L(L(b)) == L(a) && L(R(b)) == L(a) &&
                        R(L(b)) == L(R(a)) && R(R(b)) == R(R(a))) {
                      return true;
                    }
                    // (x v y) u = x u v y u
                    return Is(L(a), Kind::kJoin) && R(L(b)) == R(a) && R(R(b)) == R(a) &&
                           L(L(b)) == L(L(a)) && L(R(b)) == R(L(a));
                  }),
        "not an instance of product distributing over join");
  }
  if (rule == "PROD-MONO") {
    if (auto r = PremiseCount(premises, 1); !r.empty()) return r;
    const Claim& p = premises[0];
    if (!IsLeq(claim) || !IsLeq(p)) return "claim and premise must be inequations";
    if (!Is(s, Kind::kProd) || !Is(t, Kind::kProd)) return "both sides must be products";
    const bool left = L(s) == L(t) && R(s) == p.lhs && R(t) == p.rhs;
    const bool right = R(s) == R(t) && L(s) == p.lhs && L(t) == p.rhs;
    return Need(left || right, "not a monotone multiple of the premise");
  }
  if (rule == "JOIN-UB") {
    if (auto r = PremiseCount(premises, 0); !r.empty()) return r;
    return Need(IsLeq(claim) && Is(t, Kind::kJoin) && (L(t) == s || R(t) == s),
                "not an instance of s <= s v t");
  }
  if (rule == "MEET-LB") {
    if (auto r = PremiseCount(premises, 0); !r.empty()) return r;
    return Need(IsLeq(claim) && Is(s, Kind::kMeet) && (L(s) == t || R(s) == t),
                "not an instance of s ^ t <= s");
  }
  if (rule == "JOIN-LUB") {
    if (auto r = PremiseCount(premises, 2); !r.empty()) return r;
    const Claim& a = premises[0];
    const Claim& b = premises[1];
    return Need(IsLeq(claim) && IsLeq(a) && IsLeq(b) && Is(s, Kind::kJoin) && a.lhs == L(s) &&
                    b.lhs == R(s) && a.rhs == t && b.rhs == t,
                "premises must be s <= u and t <= u for s v t <= u");
  }
  if (rule == "MEET-GLB") {
    if (auto r = PremiseCount(premises, 2); !r.empty()) return r;
    const Claim& a = premises[0];
    const Claim& b = premises[1];
    return Need(IsLeq(claim) && IsLeq(a) && IsLeq(b) && Is(t, Kind::kMeet) && a.rhs == L(t) &&
                    b.rhs == R(t) && a.lhs == s && b.lhs == s,
                "premises must be u <= s and u <= t for u <= s ^ t");
  }
  // MEET-JOIN-DIST
  if (auto r = PremiseCount(premises, 0); !r.empty()) return r;
  if (!context.distributive) return "MEET-JOIN-DIST requires the distributive flag";
  return Need(EitherWay(claim,
                        [](const Term& a, const Term& b) {
                          return Is(a, Kind::kMeet) && Is(R(a), Kind::kJoin) &&
                                 Is(b, Kind::kJoin) && Is(L(b), Kind::kMeet) &&
                                 Is(R(b), Kind::kMeet) && L(L(b)) == L(a) &&
                                 L(R(b)) == L(a) && R(L(b)) == L(R(a)) &&
                                 R(R(b)) == R(R(a));
                        }),
              "not an instance of s ^ (t v u) = (s ^ t) v (s ^ u)");
}

std::optional<Index> Evaluate(
    const Term& term, const Algebra& alg,
    const std::function<std::optional<Index>(const std::string&)>& resolve) {
  switch (term.kind) {
    case Kind::kGenerator: return resolve(term.name);
    case Kind::kUnit: return alg.unit();
    default: break;
  }
  const auto a = Evaluate(L(term), alg, resolve);
  if (!a) return std::nullopt;
  const auto b = Evaluate(R(term), alg, resolve);
  if (!b) return std::nullopt;
  switch (term.kind) {
    case Kind::kProd: return alg.prod(*a, *b);
    case Kind::kJoin: return alg.join(*a, *b);
    default: return alg.meet(*a, *b);
  }
}

std::optional<bool> Holds(
    const Claim& claim, const Algebra& alg,
    const std::function<std::optional<Index>(const std::string&)>& resolve) {
  const auto a = Evaluate(claim.lhs, alg, resolve);
  const auto b = Evaluate(claim.rhs, alg, resolve);
  if (!a || !b) return std::nullopt;
  return IsEq(claim) ? *a == *b : alg.leq(*a, *b);
}

GeneratorTable::GeneratorTable(const Span& span) {
  auto add = [this](const std::string& name, std::optional<Index> left,
                    std::optional<Index> right) {
    if (const Entry* e = find(name)) {
      if (e->left == left && e->right == right) return;
      throw Error(ErrorCode::kUnknownGenerator,
                  "generator name '" + name + "' denotes two different elements");
    }
    entries_.push_back({name, left, right});
  };
  std::vector<bool> left_shared(span.left.size(), false), right_shared(span.right.size(), false);
  for (Index a = 0; a < span.apex.size(); ++a) {
    const Index l = span.phi_left[a];
    const Index r = span.phi_right[a];
    left_shared[l] = right_shared[r] = true;
    add(span.apex.label(a), l, r);
  }
  for (Index b = 0; b < span.left.size(); ++b) {
    if (!left_shared[b]) add(span.left.label(b), b, std::nullopt);
  }
  for (Index c = 0; c < span.right.size(); ++c) {
    if (!right_shared[c]) add(span.right.label(c), std::nullopt, c);
  }
  if (const Entry* one = find("1")) {
    if (one->left != span.left.unit() && one->right != span.right.unit()) {
      throw Error(ErrorCode::kUnknownGenerator, "the name '1' is reserved for the unit");
    }
  }
}

const GeneratorTable::Entry* GeneratorTable::find(const std::string& name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

bool GeneratorTable::contains(const std::string& name) const { return find(name) != nullptr; }

std::optional<Index> GeneratorTable::in_left(const std::string& name) const {
  const Entry* e = find(name);
  return e ? e->left : std::nullopt;
}

std::optional<Index> GeneratorTable::in_right(const std::string& name) const {
  const Entry* e = find(name);
  return e ? e->right : std::nullopt;
}

namespace {

void CollectGenerators(const Term& t, std::set<std::string>& out) {
  if (t.kind == Kind::kGenerator) out.insert(t.name);
  for (const auto& a : t.args) CollectGenerators(a, out);
}

Term NameTerm(const std::string& name) {
  return name == "1" ? Term::Unit() : Term::Generator(name);
}

using Json = nlohmann::ordered_json;

Instantiation ParseInstantiation(const Json& j) {
  Instantiation inst;
  if (j.is_null()) return inst;
  if (!j.is_object()) throw Error(ErrorCode::kMalformedInstantiation, "terms must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "source") {
      if (!value.is_string() || (value != "B" && value != "C")) {
        throw Error(ErrorCode::kMalformedInstantiation, "source must be \"B\" or \"C\"");
      }
      inst.source = value.get<std::string>();
    } else if (key == "position") {
      if (!value.is_array()) {
        throw Error(ErrorCode::kMalformedInstantiation, "position must be an array");
      }
      std::vector<int> path;
      for (const auto& e : value) {
        if (!e.is_number_integer()) {
          throw Error(ErrorCode::kMalformedInstantiation, "position entries must be integers");
        }
        path.push_back(e.get<int>());
      }
      inst.position = path;
    } else {
      throw Error(ErrorCode::kMalformedInstantiation, "unknown instantiation key '" + key + "'");
    }
  }
  return inst;
}

}  // namespace

DerivationCertificate ParseCertificate(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("malformed JSON: ") + e.what());
  }
  auto fail = [](const std::string& field, const std::string& what) {
    throw Error(ErrorCode::kParse, "field '" + field + "': " + what);
  };
  if (!j.is_object()) throw Error(ErrorCode::kParse, "certificate must be a JSON object");
  const std::set<std::string> allowed = {"name", "span", "flags", "goal", "steps"};
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) fail(key, "unknown field in certificate");
  }
  for (const char* key : {"span", "goal", "steps"}) {
    if (!j.contains(key)) fail(key, "missing in certificate");
  }
  DerivationCertificate cert;
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail("name", "expected a string");
    cert.name = j["name"];
  }
  if (!j["span"].is_string()) fail("span", "expected a string");
  cert.span = j["span"];
  if (j.contains("flags")) {
    if (!j["flags"].is_array()) fail("flags", "expected an array of names");
    std::vector<std::string> names;
    for (const auto& f : j["flags"]) {
      if (!f.is_string()) fail("flags", "expected strings");
      names.push_back(f);
    }
    try {
      cert.flags = VarietyConstraints::FromNames(names);
    } catch (const Error& e) {
      fail("flags", e.what());
    }
  }
  const Json& goal = j["goal"];
  if (!goal.is_array() || goal.size() != 2 || !goal[0].is_string() || !goal[1].is_string()) {
    fail("goal", "expected two element names");
  }
  cert.goal = {goal[0], goal[1]};
  if (!j["steps"].is_array()) fail("steps", "expected an array");
  for (std::size_t i = 0; i < j["steps"].size(); ++i) {
    const Json& s = j["steps"][i];
    const std::string field = "steps[" + std::to_string(i) + "]";
    if (!s.is_object()) fail(field, "expected an object");
    for (const auto& [key, value] : s.items()) {
      if (key != "claim" && key != "rule" && key != "premises" && key != "terms") {
        fail(field + "." + key, "unknown field in step");
      }
    }
    if (!s.contains("claim") || !s["claim"].is_string()) fail(field + ".claim", "expected a string");
    if (!s.contains("rule") || !s["rule"].is_string()) fail(field + ".rule", "expected a string");
    DerivationStep step;
    try {
      step.claim = ParseClaim(s["claim"].get<std::string>());
    } catch (const Error& e) {
      fail(field + ".claim", e.what());
    }
    step.rule = s["rule"];
    if (s.contains("premises")) {
      if (!s["premises"].is_array()) fail(field + ".premises", "expected an array");
      for (const auto& p : s["premises"]) {
        if (!p.is_number_integer()) fail(field + ".premises", "expected step indices");
        step.premises.push_back(p.get<int>());
      }
    }
    if (s.contains("terms")) step.terms = ParseInstantiation(s["terms"]);
    cert.steps.push_back(std::move(step));
  }
  return cert;
}

std::string SerializeCertificate(const DerivationCertificate& cert) {
  std::ostringstream out;
  auto list = [](const std::vector<std::string>& items) {
    std::string s = "[";
    for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + Json(items[i]).dump();
    return s + "]";
  };
  out << "{\n";
  out << "  \"name\": " << Json(cert.name).dump() << ",\n";
  out << "  \"span\": " << Json(cert.span).dump() << ",\n";
  out << "  \"flags\": " << list(cert.flags.Names()) << ",\n";
  out << "  \"goal\": " << list({cert.goal.first, cert.goal.second}) << ",\n";
  out << "  \"steps\": [\n";
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const DerivationStep& s = cert.steps[i];
    out << "    {\"claim\": " << Json(ToString(s.claim)).dump() << ", \"rule\": "
        << Json(s.rule).dump() << ", \"premises\": [";
    for (std::size_t k = 0; k < s.premises.size(); ++k) out << (k ? ", " : "") << s.premises[k];
    out << "], \"terms\": {";
    if (s.terms.source) out << "\"source\": " << Json(*s.terms.source).dump();
    if (s.terms.position) {
      out << (s.terms.source ? ", " : "") << "\"position\": [";
      for (std::size_t k = 0; k < s.terms.position->size(); ++k) {
        out << (k ? ", " : "") << (*s.terms.position)[k];
      }
      out << "]";
    }
    out << "}}" << (i + 1 < cert.steps.size() ? ",\n" : "\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

DerivationCertificate LoadCertificateFile(const std::string& path) {
  try {
    return ParseCertificate(ReadFile(path));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kParse) throw;
    throw Error(ErrorCode::kParse, path + ": " + e.what());
  }
}

CertificateResult CheckCertificate(const Span& span, const DerivationCertificate& cert) {
  return CheckCertificate(span, cert, cert.flags);
}

CertificateResult CheckCertificate(const Span& span, const DerivationCertificate& cert,
                                   const VarietyConstraints& flags) {
  const GeneratorTable table(span);
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    std::set<std::string> names;
    CollectGenerators(cert.steps[i].claim.lhs, names);
    CollectGenerators(cert.steps[i].claim.rhs, names);
    for (const auto& n : names) {
      if (!table.contains(n)) {
        throw Error(ErrorCode::kUnknownGenerator,
                    "step " + std::to_string(i) + ": unknown generator '" + n + "'");
      }
    }
  }
  for (const auto& n : {cert.goal.first, cert.goal.second}) {
    if (!table.contains(n)) {
      throw Error(ErrorCode::kUnknownGenerator, "goal: unknown generator '" + n + "'");
    }
  }

  RuleContext context;
  context.distributive = flags.distributive;
  context.ground = [&](const Claim& claim,
                       const std::optional<std::string>& source) -> std::optional<bool> {
    auto in = [&](bool left) {
      const Algebra& alg = left ? span.left : span.right;
      return Holds(claim, alg, [&](const std::string& name) {
        return left ? table.in_left(name) : table.in_right(name);
      });
    };
    if (source) return in(*source == "B");
    if (auto r = in(true)) return r;
    return in(false);
  };

  auto invalid = [](std::size_t step, std::string reason) {
    return CertificateResult{false, step, std::move(reason)};
  };
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const DerivationStep& step = cert.steps[i];
    std::vector<Claim> premises;
    for (int p : step.premises) {
      if (p < 0 || static_cast<std::size_t>(p) >= i) {
        return invalid(i, "premise " + std::to_string(p) + " does not precede the step");
      }
      premises.push_back(cert.steps[p].claim);
    }
    std::string reason = CheckRule(step.rule, step.claim, premises, step.terms, context);
    if (!reason.empty()) return invalid(i, step.rule + ": " + reason);
  }

  const auto& [s, t] = cert.goal;
  const bool distinct_left =
      table.in_left(s) && table.in_left(t) && *table.in_left(s) != *table.in_left(t);
  const bool distinct_right =
      table.in_right(s) && table.in_right(t) && *table.in_right(s) != *table.in_right(t);
  if (!distinct_left && !distinct_right) {
    return invalid(cert.steps.size(), "goal names are not distinct elements of one source algebra");
  }
  const Claim forward{Claim::Kind::kEq, NameTerm(s), NameTerm(t)};
  const Claim backward{Claim::Kind::kEq, NameTerm(t), NameTerm(s)};
  for (const auto& step : cert.steps) {
    if (step.claim == forward || step.claim == backward) return {true, 0, ""};
  }
  return invalid(cert.steps.size(), "goal not derived");
}

}  // namespace rlamalg

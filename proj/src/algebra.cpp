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

#include "rlamalg/algebra.hpp"

#include <sstream>
#include <utility>

#include "rlamalg/error.hpp"

namespace rlamalg {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kNotALattice: return "NotALattice";
    case ErrorCode::kNotAMonoid: return "NotAMonoid";
    case ErrorCode::kNotResiduated: return "NotResiduated";
    case ErrorCode::kInconsistentSpec: return "InconsistentSpec";
    case ErrorCode::kNoZeroConstant: return "NoZeroConstant";
    case ErrorCode::kSignatureMismatch: return "SignatureMismatch";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kInvalidSpan: return "InvalidSpan";
    case ErrorCode::kInconsistentConstraints: return "InconsistentConstraints";
    case ErrorCode::kUnknownGenerator: return "UnknownGenerator";
    case ErrorCode::kUnknownRule: return "UnknownRule";
    case ErrorCode::kMalformedInstantiation: return "MalformedInstantiation";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

bool InRange(Index i, int n) { return i >= 0 && i < n; }

void ValidateShape(int size, const std::vector<std::uint8_t>& leq,
                   const std::vector<Index>& prod, Index unit,
                   const std::optional<Index>& zero) {
  if (size <= 0) throw Error(ErrorCode::kInvalidArgument, "size must be positive");
  const auto cells = static_cast<std::size_t>(size) * static_cast<std::size_t>(size);
  if (leq.size() != cells) {
    throw Error(ErrorCode::kInvalidArgument, "leq must be a size x size matrix");
  }
  if (prod.size() != cells) {
    throw Error(ErrorCode::kInvalidArgument, "product must be a size x size matrix");
  }
  for (Index v : prod) {
    if (!InRange(v, size)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "product entry " + std::to_string(v) + " out of range");
    }
  }
  if (!InRange(unit, size)) throw Error(ErrorCode::kInvalidArgument, "unit out of range");
  if (zero && !InRange(*zero, size)) {
    throw Error(ErrorCode::kInvalidArgument, "zero out of range");
  }
}

std::string Witness(const std::vector<Index>& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ")";
  return os.str();
}

// Records the first witness for an axiom; later witnesses are ignored.
class ViolationLog {
 public:
  void Add(const std::string& axiom, std::vector<Index> witness) {
    for (const auto& v : report_.violations) {
      if (v.axiom == axiom) return;
    }
    report_.violations.push_back({axiom, std::move(witness)});
    report_.passed = false;
  }
  bool Has(const std::string& axiom) const {
    for (const auto& v : report_.violations) {
      if (v.axiom == axiom) return true;
    }
    return false;
  }
  AxiomReport Take() { return std::move(report_); }

 private:
  AxiomReport report_;
};

}  // namespace

std::vector<std::uint8_t> ReflexiveTransitiveClosure(
    int size, const std::vector<std::uint8_t>& relation) {
  std::vector<std::uint8_t> r = relation;
  for (int a = 0; a < size; ++a) r[a * size + a] = 1;
  for (int k = 0; k < size; ++k) {
    for (int i = 0; i < size; ++i) {
      if (!r[i * size + k]) continue;
      for (int j = 0; j < size; ++j) {
        if (r[k * size + j]) r[i * size + j] = 1;
      }
    }
  }
  return r;
}

AlgebraTables DeriveTables(int size, std::vector<std::uint8_t> leq,
                           std::vector<Index> prod, Index unit,
                           std::optional<Index> zero) {
  ValidateShape(size, leq, prod, unit, zero);
  AlgebraTables t;
  t.size = size;
  t.leq = std::move(leq);
  t.prod = std::move(prod);
  t.unit = unit;
  t.zero = zero;
  const int n = size;
  t.join.assign(n * n, kUndefined);
  t.meet.assign(n * n, kUndefined);
  t.lres.assign(n * n, kUndefined);
  t.rres.assign(n * n, kUndefined);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int u = 0; u < n && t.join[t.cell(a, b)] == kUndefined; ++u) {
        if (!t.le(a, u) || !t.le(b, u)) continue;
        bool least = true;
        for (int w = 0; w < n && least; ++w) {
          if (t.le(a, w) && t.le(b, w) && !t.le(u, w)) least = false;
        }
        if (least) t.join[t.cell(a, b)] = u;
      }
      for (int u = 0; u < n && t.meet[t.cell(a, b)] == kUndefined; ++u) {
        if (!t.le(u, a) || !t.le(u, b)) continue;
        bool greatest = true;
        for (int w = 0; w < n && greatest; ++w) {
          if (t.le(w, a) && t.le(w, b) && !t.le(w, u)) greatest = false;
        }
        if (greatest) t.meet[t.cell(a, b)] = u;
      }
    }
  }
  // x\z = max{y : xy <= z}; z/y = max{x : xy <= z}. "Max" means a member of
  // the set above every member, never an outside upper bound.
  for (int x = 0; x < n; ++x) {
    for (int z = 0; z < n; ++z) {
      for (int y = 0; y < n; ++y) {
        if (!t.le(t.prod[t.cell(x, y)], z)) continue;
        bool above_all = true;
        for (int w = 0; w < n && above_all; ++w) {
          if (t.le(t.prod[t.cell(x, w)], z) && !t.le(w, y)) above_all = false;
        }
        if (above_all) {
          t.lres[t.cell(x, z)] = y;
          break;
        }
      }
    }
  }
  for (int z = 0; z < n; ++z) {
    for (int y = 0; y < n; ++y) {
      for (int x = 0; x < n; ++x) {
        if (!t.le(t.prod[t.cell(x, y)], z)) continue;
        bool above_all = true;
        for (int w = 0; w < n && above_all; ++w) {
          if (t.le(t.prod[t.cell(w, y)], z) && !t.le(w, x)) above_all = false;
        }
        if (above_all) {
          t.rres[t.cell(z, y)] = x;
          break;
        }
      }
    }
  }
  return t;
}

AxiomReport CheckAxioms(const AlgebraTables& t) {
  ViolationLog log;
  const int n = t.size;
  const auto cells = static_cast<std::size_t>(n > 0 ? n : 0) * static_cast<std::size_t>(n > 0 ? n : 0);
  if (n <= 0 || t.leq.size() != cells || t.join.size() != cells ||
      t.meet.size() != cells || t.prod.size() != cells ||
      t.lres.size() != cells || t.rres.size() != cells) {
    log.Add("table-shape", {});
    return log.Take();
  }
  auto defined = [&](const std::vector<Index>& table, const char* name) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (!InRange(table[t.cell(a, b)], n)) {
          log.Add(std::string(name) + "-defined", {a, b});
          return false;
        }
      }
    }
    return true;
  };
  const bool join_ok = defined(t.join, "join");
  const bool meet_ok = defined(t.meet, "meet");
  const bool prod_ok = defined(t.prod, "prod");
  const bool lres_ok = defined(t.lres, "lres");
  const bool rres_ok = defined(t.rres, "rres");
  const bool unit_ok = InRange(t.unit, n);
  if (!unit_ok) log.Add("unit-defined", {t.unit});
  if (t.zero && !InRange(*t.zero, n)) log.Add("zero-defined", {*t.zero});

  for (int a = 0; a < n; ++a) {
    if (!t.le(a, a)) log.Add("leq-reflexive", {a});
    for (int b = 0; b < n; ++b) {
      if (a != b && t.le(a, b) && t.le(b, a)) log.Add("leq-antisymmetric", {a, b});
      for (int c = 0; c < n; ++c) {
        if (t.le(a, b) && t.le(b, c) && !t.le(a, c)) {
          log.Add("leq-transitive", {a, b, c});
        }
      }
    }
  }

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (join_ok) {
        const Index j = t.join[t.cell(a, b)];
        if (!t.le(a, j) || !t.le(b, j)) log.Add("join-upper-bound", {a, b});
        for (int c = 0; c < n; ++c) {
          if (t.le(a, c) && t.le(b, c) && !t.le(j, c)) log.Add("join-least", {a, b, c});
        }
      }
      if (meet_ok) {
        const Index m = t.meet[t.cell(a, b)];
        if (!t.le(m, a) || !t.le(m, b)) log.Add("meet-lower-bound", {a, b});
        for (int c = 0; c < n; ++c) {
          if (t.le(c, a) && t.le(c, b) && !t.le(c, m)) log.Add("meet-greatest", {a, b, c});
        }
      }
    }
  }

  if (prod_ok) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const Index ab = t.prod[t.cell(a, b)];
        for (int c = 0; c < n; ++c) {
          const Index bc = t.prod[t.cell(b, c)];
          if (t.prod[t.cell(ab, c)] != t.prod[t.cell(a, bc)]) {
            log.Add("prod-associative", {a, b, c});
          }
        }
      }
    }
    if (unit_ok) {
      for (int a = 0; a < n; ++a) {
        if (t.prod[t.cell(t.unit, a)] != a) log.Add("unit-left", {a});
        if (t.prod[t.cell(a, t.unit)] != a) log.Add("unit-right", {a});
      }
    }
  }

  if (prod_ok && (lres_ok || rres_ok)) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          const bool below = t.le(t.prod[t.cell(a, b)], c);
          if (lres_ok && below != t.le(b, t.lres[t.cell(a, c)])) {
            log.Add("residuation-left", {a, b, c});
          }
          if (rres_ok && below != t.le(a, t.rres[t.cell(c, b)])) {
            log.Add("residuation-right", {a, b, c});
          }
        }
      }
    }
  }
  return log.Take();
}

Algebra Algebra::FromTables(int size, std::vector<std::uint8_t> leq,
                            std::vector<Index> prod, Index unit,
                            std::optional<Index> zero,
                            std::vector<std::string> labels, std::string name) {
  if (!labels.empty() && static_cast<int>(labels.size()) != size) {
    throw Error(ErrorCode::kInvalidArgument, "labels must name every element");
  }
  AlgebraTables t = DeriveTables(size, std::move(leq), std::move(prod), unit, zero);
  const AxiomReport report = CheckAxioms(t);
  if (!report.passed) {
    static const std::pair<const char*, ErrorCode> kClasses[] = {
        {"leq-", ErrorCode::kNotALattice},   {"join-", ErrorCode::kNotALattice},
        {"meet-", ErrorCode::kNotALattice},  {"prod-", ErrorCode::kNotAMonoid},
        {"unit-", ErrorCode::kNotAMonoid},   {"lres-", ErrorCode::kNotResiduated},
        {"rres-", ErrorCode::kNotResiduated}, {"residuation-", ErrorCode::kNotResiduated},
    };
    for (const auto& [prefix, code] : kClasses) {
      for (const auto& v : report.violations) {
        if (v.axiom.rfind(prefix, 0) == 0) {
          throw Error(code, std::string(ErrorCodeName(code)) + ": " + v.axiom +
                                " fails at " + Witness(v.witness));
        }
      }
    }
    const auto& v = report.violations.front();
    throw Error(ErrorCode::kInvalidArgument, v.axiom + " fails at " + Witness(v.witness));
  }
  Algebra alg;
  alg.tables_ = std::make_shared<const AlgebraTables>(std::move(t));
  alg.labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
  alg.name_ = std::make_shared<const std::string>(std::move(name));
  const AlgebraTables& tt = *alg.tables_;
  for (int a = 0; a < size; ++a) {
    alg.bottom_ = tt.meet[tt.cell(alg.bottom_, a)];
    alg.top_ = tt.join[tt.cell(alg.top_, a)];
  }
  return alg;
}

Algebra Algebra::Trivial() { return FromTables(1, {1}, {0}, 0); }

std::string Algebra::label(Index i) const {
  if (!labels_->empty()) return (*labels_)[i];
  return std::to_string(i);
}

std::optional<Index> Algebra::find_label(const std::string& name) const {
  for (Index i = 0; i < size(); ++i) {
    if (label(i) == name) return i;
  }
  return std::nullopt;
}

Algebra Algebra::WithZero(std::optional<Index> zero) const {
  if (zero && !InRange(*zero, size())) {
    throw Error(ErrorCode::kInvalidArgument, "zero out of range");
  }
  Algebra out = *this;
  AlgebraTables t = *tables_;
  t.zero = zero;
  out.tables_ = std::make_shared<const AlgebraTables>(std::move(t));
  return out;
}

Algebra Algebra::WithLabels(std::vector<std::string> labels) const {
  if (!labels.empty() && static_cast<int>(labels.size()) != size()) {
    throw Error(ErrorCode::kInvalidArgument, "labels must name every element");
  }
  Algebra out = *this;
  out.labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
  return out;
}

Algebra Algebra::WithName(std::string name) const {
  Algebra out = *this;
  out.name_ = std::make_shared<const std::string>(std::move(name));
  return out;
}

bool IsCommutative(const Algebra& alg) {
  for (Index a = 0; a < alg.size(); ++a) {
    if (!IsCentralElement(alg, a)) return false;
  }
  return true;
}

bool IsIdempotent(const Algebra& alg) {
  for (Index a = 0; a < alg.size(); ++a) {
    if (!IsIdempotentElement(alg, a)) return false;
  }
  return true;
}

bool IsIntegral(const Algebra& alg) {
  for (Index a = 0; a < alg.size(); ++a) {
    if (!alg.leq(a, alg.unit())) return false;
  }
  return true;
}

bool IsDistributive(const Algebra& alg) {
  const int n = alg.size();
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      for (Index c = 0; c < n; ++c) {
        if (alg.meet(a, alg.join(b, c)) != alg.join(alg.meet(a, b), alg.meet(a, c))) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

Index RequireZero(const Algebra& alg) {
  if (!alg.zero()) {
    throw Error(ErrorCode::kNoZeroConstant, "algebra has no zero constant");
  }
  return *alg.zero();
}

}  // namespace

bool IsInvolutive(const Algebra& alg) {
  const Index zero = RequireZero(alg);
  for (Index x = 0; x < alg.size(); ++x) {
    // 0/(x\0) = x and (0/x)\0 = x
    if (alg.rres(zero, alg.lres(x, zero)) != x) return false;
    if (alg.lres(alg.rres(zero, x), zero) != x) return false;
  }
  return true;
}

bool IsCyclic(const Algebra& alg) {
  const Index zero = RequireZero(alg);
  for (Index x = 0; x < alg.size(); ++x) {
    if (alg.rres(zero, x) != alg.lres(x, zero)) return false;
  }
  return true;
}

bool IsOdd(const Algebra& alg) { return RequireZero(alg) == alg.unit(); }

bool IsCentralElement(const Algebra& alg, Index i) {
  for (Index y = 0; y < alg.size(); ++y) {
    if (alg.prod(i, y) != alg.prod(y, i)) return false;
  }
  return true;
}

bool IsIdempotentElement(const Algebra& alg, Index i) {
  return alg.prod(i, i) == i;
}

}  // namespace rlamalg

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

#include "product_solver.hpp"

#include <bit>

namespace rlamalg::internal {

namespace {

Mask FullMask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

bool Single(Mask m) { return m != 0 && (m & (m - 1)) == 0; }

Index Lowest(Mask m) { return std::countr_zero(m); }

}  // namespace

bool IsPartialOrder(int n, const std::vector<std::uint8_t>& leq) {
  if (static_cast<int>(leq.size()) != n * n) return false;
  for (int a = 0; a < n; ++a) {
    if (!leq[a * n + a]) return false;
    for (int b = 0; b < n; ++b) {
      if (a != b && leq[a * n + b] && leq[b * n + a]) return false;
      if (!leq[a * n + b]) continue;
      for (int c = 0; c < n; ++c) {
        if (leq[b * n + c] && !leq[a * n + c]) return false;
      }
    }
  }
  return true;
}

std::optional<LatticeData> LatticeData::FromOrder(int n,
                                                  std::vector<std::uint8_t> leq) {
  LatticeData l;
  l.n = n;
  l.leq = std::move(leq);
  l.down.assign(n, 0);
  l.up.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (l.leq[a * n + b]) {
        l.up[a] |= Bit(b);
        l.down[b] |= Bit(a);
      }
    }
  }
  l.join.assign(n * n, kUndefined);
  l.meet.assign(n * n, kUndefined);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Mask uppers = l.up[a] & l.up[b];
      Mask lowers = l.down[a] & l.down[b];
      for (Mask m = uppers; m; m &= m - 1) {
        Index u = Lowest(m);
        if ((uppers & ~l.up[u]) == 0) {
          l.join[a * n + b] = u;
          break;
        }
      }
      for (Mask m = lowers; m; m &= m - 1) {
        Index u = Lowest(m);
        if ((lowers & ~l.down[u]) == 0) {
          l.meet[a * n + b] = u;
          break;
        }
      }
      if (l.join[a * n + b] == kUndefined || l.meet[a * n + b] == kUndefined) {
        return std::nullopt;
      }
    }
  }
  l.bottom = 0;
  l.top = 0;
  for (int a = 0; a < n; ++a) {
    l.bottom = l.meet_of(l.bottom, a);
    l.top = l.join_of(l.top, a);
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y && l.le(x, y) && (l.up[x] & l.down[y]) == (Bit(x) | Bit(y))) {
        l.covers.emplace_back(x, y);
      }
    }
  }
  for (int y = 0; y < n; ++y) {
    for (int z = y + 1; z < n; ++z) {
      if (!l.le(y, z) && !l.le(z, y)) {
        l.incomparable_joins.push_back({y, z, l.join_of(y, z)});
      }
    }
  }
  return l;
}

bool IsDistributiveLattice(const LatticeData& l) {
  const int n = l.n;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (l.meet_of(a, l.join_of(b, c)) !=
            l.join_of(l.meet_of(a, b), l.meet_of(a, c))) {
          return false;
        }
      }
    }
  }
  return true;
}

ProductSolver::ProductSolver(const ProductProblem& problem)
    : lat_(*problem.lattice),
      n_(problem.lattice->n),
      equal_cells_(problem.equal_cells) {
  const Mask full = FullMask(n_);
  initial_ = problem.domains.empty()
                 ? std::vector<Mask>(static_cast<std::size_t>(n_ * n_), full)
                 : problem.domains;
  for (int x = 0; x < n_; ++x) {
    initial_[problem.unit * n_ + x] &= Bit(x);
    initial_[x * n_ + problem.unit] &= Bit(x);
    initial_[lat_.bottom * n_ + x] &= Bit(lat_.bottom);
    initial_[x * n_ + lat_.bottom] &= Bit(lat_.bottom);
  }
}

Mask ProductSolver::JoinSet(Mask a, Mask b) const {
  Mask out = 0;
  for (Mask i = a; i; i &= i - 1) {
    const Index u = Lowest(i);
    const Index* row = &lat_.join[u * n_];
    for (Mask j = b; j; j &= j - 1) out |= Bit(row[Lowest(j)]);
  }
  return out;
}

bool ProductSolver::Propagate(std::vector<Mask>& dom) const {
  const int n = n_;
  bool changed = true;
  auto restrict_to = [&](int cell, Mask allowed) {
    const Mask next = dom[cell] & allowed;
    if (next != dom[cell]) {
      dom[cell] = next;
      changed = true;
    }
    return next != 0;
  };
  auto down_of = [&](Mask m) {
    Mask out = 0;
    for (; m; m &= m - 1) out |= lat_.down[Lowest(m)];
    return out;
  };
  auto up_of = [&](Mask m) {
    Mask out = 0;
    for (; m; m &= m - 1) out |= lat_.up[Lowest(m)];
    return out;
  };
  // d[target] must be u v w for some u in d[first], w in d[second].
  auto join_rule = [&](int first, int second, int target) {
    if (!restrict_to(target, JoinSet(dom[first], dom[second]))) return false;
    if (Single(dom[first]) && Single(dom[second])) return true;
    Mask keep = 0;
    for (Mask i = dom[first]; i; i &= i - 1) {
      const Mask u = i & (~i + 1);
      if (JoinSet(u, dom[second]) & dom[target]) keep |= u;
    }
    if (!restrict_to(first, keep)) return false;
    keep = 0;
    for (Mask i = dom[second]; i; i &= i - 1) {
      const Mask w = i & (~i + 1);
      if (JoinSet(dom[first], w) & dom[target]) keep |= w;
    }
    return restrict_to(second, keep);
  };

  while (changed) {
    changed = false;
    for (const auto& [a, b] : equal_cells_) {
      const Mask both = dom[a] & dom[b];
      if (!restrict_to(a, both) || !restrict_to(b, both)) return false;
    }
    for (const auto& [lo, hi] : lat_.covers) {
      for (int y = 0; y < n; ++y) {
        const int l1 = lo * n + y, h1 = hi * n + y;
        if (!restrict_to(l1, down_of(dom[h1])) || !restrict_to(h1, up_of(dom[l1])))
          return false;
        const int l2 = y * n + lo, h2 = y * n + hi;
        if (!restrict_to(l2, down_of(dom[h2])) || !restrict_to(h2, up_of(dom[l2])))
          return false;
      }
    }
    for (const auto& [y, z, j] : lat_.incomparable_joins) {
      for (int x = 0; x < n; ++x) {
        if (!join_rule(x * n + y, x * n + z, x * n + j)) return false;
        if (!join_rule(y * n + x, z * n + x, j * n + x)) return false;
      }
    }
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const Mask ab = dom[a * n + b];
        if (!Single(ab)) continue;
        const Index u = Lowest(ab);
        for (int c = 0; c < n; ++c) {
          const Mask bc = dom[b * n + c];
          if (!Single(bc)) continue;
          const Index v = Lowest(bc);
          // (ab)c = a(bc)
          const int left = u * n + c, right = a * n + v;
          const Mask both = dom[left] & dom[right];
          if (!restrict_to(left, both) || !restrict_to(right, both)) return false;
        }
      }
    }
  }
  return true;
}

std::optional<std::vector<Mask>> ProductSolver::RootDomains() const {
  std::vector<Mask> dom = initial_;
  for (Mask m : dom) {
    if (m == 0) return std::nullopt;
  }
  if (!Propagate(dom)) return std::nullopt;
  return dom;
}

SolveStatus ProductSolver::Solve(std::uint64_t budget, SolverStats& stats,
                                 const SolutionCallback& on_solution) const {
  std::vector<Mask> dom = initial_;
  for (Mask m : dom) {
    if (m == 0) {
      ++stats.failures;
      return SolveStatus::kExhausted;
    }
  }
  return Search(dom, budget, stats, on_solution);
}

SolveStatus ProductSolver::Search(std::vector<Mask>& dom, std::uint64_t budget,
                                  SolverStats& stats,
                                  const SolutionCallback& on_solution) const {
  if (!Propagate(dom)) {
    ++stats.failures;
    return SolveStatus::kExhausted;
  }
  int branch = -1;
  for (int c = 0; c < n_ * n_; ++c) {
    if (!Single(dom[c])) {
      branch = c;
      break;
    }
  }
  if (branch < 0) {
    std::vector<Index> prod(dom.size());
    for (std::size_t c = 0; c < dom.size(); ++c) prod[c] = Lowest(dom[c]);
    return on_solution(prod) ? SolveStatus::kExhausted : SolveStatus::kStopped;
  }
  for (Mask values = dom[branch]; values; values &= values - 1) {
    if (++stats.nodes > budget) return SolveStatus::kBudget;
    std::vector<Mask> child = dom;
    child[branch] = values & (~values + 1);
    const SolveStatus status = Search(child, budget, stats, on_solution);
    if (status != SolveStatus::kExhausted) return status;
  }
  return SolveStatus::kExhausted;
}

}  // namespace rlamalg::internal

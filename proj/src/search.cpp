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

#include "rlamalg/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <functional>
#include <limits>
#include <set>
#include <thread>
#include <utility>

#include "product_solver.hpp"
#include "rlamalg/error.hpp"

namespace rlamalg {

const char* OutcomeName(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::kFound: return "Found";
    case OutcomeKind::kNoneUpToBound: return "NoneUpToBound";
    case OutcomeKind::kBudgetExhausted: return "BudgetExhausted";
  }
  return "Unknown";
}

const char* SearchModeName(SearchMode mode) {
  return mode == SearchMode::kSeeded ? "seeded" : "square";
}

namespace {

using internal::Bit;
using internal::LatticeData;
using internal::Mask;
using Row = std::uint32_t;

// Everything the legs force on D once the images of B and C are placed.
struct Placement {
  int n = 0;
  int used = 0;  // image indices are 0..used-1, extras used..n-1
  std::vector<Index> psi_left;
  std::vector<Index> psi_right;
  std::vector<std::int8_t> order;  // -1 unknown, 0 not below, 1 below
  std::vector<Index> join;
  std::vector<Index> meet;
  std::vector<Index> prod;
  Index unit = 0;
  std::optional<Index> zero;
  // x\z = r (left) or z/x = r (right), all in D's indices.
  struct Residual {
    Index x, z, r;
    bool left;
  };
  std::vector<Residual> residuals;
};

template <typename T>
bool Fix(std::vector<T>& table, std::size_t cell, T value, T unknown) {
  if (table[cell] == unknown) {
    table[cell] = value;
    return true;
  }
  return table[cell] == value;
}

std::optional<Placement> BuildPlacement(const Span& span, int n,
                                        std::vector<Index> psi_left,
                                        std::vector<Index> psi_right, int used) {
  Placement p;
  p.n = n;
  p.used = used;
  p.order.assign(n * n, -1);
  p.join.assign(n * n, kUndefined);
  p.meet.assign(n * n, kUndefined);
  p.prod.assign(n * n, kUndefined);
  for (int leg = 0; leg < 2; ++leg) {
    const Algebra& s = leg == 0 ? span.left : span.right;
    const std::vector<Index>& psi = leg == 0 ? psi_left : psi_right;
    for (Index x = 0; x < s.size(); ++x) {
      for (Index y = 0; y < s.size(); ++y) {
        const std::size_t c = psi[x] * n + psi[y];
        if (!Fix<std::int8_t>(p.order, c, s.leq(x, y) ? 1 : 0, -1) ||
            !Fix(p.join, c, psi[s.join(x, y)], kUndefined) ||
            !Fix(p.meet, c, psi[s.meet(x, y)], kUndefined) ||
            !Fix(p.prod, c, psi[s.prod(x, y)], kUndefined)) {
          return std::nullopt;
        }
        p.residuals.push_back({psi[x], psi[y], psi[s.lres(x, y)], true});
        p.residuals.push_back({psi[x], psi[y], psi[s.rres(y, x)], false});
      }
    }
  }
  p.unit = psi_left[span.left.unit()];
  if (p.unit != psi_right[span.right.unit()]) return std::nullopt;
  if (span.left.pointed()) {
    p.zero = psi_left[*span.left.zero()];
    if (*p.zero != psi_right[*span.right.zero()]) return std::nullopt;
  }
  p.psi_left = std::move(psi_left);
  p.psi_right = std::move(psi_right);
  return p;
}

struct Counters {
  std::uint64_t nodes = 0;
  std::uint64_t failures = 0;
};

// A candidate lattice for D, with the counters of the order stage at the
// moment it was emitted.
struct Task {
  std::size_t placement = 0;
  LatticeData lattice;
  Counters prefix;
};

// Enumerates lattice orders on {0..n-1} extending the placement's fixed
// order, joins and meets.
class OrderStage {
 public:
  OrderStage(const Placement& p, const VarietyConstraints& constraints,
             std::uint64_t cap, Counters& counters,
             std::function<void(LatticeData)> emit)
      : p_(p), n_(p.n), constraints_(constraints), cap_(cap),
        counters_(counters), emit_(std::move(emit)) {
    for (Index a = 0; a < n_; ++a) {
      for (Index b = 0; b < n_; ++b) {
        const std::size_t c = a * n_ + b;
        if (a != b && p.join[c] != kUndefined) joins_.push_back({a, b, p.join[c]});
        if (a != b && p.meet[c] != kUndefined) meets_.push_back({a, b, p.meet[c]});
      }
    }
  }

  // False when the cap was hit.
  bool Run() {
    State s{};
    for (Index a = 0; a < n_; ++a) {
      s.le[a] |= Row{1} << a;
      for (Index b = 0; b < n_; ++b) {
        const std::int8_t known = p_.order[a * n_ + b];
        if (known == 1) s.le[a] |= Row{1} << b;
        if (known == 0) s.nle[a] |= Row{1} << b;
      }
      if (constraints_.integral) s.le[a] |= Row{1} << p_.unit;
    }
    return Recurse(s);
  }

 private:
  struct State {
    std::array<Row, kMaxSearchSize> le;
    std::array<Row, kMaxSearchSize> nle;
  };
  struct Triple {
    Index x, y, r;
  };

  static bool Has(Row row, Index i) { return (row >> i) & 1u; }

  bool Propagate(State& s) const {
    bool changed = true;
    auto add = [&changed](Row& row, Row bits) {
      if ((row | bits) != row) {
        row |= bits;
        changed = true;
      }
    };
    while (changed) {
      changed = false;
      for (Index a = 0; a < n_; ++a) {
        for (Row m = s.le[a]; m; m &= m - 1) {
          const Index b = std::countr_zero(m);
          add(s.le[a], s.le[b]);   // a<=b<=c
          add(s.nle[b], s.nle[a]);  // a<=b, a!<=c => b!<=c
        }
        Row extra = 0;
        for (Index b = 0; b < n_; ++b) {
          if (s.le[b] & s.nle[a]) extra |= Row{1} << b;  // b<=c, a!<=c => a!<=b
        }
        add(s.nle[a], extra);
      }
      for (const auto& [x, y, j] : joins_) {
        add(s.le[j], s.le[x] & s.le[y]);
        for (Row m = s.nle[j]; m; m &= m - 1) {
          const Index z = std::countr_zero(m);
          if (Has(s.le[x], z)) add(s.nle[y], Row{1} << z);
          if (Has(s.le[y], z)) add(s.nle[x], Row{1} << z);
        }
      }
      for (const auto& [x, y, mt] : meets_) {
        for (Index z = 0; z < n_; ++z) {
          if (Has(s.le[z], x) && Has(s.le[z], y)) add(s.le[z], Row{1} << mt);
          if (Has(s.nle[z], mt)) {
            if (Has(s.le[z], x)) add(s.nle[z], Row{1} << y);
            if (Has(s.le[z], y)) add(s.nle[z], Row{1} << x);
          }
        }
      }
      for (Index a = 0; a < n_; ++a) {
        if (s.le[a] & s.nle[a]) return false;
        for (Row m = s.le[a] & ~(Row{1} << a); m; m &= m - 1) {
          const Index b = std::countr_zero(m);
          if (Has(s.le[b], a)) return false;
          add(s.nle[b], Row{1} << a);
        }
      }
    }
    return true;
  }

  bool Recurse(State& s) {
    if (!Propagate(s)) {
      ++counters_.failures;
      return true;
    }
    for (Index i = 0; i < n_; ++i) {
      for (Index j = i + 1; j < n_; ++j) {
        const bool ij = Has(s.le[i], j) || Has(s.nle[i], j);
        const bool ji = Has(s.le[j], i) || Has(s.nle[j], i);
        if (ij && ji) continue;
        // i<j, j<i, incomparable
        for (int option = 0; option < 3; ++option) {
          State child = s;
          if (option == 0) {
            if (Has(s.nle[i], j)) continue;
            child.le[i] |= Row{1} << j;
          } else if (option == 1) {
            if (Has(s.nle[j], i)) continue;
            child.le[j] |= Row{1} << i;
          } else {
            if (Has(s.le[i], j) || Has(s.le[j], i)) continue;
            child.nle[i] |= Row{1} << j;
            child.nle[j] |= Row{1} << i;
          }
          if (++counters_.nodes > cap_) return false;
          if (!Recurse(child)) return false;
        }
        return true;
      }
    }
    Leaf(s);
    return true;
  }

  void Leaf(const State& s) {
    std::vector<std::uint8_t> leq(n_ * n_, 0);
    for (Index a = 0; a < n_; ++a) {
      for (Index b = 0; b < n_; ++b) leq[a * n_ + b] = Has(s.le[a], b);
    }
    auto lattice = LatticeData::FromOrder(n_, std::move(leq));
    if (!lattice) return;
    for (const auto& [x, y, j] : joins_) {
      if (lattice->join_of(x, y) != j) return;
    }
    for (const auto& [x, y, m] : meets_) {
      if (lattice->meet_of(x, y) != m) return;
    }
    if (constraints_.distributive && !internal::IsDistributiveLattice(*lattice)) return;
    // Extras are interchangeable: keep only orders whose extras appear with
    // non-decreasing signatures against the placed elements.
    std::uint64_t previous = 0;
    for (Index e = p_.used; e < n_; ++e) {
      std::uint64_t sig = 0;
      for (Index k = 0; k < p_.used; ++k) {
        sig = sig << 2 | (Has(s.le[e], k) ? 2u : 0u) | (Has(s.le[k], e) ? 1u : 0u);
      }
      if (e > p_.used && sig < previous) return;
      previous = sig;
    }
    emit_(std::move(*lattice));
  }

  const Placement& p_;
  int n_;
  const VarietyConstraints& constraints_;
  std::uint64_t cap_;
  Counters& counters_;
  std::function<void(LatticeData)> emit_;
  std::vector<Triple> joins_;
  std::vector<Triple> meets_;
};

struct TaskResult {
  internal::SolveStatus status = internal::SolveStatus::kExhausted;
  Counters counters;
  std::optional<Amalgam> amalgam;
};

std::vector<std::string> TargetLabels(const Span& span, const Placement& p) {
  std::vector<std::string> labels(p.n);
  std::set<std::string> taken;
  for (Index b = 0; b < span.left.size(); ++b) {
    labels[p.psi_left[b]] = span.left.label(b);
  }
  for (Index i = 0; i < p.n; ++i) {
    if (!labels[i].empty()) taken.insert(labels[i]);
  }
  for (Index c = 0; c < span.right.size(); ++c) {
    std::string& slot = labels[p.psi_right[c]];
    if (!slot.empty()) continue;
    std::string name = span.right.label(c);
    while (taken.count(name)) name += "'";
    taken.insert(name);
    slot = name;
  }
  int extra = 0;
  for (Index i = 0; i < p.n; ++i) {
    if (!labels[i].empty()) continue;
    std::string name;
    do {
      name = "x" + std::to_string(extra++);
    } while (taken.count(name));
    taken.insert(name);
    labels[i] = name;
  }
  return labels;
}

TaskResult RunProductStage(const Span& span, const VarietyConstraints& constraints,
                           SearchMode mode, const Placement& p,
                           const LatticeData& lattice, std::uint64_t cap) {
  const int n = p.n;
  internal::ProductProblem problem;
  problem.lattice = &lattice;
  problem.unit = p.unit;
  const Mask full = (Mask{1} << n) - 1;
  problem.domains.assign(n * n, full);
  for (int c = 0; c < n * n; ++c) {
    if (p.prod[c] != kUndefined) problem.domains[c] = Bit(p.prod[c]);
  }
  for (const auto& r : p.residuals) {
    for (Index y = 0; y < n; ++y) {
      if (lattice.le(y, r.r)) continue;
      const int cell = r.left ? r.x * n + y : y * n + r.x;
      problem.domains[cell] &= ~lattice.down[r.z];
    }
  }
  if (constraints.idempotent) {
    for (Index x = 0; x < n; ++x) problem.domains[x * n + x] &= Bit(x);
  }
  if (constraints.commutative) {
    for (Index x = 0; x < n; ++x) {
      for (Index y = x + 1; y < n; ++y) problem.equal_cells.emplace_back(x * n + y, y * n + x);
    }
  }
  TaskResult result;
  internal::SolverStats stats;
  internal::ProductSolver solver(problem);
  result.status = solver.Solve(cap, stats, [&](const std::vector<Index>& prod) {
    Algebra target = [&] {
      try {
        return std::optional<Algebra>(Algebra::FromTables(n, lattice.leq, prod, p.unit, p.zero));
      } catch (const Error&) {
        return std::optional<Algebra>();
      }
    }().value_or(Algebra::Trivial());
    if (target.size() != n || !constraints.Admits(target)) return true;
    Amalgam amalgam{target.WithLabels(TargetLabels(span, p)), p.psi_left, p.psi_right};
    if (!CheckAmalgam(span, amalgam, mode == SearchMode::kSeeded).valid) return true;
    result.amalgam = std::move(amalgam);
    return false;
  });
  result.counters = {stats.nodes, stats.failures};
  return result;
}

// Placements of the legs for carrier size n, with the least-number
// heuristic on fresh indices.
void EnumeratePlacements(const Span& span, int n, SearchMode mode, std::uint64_t cap,
                         Counters& counters,
                         const std::function<bool(Placement)>& emit, bool& capped) {
  const int nb = span.left.size();
  const int nc = span.right.size();
  const int na = span.apex.size();
  std::vector<Index> apex_of_right(nc, kUndefined);
  for (Index a = 0; a < na; ++a) apex_of_right[span.phi_right[a]] = a;

  if (mode == SearchMode::kSeeded) {
    if (nb + nc - na > n) return;
    std::vector<Index> psi_left(nb), psi_right(nc);
    for (Index b = 0; b < nb; ++b) psi_left[b] = b;
    Index next = nb;
    for (Index c = 0; c < nc; ++c) {
      psi_right[c] = apex_of_right[c] != kUndefined ? span.phi_left[apex_of_right[c]] : next++;
    }
    if (auto p = BuildPlacement(span, n, psi_left, psi_right, next)) emit(std::move(*p));
    return;
  }

  // Items: B elements in order, then C elements outside the apex image.
  std::vector<Index> psi_left(nb, kUndefined), psi_right(nc, kUndefined);
  std::vector<Index> free_right;
  for (Index c = 0; c < nc; ++c) {
    if (apex_of_right[c] == kUndefined) free_right.push_back(c);
  }
  bool stop = false;
  std::function<void(std::size_t, int)> recurse = [&](std::size_t item, int fresh) {
    if (stop) return;
    if (item < static_cast<std::size_t>(nb)) {
      for (Index v = 0; v <= std::min(fresh, n - 1); ++v) {
        if (std::find(psi_left.begin(), psi_left.begin() + item, v) != psi_left.begin() + item) continue;
        if (++counters.nodes > cap) {
          capped = stop = true;
          return;
        }
        psi_left[item] = v;
        recurse(item + 1, v == fresh ? fresh + 1 : fresh);
        if (stop) return;
      }
      psi_left[item] = kUndefined;
      return;
    }
    if (item == static_cast<std::size_t>(nb)) {
      for (Index c = 0; c < nc; ++c) {
        if (apex_of_right[c] != kUndefined) psi_right[c] = psi_left[span.phi_left[apex_of_right[c]]];
      }
    }
    const std::size_t k = item - nb;
    if (k == free_right.size()) {
      if (auto p = BuildPlacement(span, n, psi_left, psi_right, fresh)) {
        if (!emit(std::move(*p))) stop = true;
      }
      return;
    }
    const Index c = free_right[k];
    for (Index v = 0; v <= std::min(fresh, n - 1); ++v) {
      if (std::find(psi_right.begin(), psi_right.end(), v) != psi_right.end()) continue;
      if (++counters.nodes > cap) {
        capped = stop = true;
        return;
      }
      psi_right[c] = v;
      recurse(item + 1, v == fresh ? fresh + 1 : fresh);
      psi_right[c] = kUndefined;
      if (stop) return;
    }
  };
  recurse(0, 0);
}

void Validate(const Span& span, const VarietyConstraints& constraints,
              const SearchOptions& options) {
  try {
    if (!IsEmbedding(span.LeftLeg()) || !IsEmbedding(span.RightLeg())) {
      throw Error(ErrorCode::kInvalidSpan, "span legs must be embeddings");
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInvalidSpan) throw;
    throw Error(ErrorCode::kInvalidSpan, e.what());
  }
  if (constraints.pointed() && !span.apex.pointed()) {
    throw Error(ErrorCode::kInconsistentConstraints,
                "pointed variety flags require pointed span algebras");
  }
  for (const Algebra* alg : {&span.apex, &span.left, &span.right}) {
    if (!constraints.Admits(*alg)) {
      throw Error(ErrorCode::kInconsistentConstraints,
                  "span algebra '" + alg->name() + "' is outside the variety " +
                      constraints.ToString());
    }
  }
  if (options.max_size < std::max(span.left.size(), span.right.size())) {
    throw Error(ErrorCode::kInvalidArgument, "max size is smaller than a leg");
  }
  if (options.max_size > kMaxSearchSize) {
    throw Error(ErrorCode::kTooLarge,
                "max size exceeds " + std::to_string(kMaxSearchSize));
  }
  if (options.budget == 0) throw Error(ErrorCode::kInvalidArgument, "budget must be positive");
}

}  // namespace

SearchOutcome SearchAmalgam(const Span& span, const VarietyConstraints& constraints,
                            const SearchOptions& options) {
  Validate(span, constraints, options);
  const auto started = std::chrono::steady_clock::now();
  const std::uint64_t budget = options.budget;
  const int threads = std::max(1, options.threads);

  SearchOutcome out;
  out.bound = options.max_size;
  const int first = options.mode == SearchMode::kSeeded
                        ? span.left.size() + span.right.size() - span.apex.size()
                        : std::max(span.left.size(), span.right.size());
  out.stats.first_size = first;
  out.stats.last_size = first - 1;
  Counters total;

  auto finish = [&](OutcomeKind kind) {
    out.kind = kind;
    out.stats.wall_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - started)
                            .count();
    return out;
  };
  auto exhausted = [&](int n) {
    out.size = n;
    out.stats.nodes = budget;
    out.stats.propagation_failures = total.failures;
    return finish(OutcomeKind::kBudgetExhausted);
  };

  for (int n = first; n <= options.max_size; ++n) {
    out.stats.last_size = n;
    // Order stage: collect every candidate lattice for this size.
    std::vector<Placement> placements;
    std::vector<Task> tasks;
    Counters stage;
    bool capped = false;
    const std::uint64_t stage_cap = budget - std::min(budget, total.nodes);
    EnumeratePlacements(
        span, n, options.mode, stage_cap, stage,
        [&](Placement p) {
          placements.push_back(std::move(p));
          OrderStage order(placements.back(), constraints, stage_cap, stage,
                           [&](LatticeData lattice) {
                             tasks.push_back({placements.size() - 1, std::move(lattice), stage});
                           });
          if (!order.Run()) {
            capped = true;
            return false;
          }
          return true;
        },
        capped);

    // Product stage, possibly in parallel; merged in task order.
    std::vector<TaskResult> results(tasks.size());
    std::vector<bool> done(tasks.size(), false);
    if (threads > 1 && tasks.size() > 1) {
      std::atomic<std::size_t> next{0};
      std::atomic<std::size_t> winner{std::numeric_limits<std::size_t>::max()};
      auto worker = [&] {
        for (std::size_t k = next++; k < tasks.size(); k = next++) {
          if (k > winner.load()) continue;
          const Task& t = tasks[k];
          results[k] = RunProductStage(span, constraints, options.mode,
                                       placements[t.placement], t.lattice, budget);
          done[k] = true;
          if (results[k].amalgam) {
            std::size_t current = winner.load();
            while (k < current && !winner.compare_exchange_weak(current, k)) {
            }
          }
        }
      };
      std::vector<std::thread> pool;
      for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }

    Counters product;
    for (std::size_t k = 0; k < tasks.size(); ++k) {
      const Task& t = tasks[k];
      const std::uint64_t before = total.nodes + t.prefix.nodes + product.nodes;
      if (before > budget) return exhausted(n);
      if (!done[k]) {
        results[k] = RunProductStage(span, constraints, options.mode,
                                     placements[t.placement], t.lattice, budget - before);
      }
      const TaskResult& r = results[k];
      if (r.status == internal::SolveStatus::kBudget || before + r.counters.nodes > budget) {
        total.failures += t.prefix.failures + product.failures + r.counters.failures;
        return exhausted(n);
      }
      product.nodes += r.counters.nodes;
      product.failures += r.counters.failures;
      ++out.stats.lattices;
      if (r.amalgam) {
        out.amalgam = r.amalgam;
        out.size = n;
        out.stats.nodes = before + r.counters.nodes;
        out.stats.propagation_failures =
            total.failures + t.prefix.failures + product.failures;
        return finish(OutcomeKind::kFound);
      }
    }
    total.nodes += stage.nodes + product.nodes;
    total.failures += stage.failures + product.failures;
    if (capped || total.nodes > budget) return exhausted(n);
  }
  out.stats.nodes = total.nodes;
  out.stats.propagation_failures = total.failures;
  out.size = 0;
  return finish(OutcomeKind::kNoneUpToBound);
}

SearchOutcome SearchAmalgamUnrestrictedSquare(const Span& span, int max_size,
                                              std::uint64_t budget,
                                              const VarietyConstraints& constraints,
                                              int threads) {
  SearchOptions options;
  options.max_size = max_size;
  options.budget = budget;
  options.threads = threads;
  options.mode = SearchMode::kSquare;
  return SearchAmalgam(span, constraints, options);
}

}  // namespace rlamalg

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

#include "rlamalg/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "product_solver.hpp"
#include "rlamalg/error.hpp"

namespace rlamalg {

using internal::Bit;
using internal::LatticeData;
using internal::Mask;

namespace {

using Order = std::vector<std::uint8_t>;
using Perm = std::vector<Index>;

// leq'[p[a]][p[b]] = leq[a][b]
Order Relabel(int n, const Order& leq, const Perm& p) {
  Order out(n * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) out[p[a] * n + p[b]] = leq[a * n + b];
  }
  return out;
}

// Lexicographically least relabelling over all linear extensions.
Order Canonical(int n, const Order& leq) {
  Order best;
  Perm p(n, kUndefined);
  std::vector<bool> placed(n, false);
  auto recurse = [&](auto&& self, int position) -> void {
    if (position == n) {
      Order candidate = Relabel(n, leq, p);
      if (best.empty() || candidate < best) best = std::move(candidate);
      return;
    }
    for (int e = 0; e < n; ++e) {
      if (placed[e]) continue;
      bool minimal = true;
      for (int d = 0; d < n && minimal; ++d) {
        if (d != e && !placed[d] && leq[d * n + e]) minimal = false;
      }
      if (!minimal) continue;
      placed[e] = true;
      p[e] = position;
      self(self, position + 1);
      placed[e] = false;
    }
  };
  recurse(recurse, 0);
  return best;
}

// Automorphisms of a finite order, identity first.
std::vector<Perm> OrderAutomorphisms(int n, const Order& leq) {
  std::vector<Perm> out;
  Perm p(n, kUndefined);
  std::vector<bool> used(n, false);
  auto recurse = [&](auto&& self, int a) -> void {
    if (a == n) {
      out.push_back(p);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int b = 0; b < a && ok; ++b) {
        ok = leq[a * n + b] == leq[v * n + p[b]] && leq[b * n + a] == leq[p[b] * n + v];
      }
      if (!ok) continue;
      used[v] = true;
      p[a] = v;
      self(self, a + 1);
      used[v] = false;
    }
  };
  recurse(recurse, 0);
  return out;
}

// True when table is not lexicographically larger than its image under any
// of the given permutations.
bool LexLeast(int n, const std::vector<Index>& table, const std::vector<Perm>& perms) {
  std::vector<Index> image(n * n);
  for (const Perm& p : perms) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) image[p[a] * n + p[b]] = p[table[a * n + b]];
    }
    if (image < table) return false;
  }
  return true;
}

bool FixesAll(const Perm& p, std::initializer_list<Index> points) {
  for (Index x : points) {
    if (p[x] != x) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<std::uint8_t>> EnumerateLatticeOrders(int n) {
  if (n <= 0) throw Error(ErrorCode::kInvalidArgument, "size must be positive");
  if (n > kMaxEnumerateSize) {
    throw Error(ErrorCode::kTooLarge, "enumeration is limited to size " +
                                          std::to_string(kMaxEnumerateSize));
  }
  if (n == 1) return {Order{1}};
  // Naturally labelled posets: element k gets a down-closed set of 0..k-1
  // below it; 0 is the bottom and n-1 the top.
  std::set<Order> canonical;
  Order leq(n * n, 0);
  for (int a = 0; a < n; ++a) {
    leq[a * n + a] = 1;
    leq[0 * n + a] = 1;
    leq[a * n + (n - 1)] = 1;
  }
  auto recurse = [&](auto&& self, int k) -> void {
    if (k == n - 1) {
      if (LatticeData::FromOrder(n, leq)) canonical.insert(Canonical(n, leq));
      return;
    }
    // Choose the strict down-set of k among inner elements 1..k-1.
    const int inner = k - 1;
    for (std::uint32_t mask = 0; mask < (1u << inner); ++mask) {
      bool closed = true;
      for (int i = 0; i < inner && closed; ++i) {
        if (!(mask >> i & 1u)) continue;
        for (int j = 0; j < inner && closed; ++j) {
          if (leq[(j + 1) * n + (i + 1)] && !(mask >> j & 1u)) closed = false;
        }
      }
      if (!closed) continue;
      for (int i = 0; i < inner; ++i) leq[(i + 1) * n + k] = mask >> i & 1u;
      self(self, k + 1);
    }
    for (int i = 0; i < inner; ++i) leq[(i + 1) * n + k] = 0;
  };
  recurse(recurse, 1);
  return {canonical.begin(), canonical.end()};
}

void EnumerateAlgebras(int size, const VarietyConstraints& constraints,
                       const AlgebraSink& sink, std::uint64_t budget) {
  const int n = size;
  std::uint64_t used = 0;
  for (const Order& leq : EnumerateLatticeOrders(n)) {
    const auto lattice = LatticeData::FromOrder(n, leq);
    if (constraints.distributive && !internal::IsDistributiveLattice(*lattice)) continue;
    const std::vector<Perm> lattice_auts = OrderAutomorphisms(n, leq);
    for (Index unit = 0; unit < n; ++unit) {
      if (constraints.integral && unit != lattice->top) continue;
      bool least_in_orbit = true;
      for (const Perm& p : lattice_auts) least_in_orbit = least_in_orbit && p[unit] >= unit;
      if (!least_in_orbit) continue;
      std::vector<Perm> stabilizer;
      for (const Perm& p : lattice_auts) {
        if (FixesAll(p, {unit})) stabilizer.push_back(p);
      }

      internal::ProductProblem problem;
      problem.lattice = &*lattice;
      problem.unit = unit;
      if (constraints.idempotent) {
        problem.domains.assign(n * n, (n == 64 ? ~Mask{0} : (Mask{1} << n) - 1));
        for (Index x = 0; x < n; ++x) problem.domains[x * n + x] = Bit(x);
      }
      if (constraints.commutative) {
        for (Index x = 0; x < n; ++x) {
          for (Index y = x + 1; y < n; ++y) problem.equal_cells.emplace_back(x * n + y, y * n + x);
        }
      }
      internal::ProductSolver solver(problem);
      internal::SolverStats stats;
      bool stopped = false;
      const auto status = solver.Solve(budget - used, stats, [&](const std::vector<Index>& prod) {
        if (!LexLeast(n, prod, stabilizer)) return true;
        Algebra alg = Algebra::FromTables(n, leq, prod, unit);
        if (!constraints.pointed()) {
          if (!constraints.Admits(alg)) return true;
          if (!sink(alg)) stopped = true;
          return !stopped;
        }
        // Automorphisms of the algebra: lattice automorphisms fixing the
        // unit that preserve the product.
        std::vector<Perm> algebra_auts;
        for (const Perm& p : stabilizer) {
          bool preserves = true;
          for (int a = 0; a < n && preserves; ++a) {
            for (int b = 0; b < n && preserves; ++b) {
              preserves = p[prod[a * n + b]] == prod[p[a] * n + p[b]];
            }
          }
          if (preserves) algebra_auts.push_back(p);
        }
        for (Index zero = 0; zero < n; ++zero) {
          if (constraints.odd && zero != unit) continue;
          bool least = true;
          for (const Perm& p : algebra_auts) least = least && p[zero] >= zero;
          if (!least) continue;
          Algebra pointed = alg.WithZero(zero);
          if (!constraints.Admits(pointed)) continue;
          if (!sink(pointed)) {
            stopped = true;
            return false;
          }
        }
        return true;
      });
      used += std::min(stats.nodes, budget - used);
      if (status == internal::SolveStatus::kBudget) {
        throw Error(ErrorCode::kBudgetExceeded, "algebra enumeration budget exceeded");
      }
      if (stopped) return;
    }
  }
}

std::vector<Algebra> EnumerateAlgebras(int size, const VarietyConstraints& constraints,
                                       std::uint64_t budget) {
  std::vector<Algebra> out;
  EnumerateAlgebras(
      size, constraints,
      [&out](const Algebra& alg) {
        out.push_back(alg);
        return true;
      },
      budget);
  return out;
}

namespace {

struct Extension {
  int size = 0;
  int id = 0;
  Algebra algebra;
  std::vector<Index> phi;
};

// One embedding per orbit under automorphisms of the target.
std::vector<std::vector<Index>> EmbeddingsUpToTarget(const Algebra& source,
                                                     const Algebra& target) {
  std::vector<std::vector<Index>> out;
  const auto auts = EnumerateEmbeddings(target, target);
  for (const Morphism& e : EnumerateEmbeddings(source, target)) {
    bool least = true;
    for (const Morphism& a : auts) {
      std::vector<Index> image(e.map.size());
      for (std::size_t i = 0; i < e.map.size(); ++i) image[i] = a.map[e.map[i]];
      if (image < e.map) {
        least = false;
        break;
      }
    }
    if (least) out.push_back(e.map);
  }
  return out;
}

}  // namespace

void GenerateCandidateSpans(const HuntOptions& options, const HuntSink& sink) {
  if (options.apex_max < 1 || options.leg_max < options.apex_max) {
    throw Error(ErrorCode::kInvalidArgument, "need 1 <= apex_max <= leg_max");
  }
  if (options.leg_max > kMaxEnumerateSize) {
    throw Error(ErrorCode::kTooLarge, "leg size exceeds " + std::to_string(kMaxEnumerateSize));
  }
  if (options.search_bound < options.leg_max) {
    throw Error(ErrorCode::kInvalidArgument, "search bound must be at least leg_max");
  }
  std::map<int, std::vector<Algebra>> by_size;
  for (int s = 1; s <= options.leg_max; ++s) {
    by_size[s] = EnumerateAlgebras(s, options.constraints);
  }
  std::int64_t cursor = 0;
  for (int a = 1; a <= options.apex_max; ++a) {
    for (std::size_t ai = 0; ai < by_size[a].size(); ++ai) {
      const Algebra& apex = by_size[a][ai];
      std::vector<Extension> extensions;
      for (int b = a; b <= options.leg_max; ++b) {
        for (std::size_t bi = 0; bi < by_size[b].size(); ++bi) {
          for (auto& phi : EmbeddingsUpToTarget(apex, by_size[b][bi])) {
            extensions.push_back({b, static_cast<int>(bi), by_size[b][bi], std::move(phi)});
          }
        }
      }
      std::vector<HuntRecord> batch;
      for (std::size_t i = 0; i < extensions.size(); ++i) {
        for (std::size_t j = i; j < extensions.size(); ++j) {
          const std::int64_t current = cursor++;
          if (current <= options.resume_after) continue;
          HuntRecord r;
          r.cursor = current;
          r.apex_size = a;
          r.apex_id = static_cast<int>(ai);
          r.left_size = extensions[i].size;
          r.left_id = extensions[i].id;
          r.right_size = extensions[j].size;
          r.right_id = extensions[j].id;
          r.phi_left = extensions[i].phi;
          r.phi_right = extensions[j].phi;
          r.span = Span{"", apex, extensions[i].algebra, extensions[j].algebra,
                        r.phi_left, r.phi_right};
          batch.push_back(std::move(r));
        }
      }
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        for (std::size_t k = next++; k < batch.size(); k = next++) {
          HuntRecord& r = batch[k];
          SearchOptions so;
          so.max_size = options.search_bound;
          so.budget = options.budget;
          so.mode = SearchMode::kSquare;
          const SearchOutcome out = SearchAmalgam(*r.span, options.constraints, so);
          r.outcome = out.kind;
          r.found_size = out.kind == OutcomeKind::kFound ? out.size : 0;
          r.nodes = out.stats.nodes;
        }
      };
      const int threads = std::max(1, options.threads);
      if (threads == 1) {
        worker();
      } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
      }
      for (const HuntRecord& r : batch) {
        if (!sink(r)) return;
      }
    }
  }
}

}  // namespace rlamalg

// Copyright 2026 The ucqaoa Authors
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

#include "ucqaoa/baseline.hpp"

#include <algorithm>
#include <chrono>
#include <queue>

#include "ucqaoa/error.hpp"
#include "ucqaoa/metrics.hpp"

namespace ucqaoa {

namespace {

struct Relaxation {
  Dollars bound = kInfeasibleCost;
  std::vector<Megawatts> powers;  // per unit; zero for OFF units
};

Relaxation relax(const UcInstance& inst, const std::vector<UnitState>& fixed) {
  std::vector<DispatchTerm> terms;
  std::vector<std::size_t> which;
  Dollars fixed_cost = 0.0;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const UnitSpec& u = inst.units[i];
    switch (fixed[i]) {
      case UnitState::kOn:
        terms.push_back({u.p_min, u.p_max, u.b, u.c});
        fixed_cost += u.a;
        break;
      case UnitState::kUndecided:
        terms.push_back({0.0, u.p_max, u.b, u.c});
        break;
      case UnitState::kOff:
        continue;
    }
    which.push_back(i);
  }
  Relaxation r;
  const BoxedDispatch bd = solve_boxed_dispatch(terms, inst.load);
  if (!bd.feasible) return r;
  r.bound = fixed_cost + bd.variable_cost;
  r.powers.assign(inst.size(), 0.0);
  for (std::size_t k = 0; k < which.size(); ++k) r.powers[which[k]] = bd.powers[k];
  return r;
}

struct QueueEntry {
  Dollars bound;
  std::uint64_t seq;
  std::vector<UnitState> fixed;
  std::vector<Megawatts> relaxed;
};

struct QueueOrder {
  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    return a.seq > b.seq;
  }
};

Commitment to_commitment(const std::vector<UnitState>& fixed) {
  Commitment c = Commitment::all_off(fixed.size());
  for (std::size_t i = 0; i < fixed.size(); ++i) c.set(i, fixed[i] == UnitState::kOn);
  return c;
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

}  // namespace

Dollars node_lower_bound(const UcInstance& inst, const BnbNode& node) {
  if (node.fixed.size() != inst.size()) throw DimensionError("node_lower_bound: node size mismatch");
  return relax(inst, node.fixed).bound;
}

SolveReport branch_and_bound(const UcInstance& inst, const BnbOptions& opts) {
  validate(inst);
  if (inst.size() > kBranchAndBoundGuard) {
    throw SizeGuardError("branch_and_bound: " + std::to_string(inst.size()) +
                         " units exceeds the guard of " + std::to_string(kBranchAndBoundGuard));
  }
  if (!(opts.gap >= 0.0)) throw ValidationError("branch_and_bound: gap must be non-negative");
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = inst.size();

  SolveReport rep;
  auto offer = [&](const Commitment& c) {
    DispatchSolution sol = economic_dispatch(inst, c);
    if (sol.feasible && (!rep.feasible || sol.cost < rep.dispatch.cost)) {
      rep.feasible = true;
      rep.best = c;
      rep.dispatch = std::move(sol);
    }
  };

  offer(Commitment::all_on(n));

  std::priority_queue<QueueEntry, std::vector<QueueEntry>, QueueOrder> open;
  std::uint64_t seq = 0;
  {
    std::vector<UnitState> root(n, UnitState::kUndecided);
    Relaxation r = relax(inst, root);
    if (r.bound < kInfeasibleCost) open.push({r.bound, seq++, std::move(root), std::move(r.powers)});
  }

  Dollars global_lb = kInfeasibleCost;
  bool stopped_on_gap = false;
  while (!open.empty()) {
    QueueEntry node = open.top();
    open.pop();
    if (opts.trace_bounds) rep.popped_bounds.push_back(node.bound);
    global_lb = node.bound;
    if (rep.feasible) {
      const double gap_now = (rep.dispatch.cost - node.bound) / rep.dispatch.cost;
      if (gap_now <= opts.gap + 1e-12) {
        stopped_on_gap = true;
        break;
      }
    }
    ++rep.nodes_expanded;

    // Round the relaxed dispatch: undecided units carrying power switch ON.
    Commitment rounded = to_commitment(node.fixed);
    for (std::size_t i = 0; i < n; ++i) {
      if (node.fixed[i] == UnitState::kUndecided && node.relaxed[i] > 0.0) rounded.set(i, true);
    }
    offer(rounded);

    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (node.fixed[i] != UnitState::kUndecided) continue;
      if (pick == n || inst.units[i].p_max > inst.units[pick].p_max) pick = i;
    }
    if (pick == n) continue;

    for (UnitState state : {UnitState::kOn, UnitState::kOff}) {
      std::vector<UnitState> child = node.fixed;
      child[pick] = state;
      const bool leaf = std::none_of(child.begin(), child.end(),
                                     [](UnitState s) { return s == UnitState::kUndecided; });
      if (leaf) {
        offer(to_commitment(child));
        continue;
      }
      Relaxation r = relax(inst, child);
      if (r.bound == kInfeasibleCost) continue;
      if (rep.feasible && r.bound >= rep.dispatch.cost) continue;
      open.push({r.bound, seq++, std::move(child), std::move(r.powers)});
    }
  }

  if (rep.feasible) {
    // An exhausted queue proves the incumbent optimal.
    rep.lower_bound = stopped_on_gap ? std::min(global_lb, rep.dispatch.cost) : rep.dispatch.cost;
    rep.proven_gap = std::max(0.0, (rep.dispatch.cost - rep.lower_bound) / rep.dispatch.cost);
  } else {
    rep.lower_bound = kInfeasibleCost;
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

SolveReport solve_exact(const UcInstance& inst) { return branch_and_bound(inst, {}); }

SolveReport solve_approx(const UcInstance& inst, double gap) {
  BnbOptions opts;
  opts.gap = gap;
  return branch_and_bound(inst, opts);
}

UcInstance random_instance(std::size_t n, std::mt19937_64& rng) {
  if (n < 1) throw ValidationError("random_instance: at least one unit is required");
  std::uniform_real_distribution<double> pmax(50.0, 500.0);
  std::uniform_real_distribution<double> frac(0.1, 0.4);
  std::uniform_real_distribution<double> fixed(300.0, 1100.0);
  std::uniform_real_distribution<double> linear(15.0, 30.0);
  std::uniform_real_distribution<double> quad(3e-4, 8e-3);
  UcInstance inst;
  inst.name = "random-" + std::to_string(n);
  for (std::size_t i = 0; i < n; ++i) {
    UnitSpec u;
    u.p_max = pmax(rng);
    u.p_min = frac(rng) * u.p_max;
    u.a = fixed(rng);
    u.b = linear(rng);
    u.c = quad(rng);
    inst.units.push_back(u);
  }
  inst.load = 0.5 * inst.total_capacity();
  return inst;
}

UcInstance random_instance(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_instance(n, rng);
}

std::vector<BenchmarkRow> scaling_benchmark(const BenchmarkOptions& opts) {
  for (std::size_t n : opts.sizes) {
    if (n < 1 || n > kBranchAndBoundGuard) {
      throw SizeGuardError("bench-classical: size " + std::to_string(n) + " outside [1, " +
                           std::to_string(kBranchAndBoundGuard) + "]");
    }
  }
  if (opts.trials < 1) throw ValidationError("bench-classical: trials must be at least 1");

  auto timed = [&](const UcInstance& inst, double gap, SolveReport& out) {
    const auto start = std::chrono::steady_clock::now();
    std::size_t reps = 0;
    double elapsed = 0.0;
    do {
      out = solve_approx(inst, gap);
      ++reps;
      elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    } while (opts.record_timing && elapsed < opts.min_sample_ms);
    return elapsed / static_cast<double>(reps);
  };

  std::mt19937_64 rng(opts.seed);
  std::vector<BenchmarkRow> rows;
  for (std::size_t n : opts.sizes) {
    std::vector<double> exact_ms, approx_ms, exact_cost, approx_cost;
    for (std::size_t t = 0; t < opts.trials; ++t) {
      const UcInstance inst = random_instance(n, rng);
      SolveReport rep;
      exact_ms.push_back(timed(inst, 0.0, rep));
      exact_cost.push_back(rep.feasible ? rep.dispatch.cost : 0.0);
      approx_ms.push_back(timed(inst, opts.gap, rep));
      approx_cost.push_back(rep.feasible ? rep.dispatch.cost : 0.0);
    }
    rows.push_back({n, "exact", opts.record_timing ? median(exact_ms) : 0.0, median(exact_cost)});
    rows.push_back({n, "approx", opts.record_timing ? median(approx_ms) : 0.0, median(approx_cost)});
  }
  return rows;
}

std::string benchmark_to_csv(const std::vector<BenchmarkRow>& rows) {
  std::string out = "n,mode,median_ms,cost\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + r.mode + "," + format_number(r.median_ms) + "," +
           format_number(r.cost) + "\n";
  }
  return out;
}

}  // namespace ucqaoa

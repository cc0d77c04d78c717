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

#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "ucqaoa/baseline.hpp"
#include "ucqaoa/error.hpp"

namespace ucqaoa {
namespace {

double enumerated_optimum(const UcInstance& inst) {
  const Enumeration all = enumerate_all(inst);
  const RankedCommitment* best = all.best_feasible();
  return best ? best->cost : kInfeasibleCost;
}

TEST_CASE("single unit") {
  UcInstance inst{"one", 30.0, {UnitSpec{10.0, 50.0, 5.0, 1.0, 0.1}}};
  const SolveReport r = solve_exact(inst);
  REQUIRE(r.feasible);
  CHECK(r.best == Commitment::all_on(1));
  CHECK(r.dispatch.cost == doctest::Approx(5.0 + 30.0 + 90.0));
}

TEST_CASE("ten-unit system") {
  const UcInstance inst = builtin_ten_unit();
  const SolveReport r = solve_exact(inst);
  REQUIRE(r.feasible);
  CHECK(r.dispatch.cost == doctest::Approx(enumerated_optimum(inst)).epsilon(1e-9));
  CHECK(r.best.to_string() == "1100000000");
  CHECK(r.proven_gap <= 1e-12);

  const SolveReport a = solve_approx(inst, 0.08);
  CHECK(a.dispatch.cost <= 1.08 * r.dispatch.cost);
  CHECK(a.nodes_expanded <= r.nodes_expanded);
  CHECK(a.proven_gap <= 0.08 + 1e-12);

  const SolveReport z = solve_approx(inst, 0.0);
  CHECK(z.dispatch.cost == r.dispatch.cost);
  CHECK(z.best == r.best);
}

TEST_CASE("unreachable load") {
  const SolveReport r = solve_exact(builtin_ten_unit(1700.0));
  CHECK_FALSE(r.feasible);
  CHECK_THROWS_AS(solve_approx(builtin_ten_unit(), -0.1), ValidationError);
}

TEST_CASE("exact search matches enumeration") {
  std::mt19937_64 rng(97);
  for (int t = 0; t < 40; ++t) {
    const UcInstance inst = random_instance(1 + t % 12, rng);
    const auto e = enumerate_all(inst);
    const auto* best = e.best_feasible();
    const SolveReport r = solve_exact(inst);
    REQUIRE(r.feasible == (best != nullptr));
    if (!best) continue;
    CHECK(r.dispatch.cost == doctest::Approx(best->cost).epsilon(1e-6));
    const bool unique = e.ranked.size() < 2 || !e.ranked[1].feasible ||
                        e.ranked[1].cost > best->cost * (1.0 + 1e-9);
    if (unique) CHECK(r.best.index() == best->index);
    const SolveReport a = solve_approx(inst, 0.08);
    CHECK(a.dispatch.cost <= 1.08 * best->cost * (1.0 + 1e-12));
  }
}

TEST_CASE("lower bounds") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 15; ++t) {
    const std::size_t n = 2 + t % 7;
    const UcInstance inst = random_instance(n, rng);
    const auto e = enumerate_all(inst);

    BnbNode root{std::vector<UnitState>(n, UnitState::kUndecided), 0.0};
    const double rb = node_lower_bound(inst, root);
    if (const auto* best = e.best_feasible()) CHECK(rb <= best->cost + 1e-9);

    for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
      BnbNode leaf{std::vector<UnitState>(n), 0.0};
      for (std::size_t i = 0; i < n; ++i) leaf.fixed[i] = ((k >> i) & 1U) ? UnitState::kOn : UnitState::kOff;
      const auto d = economic_dispatch(inst, Commitment::from_index(k, n));
      const double lb = node_lower_bound(inst, leaf);
      if (d.feasible) {
        CHECK(lb == doctest::Approx(d.cost).epsilon(1e-9));
      } else {
        CHECK(lb == kInfeasibleCost);
      }
    }

    BnbNode node = root;
    double parent = rb;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i : order) {
      node.fixed[i] = (rng() & 1U) ? UnitState::kOn : UnitState::kOff;
      const double child = node_lower_bound(inst, node);
      CHECK(child >= parent - 1e-9 * std::max(1.0, parent));
      double best_completion = kInfeasibleCost;
      for (const auto& r : e.ranked) {
        if (!r.feasible) continue;
        bool consistent = true;
        for (std::size_t j = 0; j < n; ++j) {
          const bool on = (r.index >> j) & 1U;
          if ((node.fixed[j] == UnitState::kOn && !on) || (node.fixed[j] == UnitState::kOff && on)) {
            consistent = false;
          }
        }
        if (consistent) best_completion = std::min(best_completion, r.cost);
      }
      CHECK(child <= best_completion + 1e-9 * std::max(1.0, best_completion));
      if (child == kInfeasibleCost) break;
      parent = child;
    }
  }
}

TEST_CASE("best-first order") {
  std::mt19937_64 rng(103);
  for (int t = 0; t < 5; ++t) {
    const UcInstance inst = random_instance(12, rng);
    BnbOptions opts;
    opts.trace_bounds = true;
    const SolveReport r = branch_and_bound(inst, opts);
    REQUIRE(r.popped_bounds.size() >= 1);
    for (std::size_t k = 1; k < r.popped_bounds.size(); ++k) {
      CHECK(r.popped_bounds[k] >= r.popped_bounds[k - 1] - 1e-9 * r.popped_bounds[k - 1]);
    }
    CHECK(r.lower_bound <= r.dispatch.cost);
    const SolveReport again = branch_and_bound(inst, opts);
    CHECK(again.nodes_expanded == r.nodes_expanded);
  }
}

TEST_CASE("random instances") {
  const UcInstance a = random_instance(8, 5);
  CHECK(a == random_instance(8, 5));
  CHECK_FALSE(a == random_instance(8, 6));
  double cap = 0.0;
  for (const auto& u : a.units) {
    CHECK((u.p_max >= 50.0 && u.p_max <= 500.0));
    CHECK((u.p_min >= 0.1 * u.p_max && u.p_min <= 0.4 * u.p_max));
    CHECK((u.a >= 300.0 && u.a <= 1100.0));
    CHECK((u.b >= 15.0 && u.b <= 30.0));
    CHECK((u.c >= 3e-4 && u.c <= 8e-3));
    cap += u.p_max;
  }
  CHECK(a.load == doctest::Approx(0.5 * cap).epsilon(1e-12));
  CHECK_THROWS_AS(random_instance(0, 1), ValidationError);
}

TEST_CASE("scaling benchmark") {
  BenchmarkOptions opts;
  opts.sizes = {4, 6};
  opts.trials = 2;
  opts.seed = 3;
  opts.record_timing = false;
  const auto rows = scaling_benchmark(opts);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].mode == "exact");
  CHECK(rows[1].mode == "approx");
  CHECK(rows[0].median_ms == 0.0);
  CHECK(rows[1].cost <= 1.08 * rows[0].cost + 1e-9);
  CHECK(benchmark_to_csv(rows) == benchmark_to_csv(scaling_benchmark(opts)));
  CHECK(benchmark_to_csv({}) == "n,mode,median_ms,cost\n");
}

}  // namespace
}  // namespace ucqaoa

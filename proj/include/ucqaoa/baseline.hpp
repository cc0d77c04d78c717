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

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ucqaoa/dispatch.hpp"
#include "ucqaoa/instance.hpp"

namespace ucqaoa {

enum class UnitState : std::uint8_t { kUndecided, kOn, kOff };

struct BnbNode {
  std::vector<UnitState> fixed;
  Dollars lower_bound = 0.0;
};

// Fixed costs of the ON units plus the optimum of a relaxed dispatch in which
// ON units keep [p_min, p_max], undecided units get [0, p_max] without fixed
// cost, and OFF units are absent. kInfeasibleCost when no completion can
// cover the load.
Dollars node_lower_bound(const UcInstance& inst, const BnbNode& node);

inline constexpr std::size_t kBranchAndBoundGuard = 40;

struct BnbOptions {
  double gap = 0.0;
  bool trace_bounds = false;
};

struct SolveReport {
  bool feasible = false;
  Commitment best;
  DispatchSolution dispatch;
  double proven_gap = 0.0;  // (best cost - global lower bound) / best cost
  Dollars lower_bound = 0.0;
  std::size_t nodes_expanded = 0;
  double wall_ms = 0.0;
  std::vector<Dollars> popped_bounds;  // filled when BnbOptions::trace_bounds
};

// Best-first branch and bound over commitments; FIFO among equal bounds.
// Branches on the undecided unit with the largest p_max.
SolveReport branch_and_bound(const UcInstance& inst, const BnbOptions& opts);

SolveReport solve_exact(const UcInstance& inst);
SolveReport solve_approx(const UcInstance& inst, double gap);

// Random instances for scaling runs:
//   p_max ~ U[50, 500], p_min = U[0.1, 0.4] * p_max, A ~ U[300, 1100],
//   B ~ U[15, 30], C ~ U[3e-4, 8e-3], L = 0.5 * sum(p_max).
UcInstance random_instance(std::size_t n, std::mt19937_64& rng);
UcInstance random_instance(std::size_t n, std::uint64_t seed);

struct BenchmarkRow {
  std::size_t n = 0;
  std::string mode;  // "exact" or "approx"
  double median_ms = 0.0;
  Dollars cost = 0.0;  // median over trials
};

struct BenchmarkOptions {
  std::vector<std::size_t> sizes;
  std::size_t trials = 3;
  double gap = 0.08;
  std::uint64_t seed = 0;
  bool record_timing = true;
  // Each solve is repeated until this much time has elapsed and averaged.
  double min_sample_ms = 2.0;
};

std::vector<BenchmarkRow> scaling_benchmark(const BenchmarkOptions& opts);

std::string benchmark_to_csv(const std::vector<BenchmarkRow>& rows);

}  // namespace ucqaoa

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
#include <limits>
#include <span>
#include <vector>

#include "ucqaoa/instance.hpp"

namespace ucqaoa {

// Ordered above every finite cost. Never written to files; serializers emit
// an explicit infeasible flag instead.
inline constexpr Dollars kInfeasibleCost = std::numeric_limits<double>::infinity();

struct DispatchSolution {
  PowerAssignment powers;
  Dollars cost = kInfeasibleCost;
  bool feasible = false;
  // Shared marginal cost at the optimum; meaningless when infeasible.
  double marginal_cost = 0.0;
};

// One term of a separable convex dispatch: b*p + c*p^2 over p in [lo, hi].
struct DispatchTerm {
  Megawatts lo = 0.0;
  Megawatts hi = 0.0;
  double b = 0.0;
  double c = 0.0;
};

struct BoxedDispatch {
  bool feasible = false;
  std::vector<Megawatts> powers;
  Dollars variable_cost = kInfeasibleCost;
  double multiplier = 0.0;
};

inline constexpr int kDispatchMaxIterations = 200;
inline constexpr double kDispatchResidualTol = 1e-6;

// Minimizes sum(b p + c p^2) subject to sum(p) = load and the boxes by
// bisection on the shared multiplier, with per-term response
// clamp((lambda - b) / 2c, lo, hi). Terms with c = 0 are steps at lambda = b;
// when several sit at the final multiplier the load is filled lowest index
// first.
BoxedDispatch solve_boxed_dispatch(std::span<const DispatchTerm> terms, Megawatts load);

DispatchSolution economic_dispatch(const UcInstance& inst, const Commitment& commit);

// Exhaustive grid search over the powers of the first k-1 ON units at the
// given resolution, the last ON unit taking the remainder. Test oracle only;
// supports at most three ON units.
DispatchSolution dispatch_grid_oracle(const UcInstance& inst, const Commitment& commit,
                                      Megawatts resolution);

inline constexpr std::size_t kEnumerationGuard = 24;

struct RankedCommitment {
  std::uint64_t index = 0;  // unit 0 = least significant bit
  Dollars cost = kInfeasibleCost;
  bool feasible = false;
};

// All 2^N commitments ranked by dispatch cost; infeasible ones last, ties by
// index. Entries are kept compact; economic_dispatch recovers the powers.
struct Enumeration {
  std::size_t n = 0;
  std::vector<RankedCommitment> ranked;

  const RankedCommitment* best_feasible() const&;
  const RankedCommitment* best_feasible() const&& = delete;
};

Enumeration enumerate_all(const UcInstance& inst);

inline constexpr double kDefaultNearOptimalFraction = 0.05;

struct NearOptimalSet {
  std::size_t n = 0;
  std::vector<std::uint64_t> members;  // sorted ascending
  Dollars optimal_cost = 0.0;
  Dollars cutoff = 0.0;

  bool contains(std::uint64_t index) const;
  std::size_t size() const noexcept { return members.size(); }
};

NearOptimalSet near_optimal_set(const Enumeration& all, double fraction = kDefaultNearOptimalFraction);
NearOptimalSet near_optimal_set(const UcInstance& inst, double fraction = kDefaultNearOptimalFraction);

}  // namespace ucqaoa

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
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "ucqaoa/instance.hpp"

namespace ucqaoa {

// Multipliers on the squared load-balance, lower-limit and upper-limit terms.
struct PenaltyWeights {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda3 = 0.0;
};

// Default weights are multiples of mean(B) / L, so a load imbalance costs on
// the order of the average marginal price.
inline constexpr double kBalanceWeightScale = 2.0;
inline constexpr double kLimitWeightScale = 0.3;

PenaltyWeights default_weights(const UcInstance& inst);

// Continuous variables of the penalized objective: powers and the two slack
// vectors for the lower and upper generation limits.
struct ContinuousAssignment {
  std::vector<double> p;
  std::vector<double> s1;
  std::vector<double> s2;
};

using PairKey = std::pair<std::size_t, std::size_t>;

// Quadratic polynomial over binary variables. Diagonal terms are folded into
// `linear` (y^2 = y), so `quadratic` only holds pairs with i < j.
struct Qubo {
  std::size_t n = 0;
  double constant = 0.0;
  std::vector<double> linear;
  std::map<PairKey, double> quadratic;

  double evaluate(std::span<const std::uint8_t> y) const;
  double evaluate(std::uint64_t index) const;
};

// Spin form over z in {-1, +1} with z = 2y - 1.
struct IsingModel {
  std::size_t n = 0;
  double offset = 0.0;
  std::vector<double> h;
  std::map<PairKey, double> j;

  double evaluate(std::span<const int> z) const;
  // z_i = +1 where bit i of index is set.
  double evaluate(std::uint64_t index) const;
};

// The penalized objective evaluated term by term:
//   sum(A y + B p + C p^2) + l1 (sum p y - L)^2
//   + l2 sum(p - s1 - p_min y)^2 + l3 sum(p + s2 - p_max y)^2
double penalized_objective(const UcInstance& inst, const PenaltyWeights& w, const Commitment& y,
                           const ContinuousAssignment& ca);

// Coefficients of the penalized objective in y for fixed (p, s1, s2),
// obtained by expanding each square.
Qubo build_qubo(const UcInstance& inst, const PenaltyWeights& w, const ContinuousAssignment& ca);

IsingModel qubo_to_ising(const Qubo& q);

inline constexpr std::size_t kSimulatorQubitGuard = 20;

// Entry k is the value at the bitstring whose bit i (unit i) is bit i of k.
std::vector<double> qubo_diagonal(const Qubo& q, std::size_t guard = kSimulatorQubitGuard);

}  // namespace ucqaoa

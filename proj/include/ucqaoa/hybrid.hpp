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
#include <optional>
#include <span>
#include <vector>

#include "ucqaoa/dispatch.hpp"
#include "ucqaoa/metrics.hpp"
#include "ucqaoa/nelder_mead.hpp"
#include "ucqaoa/qaoa.hpp"
#include "ucqaoa/qubo.hpp"

namespace ucqaoa {

// Everything the outer optimizer moves, flattened as
// [gamma(P), beta(P), p(N), s1(N), s2(N)].
struct ThetaVector {
  std::vector<double> gamma;
  std::vector<double> beta;
  std::vector<double> p;
  std::vector<double> s1;
  std::vector<double> s2;

  std::size_t depth() const noexcept { return gamma.size(); }
  std::size_t units() const noexcept { return p.size(); }

  std::vector<double> pack() const;
  static ThetaVector unpack(std::span<const double> flat, std::size_t depth, std::size_t units);

  VariationalParams angles() const { return {gamma, beta}; }
  // Continuous part with |x| applied to every power and slack entry.
  ContinuousAssignment continuous() const;

  bool operator==(const ThetaVector&) const = default;
};

struct HybridConfig {
  std::size_t depth = 1;
  std::optional<PenaltyWeights> weights;  // default_weights(inst) when empty
  std::size_t max_iterations = 1500;
  std::size_t max_evaluations = 0;  // 0: no evaluation cap beyond iterations
  double tol_x = 1e-10;
  double tol_f = 1e-10;
  std::uint64_t seed = 0;
  std::uint64_t shots = 0;  // 0: exact expectation
  std::size_t cadence = 10;
  double near_opt_fraction = kDefaultNearOptimalFraction;
  std::size_t top_k = kDefaultTopK;
  bool record_timing = true;
  // Cost angles enter the circuit as gamma / phase_scale. 0 selects the value
  // range (max - min) of the initial cost table.
  double phase_scale = 0.0;

  void validate() const;
  PenaltyWeights resolved_weights(const UcInstance& inst) const;
};

struct RunHistory {
  std::vector<HistoryRecord> records;
  ThetaVector final_theta;
  ProbabilityDistribution final_distribution;
  NearOptimalSet near_optimal;
  PenaltyWeights weights;
  double phase_scale = 1.0;
  double final_objective = 0.0;
  std::size_t iterations = 0;
  std::size_t evaluations = 0;
};

// QAOA expectation of the penalized objective at theta. With shots > 0 the
// expectation is taken over a histogram sampled with `sample_seed`.
double objective(const UcInstance& inst, const PenaltyWeights& w, const ThetaVector& theta,
                 std::uint64_t shots = 0, std::uint64_t sample_seed = 0, double phase_scale = 1.0);

// Angles handed to the circuit: gamma divided by phase_scale, beta as is.
VariationalParams scaled_angles(const ThetaVector& theta, double phase_scale);

// max - min of a cost table.
double table_range(std::span<const double> diag);

// gamma, beta ~ U(0, pi/4); p split proportionally to capacity and clamped to
// the unit limits; slacks set to zero the limit penalties for all-ON.
ThetaVector initial_theta(const UcInstance& inst, const HybridConfig& cfg, std::uint64_t seed);

RunHistory run_hybrid(const UcInstance& inst, const HybridConfig& cfg);
RunHistory run_hybrid(const UcInstance& inst, const HybridConfig& cfg, const NearOptimalSet& nos);

}  // namespace ucqaoa

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
#include <functional>
#include <span>
#include <vector>

namespace ucqaoa {

struct NelderMeadOptions {
  std::size_t max_iterations = 1000;
  // Hard cap; a step is not started unless its worst case fits. 0: 200 * dimension.
  std::size_t max_evaluations = 0;
  // Converged once the simplex diameter (inf-norm distance from the best
  // vertex) and the objective spread are both within tolerance. A spread of
  // exactly zero stops at once.
  double tol_x = 1e-8;
  double tol_f = 1e-8;
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
};

enum class NelderMeadStop { kSimplexSize, kObjectiveSpread, kIterations, kEvaluations };

struct NelderMeadResult {
  std::vector<double> x;
  double f = 0.0;
  std::size_t iterations = 0;
  std::size_t evaluations = 0;
  NelderMeadStop stop = NelderMeadStop::kIterations;
  // Best objective after each iteration; entry 0 is the initial simplex.
  std::vector<double> trace;
};

using Objective = std::function<double(std::span<const double>)>;
// Called with the iteration count (0 before the first update) and the current
// best vertex.
using IterationCallback =
    std::function<void(std::size_t iteration, std::span<const double> best_x, double best_f)>;

// Derivative-free simplex minimization. The initial simplex is x0 plus
// x0 + delta_k e_k with delta_k = 0.05 * max(1, |x0_k|). Throws
// NumericalError if the objective returns a non-finite value.
NelderMeadResult nelder_mead(const Objective& f, std::vector<double> x0,
                             const NelderMeadOptions& opts = {},
                             const IterationCallback& on_iteration = {});

}  // namespace ucqaoa

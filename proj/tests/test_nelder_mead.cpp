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

#include <cmath>

#include "doctest.h"
#include "ucqaoa/error.hpp"
#include "ucqaoa/nelder_mead.hpp"

namespace ucqaoa {
namespace {

TEST_CASE("one-dimensional parabola") {
  auto f = [](std::span<const double> x) { return (x[0] - 2.0) * (x[0] - 2.0); };
  const auto r = nelder_mead(f, {0.0});
  CHECK(std::abs(r.x[0] - 2.0) < 1e-4);
  CHECK(r.f < 1e-8);
}

TEST_CASE("Rosenbrock within two thousand evaluations") {
  std::size_t calls = 0;
  auto f = [&](std::span<const double> x) {
    ++calls;
    const double a = 1.0 - x[0], b = x[1] - x[0] * x[0];
    return a * a + 100.0 * b * b;
  };
  NelderMeadOptions opts;
  opts.max_evaluations = 2000;
  opts.max_iterations = 5000;
  opts.tol_x = 1e-10;
  opts.tol_f = 1e-14;
  const auto r = nelder_mead(f, {-1.2, 1.0}, opts);
  CHECK(calls <= 2000);
  CHECK(r.evaluations == calls);
  CHECK(std::abs(r.x[0] - 1.0) < 1e-3);
  CHECK(std::abs(r.x[1] - 1.0) < 1e-3);
}

TEST_CASE("constant objective stops at once on zero spread") {
  auto f = [](std::span<const double>) { return 3.0; };
  const auto r = nelder_mead(f, {1.0, 2.0, 3.0});
  CHECK(r.stop == NelderMeadStop::kObjectiveSpread);
  CHECK(r.iterations == 0);
  CHECK(r.evaluations == 4);
}

TEST_CASE("best value trace is non-increasing") {
  auto f = [](std::span<const double> x) {
    return std::sin(3 * x[0]) + 0.1 * x[0] * x[0] + std::cos(2 * x[1]) * x[1] * 0.3 + x[1] * x[1];
  };
  NelderMeadOptions opts;
  opts.max_iterations = 300;
  std::vector<double> seen;
  const auto r = nelder_mead(f, {2.0, -1.5}, opts,
                             [&](std::size_t, std::span<const double>, double fx) { seen.push_back(fx); });
  REQUIRE(r.trace.size() == r.iterations + 1);
  CHECK(seen == r.trace);
  for (std::size_t k = 1; k < r.trace.size(); ++k) CHECK(r.trace[k] <= r.trace[k - 1]);
}

TEST_CASE("iteration budget") {
  auto f = [](std::span<const double> x) { return x[0] * x[0] + x[1] * x[1]; };
  NelderMeadOptions opts;
  opts.max_iterations = 7;
  opts.tol_f = 0.0;
  opts.tol_x = 0.0;
  const auto r = nelder_mead(f, {5.0, 5.0}, opts);
  CHECK(r.iterations == 7);
  CHECK(r.stop == NelderMeadStop::kIterations);
}

TEST_CASE("evaluation budget") {
  auto f = [](std::span<const double> x) { return x[0] * x[0] + x[1] * x[1]; };
  NelderMeadOptions opts;
  opts.max_evaluations = 20;
  opts.tol_f = 0.0;
  opts.tol_x = 0.0;
  const auto r = nelder_mead(f, {5.0, 5.0}, opts);
  CHECK(r.evaluations <= 20);
  CHECK(r.stop == NelderMeadStop::kEvaluations);
}

TEST_CASE("non-finite objective is reported") {
  auto f = [](std::span<const double> x) { return x[0] > 0.02 ? std::nan("") : x[0]; };
  CHECK_THROWS_AS(nelder_mead(f, {0.0}), NumericalError);
}

}  // namespace
}  // namespace ucqaoa

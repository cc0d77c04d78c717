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

#include "ucqaoa/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "ucqaoa/error.hpp"

namespace ucqaoa {

namespace {

class Evaluator {
 public:
  Evaluator(const Objective& f, std::size_t budget) : f_(f), budget_(budget) {}

  double operator()(std::span<const double> x) {
    ++count_;
    const double v = f_(x);
    if (!std::isfinite(v)) {
      std::ostringstream os;
      os << "nelder_mead: objective returned " << v << " at evaluation " << count_
         << " (penalty weights too large or overflow?)";
      throw NumericalError(os.str());
    }
    return v;
  }

  std::size_t count() const noexcept { return count_; }
  std::size_t remaining() const noexcept { return count_ >= budget_ ? 0 : budget_ - count_; }

 private:
  const Objective& f_;
  std::size_t budget_;
  std::size_t count_ = 0;
};

}  // namespace

NelderMeadResult nelder_mead(const Objective& f, std::vector<double> x0,
                             const NelderMeadOptions& opts, const IterationCallback& on_iteration) {
  const std::size_t d = x0.size();
  if (d == 0) throw ValidationError("nelder_mead: dimension must be at least 1");
  const std::size_t budget = opts.max_evaluations ? opts.max_evaluations : 200 * d;
  Evaluator eval(f, budget);

  std::vector<std::vector<double>> simplex(d + 1, x0);
  for (std::size_t k = 0; k < d; ++k) {
    simplex[k + 1][k] += 0.05 * std::max(1.0, std::abs(x0[k]));
  }
  std::vector<double> values(d + 1);
  for (std::size_t v = 0; v <= d; ++v) values[v] = eval(simplex[v]);

  std::vector<std::size_t> order(d + 1);
  auto sort_vertices = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<std::vector<double>> s(d + 1);
    std::vector<double> fv(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
      s[i] = std::move(simplex[order[i]]);
      fv[i] = values[order[i]];
    }
    simplex = std::move(s);
    values = std::move(fv);
  };

  NelderMeadResult res;
  sort_vertices();
  res.trace.push_back(values[0]);
  if (on_iteration) on_iteration(0, simplex[0], values[0]);

  std::vector<double> centroid(d);
  std::vector<double> xr(d);
  std::vector<double> xe(d);
  std::vector<double> xc(d);
  auto along = [&](std::vector<double>& out, double t) {
    // centroid + t * (centroid - worst)
    for (std::size_t k = 0; k < d; ++k) out[k] = centroid[k] + t * (centroid[k] - simplex[d][k]);
  };

  res.stop = NelderMeadStop::kIterations;
  while (true) {
    double diameter = 0.0;
    for (std::size_t v = 1; v <= d; ++v) {
      for (std::size_t k = 0; k < d; ++k) {
        diameter = std::max(diameter, std::abs(simplex[v][k] - simplex[0][k]));
      }
    }
    const double spread = values[d] - values[0];
    if (spread == 0.0) {
      // A flat simplex carries no descent information.
      res.stop = NelderMeadStop::kObjectiveSpread;
      break;
    }
    if (spread <= opts.tol_f && diameter <= opts.tol_x) {
      res.stop = NelderMeadStop::kSimplexSize;
      break;
    }
    if (res.iterations >= opts.max_iterations) {
      res.stop = NelderMeadStop::kIterations;
      break;
    }
    // One step costs at most d + 2 evaluations (reflect, contract, shrink).
    if (eval.remaining() < d + 2) {
      res.stop = NelderMeadStop::kEvaluations;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t v = 0; v < d; ++v) {
      for (std::size_t k = 0; k < d; ++k) centroid[k] += simplex[v][k];
    }
    for (double& c : centroid) c /= static_cast<double>(d);

    along(xr, opts.reflection);
    const double fr = eval(xr);
    if (fr < values[0]) {
      along(xe, opts.reflection * opts.expansion);
      const double fe = eval(xe);
      if (fe < fr) {
        simplex[d] = xe;
        values[d] = fe;
      } else {
        simplex[d] = xr;
        values[d] = fr;
      }
    } else if (fr < values[d - 1]) {
      simplex[d] = xr;
      values[d] = fr;
    } else {
      bool accepted = false;
      if (fr < values[d]) {
        along(xc, opts.reflection * opts.contraction);
        const double fc = eval(xc);
        if (fc <= fr) {
          simplex[d] = xc;
          values[d] = fc;
          accepted = true;
        }
      } else {
        along(xc, -opts.contraction);
        const double fc = eval(xc);
        if (fc < values[d]) {
          simplex[d] = xc;
          values[d] = fc;
          accepted = true;
        }
      }
      if (!accepted) {
        for (std::size_t v = 1; v <= d; ++v) {
          for (std::size_t k = 0; k < d; ++k) {
            simplex[v][k] = simplex[0][k] + opts.shrink * (simplex[v][k] - simplex[0][k]);
          }
          values[v] = eval(simplex[v]);
        }
      }
    }

    sort_vertices();
    ++res.iterations;
    res.trace.push_back(values[0]);
    if (on_iteration) on_iteration(res.iterations, simplex[0], values[0]);
  }

  res.x = simplex[0];
  res.f = values[0];
  res.evaluations = eval.count();
  return res;
}

}  // namespace ucqaoa

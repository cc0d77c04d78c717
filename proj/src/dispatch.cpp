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

#include "ucqaoa/dispatch.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "ucqaoa/error.hpp"

namespace ucqaoa {

namespace {

Megawatts response(const DispatchTerm& t, double lambda) {
  if (t.c > 0.0) return std::clamp((lambda - t.b) / (2.0 * t.c), t.lo, t.hi);
  // Step supply; at lambda == b the unit sits at its lower bound.
  return lambda > t.b ? t.hi : t.lo;
}

Megawatts total_response(std::span<const DispatchTerm> terms, double lambda) {
  Megawatts s = 0.0;
  for (const auto& t : terms) s += response(t, lambda);
  return s;
}

std::vector<Megawatts> grid_points(const UnitSpec& u, Megawatts resolution) {
  std::vector<Megawatts> g;
  const auto steps = static_cast<std::size_t>(std::floor((u.p_max - u.p_min) / resolution));
  g.reserve(steps + 2);
  for (std::size_t k = 0; k <= steps; ++k) g.push_back(u.p_min + static_cast<double>(k) * resolution);
  if (g.back() < u.p_max) g.push_back(u.p_max);
  return g;
}

}  // namespace

BoxedDispatch solve_boxed_dispatch(std::span<const DispatchTerm> terms, Megawatts load) {
  BoxedDispatch out;
  if (terms.empty()) return out;

  Megawatts lo_sum = 0.0;
  Megawatts hi_sum = 0.0;
  double lam_lo = terms[0].b;
  double lam_hi = terms[0].b;
  for (const auto& t : terms) {
    lo_sum += t.lo;
    hi_sum += t.hi;
    lam_lo = std::min(lam_lo, t.b);
    lam_hi = std::max(lam_hi, t.b + 2.0 * t.c * t.hi);
  }
  const double slack = 1e-12 * std::max(1.0, load);
  if (lo_sum > load + slack || hi_sum < load - slack) return out;
  // Strictly above every step so the upper end of the bracket supplies hi_sum.
  lam_hi += 1.0;

  const double tol = kDispatchResidualTol * load;
  double lambda = lam_lo;
  if (total_response(terms, lam_lo) < load - tol) {
    for (int it = 0; it < kDispatchMaxIterations; ++it) {
      lambda = 0.5 * (lam_lo + lam_hi);
      const Megawatts s = total_response(terms, lambda);
      if (std::abs(s - load) < tol) break;
      if (s < load) {
        lam_lo = lambda;
      } else {
        lam_hi = lambda;
      }
      if (lam_hi - lam_lo <= 0.0) break;
    }
  }

  const double eps = 1e-9 * std::max(1.0, std::abs(lambda));
  std::vector<Megawatts> p(terms.size());
  std::vector<std::size_t> marginal;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    if (t.c == 0.0 && std::abs(t.b - lambda) <= eps) {
      p[i] = t.lo;
      marginal.push_back(i);
    } else {
      p[i] = response(t, lambda);
    }
  }

  auto residual = [&] {
    Megawatts s = 0.0;
    for (Megawatts v : p) s += v;
    return load - s;
  };

  // Step units at the multiplier absorb the remaining load in index order.
  for (std::size_t i : marginal) {
    const Megawatts r = residual();
    if (r <= 0.0) break;
    p[i] = std::min(terms[i].hi, terms[i].lo + r);
  }

  // One exact multiplier correction over the interior quadratic units.
  if (const Megawatts r = residual(); r != 0.0) {
    double inv_slope = 0.0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const auto& t = terms[i];
      if (t.c > 0.0 && p[i] > t.lo && p[i] < t.hi) inv_slope += 1.0 / (2.0 * t.c);
    }
    if (inv_slope > 0.0) {
      const double dlam = r / inv_slope;
      std::vector<Megawatts> q = p;
      bool inside = true;
      for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& t = terms[i];
        if (t.c > 0.0 && p[i] > t.lo && p[i] < t.hi) {
          q[i] = p[i] + dlam / (2.0 * t.c);
          inside = inside && q[i] >= t.lo && q[i] <= t.hi;
        }
      }
      if (inside) {
        p = std::move(q);
        lambda += dlam;
      }
    }
  }

  out.feasible = true;
  out.multiplier = lambda;
  out.variable_cost = 0.0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    out.variable_cost += terms[i].b * p[i] + terms[i].c * p[i] * p[i];
  }
  out.powers = std::move(p);
  return out;
}

DispatchSolution economic_dispatch(const UcInstance& inst, const Commitment& commit) {
  if (commit.size() != inst.size()) {
    throw DimensionError("economic_dispatch: commitment has " + std::to_string(commit.size()) +
                         " bits for " + std::to_string(inst.size()) + " units");
  }
  std::vector<DispatchTerm> terms;
  std::vector<std::size_t> on;
  Dollars fixed = 0.0;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (!commit.on(i)) continue;
    const UnitSpec& u = inst.units[i];
    terms.push_back({u.p_min, u.p_max, u.b, u.c});
    on.push_back(i);
    fixed += u.a;
  }

  DispatchSolution sol;
  sol.powers.powers.assign(inst.size(), 0.0);
  const BoxedDispatch bd = solve_boxed_dispatch(terms, inst.load);
  if (!bd.feasible) return sol;
  for (std::size_t k = 0; k < on.size(); ++k) sol.powers.powers[on[k]] = bd.powers[k];
  sol.feasible = true;
  sol.cost = fixed + bd.variable_cost;
  sol.marginal_cost = bd.multiplier;
  return sol;
}

DispatchSolution dispatch_grid_oracle(const UcInstance& inst, const Commitment& commit,
                                      Megawatts resolution) {
  if (commit.size() != inst.size()) throw DimensionError("dispatch_grid_oracle: length mismatch");
  if (!(resolution > 0.0)) throw ValidationError("dispatch_grid_oracle: resolution must be positive");
  std::vector<std::size_t> on;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (commit.on(i)) on.push_back(i);
  }
  if (on.size() > 3) {
    throw SizeGuardError("dispatch_grid_oracle: at most 3 ON units supported, got " +
                         std::to_string(on.size()));
  }

  DispatchSolution best;
  best.powers.powers.assign(inst.size(), 0.0);
  if (on.empty()) return best;

  const double L = inst.load;
  const double slack = 1e-9 * std::max(1.0, L);
  const UnitSpec& last = inst.units[on.back()];
  auto cost_of = [](const UnitSpec& u, double p) { return u.a + u.b * p + u.c * p * p; };
  auto in_last_box = [&](double p) { return p >= last.p_min - slack && p <= last.p_max + slack; };

  std::vector<double> arg(on.size(), 0.0);
  if (on.size() == 1) {
    if (in_last_box(L)) {
      best.cost = cost_of(last, L);
      arg[0] = L;
    }
  } else if (on.size() == 2) {
    const UnitSpec& u0 = inst.units[on[0]];
    for (double p0 : grid_points(u0, resolution)) {
      const double p1 = L - p0;
      if (!in_last_box(p1)) continue;
      const double c = cost_of(u0, p0) + cost_of(last, p1);
      if (c < best.cost) {
        best.cost = c;
        arg = {p0, p1};
      }
    }
  } else {
    const UnitSpec& u0 = inst.units[on[0]];
    const UnitSpec& u1 = inst.units[on[1]];
    const std::vector<double> g1 = grid_points(u1, resolution);
    for (double p0 : grid_points(u0, resolution)) {
      const double rest = L - p0;
      // p2 = rest - p1 must land in the last box.
      auto first = std::lower_bound(g1.begin(), g1.end(), rest - last.p_max - slack);
      auto stop = std::upper_bound(first, g1.end(), rest - last.p_min + slack);
      const double head = cost_of(u0, p0);
      for (auto it = first; it != stop; ++it) {
        const double p1 = *it;
        const double p2 = rest - p1;
        const double c = head + cost_of(u1, p1) + cost_of(last, p2);
        if (c < best.cost) {
          best.cost = c;
          arg = {p0, p1, p2};
        }
      }
    }
  }

  if (best.cost < kInfeasibleCost) {
    best.feasible = true;
    for (std::size_t k = 0; k < on.size(); ++k) best.powers.powers[on[k]] = arg[k];
  }
  return best;
}

const RankedCommitment* Enumeration::best_feasible() const& {
  if (ranked.empty() || !ranked.front().feasible) return nullptr;
  return &ranked.front();
}

Enumeration enumerate_all(const UcInstance& inst) {
  const std::size_t n = inst.size();
  if (n > kEnumerationGuard) {
    throw SizeGuardError("enumerate_all: " + std::to_string(n) + " units exceeds the guard of " +
                         std::to_string(kEnumerationGuard));
  }
  Enumeration out;
  out.n = n;
  const std::uint64_t total = std::uint64_t{1} << n;
  out.ranked.resize(total);

  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t k = begin; k < end; ++k) {
      const DispatchSolution sol = economic_dispatch(inst, Commitment::from_index(k, n));
      out.ranked[k] = {k, sol.cost, sol.feasible};
    }
  };
  const unsigned workers =
      total < 4096 ? 1U : std::max(1U, std::min(8U, std::thread::hardware_concurrency()));
  if (workers == 1) {
    work(0, total);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t b = std::min<std::uint64_t>(total, w * chunk);
      const std::uint64_t e = std::min<std::uint64_t>(total, b + chunk);
      pool.emplace_back(work, b, e);
    }
  }

  std::sort(out.ranked.begin(), out.ranked.end(),
            [](const RankedCommitment& x, const RankedCommitment& y) {
              if (x.feasible != y.feasible) return x.feasible;
              if (x.cost != y.cost) return x.cost < y.cost;
              return x.index < y.index;
            });
  return out;
}

bool NearOptimalSet::contains(std::uint64_t index) const {
  return std::binary_search(members.begin(), members.end(), index);
}

NearOptimalSet near_optimal_set(const Enumeration& all, double fraction) {
  if (!(fraction >= 0.0)) throw ValidationError("near-optimal fraction must be non-negative");
  const RankedCommitment* best = all.best_feasible();
  if (best == nullptr) throw InfeasibleError("no feasible commitment: near-optimal set is empty");
  NearOptimalSet set;
  set.n = all.n;
  set.optimal_cost = best->cost;
  set.cutoff = (1.0 + fraction) * best->cost;
  for (const auto& r : all.ranked) {
    if (!r.feasible || r.cost > set.cutoff) break;
    set.members.push_back(r.index);
  }
  std::sort(set.members.begin(), set.members.end());
  return set;
}

NearOptimalSet near_optimal_set(const UcInstance& inst, double fraction) {
  return near_optimal_set(enumerate_all(inst), fraction);
}

}  // namespace ucqaoa

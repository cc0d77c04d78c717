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

#include "ucqaoa/qubo.hpp"

#include <algorithm>

#include "ucqaoa/error.hpp"

namespace ucqaoa {

namespace {

void check_lengths(const UcInstance& inst, const ContinuousAssignment& ca, const char* where) {
  const std::size_t n = inst.size();
  if (ca.p.size() != n || ca.s1.size() != n || ca.s2.size() != n) {
    throw DimensionError(std::string(where) + ": continuous assignment does not match " +
                         std::to_string(n) + " units");
  }
}

}  // namespace

PenaltyWeights default_weights(const UcInstance& inst) {
  double mean_b = 0.0;
  for (const auto& u : inst.units) mean_b += u.b;
  mean_b /= static_cast<double>(inst.units.size());
  const double unit = mean_b / inst.load;
  return {kBalanceWeightScale * unit, kLimitWeightScale * unit,
          kLimitWeightScale * unit};
}

double Qubo::evaluate(std::span<const std::uint8_t> y) const {
  if (y.size() != n) throw DimensionError("Qubo::evaluate: length mismatch");
  double v = constant;
  for (std::size_t i = 0; i < n; ++i) {
    if (y[i]) v += linear[i];
  }
  for (const auto& [key, coeff] : quadratic) {
    if (y[key.first] && y[key.second]) v += coeff;
  }
  return v;
}

double Qubo::evaluate(std::uint64_t index) const {
  return evaluate(Commitment::from_index(index, n).bits());
}

double IsingModel::evaluate(std::span<const int> z) const {
  if (z.size() != n) throw DimensionError("IsingModel::evaluate: length mismatch");
  double v = offset;
  for (std::size_t i = 0; i < n; ++i) v += h[i] * z[i];
  for (const auto& [key, coeff] : j) v += coeff * z[key.first] * z[key.second];
  return v;
}

double IsingModel::evaluate(std::uint64_t index) const {
  std::vector<int> z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = ((index >> i) & 1U) ? 1 : -1;
  return evaluate(z);
}

double penalized_objective(const UcInstance& inst, const PenaltyWeights& w, const Commitment& y,
                           const ContinuousAssignment& ca) {
  check_lengths(inst, ca, "penalized_objective");
  if (y.size() != inst.size()) throw DimensionError("penalized_objective: commitment length mismatch");
  double cost = 0.0;
  double supplied = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const UnitSpec& u = inst.units[i];
    const double yi = y.on(i) ? 1.0 : 0.0;
    const double p = ca.p[i];
    cost += u.a * yi + u.b * p + u.c * p * p;
    supplied += p * yi;
    const double lo = p - ca.s1[i] - u.p_min * yi;
    const double hi = p + ca.s2[i] - u.p_max * yi;
    lower += lo * lo;
    upper += hi * hi;
  }
  const double balance = supplied - inst.load;
  return cost + w.lambda1 * balance * balance + w.lambda2 * lower + w.lambda3 * upper;
}

Qubo build_qubo(const UcInstance& inst, const PenaltyWeights& w, const ContinuousAssignment& ca) {
  check_lengths(inst, ca, "build_qubo");
  const std::size_t n = inst.size();
  const double L = inst.load;
  Qubo q;
  q.n = n;
  q.linear.assign(n, 0.0);

  // Load balance: (sum p_i y_i - L)^2.
  q.constant += w.lambda1 * L * L;
  for (std::size_t i = 0; i < n; ++i) {
    const double p = ca.p[i];
    q.linear[i] += w.lambda1 * (p * p - 2.0 * L * p);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double coeff = 2.0 * w.lambda1 * p * ca.p[j];
      if (coeff != 0.0) q.quadratic[{i, j}] += coeff;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const UnitSpec& u = inst.units[i];
    const double p = ca.p[i];
    // Unit cost: A y + (B p + C p^2).
    q.linear[i] += u.a;
    q.constant += u.b * p + u.c * p * p;
    // Lower limit: (d - p_min y)^2 with d = p - s1.
    const double d = p - ca.s1[i];
    q.constant += w.lambda2 * d * d;
    q.linear[i] += w.lambda2 * (u.p_min * u.p_min - 2.0 * d * u.p_min);
    // Upper limit: (e - p_max y)^2 with e = p + s2.
    const double e = p + ca.s2[i];
    q.constant += w.lambda3 * e * e;
    q.linear[i] += w.lambda3 * (u.p_max * u.p_max - 2.0 * e * u.p_max);
  }
  return q;
}

IsingModel qubo_to_ising(const Qubo& q) {
  // y = (z + 1) / 2:
  //   a y      -> a/2 z + a/2
  //   q y_i y_j -> q/4 (z_i z_j + z_i + z_j + 1)
  IsingModel m;
  m.n = q.n;
  m.offset = q.constant;
  m.h.assign(q.n, 0.0);
  for (std::size_t i = 0; i < q.n; ++i) {
    m.h[i] += 0.5 * q.linear[i];
    m.offset += 0.5 * q.linear[i];
  }
  for (const auto& [key, coeff] : q.quadratic) {
    const double quarter = 0.25 * coeff;
    m.j[key] += quarter;
    m.h[key.first] += quarter;
    m.h[key.second] += quarter;
    m.offset += quarter;
  }
  return m;
}

std::vector<double> qubo_diagonal(const Qubo& q, std::size_t guard) {
  if (q.n > guard) {
    throw SizeGuardError("qubo_diagonal: " + std::to_string(q.n) + " variables exceeds the guard of " +
                         std::to_string(guard));
  }
  const std::size_t n = q.n;
  std::vector<double> dense(n * n, 0.0);
  for (const auto& [key, coeff] : q.quadratic) dense[key.first * n + key.second] += coeff;

  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<double> table(size);
  table[0] = q.constant;
  // table[k] extends table[k without its top bit] by that bit's contributions.
  for (std::size_t top = 0; top < n; ++top) {
    const std::uint64_t base = std::uint64_t{1} << top;
    for (std::uint64_t low = 0; low < base; ++low) {
      double v = table[low] + q.linear[top];
      for (std::size_t i = 0; i < top; ++i) {
        if ((low >> i) & 1U) v += dense[i * n + top];
      }
      table[base | low] = v;
    }
  }
  return table;
}

}  // namespace ucqaoa

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

#include "ucqaoa/hybrid.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <cmath>
#include <numbers>
#include <random>

#include "ucqaoa/error.hpp"

namespace ucqaoa {

namespace {

std::vector<double> absolute(const std::vector<double>& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::abs(v[i]);
  return out;
}

// Distribution used for metric snapshots: exact, or empirical frequencies.
ProbabilityDistribution snapshot_distribution(const ProbabilityDistribution& exact,
                                              std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) return exact;
  ProbabilityDistribution emp;
  emp.probs.assign(exact.probs.size(), 0.0);
  for (const auto& [k, count] : sample(exact, shots, seed)) {
    emp.probs[k] = static_cast<double>(count) / static_cast<double>(shots);
  }
  return emp;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

VariationalParams scaled_angles(const ThetaVector& theta, double phase_scale) {
  if (!(phase_scale > 0.0) || !std::isfinite(phase_scale)) {
    throw ValidationError("phase scale must be positive and finite");
  }
  VariationalParams vp = theta.angles();
  for (double& g : vp.gamma) g /= phase_scale;
  return vp;
}

double table_range(std::span<const double> diag) {
  const auto [lo, hi] = std::minmax_element(diag.begin(), diag.end());
  return *hi - *lo;
}

std::vector<double> ThetaVector::pack() const {
  std::vector<double> flat;
  flat.reserve(2 * gamma.size() + 3 * p.size());
  for (const auto* part : {&gamma, &beta, &p, &s1, &s2}) flat.insert(flat.end(), part->begin(), part->end());
  return flat;
}

ThetaVector ThetaVector::unpack(std::span<const double> flat, std::size_t depth, std::size_t units) {
  if (flat.size() != 2 * depth + 3 * units) {
    throw DimensionError("ThetaVector::unpack: expected " + std::to_string(2 * depth + 3 * units) +
                         " entries, got " + std::to_string(flat.size()));
  }
  ThetaVector t;
  auto it = flat.begin();
  auto take = [&](std::vector<double>& dst, std::size_t count) {
    dst.assign(it, it + static_cast<std::ptrdiff_t>(count));
    it += static_cast<std::ptrdiff_t>(count);
  };
  take(t.gamma, depth);
  take(t.beta, depth);
  take(t.p, units);
  take(t.s1, units);
  take(t.s2, units);
  return t;
}

ContinuousAssignment ThetaVector::continuous() const {
  return {absolute(p), absolute(s1), absolute(s2)};
}

void HybridConfig::validate() const {
  if (depth < 1) throw ValidationError("hybrid: depth must be at least 1");
  if (max_iterations < 1) throw ValidationError("hybrid: max_iterations must be at least 1");
  if (cadence < 1) throw ValidationError("hybrid: metric cadence must be at least 1");
  if (top_k < 1) throw ValidationError("hybrid: top-k must be at least 1");
  if (weights && (weights->lambda1 < 0 || weights->lambda2 < 0 || weights->lambda3 < 0)) {
    throw ValidationError("hybrid: penalty weights must be non-negative");
  }
}

PenaltyWeights HybridConfig::resolved_weights(const UcInstance& inst) const {
  return weights ? *weights : default_weights(inst);
}

double objective(const UcInstance& inst, const PenaltyWeights& w, const ThetaVector& theta,
                 std::uint64_t shots, std::uint64_t sample_seed, double phase_scale) {
  if (theta.units() != inst.size()) throw DimensionError("objective: theta does not match unit count");
  const std::vector<double> diag = qubo_diagonal(build_qubo(inst, w, theta.continuous()));
  const ProbabilityDistribution pd = qaoa_distribution(diag, scaled_angles(theta, phase_scale));
  if (shots == 0) return expectation(pd, diag);
  return histogram_expectation(sample(pd, shots, sample_seed), diag);
}

ThetaVector initial_theta(const UcInstance& inst, const HybridConfig& cfg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi / 4.0);
  ThetaVector t;
  for (std::size_t i = 0; i < cfg.depth; ++i) t.gamma.push_back(angle(rng));
  for (std::size_t i = 0; i < cfg.depth; ++i) t.beta.push_back(angle(rng));
  const double capacity = inst.total_capacity();
  for (const UnitSpec& u : inst.units) {
    const double share = capacity > 0.0 ? inst.load * u.p_max / capacity : 0.0;
    const double p = std::clamp(share, u.p_min, u.p_max);
    t.p.push_back(p);
    t.s1.push_back(p - u.p_min);
    t.s2.push_back(u.p_max - p);
  }
  return t;
}

RunHistory run_hybrid(const UcInstance& inst, const HybridConfig& cfg) {
  if (inst.size() > kSimulatorQubitGuard) {
    throw SizeGuardError("run_hybrid: " + std::to_string(inst.size()) +
                         " units exceeds the simulator guard");
  }
  return run_hybrid(inst, cfg, near_optimal_set(inst, cfg.near_opt_fraction));
}

RunHistory run_hybrid(const UcInstance& inst, const HybridConfig& cfg, const NearOptimalSet& nos) {
  cfg.validate();
  if (inst.size() > kSimulatorQubitGuard) {
    throw SizeGuardError("run_hybrid: " + std::to_string(inst.size()) +
                         " units exceeds the simulator guard");
  }
  if (nos.members.empty()) throw InfeasibleError("run_hybrid: near-optimal set is empty");
  if (nos.n != inst.size()) throw DimensionError("run_hybrid: near-optimal set is for another instance");

  const auto start = std::chrono::steady_clock::now();
  const std::size_t depth = cfg.depth;
  const std::size_t units = inst.size();

  RunHistory hist;
  hist.weights = cfg.resolved_weights(inst);
  hist.near_optimal = nos;

  const ThetaVector theta0 = initial_theta(inst, cfg, cfg.seed);
  double scale = cfg.phase_scale;
  if (scale == 0.0) {
    scale = table_range(qubo_diagonal(build_qubo(inst, hist.weights, theta0.continuous())));
    if (!(scale > 0.0)) scale = 1.0;
  }
  hist.phase_scale = scale;

  std::uint64_t evaluation = 0;
  Objective f = [&](std::span<const double> x) {
    const ThetaVector theta = ThetaVector::unpack(x, depth, units);
    return objective(inst, hist.weights, theta, cfg.shots, mix_seed(cfg.seed, evaluation++), scale);
  };

  auto record = [&](std::size_t iter, std::span<const double> x, double fx) {
    const ThetaVector theta = ThetaVector::unpack(x, depth, units);
    const std::vector<double> diag = qubo_diagonal(build_qubo(inst, hist.weights, theta.continuous()));
    const ProbabilityDistribution pd =
        snapshot_distribution(qaoa_distribution(diag, scaled_angles(theta, scale)), cfg.shots,
                              mix_seed(cfg.seed ^ 0x5A5A5A5AULL, iter));
    const MetricSnapshot snap = snapshot_metrics(pd, nos, cfg.top_k);
    HistoryRecord r;
    r.iter = iter;
    r.objective = fx;
    r.near_opt_prob = snap.near_opt_prob;
    r.avg_hamming_top50 = snap.avg_hamming_top50;
    r.best_bitstring = bitstring(snap.top_bitstrings.front(), units);
    if (cfg.record_timing) {
      r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    hist.records.push_back(std::move(r));
  };

  NelderMeadOptions opts;
  opts.max_iterations = cfg.max_iterations;
  opts.max_evaluations = cfg.max_evaluations ? cfg.max_evaluations : std::numeric_limits<std::size_t>::max();
  opts.tol_x = cfg.tol_x;
  opts.tol_f = cfg.tol_f;

  const NelderMeadResult res =
      nelder_mead(f, theta0.pack(), opts, [&](std::size_t iter, std::span<const double> x, double fx) {
        if (iter % cfg.cadence == 0) record(iter, x, fx);
      });
  if (hist.records.empty() || hist.records.back().iter != res.iterations) record(res.iterations, res.x, res.f);

  hist.final_theta = ThetaVector::unpack(res.x, depth, units);
  hist.final_objective = res.f;
  hist.iterations = res.iterations;
  hist.evaluations = res.evaluations;
  const std::vector<double> diag = qubo_diagonal(build_qubo(inst, hist.weights, hist.final_theta.continuous()));
  hist.final_distribution = qaoa_distribution(diag, scaled_angles(hist.final_theta, scale));
  return hist;
}

}  // namespace ucqaoa

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

#include "ucqaoa/qaoa.hpp"

#include <bit>
#include <cmath>
#include <random>

#include "ucqaoa/error.hpp"

namespace ucqaoa {

namespace {

std::size_t log2_exact(std::size_t dim, const char* where) {
  if (dim == 0 || !std::has_single_bit(dim)) {
    throw DimensionError(std::string(where) + ": length " + std::to_string(dim) +
                         " is not a power of two");
  }
  return static_cast<std::size_t>(std::countr_zero(dim));
}

}  // namespace

void VariationalParams::validate() const {
  if (gamma.empty()) throw ValidationError("variational parameters: depth must be at least 1");
  if (gamma.size() != beta.size()) {
    throw DimensionError("variational parameters: gamma and beta lengths differ");
  }
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (!std::isfinite(gamma[i]) || !std::isfinite(beta[i])) {
      throw ValidationError("variational parameters: angles must be finite");
    }
  }
}

Statevector::Statevector(std::vector<Amplitude> amplitudes) : amps_(std::move(amplitudes)) {
  qubits_ = log2_exact(amps_.size(), "Statevector");
}

double Statevector::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

std::size_t ProbabilityDistribution::qubits() const {
  return log2_exact(probs.size(), "ProbabilityDistribution");
}

double ProbabilityDistribution::total() const {
  double s = 0.0;
  for (double p : probs) s += p;
  return s;
}

Statevector uniform_state(std::size_t n, std::size_t guard) {
  if (n < 1) throw ValidationError("uniform_state: at least one qubit required");
  if (n > guard) {
    throw SizeGuardError("uniform_state: " + std::to_string(n) + " qubits exceeds the guard of " +
                         std::to_string(guard));
  }
  const std::size_t dim = std::size_t{1} << n;
  const double amp = std::pow(2.0, -0.5 * static_cast<double>(n));
  return Statevector(std::vector<Amplitude>(dim, Amplitude(amp, 0.0)));
}

void apply_cost_phase(Statevector& sv, std::span<const double> diag, double gamma) {
  if (diag.size() != sv.dimension()) throw DimensionError("apply_cost_phase: table length mismatch");
  auto amps = sv.amplitudes();
  for (std::size_t k = 0; k < amps.size(); ++k) {
    const double theta = -gamma * diag[k];
    amps[k] *= Amplitude(std::cos(theta), std::sin(theta));
  }
}

void apply_mixer(Statevector& sv, double beta) {
  const double c = std::cos(beta);
  const Amplitude ms(0.0, -std::sin(beta));
  auto amps = sv.amplitudes();
  const std::size_t dim = amps.size();
  for (std::size_t q = 0; q < sv.qubits(); ++q) {
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
      for (std::size_t k = block; k < block + stride; ++k) {
        const Amplitude a = amps[k];
        const Amplitude b = amps[k + stride];
        amps[k] = c * a + ms * b;
        amps[k + stride] = ms * a + c * b;
      }
    }
  }
}

void gate_decomposed_phase(Statevector& sv, const IsingModel& ising, double gamma) {
  if (ising.n != sv.qubits()) throw DimensionError("gate_decomposed_phase: qubit count mismatch");
  auto amps = sv.amplitudes();
  auto phase = [](double theta) { return Amplitude(std::cos(theta), std::sin(theta)); };

  // z_i = +1 for bit 1, so the Z-phase gate on qubit i is diag(e^{+i g h}, e^{-i g h}).
  for (std::size_t i = 0; i < ising.n; ++i) {
    if (ising.h[i] == 0.0) continue;
    const Amplitude up = phase(-gamma * ising.h[i]);
    const Amplitude down = phase(gamma * ising.h[i]);
    for (std::size_t k = 0; k < amps.size(); ++k) amps[k] *= ((k >> i) & 1U) ? up : down;
  }
  for (const auto& [key, coupling] : ising.j) {
    if (coupling == 0.0) continue;
    const Amplitude same = phase(-gamma * coupling);
    const Amplitude differ = phase(gamma * coupling);
    for (std::size_t k = 0; k < amps.size(); ++k) {
      const bool parity = (((k >> key.first) ^ (k >> key.second)) & 1U) != 0;
      amps[k] *= parity ? differ : same;
    }
  }
  if (ising.offset != 0.0) {
    const Amplitude g = phase(-gamma * ising.offset);
    for (auto& a : amps) a *= g;
  }
}

Statevector qaoa_state(std::span<const double> diag, const VariationalParams& vp) {
  vp.validate();
  Statevector sv = uniform_state(log2_exact(diag.size(), "qaoa_distribution"));
  for (std::size_t layer = 0; layer < vp.depth(); ++layer) {
    apply_cost_phase(sv, diag, vp.gamma[layer]);
    apply_mixer(sv, vp.beta[layer]);
  }
  return sv;
}

ProbabilityDistribution probabilities(const Statevector& sv) {
  ProbabilityDistribution pd;
  pd.probs.reserve(sv.dimension());
  for (const auto& a : sv.amplitudes()) pd.probs.push_back(std::norm(a));
  return pd;
}

ProbabilityDistribution qaoa_distribution(std::span<const double> diag, const VariationalParams& vp) {
  return probabilities(qaoa_state(diag, vp));
}

double expectation(const ProbabilityDistribution& pd, std::span<const double> diag) {
  if (pd.probs.size() != diag.size()) throw DimensionError("expectation: length mismatch");
  double e = 0.0;
  for (std::size_t k = 0; k < diag.size(); ++k) e += pd.probs[k] * diag[k];
  return e;
}

Histogram sample(const ProbabilityDistribution& pd, std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw ValidationError("sample: shots must be at least 1");
  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::uint64_t> draw(pd.probs.begin(), pd.probs.end());
  Histogram hist;
  for (std::uint64_t s = 0; s < shots; ++s) ++hist[draw(rng)];
  return hist;
}

double histogram_expectation(const Histogram& hist, std::span<const double> diag) {
  double total = 0.0;
  std::uint64_t shots = 0;
  for (const auto& [k, count] : hist) {
    if (k >= diag.size()) throw DimensionError("histogram_expectation: outcome outside table");
    total += diag[k] * static_cast<double>(count);
    shots += count;
  }
  if (shots == 0) throw ValidationError("histogram_expectation: empty histogram");
  return total / static_cast<double>(shots);
}

}  // namespace ucqaoa

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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "ucqaoa/qubo.hpp"

namespace ucqaoa {

using Amplitude = std::complex<double>;

// Angles of a depth-P circuit. No wrapping is applied.
struct VariationalParams {
  std::vector<double> gamma;
  std::vector<double> beta;

  std::size_t depth() const noexcept { return gamma.size(); }
  void validate() const;
};

class Statevector {
 public:
  Statevector() = default;
  explicit Statevector(std::vector<Amplitude> amplitudes);

  std::size_t qubits() const noexcept { return qubits_; }
  std::size_t dimension() const noexcept { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
  std::span<Amplitude> amplitudes() noexcept { return amps_; }
  const Amplitude& operator[](std::size_t k) const { return amps_[k]; }

  double norm_squared() const;

 private:
  std::size_t qubits_ = 0;
  std::vector<Amplitude> amps_;
};

struct ProbabilityDistribution {
  std::vector<double> probs;

  std::size_t qubits() const;
  double total() const;
};

// Equal superposition over all 2^n basis states.
Statevector uniform_state(std::size_t n, std::size_t guard = kSimulatorQubitGuard);

// amplitude[k] *= exp(-i gamma diag[k]).
void apply_cost_phase(Statevector& sv, std::span<const double> diag, double gamma);

// exp(-i beta X) on every qubit.
void apply_mixer(Statevector& sv, double beta);

// Same unitary as apply_cost_phase on the Ising model's diagonal, built from
// single-qubit Z phases, two-qubit ZZ phases and a global offset phase.
void gate_decomposed_phase(Statevector& sv, const IsingModel& ising, double gamma);

Statevector qaoa_state(std::span<const double> diag, const VariationalParams& vp);
ProbabilityDistribution qaoa_distribution(std::span<const double> diag, const VariationalParams& vp);

ProbabilityDistribution probabilities(const Statevector& sv);

double expectation(const ProbabilityDistribution& pd, std::span<const double> diag);

// Basis-state index -> count. Multinomial draw, reproducible for a fixed seed.
using Histogram = std::map<std::uint64_t, std::uint64_t>;

Histogram sample(const ProbabilityDistribution& pd, std::uint64_t shots, std::uint64_t seed);

double histogram_expectation(const Histogram& hist, std::span<const double> diag);

}  // namespace ucqaoa

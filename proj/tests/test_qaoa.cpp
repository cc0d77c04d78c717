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
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ucqaoa/error.hpp"
#include "ucqaoa/qaoa.hpp"

namespace ucqaoa {
namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> random_table(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> v(-3.0, 3.0);
  std::vector<double> t(std::size_t{1} << n);
  for (double& x : t) x = v(rng);
  return t;
}

TEST_CASE("uniform state") {
  const Statevector one = uniform_state(1);
  CHECK(one[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(one[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  const Statevector two = uniform_state(2);
  for (std::size_t k = 0; k < 4; ++k) CHECK(two[k] == Amplitude(0.5, 0.0));
  for (std::size_t n = 1; n <= 12; ++n) CHECK(uniform_state(n).norm_squared() == doctest::Approx(1.0));
  CHECK_THROWS_AS(uniform_state(21), SizeGuardError);
}

TEST_CASE("cost phase") {
  Statevector sv = uniform_state(2);
  const std::vector<double> diag{0.3, 1.1, -2.0, 5.0};
  const Statevector before = sv;
  apply_cost_phase(sv, diag, 0.0);
  for (std::size_t k = 0; k < 4; ++k) CHECK(sv[k] == before[k]);

  Statevector c = uniform_state(2);
  apply_cost_phase(c, std::vector<double>(4, 2.5), 0.7);
  for (std::size_t k = 0; k < 4; ++k) CHECK(std::norm(c[k]) == doctest::Approx(0.25));

  Statevector one(std::vector<Amplitude>{Amplitude(0.6), Amplitude(0.8)});
  apply_cost_phase(one, std::vector<double>{0.0, kPi}, 1.0);
  CHECK(one[0].real() == doctest::Approx(0.6));
  CHECK(one[1].real() == doctest::Approx(-0.8));
  CHECK(std::abs(one[1].imag()) < 1e-15);

  Statevector bad = uniform_state(2);
  CHECK_THROWS_AS(apply_cost_phase(bad, std::vector<double>{0.0, 1.0}, 1.0), DimensionError);
}

TEST_CASE("mixer") {
  Statevector sv(std::vector<Amplitude>{Amplitude(1.0), Amplitude(0.0)});
  apply_mixer(sv, kPi / 2.0);
  CHECK(std::abs(sv[0]) < 1e-15);
  CHECK(sv[1].real() == doctest::Approx(0.0));
  CHECK(sv[1].imag() == doctest::Approx(-1.0));

  Statevector id = uniform_state(3);
  apply_cost_phase(id, std::vector<double>{0, 1, 2, 3, 4, 5, 6, 7}, 0.4);
  const Statevector before = id;
  apply_mixer(id, 0.0);
  for (std::size_t k = 0; k < 8; ++k) CHECK(id[k] == before[k]);

  Statevector u = uniform_state(4);
  apply_mixer(u, 1.234);
  for (std::size_t k = 0; k < 16; ++k) CHECK(std::norm(u[k]) == doctest::Approx(1.0 / 16));
}

TEST_CASE("mixer matches a dense Kronecker product") {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> g;
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<Amplitude> amps(std::size_t{1} << n);
    for (auto& a : amps) a = Amplitude(g(rng), g(rng));
    const double beta = std::uniform_real_distribution<double>(-3, 3)(rng);
    Statevector sv(amps);
    apply_mixer(sv, beta);
    const auto ref = testing::mat_vec(testing::dense_mixer(n, beta), amps);
    for (std::size_t k = 0; k < amps.size(); ++k) CHECK(std::abs(sv[k] - ref[k]) < 1e-12);
  }
}

TEST_CASE("mixer period is pi up to a global phase") {
  std::mt19937_64 rng(37);
  const auto diag = random_table(4, rng);
  const auto a = qaoa_distribution(diag, {{0.8}, {0.3}});
  const auto b = qaoa_distribution(diag, {{0.8}, {0.3 + kPi}});
  for (std::size_t k = 0; k < 16; ++k) CHECK(a.probs[k] == doctest::Approx(b.probs[k]).epsilon(1e-12));
}

TEST_CASE("full circuit matches the dense reference") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> ang(-2.0, 2.0);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto diag = random_table(n, rng);
    VariationalParams vp;
    for (int l = 0; l < 3; ++l) {
      vp.gamma.push_back(ang(rng));
      vp.beta.push_back(ang(rng));
    }
    const auto pd = qaoa_distribution(diag, vp);
    const auto ref = testing::dense_qaoa_probs(diag, vp.gamma, vp.beta);
    for (std::size_t k = 0; k < ref.size(); ++k) CHECK(std::abs(pd.probs[k] - ref[k]) < 1e-12);
  }
}

TEST_CASE("distribution identities") {
  std::mt19937_64 rng(43);
  const auto diag = random_table(5, rng);
  const auto zero = qaoa_distribution(diag, {{0.0, 0.0}, {0.0, 0.0}});
  for (double p : zero.probs) CHECK(p == doctest::Approx(1.0 / 32).epsilon(1e-14));
  const auto gamma_zero = qaoa_distribution(diag, {{0.0}, {0.9}});
  for (double p : gamma_zero.probs) CHECK(p == doctest::Approx(1.0 / 32).epsilon(1e-14));
  const auto flat = qaoa_distribution(std::vector<double>(32, 4.2), {{1.3, -0.2}, {0.4, 2.2}});
  for (double p : flat.probs) CHECK(p == doctest::Approx(1.0 / 32).epsilon(1e-12));
}

TEST_CASE("single-qubit closed form") {
  const double c = 2.0;
  const auto peak = qaoa_distribution(std::vector<double>{0.0, c}, {{kPi / (2 * c)}, {kPi / 4}});
  CHECK(peak.probs[1] == doctest::Approx(1.0).epsilon(1e-12));
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int t = 0; t < 50; ++t) {
    const double gamma = u(rng), beta = u(rng), cc = u(rng);
    const auto pd = qaoa_distribution(std::vector<double>{0.0, cc}, {{gamma}, {beta}});
    const double p1 = testing::closed_form_prob_one(gamma, beta, cc);
    CHECK(std::abs(pd.probs[1] - p1) < 1e-12);
    CHECK(std::abs(pd.probs[0] - (1.0 - p1)) < 1e-12);
  }
}

TEST_CASE("norm preserved through eight layers") {
  std::mt19937_64 rng(53);
  const auto diag = random_table(10, rng);
  std::uniform_real_distribution<double> ang(-3.0, 3.0);
  VariationalParams vp;
  for (int l = 0; l < 8; ++l) {
    vp.gamma.push_back(ang(rng));
    vp.beta.push_back(ang(rng));
  }
  CHECK(std::abs(qaoa_state(diag, vp).norm_squared() - 1.0) < 1e-9);
}

TEST_CASE("gate decomposition agrees with the diagonal up to global phase") {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  for (std::size_t n = 1; n <= 6; ++n) {
    Qubo q;
    q.n = n;
    q.constant = coef(rng);
    for (std::size_t i = 0; i < n; ++i) q.linear.push_back(coef(rng));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) q.quadratic[{i, j}] = coef(rng);
    const double gamma = coef(rng);
    Statevector direct = uniform_state(n);
    apply_mixer(direct, 0.37);
    Statevector gates = direct;
    apply_cost_phase(direct, qubo_diagonal(q), gamma);
    gate_decomposed_phase(gates, qubo_to_ising(q), gamma);
    Amplitude overlap(0.0);
    for (std::size_t k = 0; k < direct.dimension(); ++k) overlap += std::conj(direct[k]) * gates[k];
    CHECK(std::abs(overlap) >= 1.0 - 1e-8);
  }

  IsingModel zero{2, 0.0, {0.0, 0.0}, {}};
  Statevector sv = uniform_state(2);
  gate_decomposed_phase(sv, zero, 1.0);
  for (std::size_t k = 0; k < 4; ++k) CHECK(sv[k] == Amplitude(0.5));

  IsingModel coupling{2, 0.0, {0.0, 0.0}, {{{0, 1}, 1.0}}};
  Statevector parity = uniform_state(2);
  gate_decomposed_phase(parity, coupling, kPi);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(parity[k].real() == doctest::Approx(-0.5));
    CHECK(std::abs(parity[k].imag()) < 1e-12);
  }
  IsingModel half{2, 0.0, {0.0, 0.0}, {{{0, 1}, 0.5}}};
  Statevector pattern = uniform_state(2);
  gate_decomposed_phase(pattern, half, kPi);
  CHECK(pattern[0].imag() == doctest::Approx(-0.5));
  CHECK(pattern[3].imag() == doctest::Approx(-0.5));
  CHECK(pattern[1].imag() == doctest::Approx(0.5));
  CHECK(pattern[2].imag() == doctest::Approx(0.5));
}

TEST_CASE("expectation") {
  const std::vector<double> diag{1.0, 2.0, 3.0, 6.0};
  ProbabilityDistribution uniform{{0.25, 0.25, 0.25, 0.25}};
  CHECK(expectation(uniform, diag) == doctest::Approx(3.0));
  ProbabilityDistribution point{{0.0, 0.0, 1.0, 0.0}};
  CHECK(expectation(point, diag) == 3.0);
  std::mt19937_64 rng(61);
  const auto table = random_table(6, rng);
  const auto pd = qaoa_distribution(table, {{0.5, 1.1}, {0.2, -0.7}});
  const double e = expectation(pd, table);
  CHECK(e >= *std::min_element(table.begin(), table.end()) - 1e-12);
  CHECK(e <= *std::max_element(table.begin(), table.end()) + 1e-12);
}

TEST_CASE("sampling") {
  ProbabilityDistribution point{{0.0, 0.0, 1.0, 0.0}};
  const Histogram h = sample(point, 1000, 5);
  REQUIRE(h.size() == 1);
  CHECK(h.at(2) == 1000);

  ProbabilityDistribution uniform{{0.25, 0.25, 0.25, 0.25}};
  const Histogram big = sample(uniform, 1000000, 9);
  const double sigma = std::sqrt(1e6 * 0.25 * 0.75);
  for (std::uint64_t k = 0; k < 4; ++k) CHECK(std::abs(double(big.at(k)) - 250000.0) <= 5 * sigma);
  CHECK(sample(uniform, 5000, 77) == sample(uniform, 5000, 77));

  const std::vector<double> diag{1.0, 2.0, 3.0, 6.0};
  CHECK(histogram_expectation(h, diag) == 3.0);
}

TEST_CASE("parameter validation") {
  VariationalParams mismatch{{0.1, 0.2}, {0.3}};
  CHECK_THROWS_AS(mismatch.validate(), ValidationError);
  VariationalParams nan{{std::nan("")}, {0.1}};
  CHECK_THROWS_AS(nan.validate(), ValidationError);
}

}  // namespace
}  // namespace ucqaoa

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
#include <string>
#include <string_view>
#include <vector>

namespace ucqaoa {

using Megawatts = double;
using Dollars = double;

// Generation limits and quadratic cost coefficients of one unit.
struct UnitSpec {
  Megawatts p_min = 0.0;
  Megawatts p_max = 0.0;
  double a = 0.0;  // fixed cost when ON ($)
  double b = 0.0;  // linear cost ($/MW)
  double c = 0.0;  // quadratic cost ($/MW^2)

  bool operator==(const UnitSpec&) const = default;
};

struct UcInstance {
  std::string name;
  Megawatts load = 0.0;
  std::vector<UnitSpec> units;

  std::size_t size() const noexcept { return units.size(); }
  Megawatts total_capacity() const noexcept;

  bool operator==(const UcInstance&) const = default;
};

// ON/OFF decision per unit. Bit i belongs to unit i; as an integer index,
// unit 0 is the least significant bit. The text form writes unit 0 first.
class Commitment {
 public:
  Commitment() = default;
  explicit Commitment(std::vector<std::uint8_t> bits);

  static Commitment all_off(std::size_t n) { return Commitment(std::vector<std::uint8_t>(n, 0)); }
  static Commitment all_on(std::size_t n) { return Commitment(std::vector<std::uint8_t>(n, 1)); }
  static Commitment from_index(std::uint64_t index, std::size_t n);
  // Parses '0'/'1' characters, unit 0 first.
  static Commitment from_string(std::string_view text);

  std::size_t size() const noexcept { return bits_.size(); }
  bool on(std::size_t i) const { return bits_.at(i) != 0; }
  void set(std::size_t i, bool value) { bits_.at(i) = value ? 1 : 0; }
  std::size_t count_on() const noexcept;
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  std::uint64_t index() const;
  std::string to_string() const;

  bool operator==(const Commitment&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// Text form of a basis-state index: character i is bit i.
std::string bitstring(std::uint64_t index, std::size_t n);

struct PowerAssignment {
  std::vector<Megawatts> powers;

  std::size_t size() const noexcept { return powers.size(); }
  bool operator==(const PowerAssignment&) const = default;
};

// A*y + B*p + C*p^2 as written; the B and C terms do not look at y.
Dollars unit_cost(const UnitSpec& unit, bool on, Megawatts p);

// Physical cost: OFF units contribute nothing regardless of their power entry.
Dollars total_cost(const UcInstance& inst, const Commitment& commit, const PowerAssignment& pa);

enum class LimitKind { kBelowMin, kAboveMax, kOffNonzero };

struct LimitViolation {
  std::size_t unit = 0;
  LimitKind kind = LimitKind::kBelowMin;
  Megawatts power = 0.0;
};

struct FeasibilityReport {
  bool load_met = false;
  std::vector<LimitViolation> limit_violations;

  bool feasible() const noexcept { return load_met && limit_violations.empty(); }
};

inline constexpr double kDefaultFeasibilityTol = 1e-6;

// Load balance is checked to tol*L; bounds to tol*max(1, |bound|); OFF units
// must sit at zero within tol*max(1, L).
FeasibilityReport check_feasible(const UcInstance& inst, const Commitment& commit,
                                 const PowerAssignment& pa, double tol = kDefaultFeasibilityTol);

// Validation of the data model invariants. Throws ValidationError naming the
// offending field.
void validate(const UcInstance& inst);

// Non-fatal observations about an instance (currently: load above capacity).
std::vector<std::string> instance_warnings(const UcInstance& inst);

UcInstance load_instance(std::string_view json_text);
UcInstance load_instance_file(const std::string& path);
std::string serialize_instance(const UcInstance& inst);

inline constexpr Megawatts kDefaultTenUnitLoad = 700.0;

// The 10-unit reference system.
UcInstance builtin_ten_unit(Megawatts load = kDefaultTenUnitLoad);

}  // namespace ucqaoa

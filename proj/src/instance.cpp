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

#include "ucqaoa/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "ucqaoa/error.hpp"

namespace ucqaoa {

namespace {

using nlohmann::json;

double require_number(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(path + "." + key + ": missing field");
  if (!it->is_number()) throw ValidationError(path + "." + key + ": expected a number");
  double v = it->get<double>();
  if (!std::isfinite(v)) throw ValidationError(path + "." + key + ": must be finite");
  return v;
}

}  // namespace

Megawatts UcInstance::total_capacity() const noexcept {
  return std::accumulate(units.begin(), units.end(), 0.0,
                         [](double acc, const UnitSpec& u) { return acc + u.p_max; });
}

Commitment::Commitment(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) b = b ? 1 : 0;
}

Commitment Commitment::from_index(std::uint64_t index, std::size_t n) {
  if (n > 64) throw SizeGuardError("commitment index supports at most 64 units");
  std::vector<std::uint8_t> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = static_cast<std::uint8_t>((index >> i) & 1U);
  return Commitment(std::move(bits));
}

Commitment Commitment::from_string(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw ValidationError("bitstring '" + std::string(text) + "': expected only 0/1 characters");
    }
    bits.push_back(ch == '1' ? 1 : 0);
  }
  return Commitment(std::move(bits));
}

std::size_t Commitment::count_on() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::uint64_t Commitment::index() const {
  if (bits_.size() > 64) throw SizeGuardError("commitment index supports at most 64 units");
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) k |= std::uint64_t{1} << i;
  }
  return k;
}

std::string Commitment::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) s[i] = '1';
  }
  return s;
}

std::string bitstring(std::uint64_t index, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t i = 0; i < n; ++i) {
    if ((index >> i) & 1U) s[i] = '1';
  }
  return s;
}

Dollars unit_cost(const UnitSpec& unit, bool on, Megawatts p) {
  return (on ? unit.a : 0.0) + unit.b * p + unit.c * p * p;
}

Dollars total_cost(const UcInstance& inst, const Commitment& commit, const PowerAssignment& pa) {
  if (commit.size() != inst.size() || pa.size() != inst.size()) {
    throw DimensionError("total_cost: expected " + std::to_string(inst.size()) +
                         " entries, got commitment " + std::to_string(commit.size()) +
                         " and powers " + std::to_string(pa.size()));
  }
  Dollars sum = 0.0;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (commit.on(i)) sum += unit_cost(inst.units[i], true, pa.powers[i]);
  }
  return sum;
}

FeasibilityReport check_feasible(const UcInstance& inst, const Commitment& commit,
                                 const PowerAssignment& pa, double tol) {
  if (commit.size() != inst.size() || pa.size() != inst.size()) {
    throw DimensionError("check_feasible: vector lengths do not match unit count");
  }
  FeasibilityReport report;
  Megawatts supplied = 0.0;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const UnitSpec& u = inst.units[i];
    const Megawatts p = pa.powers[i];
    if (!commit.on(i)) {
      if (std::abs(p) > tol * std::max(1.0, inst.load)) {
        report.limit_violations.push_back({i, LimitKind::kOffNonzero, p});
      }
      continue;
    }
    supplied += p;
    if (p < u.p_min - tol * std::max(1.0, u.p_min)) {
      report.limit_violations.push_back({i, LimitKind::kBelowMin, p});
    } else if (p > u.p_max + tol * std::max(1.0, u.p_max)) {
      report.limit_violations.push_back({i, LimitKind::kAboveMax, p});
    }
  }
  report.load_met = std::abs(supplied - inst.load) <= tol * inst.load;
  return report;
}

void validate(const UcInstance& inst) {
  if (inst.units.empty()) throw ValidationError("units: at least one unit is required");
  if (!std::isfinite(inst.load) || inst.load <= 0.0) {
    throw ValidationError("load: must be a positive finite number");
  }
  for (std::size_t i = 0; i < inst.units.size(); ++i) {
    const UnitSpec& u = inst.units[i];
    const std::string path = "units[" + std::to_string(i) + "]";
    const std::pair<const char*, double> fields[] = {
        {"p_min", u.p_min}, {"p_max", u.p_max}, {"a", u.a}, {"b", u.b}, {"c", u.c}};
    for (const auto& [key, value] : fields) {
      if (!std::isfinite(value)) throw ValidationError(path + "." + key + ": must be finite");
      if (value < 0.0) throw ValidationError(path + "." + key + ": must be non-negative");
    }
    if (u.p_min > u.p_max) {
      throw ValidationError(path + ": p_min " + std::to_string(u.p_min) + " exceeds p_max " +
                            std::to_string(u.p_max));
    }
  }
}

std::vector<std::string> instance_warnings(const UcInstance& inst) {
  std::vector<std::string> out;
  if (inst.load > inst.total_capacity()) {
    std::ostringstream os;
    os << "load " << inst.load << " MW exceeds total capacity " << inst.total_capacity()
       << " MW; no commitment is feasible";
    out.push_back(os.str());
  }
  return out;
}

UcInstance load_instance(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("instance document: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("instance document: expected a JSON object");

  UcInstance inst;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw ValidationError("name: expected a string");
    inst.name = it->get<std::string>();
  }
  inst.load = require_number(doc, "load", "$");
  auto units = doc.find("units");
  if (units == doc.end()) throw ValidationError("units: missing field");
  if (!units->is_array()) throw ValidationError("units: expected an array");
  for (std::size_t i = 0; i < units->size(); ++i) {
    const json& u = (*units)[i];
    const std::string path = "units[" + std::to_string(i) + "]";
    if (!u.is_object()) throw ValidationError(path + ": expected an object");
    UnitSpec unit;
    unit.p_min = require_number(u, "p_min", path);
    unit.p_max = require_number(u, "p_max", path);
    unit.a = require_number(u, "a", path);
    unit.b = require_number(u, "b", path);
    unit.c = require_number(u, "c", path);
    inst.units.push_back(unit);
  }
  validate(inst);
  return inst;
}

UcInstance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open instance file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_instance(buf.str());
}

std::string serialize_instance(const UcInstance& inst) {
  json doc;
  doc["name"] = inst.name;
  doc["load"] = inst.load;
  doc["units"] = json::array();
  for (const UnitSpec& u : inst.units) {
    doc["units"].push_back(
        {{"p_min", u.p_min}, {"p_max", u.p_max}, {"a", u.a}, {"b", u.b}, {"c", u.c}});
  }
  return doc.dump(2) + "\n";
}

UcInstance builtin_ten_unit(Megawatts load) {
  UcInstance inst;
  inst.name = "ten-unit";
  inst.load = load;
  inst.units = {
      {150, 455, 1000, 16.19, 0.00048}, {150, 455, 970, 17.26, 0.00031},
      {20, 130, 700, 16.60, 0.002},     {20, 130, 680, 16.50, 0.00211},
      {25, 162, 450, 19.70, 0.00398},   {20, 80, 370, 22.26, 0.00712},
      {25, 85, 480, 27.74, 0.0079},     {10, 55, 660, 25.92, 0.00413},
      {10, 55, 665, 27.27, 0.00222},    {10, 55, 670, 27.79, 0.00173},
  };
  return inst;
}

}  // namespace ucqaoa

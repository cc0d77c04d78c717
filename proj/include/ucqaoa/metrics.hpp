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
#include <span>
#include <string>
#include <vector>

#include "ucqaoa/dispatch.hpp"
#include "ucqaoa/qaoa.hpp"

namespace ucqaoa {

std::size_t hamming(const Commitment& a, const Commitment& b);
std::size_t hamming(std::uint64_t a, std::uint64_t b) noexcept;

// Total probability mass on near-optimal commitments.
double near_opt_probability(const ProbabilityDistribution& pd, const NearOptimalSet& nos);

// The k most probable basis states, ties broken by ascending index. Returns
// every state when 2^n < k.
std::vector<std::uint64_t> top_k(const ProbabilityDistribution& pd, std::size_t k);

inline constexpr std::size_t kDefaultTopK = 50;

// Unweighted mean over the top-k states of the distance to the closest
// near-optimal commitment.
double avg_hamming_top_k(const ProbabilityDistribution& pd, const NearOptimalSet& nos,
                         std::size_t k = kDefaultTopK);

struct MetricSnapshot {
  double near_opt_prob = 0.0;
  double avg_hamming_top50 = 0.0;
  std::vector<std::uint64_t> top_bitstrings;
};

MetricSnapshot snapshot_metrics(const ProbabilityDistribution& pd, const NearOptimalSet& nos,
                                std::size_t k = kDefaultTopK);

// One row of a run history.
struct HistoryRecord {
  std::size_t iter = 0;
  double objective = 0.0;
  double near_opt_prob = 0.0;
  double avg_hamming_top50 = 0.0;
  std::string best_bitstring;
  double elapsed_ms = 0.0;

  bool operator==(const HistoryRecord&) const = default;
};

enum class HistoryFormat { kCsv, kJson };

std::string history_to_csv(std::span<const HistoryRecord> records);
std::string history_to_json(std::span<const HistoryRecord> records);
std::vector<HistoryRecord> history_from_csv(const std::string& text);
std::vector<HistoryRecord> history_from_json(const std::string& text);

void export_history(std::span<const HistoryRecord> records, HistoryFormat format,
                    const std::string& path);
std::vector<HistoryRecord> import_history(const std::string& path);

// `bitstring,probability` rows (unit 0 first) for the top-k states, or for all
// states in index order when k == 0.
std::string distribution_to_csv(const ProbabilityDistribution& pd, std::size_t k = 0);
ProbabilityDistribution distribution_from_csv(const std::string& text);

// Companion plotting script for a history CSV.
std::string gnuplot_script(const std::string& csv_path, const std::string& png_path);

// Shortest decimal form that round-trips to the same double.
std::string format_number(double v);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace ucqaoa

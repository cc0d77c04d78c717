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

#include "ucqaoa/metrics.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "ucqaoa/error.hpp"

namespace ucqaoa {

namespace {

void check_dimension(const ProbabilityDistribution& pd, const NearOptimalSet& nos, const char* where) {
  if (nos.n >= 64 || pd.probs.size() != (std::size_t{1} << nos.n)) {
    throw DimensionError(std::string(where) + ": distribution has " + std::to_string(pd.probs.size()) +
                         " entries, near-optimal set is over " + std::to_string(nos.n) + " units");
  }
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(line);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

double parse_double(const std::string& s, const std::string& what) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ValidationError(what + ": cannot parse '" + s + "'");
  return v;
}

std::vector<std::string> csv_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

constexpr const char* kHistoryHeader = "iter,objective,near_opt_prob,avg_hamming_top50,best_bitstring,elapsed_ms";

}  // namespace

std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::size_t hamming(const Commitment& a, const Commitment& b) {
  if (a.size() != b.size()) {
    throw DimensionError("hamming: lengths " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()) + " differ");
  }
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a.on(i) != b.on(i) ? 1 : 0;
  return d;
}

std::size_t hamming(std::uint64_t a, std::uint64_t b) noexcept {
  return static_cast<std::size_t>(std::popcount(a ^ b));
}

double near_opt_probability(const ProbabilityDistribution& pd, const NearOptimalSet& nos) {
  check_dimension(pd, nos, "near_opt_probability");
  double total = 0.0;
  for (std::uint64_t m : nos.members) total += pd.probs[m];
  return total;
}

std::vector<std::uint64_t> top_k(const ProbabilityDistribution& pd, std::size_t k) {
  std::vector<std::uint64_t> idx(pd.probs.size());
  std::iota(idx.begin(), idx.end(), std::uint64_t{0});
  const std::size_t take = std::min(k, idx.size());
  auto by_prob = [&](std::uint64_t a, std::uint64_t b) {
    if (pd.probs[a] != pd.probs[b]) return pd.probs[a] > pd.probs[b];
    return a < b;
  };
  std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(take), idx.end(), by_prob);
  idx.resize(take);
  return idx;
}

double avg_hamming_top_k(const ProbabilityDistribution& pd, const NearOptimalSet& nos, std::size_t k) {
  if (k < 1) throw ValidationError("avg_hamming_top_k: k must be at least 1");
  if (nos.members.empty()) throw InfeasibleError("avg_hamming_top_k: near-optimal set is empty");
  check_dimension(pd, nos, "avg_hamming_top_k");
  const auto top = top_k(pd, k);
  double sum = 0.0;
  for (std::uint64_t s : top) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::uint64_t m : nos.members) best = std::min(best, hamming(s, m));
    sum += static_cast<double>(best);
  }
  return sum / static_cast<double>(top.size());
}

MetricSnapshot snapshot_metrics(const ProbabilityDistribution& pd, const NearOptimalSet& nos,
                                std::size_t k) {
  MetricSnapshot snap;
  snap.near_opt_prob = near_opt_probability(pd, nos);
  snap.avg_hamming_top50 = avg_hamming_top_k(pd, nos, k);
  snap.top_bitstrings = top_k(pd, k);
  return snap;
}

std::string history_to_csv(std::span<const HistoryRecord> records) {
  std::string out = std::string(kHistoryHeader) + "\n";
  for (const auto& r : records) {
    out += std::to_string(r.iter) + "," + format_number(r.objective) + "," +
           format_number(r.near_opt_prob) + "," + format_number(r.avg_hamming_top50) + "," +
           r.best_bitstring + "," + format_number(r.elapsed_ms) + "\n";
  }
  return out;
}

std::vector<HistoryRecord> history_from_csv(const std::string& text) {
  const auto lines = csv_lines(text);
  if (lines.empty() || lines.front() != kHistoryHeader) {
    throw ValidationError("history CSV: missing or unexpected header");
  }
  std::vector<HistoryRecord> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cols = split(lines[i], ',');
    const std::string where = "history CSV row " + std::to_string(i);
    if (cols.size() != 6) throw ValidationError(where + ": expected 6 columns");
    HistoryRecord r;
    r.iter = static_cast<std::size_t>(parse_double(cols[0], where + " iter"));
    r.objective = parse_double(cols[1], where + " objective");
    r.near_opt_prob = parse_double(cols[2], where + " near_opt_prob");
    r.avg_hamming_top50 = parse_double(cols[3], where + " avg_hamming_top50");
    r.best_bitstring = cols[4];
    r.elapsed_ms = parse_double(cols[5], where + " elapsed_ms");
    out.push_back(std::move(r));
  }
  return out;
}

std::string history_to_json(std::span<const HistoryRecord> records) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json rec;
    rec["iter"] = r.iter;
    rec["objective"] = r.objective;
    rec["near_opt_prob"] = r.near_opt_prob;
    rec["avg_hamming_top50"] = r.avg_hamming_top50;
    rec["best_bitstring"] = r.best_bitstring;
    rec["elapsed_ms"] = r.elapsed_ms;
    arr.push_back(std::move(rec));
  }
  return arr.dump(2) + "\n";
}

std::vector<HistoryRecord> history_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("history JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ValidationError("history JSON: expected an array of records");
  std::vector<HistoryRecord> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& rec = doc[i];
    try {
      HistoryRecord r;
      r.iter = rec.at("iter").get<std::size_t>();
      r.objective = rec.at("objective").get<double>();
      r.near_opt_prob = rec.at("near_opt_prob").get<double>();
      r.avg_hamming_top50 = rec.at("avg_hamming_top50").get<double>();
      r.best_bitstring = rec.at("best_bitstring").get<std::string>();
      r.elapsed_ms = rec.at("elapsed_ms").get<double>();
      out.push_back(std::move(r));
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError("history JSON record " + std::to_string(i) + ": " + e.what());
    }
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
  if (!out) throw Error("write failed for '" + path + "'");
}

void export_history(std::span<const HistoryRecord> records, HistoryFormat format,
                    const std::string& path) {
  write_text_file(path, format == HistoryFormat::kCsv ? history_to_csv(records) : history_to_json(records));
}

std::vector<HistoryRecord> import_history(const std::string& path) {
  const std::string text = read_text_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') return history_from_json(text);
  return history_from_csv(text);
}

std::string distribution_to_csv(const ProbabilityDistribution& pd, std::size_t k) {
  const std::size_t n = pd.qubits();
  std::vector<std::uint64_t> rows;
  if (k == 0) {
    rows.resize(pd.probs.size());
    std::iota(rows.begin(), rows.end(), std::uint64_t{0});
  } else {
    rows = top_k(pd, k);
  }
  std::string out = "bitstring,probability\n";
  for (std::uint64_t r : rows) out += bitstring(r, n) + "," + format_number(pd.probs[r]) + "\n";
  return out;
}

ProbabilityDistribution distribution_from_csv(const std::string& text) {
  const auto lines = csv_lines(text);
  if (lines.empty() || lines.front() != "bitstring,probability") {
    throw ValidationError("distribution CSV: missing or unexpected header");
  }
  std::size_t n = 0;
  std::vector<std::pair<std::uint64_t, double>> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cols = split(lines[i], ',');
    const std::string where = "distribution CSV row " + std::to_string(i);
    if (cols.size() != 2) throw ValidationError(where + ": expected 2 columns");
    const Commitment c = Commitment::from_string(cols[0]);
    if (i == 1) n = c.size();
    if (c.size() != n || n == 0) throw ValidationError(where + ": inconsistent bitstring length");
    if (n > kSimulatorQubitGuard) throw SizeGuardError(where + ": bitstring longer than the simulator guard");
    rows.emplace_back(c.index(), parse_double(cols[1], where + " probability"));
  }
  if (rows.empty()) throw ValidationError("distribution CSV: no rows");
  ProbabilityDistribution pd;
  pd.probs.assign(std::size_t{1} << n, 0.0);
  for (const auto& [k, p] : rows) pd.probs[k] = p;
  return pd;
}

std::string gnuplot_script(const std::string& csv_path, const std::string& png_path) {
  std::ostringstream os;
  os << "set datafile separator ','\n"
     << "set terminal pngcairo size 900,700\n"
     << "set output '" << png_path << "'\n"
     << "set multiplot layout 2,1\n"
     << "set xlabel 'iteration'\n"
     << "set ylabel 'near-optimal probability'\n"
     << "plot '" << csv_path << "' using 1:3 skip 1 with lines notitle\n"
     << "set ylabel 'avg Hamming distance (top 50)'\n"
     << "plot '" << csv_path << "' using 1:4 skip 1 with lines notitle\n"
     << "unset multiplot\n";
  return os.str();
}

}  // namespace ucqaoa

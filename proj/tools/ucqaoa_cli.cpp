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

// Command-line front end: oracle, simulate, run-hybrid, solve-classical,
// bench-classical and metrics.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ucqaoa/baseline.hpp"
#include "ucqaoa/dispatch.hpp"
#include "ucqaoa/error.hpp"
#include "ucqaoa/hybrid.hpp"
#include "ucqaoa/instance.hpp"
#include "ucqaoa/metrics.hpp"
#include "ucqaoa/qaoa.hpp"
#include "ucqaoa/qubo.hpp"

namespace {

using namespace ucqaoa;

struct GlobalFlags {
  std::uint64_t seed = 0;
  bool verbose = false;
  bool no_timing = false;
};

struct InstanceFlags {
  std::string path;
  std::optional<double> load;

  void add(CLI::App* app) {
    app->add_option("--instance", path, "Instance JSON file (default: builtin 10-unit system)");
    app->add_option("--load", load, "Target load in MW (overrides the instance)");
  }

  UcInstance resolve(const GlobalFlags& g) const {
    UcInstance inst = path.empty() ? builtin_ten_unit() : load_instance_file(path);
    if (load) inst.load = *load;
    validate(inst);
    for (const auto& w : instance_warnings(inst)) std::cerr << "warning: " << w << "\n";
    if (g.verbose) {
      std::cerr << "instance '" << inst.name << "': " << inst.size() << " units, load " << inst.load
                << " MW\n";
    }
    return inst;
  }
};

struct WeightFlags {
  std::optional<double> l1, l2, l3;

  void add(CLI::App* app) {
    app->add_option("--lambda1", l1, "Load-balance penalty weight");
    app->add_option("--lambda2", l2, "Lower-limit penalty weight");
    app->add_option("--lambda3", l3, "Upper-limit penalty weight");
  }

  PenaltyWeights resolve(const UcInstance& inst) const {
    PenaltyWeights w = default_weights(inst);
    if (l1) w.lambda1 = *l1;
    if (l2) w.lambda2 = *l2;
    if (l3) w.lambda3 = *l3;
    if (w.lambda1 < 0 || w.lambda2 < 0 || w.lambda3 < 0) {
      throw ValidationError("penalty weights must be non-negative");
    }
    return w;
  }
};

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

std::string ranked_csv(const Enumeration& all) {
  std::string out = "bitstring,cost,feasible\n";
  for (const auto& r : all.ranked) {
    out += bitstring(r.index, all.n) + ",";
    if (r.feasible) out += format_number(r.cost);
    out += r.feasible ? ",true\n" : ",false\n";
  }
  return out;
}

std::string report_json(const UcInstance& inst, const SolveReport& rep, bool timing) {
  nlohmann::ordered_json j;
  j["instance"] = inst.name;
  j["load"] = inst.load;
  j["feasible"] = rep.feasible;
  if (rep.feasible) {
    j["commitment"] = rep.best.to_string();
    j["cost"] = rep.dispatch.cost;
    j["powers"] = rep.dispatch.powers.powers;
    j["proven_gap"] = rep.proven_gap;
    j["lower_bound"] = rep.lower_bound;
  } else {
    j["infeasible"] = true;
  }
  j["nodes_expanded"] = rep.nodes_expanded;
  j["wall_ms"] = timing ? rep.wall_ms : 0.0;
  return j.dump(2) + "\n";
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t pos = 0;
      const long v = std::stol(item, &pos);
      if (pos != item.size() || v < 1) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw ValidationError("--sizes: cannot parse '" + item + "'");
    }
  }
  if (out.empty()) throw ValidationError("--sizes: no sizes given");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hybrid QAOA / classical unit commitment solver"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_flag("--verbose", g.verbose, "Progress and diagnostics on stderr");
  app.add_flag("--no-timing", g.no_timing, "Write 0 for every wall-clock field");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Brute-force ranking of every commitment");
  InstanceFlags oracle_inst;
  oracle_inst.add(oracle);
  std::string oracle_out;
  double oracle_fraction = kDefaultNearOptimalFraction;
  oracle->add_option("--out", oracle_out, "CSV output path (default stdout)");
  oracle->add_option("--fraction", oracle_fraction, "Near-optimal cutoff reported with --verbose")
      ->capture_default_str();

  // simulate
  auto* simulate = app.add_subcommand("simulate", "QAOA distribution at given angles");
  InstanceFlags sim_inst;
  sim_inst.add(simulate);
  WeightFlags sim_weights;
  sim_weights.add(simulate);
  std::size_t sim_depth = 1;
  std::vector<double> sim_gamma, sim_beta;
  std::size_t sim_top = 10;
  std::uint64_t sim_shots = 0;
  double sim_phase_scale = 0.0;
  std::string sim_out;
  simulate->add_option("--depth", sim_depth, "Circuit depth P")->capture_default_str();
  simulate->add_option("--gamma", sim_gamma, "Cost angles (default: seeded initial angles)")->delimiter(',');
  simulate->add_option("--beta", sim_beta, "Mixer angles (default: seeded initial angles)")->delimiter(',');
  simulate->add_option("--top", sim_top, "Rows to print, 0 for the full distribution")->capture_default_str();
  simulate->add_option("--shots", sim_shots, "Report sampled frequencies instead of exact probabilities");
  simulate->add_option("--phase-scale", sim_phase_scale,
                       "Cost angles enter as gamma / scale; 0 uses the cost-table range as run-hybrid does")
      ->capture_default_str();
  simulate->add_option("--out", sim_out, "CSV output path (default stdout)");

  // run-hybrid
  auto* hybrid = app.add_subcommand("run-hybrid", "Nelder-Mead over QAOA angles, powers and slacks");
  InstanceFlags hyb_inst;
  hyb_inst.add(hybrid);
  WeightFlags hyb_weights;
  hyb_weights.add(hybrid);
  HybridConfig cfg;
  std::string hyb_out, hyb_format, hyb_dist_out, hyb_gnuplot;
  hybrid->add_option("--depth", cfg.depth, "Circuit depth P")->capture_default_str();
  hybrid->add_option("--iterations", cfg.max_iterations, "Simplex iterations")->capture_default_str();
  hybrid->add_option("--shots", cfg.shots, "Shots per objective evaluation, 0 for exact")->capture_default_str();
  hybrid->add_option("--cadence", cfg.cadence, "Iterations between metric snapshots")->capture_default_str();
  hybrid->add_option("--fraction", cfg.near_opt_fraction, "Near-optimal relative cutoff")->capture_default_str();
  hybrid->add_option("--top-k", cfg.top_k, "Bitstrings in the Hamming metric")->capture_default_str();
  hybrid->add_option("--out", hyb_out, "History output path (default stdout)");
  hybrid->add_option("--format", hyb_format, "json or csv (default: from --out extension, else json)");
  hybrid->add_option("--dist-out", hyb_dist_out, "Write the final distribution as CSV");
  hybrid->add_option("--gnuplot", hyb_gnuplot, "Write a gnuplot script for the history CSV");

  // solve-classical
  auto* classical = app.add_subcommand("solve-classical", "Branch and bound over commitments");
  InstanceFlags cls_inst;
  cls_inst.add(classical);
  double cls_gap = 0.0;
  classical->add_option("--gap", cls_gap, "Relative optimality gap, 0 for exact")->capture_default_str();

  // bench-classical
  auto* bench = app.add_subcommand("bench-classical", "Exact vs approximate runtime scaling");
  std::string bench_sizes = "4,8,12,16";
  BenchmarkOptions bopts;
  std::string bench_out;
  bench->add_option("--sizes", bench_sizes, "Comma-separated unit counts")->capture_default_str();
  bench->add_option("--trials", bopts.trials, "Instances per size")->capture_default_str();
  bench->add_option("--gap", bopts.gap, "Gap for the approximate mode")->capture_default_str();
  bench->add_option("--out", bench_out, "CSV output path (default stdout)");

  // metrics
  auto* metrics = app.add_subcommand("metrics", "Metrics of a saved distribution");
  InstanceFlags met_inst;
  met_inst.add(metrics);
  std::string met_dist;
  double met_fraction = kDefaultNearOptimalFraction;
  std::size_t met_k = kDefaultTopK;
  std::string met_out;
  metrics->add_option("--dist", met_dist, "Distribution CSV (bitstring,probability)")->required();
  metrics->add_option("--fraction", met_fraction, "Near-optimal relative cutoff")->capture_default_str();
  metrics->add_option("--top-k", met_k, "Bitstrings in the Hamming metric")->capture_default_str();
  metrics->add_option("--out", met_out, "CSV output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(ExitCode::kValidation);
  }

  try {
    if (oracle->parsed()) {
      const UcInstance inst = oracle_inst.resolve(g);
      const Enumeration all = enumerate_all(inst);
      if (all.best_feasible() == nullptr) {
        emit(oracle_out, ranked_csv(all));
        std::cerr << "error: no feasible commitment\n";
        return static_cast<int>(ExitCode::kInfeasible);
      }
      if (g.verbose) {
        const NearOptimalSet nos = near_optimal_set(all, oracle_fraction);
        std::cerr << "optimum " << nos.optimal_cost << ", " << nos.size()
                  << " near-optimal commitments within " << oracle_fraction << "\n";
      }
      emit(oracle_out, ranked_csv(all));
    } else if (simulate->parsed()) {
      const UcInstance inst = sim_inst.resolve(g);
      if (inst.size() > kSimulatorQubitGuard) {
        throw SizeGuardError("simulate: " + std::to_string(inst.size()) + " units exceeds the simulator guard");
      }
      HybridConfig sc;
      sc.depth = sim_depth;
      sc.validate();
      ThetaVector theta = initial_theta(inst, sc, g.seed);
      if (!sim_gamma.empty()) theta.gamma = sim_gamma;
      if (!sim_beta.empty()) theta.beta = sim_beta;
      const PenaltyWeights w = sim_weights.resolve(inst);
      const std::vector<double> diag = qubo_diagonal(build_qubo(inst, w, theta.continuous()));
      const double scale = sim_phase_scale == 0.0 ? table_range(diag) : sim_phase_scale;
      ProbabilityDistribution pd = qaoa_distribution(diag, scaled_angles(theta, scale > 0.0 ? scale : 1.0));
      if (sim_shots > 0) {
        ProbabilityDistribution emp;
        emp.probs.assign(pd.probs.size(), 0.0);
        for (const auto& [k, c] : sample(pd, sim_shots, g.seed)) {
          emp.probs[k] = static_cast<double>(c) / static_cast<double>(sim_shots);
        }
        pd = std::move(emp);
      }
      if (g.verbose) std::cerr << "expectation " << expectation(pd, diag) << "\n";
      emit(sim_out, distribution_to_csv(pd, sim_top));
    } else if (hybrid->parsed()) {
      const UcInstance inst = hyb_inst.resolve(g);
      cfg.seed = g.seed;
      cfg.weights = hyb_weights.resolve(inst);
      cfg.record_timing = !g.no_timing;
      HistoryFormat fmt = HistoryFormat::kJson;
      if (hyb_format == "csv" ||
          (hyb_format.empty() && hyb_out.size() > 4 && hyb_out.substr(hyb_out.size() - 4) == ".csv")) {
        fmt = HistoryFormat::kCsv;
      } else if (!hyb_format.empty() && hyb_format != "json") {
        throw ValidationError("--format must be json or csv");
      }
      const RunHistory hist = run_hybrid(inst, cfg);
      if (g.verbose) {
        const auto& last = hist.records.back();
        std::cerr << "iterations " << hist.iterations << ", evaluations " << hist.evaluations
                  << ", objective " << last.objective << ", near-optimal probability "
                  << last.near_opt_prob << " (" << hist.near_optimal.size() << " members)\n";
        auto join = [](const std::vector<double>& v) {
          std::string out;
          for (double x : v) out += (out.empty() ? "" : ",") + format_number(x);
          return out;
        };
        std::cerr << "phase scale " << format_number(hist.phase_scale) << ", gamma "
                  << join(hist.final_theta.gamma) << ", beta " << join(hist.final_theta.beta) << "\n";
      }
      const std::string text =
          fmt == HistoryFormat::kCsv ? history_to_csv(hist.records) : history_to_json(hist.records);
      emit(hyb_out, text);
      if (!hyb_dist_out.empty()) write_text_file(hyb_dist_out, distribution_to_csv(hist.final_distribution));
      if (!hyb_gnuplot.empty()) {
        const std::string csv = fmt == HistoryFormat::kCsv && !hyb_out.empty() ? hyb_out : "history.csv";
        write_text_file(hyb_gnuplot, gnuplot_script(csv, "history.png"));
      }
    } else if (classical->parsed()) {
      const UcInstance inst = cls_inst.resolve(g);
      const SolveReport rep = solve_approx(inst, cls_gap);
      std::cout << report_json(inst, rep, !g.no_timing);
      if (!rep.feasible) return static_cast<int>(ExitCode::kInfeasible);
    } else if (bench->parsed()) {
      bopts.sizes = parse_sizes(bench_sizes);
      bopts.seed = g.seed;
      bopts.record_timing = !g.no_timing;
      emit(bench_out, benchmark_to_csv(scaling_benchmark(bopts)));
    } else if (metrics->parsed()) {
      const UcInstance inst = met_inst.resolve(g);
      const ProbabilityDistribution pd = distribution_from_csv(read_text_file(met_dist));
      const NearOptimalSet nos = near_optimal_set(inst, met_fraction);
      const MetricSnapshot snap = snapshot_metrics(pd, nos, met_k);
      emit(met_out, "near_opt_prob,avg_hamming_top50,near_opt_members\n" + format_number(snap.near_opt_prob) +
                        "," + format_number(snap.avg_hamming_top50) + "," + std::to_string(nos.size()) + "\n");
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.exit_code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::kFailure);
  }
  return 0;
}

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bivne/acs.hpp"
#include "bivne/baselines.hpp"
#include "bivne/io.hpp"

namespace bivne {

struct CapacityRanges {
  IntRange comp_cap{50, 100};
  IntRange chan_cap{50, 100};
  IntRange slots{50, 100};
  bool operator==(const CapacityRanges&) const = default;
};

struct TopologySource {
  std::string name;
  // Exactly one of file / random is set.
  std::optional<SubstrateNetwork> file;
  std::optional<RandomTopologyParams> random;
  // Redraw capacities for every trial (file topologies only).
  std::optional<CapacityRanges> redraw;
};

struct ExperimentConfig {
  std::string name;
  TopologySource topology;
  RequestProfile profile;
  std::optional<std::vector<VirtualRequest>> workload;  // replayed instead of generated
  std::string algorithm = "bivne";
  PriceTable prices;
  FragConfig frag;
  AcsParams acs;
  BaselineConfig baseline;
  std::uint64_t seed = 1;
  std::vector<int> vnr_counts{10, 20, 30, 40};
  int trials = 1;
  Json source;  // echoed into reports

  void check() const;

  // Relative file references resolve against base_dir. Errors name the field.
  static ExperimentConfig from_json(const Json& doc, const std::filesystem::path& base_dir = ".");
  static ExperimentConfig from_file(const std::filesystem::path& path);
};

inline const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names{"bivne", "greedy_sp_ff", "lrc_sp_ff", "pl_ksp_ff"};
  return names;
}

std::unique_ptr<Embedder> make_embedder(const std::string& algorithm, const ExperimentConfig& config);

// Fresh substrate and request stream for one trial; both depend only on
// (seed, trial).
SubstrateNetwork trial_substrate(const ExperimentConfig& config, int trial);
std::vector<VirtualRequest> trial_requests(const ExperimentConfig& config, int trial, int count);

struct ReportRow {
  int trial = 0;
  int vnr_count = 0;
  int accepted = 0;
  double acceptance_ratio = 1.0;
  std::optional<double> avg_path_hops;
  double revenue = 0.0;
  double cost = 0.0;
  std::optional<double> r_over_c;
  double profit = 0.0;

  bool operator==(const ReportRow&) const = default;
};

// Everything needed to replay one trial.
struct TrialLog {
  int trial = 0;
  SubstrateNetwork initial;
  std::vector<VirtualRequest> requests;
  std::vector<EmbeddingSolution> solutions;
};

struct ExperimentReport {
  std::string algorithm;
  std::string topology;
  std::uint64_t seed = 0;
  Json config;
  std::vector<ReportRow> rows;  // ordered by (vnr_count, trial)
  std::vector<TrialLog> logs;   // kept on request, never exported

  // Copy with every float rounded to its 10-significant-digit export form.
  ExperimentReport quantized() const;
  const ReportRow* row(int vnr_count, int trial) const;

  bool operator==(const ExperimentReport& o) const {
    return algorithm == o.algorithm && topology == o.topology && seed == o.seed && config == o.config &&
           rows == o.rows;
  }
};

struct RunOptions {
  bool keep_logs = false;
  unsigned threads = 1;
};

// Each trial embeds the requests sequentially with permanent allocation of
// accepted solutions; every acceptance passes the validator or the run
// throws RejectionError. Metrics for a batch of n requests are taken after
// the first n requests of the trial's stream, which equals running a fresh
// batch of n.
ExperimentReport run_experiment(const ExperimentConfig& config, const RunOptions& options = {});

std::string format_number(double v);  // 10 significant digits
std::string to_csv(const ExperimentReport& report);
Json to_json(const ExperimentReport& report);
ExperimentReport report_from_json(const Json& doc);

// Per-figure series: vnr_count against the per-algorithm mean over trials.
// Keys are file names (acceptance_ratio.csv, avg_path_hops.csv,
// r_over_c.csv, total_profit.csv).
std::map<std::string, std::string> plot_series(const std::vector<ExperimentReport>& reports);

// Solution dump for offline validation: initial topology, requests and
// slot-level solutions of every logged trial.
Json solution_dump(const ExperimentReport& report);

struct DumpCheck {
  int checked = 0;
  std::vector<std::string> violations;  // "trial t vnr i: C? detail"
};
// Replays a dump, validating each solution against the state it was
// embedded on and allocating accepted ones.
DumpCheck check_dump(const Json& dump);

}  // namespace bivne

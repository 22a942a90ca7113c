#include <cstdio>
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "bivne/error.hpp"
#include "bivne/experiment.hpp"

namespace fs = std::filesystem;
using namespace bivne;

namespace {

enum Exit { kOk = 0, kConfig = 1, kViolation = 2, kIo = 3 };

struct RunArgs {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> algorithm;
  std::optional<int> trials;
  std::string out = ".";
  std::string format = "csv";
  bool dump = false;
  unsigned threads = 1;
};

int run(const RunArgs& a) {
  auto config = ExperimentConfig::from_file(a.config);
  if (a.seed) config.seed = *a.seed;
  if (a.algorithm) config.algorithm = *a.algorithm;
  if (a.trials) config.trials = *a.trials;
  config.check();
  config.source["seed"] = config.seed;
  config.source["algorithm"] = config.algorithm;
  config.source["trials"] = config.trials;

  const auto report = run_experiment(config, {.keep_logs = a.dump, .threads = a.threads});
  std::error_code ec;
  fs::create_directories(a.out, ec);
  if (ec) throw IoError(a.out + ": " + ec.message());
  const std::string stem = (config.name.empty() ? config.topology.name : config.name) + "_" + config.algorithm +
                           "_s" + std::to_string(config.seed);
  const fs::path base = fs::path(a.out) / stem;
  if (a.format == "json")
    write_text_file(base.string() + ".json", to_json(report).dump(2) + "\n");
  else
    write_text_file(base.string() + ".csv", to_csv(report));
  if (a.dump) write_text_file(base.string() + ".dump.json", solution_dump(report).dump() + "\n");
  std::cout << "wrote " << base.string() << (a.format == "json" ? ".json" : ".csv") << "\n";
  return kOk;
}

int validate_dump(const std::string& path) {
  const auto result = check_dump(read_json_file(path));
  for (const auto& v : result.violations) std::cout << v << "\n";
  std::cout << result.checked << " solutions checked, " << result.violations.size() << " violations\n";
  return result.violations.empty() ? kOk : kViolation;
}

int topo_gen(const RandomTopologyParams& p, std::uint64_t seed, const std::string& out) {
  p.check();
  auto rng = make_rng(seed, {0, 1});
  const auto net = generate_random(p, rng);
  const auto text = topology_to_json(net, "random" + std::to_string(p.nodes)).dump(1) + "\n";
  if (out.empty())
    std::cout << text;
  else
    write_text_file(out, text);
  return kOk;
}

int plotdata(const std::vector<std::string>& inputs, const std::string& out) {
  std::vector<ExperimentReport> reports;
  for (const auto& in : inputs) reports.push_back(report_from_json(read_json_file(in)));
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec) throw IoError(out + ": " + ec.message());
  for (const auto& [name, text] : plot_series(reports)) write_text_file((fs::path(out) / name).string(), text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bilevel virtual network embedding over elastic optical substrates"};
  app.require_subcommand(1);

  RunArgs ra;
  auto* run_cmd = app.add_subcommand("run", "Run an experiment and write its report");
  run_cmd->add_option("--config", ra.config, "Experiment config")->required();
  run_cmd->add_option("--seed", ra.seed, "Override the root seed");
  run_cmd->add_option("--algorithm", ra.algorithm, "Override the algorithm")
      ->check(CLI::IsMember(algorithm_names()));
  run_cmd->add_option("--trials", ra.trials, "Override the trial count")->check(CLI::PositiveNumber);
  run_cmd->add_option("--out", ra.out, "Output directory");
  run_cmd->add_option("--format", ra.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  run_cmd->add_flag("--dump", ra.dump, "Also write a solution dump for `validate`");
  run_cmd->add_option("--threads", ra.threads, "Trials run in parallel")->check(CLI::PositiveNumber);

  std::string dump_path;
  auto* val_cmd = app.add_subcommand("validate", "Check every solution in a dump");
  val_cmd->add_option("dump", dump_path, "Solution dump")->required();

  RandomTopologyParams tp;
  std::uint64_t topo_seed = 1;
  std::string topo_out;
  auto* topo_cmd = app.add_subcommand("topo", "Topology tools");
  topo_cmd->require_subcommand(1);
  auto* gen_cmd = topo_cmd->add_subcommand("gen", "Generate a random connected topology");
  gen_cmd->add_option("--nodes", tp.nodes);
  gen_cmd->add_option("--links", tp.links);
  gen_cmd->add_option("--seed", topo_seed);
  gen_cmd->add_option("--out", topo_out, "Output file (stdout if omitted)");

  std::vector<std::string> plot_inputs;
  std::string plot_out = ".";
  auto* plot_cmd = app.add_subcommand("plotdata", "Per-metric series from json reports");
  plot_cmd->add_option("reports", plot_inputs, "json reports, one per algorithm")->required();
  plot_cmd->add_option("--out", plot_out, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    if (*run_cmd) return run(ra);
    if (*val_cmd) return validate_dump(dump_path);
    if (*gen_cmd) return topo_gen(tp, topo_seed, topo_out);
    if (*plot_cmd) return plotdata(plot_inputs, plot_out);
  } catch (const RejectionError& e) {
    std::cerr << "validator violation: " << e.what() << "\n";
    return kViolation;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  }
  return kOk;
}

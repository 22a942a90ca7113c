#include "bivne/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "bivne/error.hpp"
#include "bivne/validator.hpp"

namespace bivne {
namespace {

enum Stream : std::uint64_t { kSubstrate = 1, kRequests = 2, kAlgorithm = 3 };

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError(where + "." + key + ": missing");
  return j.at(key);
}

template <typename T>
T get(const Json& j, const char* key, const std::string& where) {
  try {
    return require(j, key, where).get<T>();
  } catch (const Json::exception&) {
    throw ConfigError(where + "." + key + ": wrong type");
  }
}

template <typename T>
void maybe(const Json& j, const char* key, T& out, const std::string& where) {
  if (j.is_object() && j.contains(key) && !j.at(key).is_null()) out = get<T>(j, key, where);
}

void maybe_range(const Json& j, const char* key, IntRange& out, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) return;
  const auto& v = j.at(key);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
    throw ConfigError(where + "." + key + ": expected [lo, hi]");
  out = {v[0].get<int>(), v[1].get<int>()};
}

CapacityRanges parse_ranges(const Json& j, const std::string& where) {
  CapacityRanges r;
  maybe_range(j, "comp_cap", r.comp_cap, where);
  maybe_range(j, "chan_cap", r.chan_cap, where);
  maybe_range(j, "slots", r.slots, where);
  for (const IntRange* x : {&r.comp_cap, &r.chan_cap, &r.slots})
    if (x->lo < 1 || x->hi < x->lo) throw ConfigError(where + ": invalid capacity range");
  return r;
}

}  // namespace

void ExperimentConfig::check() const {
  if (!topology.file && !topology.random) throw ConfigError("topology: needs 'file' or 'random'");
  if (topology.random) topology.random->check();
  profile.check();
  if (std::find(algorithm_names().begin(), algorithm_names().end(), algorithm) == algorithm_names().end())
    throw ConfigError("algorithm: unknown algorithm '" + algorithm + "'");
  prices.check();
  frag.check();
  acs.check();
  baseline.check();
  if (trials < 1) throw ConfigError("trials: must be >= 1");
  for (std::size_t i = 0; i < vnr_counts.size(); ++i) {
    if (vnr_counts[i] < 0) throw ConfigError("vnr_counts: entries must be >= 0");
    if (i > 0 && vnr_counts[i] <= vnr_counts[i - 1]) throw ConfigError("vnr_counts: must be strictly increasing");
  }
  if (workload && !vnr_counts.empty() && static_cast<std::size_t>(vnr_counts.back()) > workload->size())
    throw ConfigError("workload: fewer requests than the largest vnr_count");
}

ExperimentConfig ExperimentConfig::from_json(const Json& doc, const std::filesystem::path& base_dir) {
  if (!doc.is_object()) throw ConfigError("config: document must be an object");
  ExperimentConfig c;
  c.source = doc;
  maybe(doc, "name", c.name, "config");

  const auto& topo = require(doc, "topology", "config");
  if (topo.contains("file")) {
    const auto path = base_dir / get<std::string>(topo, "file", "topology");
    const auto tdoc = read_json_file(path);
    c.topology.file = load_topology(tdoc);
    c.topology.name = tdoc.value("name", path.stem().string());
    if (topo.contains("redraw")) c.topology.redraw = parse_ranges(topo.at("redraw"), "topology.redraw");
  } else if (topo.contains("random")) {
    const auto& r = topo.at("random");
    RandomTopologyParams p;
    maybe(r, "nodes", p.nodes, "topology.random");
    maybe(r, "links", p.links, "topology.random");
    const auto ranges = parse_ranges(r, "topology.random");
    p.comp_cap = ranges.comp_cap;
    p.chan_cap = ranges.chan_cap;
    p.slots = ranges.slots;
    maybe(r, "side", p.side, "topology.random");
    c.topology.random = p;
    c.topology.name = "random" + std::to_string(p.nodes);
  } else {
    throw ConfigError("topology: needs 'file' or 'random'");
  }
  maybe(topo, "name", c.topology.name, "topology");

  if (doc.contains("profile")) {
    const auto& p = doc.at("profile");
    maybe_range(p, "vnodes", c.profile.vnodes, "profile");
    maybe_range(p, "comp", c.profile.comp, "profile");
    maybe_range(p, "chan", c.profile.chan, "profile");
    maybe_range(p, "slots", c.profile.slots, "profile");
    maybe_range(p, "radius", c.profile.radius, "profile");
    maybe(p, "link_probability", c.profile.link_probability, "profile");
    maybe(p, "side", c.profile.side, "profile");
  }
  if (doc.contains("workload"))
    c.workload = requests_from_json(read_json_file(base_dir / get<std::string>(doc, "workload", "config")));

  maybe(doc, "algorithm", c.algorithm, "config");
  if (doc.contains("prices")) {
    const auto& p = doc.at("prices");
    maybe(p, "alpha", c.prices.alpha, "prices");
    maybe(p, "kappa", c.prices.kappa, "prices");
    maybe(p, "gamma", c.prices.gamma, "prices");
    maybe(p, "alpha_p", c.prices.alpha_p, "prices");
    maybe(p, "kappa_p", c.prices.kappa_p, "prices");
    maybe(p, "gamma_p", c.prices.gamma_p, "prices");
  }
  if (doc.contains("frag")) {
    maybe(doc.at("frag"), "xi_max", c.frag.xi_max, "frag");
    maybe(doc.at("frag"), "count_single_slot", c.frag.count_single_slot, "frag");
  }
  if (doc.contains("acs")) {
    const auto& a = doc.at("acs");
    maybe(a, "colony_size", c.acs.colony_size, "acs");
    maybe(a, "max_generations", c.acs.max_generations, "acs");
    maybe(a, "beta", c.acs.beta, "acs");
    maybe(a, "q0", c.acs.q0, "acs");
    maybe(a, "phi", c.acs.phi, "acs");
    maybe(a, "rho", c.acs.rho, "acs");
    if (a.contains("tau0") && !a.at("tau0").is_null()) c.acs.tau0 = get<double>(a, "tau0", "acs");
    maybe(a, "stagnation_limit", c.acs.stagnation_limit, "acs");
  }
  if (doc.contains("baseline")) maybe(doc.at("baseline"), "k_paths", c.baseline.k_paths, "baseline");
  maybe(doc, "seed", c.seed, "config");
  maybe(doc, "vnr_counts", c.vnr_counts, "config");
  maybe(doc, "trials", c.trials, "config");
  c.check();
  return c;
}

ExperimentConfig ExperimentConfig::from_file(const std::filesystem::path& path) {
  return from_json(read_json_file(path), path.parent_path());
}

std::unique_ptr<Embedder> make_embedder(const std::string& algorithm, const ExperimentConfig& c) {
  if (algorithm == "bivne") return std::make_unique<BivneEmbedder>(c.acs, c.prices, c.frag);
  if (algorithm == "greedy_sp_ff") return std::make_unique<BaselineEmbedder>(Baseline::kGreedySpFf, c.prices, c.frag);
  if (algorithm == "lrc_sp_ff") return std::make_unique<BaselineEmbedder>(Baseline::kLrcSpFf, c.prices, c.frag);
  if (algorithm == "pl_ksp_ff")
    return std::make_unique<BaselineEmbedder>(Baseline::kPlKspFf, c.prices, c.frag, c.baseline);
  throw ConfigError("algorithm: unknown algorithm '" + algorithm + "'");
}

SubstrateNetwork trial_substrate(const ExperimentConfig& c, int trial) {
  auto rng = make_rng(c.seed, {static_cast<std::uint64_t>(trial), kSubstrate});
  if (c.topology.random) return generate_random(*c.topology.random, rng);
  if (c.topology.redraw) {
    const auto& r = *c.topology.redraw;
    return redraw_capacities(*c.topology.file, r.comp_cap, r.chan_cap, r.slots, rng);
  }
  return *c.topology.file;
}

std::vector<VirtualRequest> trial_requests(const ExperimentConfig& c, int trial, int count) {
  if (c.workload) return {c.workload->begin(), c.workload->begin() + count};
  auto rng = make_rng(c.seed, {static_cast<std::uint64_t>(trial), kRequests});
  return generate_requests(count, c.profile, rng);
}

namespace {

struct TrialResult {
  std::vector<ReportRow> rows;
  TrialLog log;
};

TrialResult run_trial(const ExperimentConfig& c, int trial, bool keep_log) {
  TrialResult out;
  const int max_count = c.vnr_counts.empty() ? 0 : c.vnr_counts.back();
  SubstrateNetwork net = trial_substrate(c, trial);
  const auto requests = trial_requests(c, trial, max_count);
  if (keep_log) {
    out.log.trial = trial;
    out.log.initial = net;
    out.log.requests = requests;
  }
  auto embedder = make_embedder(c.algorithm, c);
  auto rng = make_rng(c.seed, {static_cast<std::uint64_t>(trial), kAlgorithm});

  int accepted = 0;
  long long hops = 0, vlinks = 0;
  double revenue_total = 0.0, cost_total = 0.0, profit_total = 0.0;
  auto snapshot = [&](int count) {
    ReportRow row;
    row.trial = trial;
    row.vnr_count = count;
    row.accepted = accepted;
    row.acceptance_ratio = count == 0 ? 1.0 : static_cast<double>(accepted) / count;
    if (vlinks > 0) row.avg_path_hops = static_cast<double>(hops) / static_cast<double>(vlinks);
    row.revenue = revenue_total;
    row.cost = cost_total;
    if (cost_total > 0.0) row.r_over_c = revenue_total / cost_total;
    row.profit = profit_total;
    out.rows.push_back(row);
  };

  std::size_t next_count = 0;
  while (next_count < c.vnr_counts.size() && c.vnr_counts[next_count] == 0) snapshot(c.vnr_counts[next_count++]);
  for (int i = 0; i < max_count; ++i) {
    const auto& vnr = requests[i];
    auto solution = embedder->embed(net, vnr, rng);
    if (solution.accepted) {
      const double r = revenue(vnr, c.prices);
      const double cn = node_cost(solution.placements, net, vnr, c.prices);
      const double ce = link_cost(solution.routes, net, vnr, c.prices, c.frag);
      allocate(net, vnr, solution);
      ++accepted;
      for (const auto& route : solution.routes) hops += route.path.hops();
      vlinks += static_cast<long long>(solution.routes.size());
      revenue_total += r;
      cost_total += cn + ce;
      profit_total += r - cn - ce;
    }
    if (keep_log) out.log.solutions.push_back(std::move(solution));
    while (next_count < c.vnr_counts.size() && c.vnr_counts[next_count] == i + 1) snapshot(c.vnr_counts[next_count++]);
  }
  return out;
}

double quantize(double v) { return std::stod(format_number(v)); }

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config, const RunOptions& options) {
  config.check();
  std::vector<TrialResult> results(config.trials);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (int t = next++; t < config.trials; t = next++) {
      try {
        results[t] = run_trial(config, t, options.keep_logs);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, config.trials));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  ExperimentReport report;
  report.algorithm = config.algorithm;
  report.topology = config.topology.name;
  report.seed = config.seed;
  report.config = config.source;
  for (std::size_t k = 0; k < config.vnr_counts.size(); ++k)
    for (auto& r : results) report.rows.push_back(r.rows[k]);
  if (options.keep_logs)
    for (auto& r : results) report.logs.push_back(std::move(r.log));
  return report;
}

ExperimentReport ExperimentReport::quantized() const {
  ExperimentReport q = *this;
  q.logs.clear();
  for (auto& r : q.rows) {
    r.acceptance_ratio = quantize(r.acceptance_ratio);
    if (r.avg_path_hops) r.avg_path_hops = quantize(*r.avg_path_hops);
    r.revenue = quantize(r.revenue);
    r.cost = quantize(r.cost);
    if (r.r_over_c) r.r_over_c = quantize(*r.r_over_c);
    r.profit = quantize(r.profit);
  }
  return q;
}

const ReportRow* ExperimentReport::row(int vnr_count, int trial) const {
  for (const auto& r : rows)
    if (r.vnr_count == vnr_count && r.trial == trial) return &r;
  return nullptr;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

namespace {

std::string format_optional(const std::optional<double>& v) { return v ? format_number(*v) : "null"; }

Json number_json(double v) { return quantize(v); }

Json optional_json(const std::optional<double>& v) { return v ? number_json(*v) : Json(nullptr); }

std::optional<double> optional_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

}  // namespace

std::string to_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "algorithm,topology,seed,trial,vnr_count,accepted,acceptance_ratio,avg_path_hops,revenue,cost,r_over_c,"
         "profit\n";
  for (const auto& r : report.rows) {
    out << report.algorithm << ',' << report.topology << ',' << report.seed << ',' << r.trial << ',' << r.vnr_count
        << ',' << r.accepted << ',' << format_number(r.acceptance_ratio) << ',' << format_optional(r.avg_path_hops)
        << ',' << format_number(r.revenue) << ',' << format_number(r.cost) << ',' << format_optional(r.r_over_c)
        << ',' << format_number(r.profit) << '\n';
  }
  return out.str();
}

Json to_json(const ExperimentReport& report) {
  Json doc{{"algorithm", report.algorithm}, {"topology", report.topology}, {"seed", report.seed},
           {"config", report.config}, {"rows", Json::array()}};
  for (const auto& r : report.rows)
    doc["rows"].push_back({{"trial", r.trial},
                           {"vnr_count", r.vnr_count},
                           {"accepted", r.accepted},
                           {"acceptance_ratio", number_json(r.acceptance_ratio)},
                           {"avg_path_hops", optional_json(r.avg_path_hops)},
                           {"revenue", number_json(r.revenue)},
                           {"cost", number_json(r.cost)},
                           {"r_over_c", optional_json(r.r_over_c)},
                           {"profit", number_json(r.profit)}});
  return doc;
}

ExperimentReport report_from_json(const Json& doc) {
  ExperimentReport report;
  try {
    report.algorithm = doc.at("algorithm").get<std::string>();
    report.topology = doc.at("topology").get<std::string>();
    report.seed = doc.at("seed").get<std::uint64_t>();
    report.config = doc.value("config", Json());
    for (const auto& j : doc.at("rows")) {
      ReportRow r;
      r.trial = j.at("trial").get<int>();
      r.vnr_count = j.at("vnr_count").get<int>();
      r.accepted = j.at("accepted").get<int>();
      r.acceptance_ratio = j.at("acceptance_ratio").get<double>();
      r.avg_path_hops = optional_from(j.at("avg_path_hops"));
      r.revenue = j.at("revenue").get<double>();
      r.cost = j.at("cost").get<double>();
      r.r_over_c = optional_from(j.at("r_over_c"));
      r.profit = j.at("profit").get<double>();
      report.rows.push_back(r);
    }
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("report: ") + e.what());
  }
  return report;
}

std::map<std::string, std::string> plot_series(const std::vector<ExperimentReport>& reports) {
  struct Metric {
    const char* file;
    std::optional<double> (*value)(const ReportRow&);
  };
  static const Metric metrics[] = {
      {"acceptance_ratio.csv", [](const ReportRow& r) -> std::optional<double> { return r.acceptance_ratio; }},
      {"avg_path_hops.csv", [](const ReportRow& r) { return r.avg_path_hops; }},
      {"r_over_c.csv", [](const ReportRow& r) { return r.r_over_c; }},
      {"total_profit.csv", [](const ReportRow& r) -> std::optional<double> { return r.profit; }},
  };
  std::set<int> counts;
  for (const auto& rep : reports)
    for (const auto& r : rep.rows) counts.insert(r.vnr_count);

  std::map<std::string, std::string> out;
  for (const auto& m : metrics) {
    std::ostringstream csv;
    csv << "vnr_count";
    for (const auto& rep : reports) csv << ',' << rep.algorithm;
    csv << '\n';
    for (int n : counts) {
      csv << n;
      for (const auto& rep : reports) {
        double sum = 0.0;
        int k = 0;
        for (const auto& r : rep.rows)
          if (r.vnr_count == n)
            if (auto v = m.value(r)) {
              sum += *v;
              ++k;
            }
        csv << ',' << (k ? format_number(sum / k) : std::string("null"));
      }
      csv << '\n';
    }
    out[m.file] = csv.str();
  }
  return out;
}

Json solution_dump(const ExperimentReport& report) {
  Json dump{{"algorithm", report.algorithm}, {"topology", report.topology}, {"seed", report.seed},
            {"trials", Json::array()}};
  for (const auto& log : report.logs) {
    Json t{{"trial", log.trial}, {"topology", topology_to_json(log.initial, report.topology)},
           {"entries", Json::array()}};
    for (std::size_t i = 0; i < log.solutions.size(); ++i)
      t["entries"].push_back(
          {{"request", request_to_json(log.requests[i])}, {"solution", solution_to_json(expand(log.solutions[i]))}});
    dump["trials"].push_back(std::move(t));
  }
  return dump;
}

DumpCheck check_dump(const Json& dump) {
  DumpCheck result;
  if (!dump.is_object() || !dump.contains("trials")) throw ConfigError("dump: missing 'trials'");
  for (const auto& t : dump.at("trials")) {
    const int trial = t.value("trial", 0);
    SubstrateNetwork net = load_topology(t.at("topology"));
    for (const auto& e : t.at("entries")) {
      const auto vnr = request_from_json(e.at("request"));
      const auto sol = solution_from_json(e.at("solution"));
      ++result.checked;
      const auto violations = validate(net, vnr, sol);
      for (const auto& v : violations)
        result.violations.push_back("trial " + std::to_string(trial) + " vnr " + std::to_string(vnr.id) + ": " +
                                    v.constraint + " " + v.detail);
      if (violations.empty() && sol.accepted) allocate(net, vnr, sol);
    }
  }
  return result;
}

}  // namespace bivne

#include "bivne/error.hpp"
#include "bivne/experiment.hpp"
#include "doctest.h"

using namespace bivne;

namespace {

ExperimentConfig small(const std::string& algorithm, int trials = 3) {
  auto c = ExperimentConfig::from_file(BIVNE_DATA_DIR "/dt14.profile");
  c.algorithm = algorithm;
  c.trials = trials;
  c.vnr_counts = {0, 4, 8};
  c.acs.max_generations = 15;
  return c;
}

std::string error_of(const std::string& text) {
  try {
    ExperimentConfig::from_json(Json::parse(text), BIVNE_DATA_DIR);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("shipped profiles load") {
  auto dt = ExperimentConfig::from_file(BIVNE_DATA_DIR "/dt14.profile");
  CHECK(dt.topology.file->node_count() == 14);
  CHECK(dt.profile == RequestProfile::dt14());
  CHECK(dt.acs == AcsParams{});
  CHECK(dt.prices == PriceTable{});
  CHECK(dt.vnr_counts == std::vector<int>{10, 20, 30, 40});
  auto r = ExperimentConfig::from_file(BIVNE_DATA_DIR "/rand50.profile");
  CHECK(r.topology.random->links == 166);
  CHECK(r.profile == RequestProfile::rand50());
  CHECK(trial_substrate(r, 0).node_count() == 50);
}

TEST_CASE("config errors name the field") {
  CHECK(error_of(R"({})").find("topology") != std::string::npos);
  CHECK(error_of(R"({"topology": {"file": "dt14.json"}, "trials": 0})").find("trials") != std::string::npos);
  CHECK(error_of(R"({"topology": {"file": "dt14.json"}, "acs": {"q0": "x"}})").find("acs.q0") != std::string::npos);
  CHECK(error_of(R"({"topology": {"file": "dt14.json"}, "algorithm": "nope"})").find("algorithm") !=
        std::string::npos);
  CHECK(error_of(R"({"topology": {"file": "dt14.json"}, "vnr_counts": [5, 3]})").find("vnr_counts") !=
        std::string::npos);
  CHECK(error_of(R"({"topology": {"file": "dt14.json"}, "profile": {"comp": [3]}})").find("profile.comp") !=
        std::string::npos);
  CHECK_THROWS_AS(ExperimentConfig::from_file(BIVNE_DATA_DIR "/missing.profile"), IoError);
}

TEST_CASE("reports are deterministic and shaped by counts and trials") {
  for (const auto& alg : algorithm_names()) {
    const auto c = small(alg);
    const auto a = run_experiment(c);
    const auto b = run_experiment(c);
    CHECK(a == b);
    CHECK(to_csv(a) == to_csv(b));
    CHECK(a.rows.size() == 9);
    for (const auto& r : a.rows) {
      CHECK(r.acceptance_ratio >= 0.0);
      CHECK(r.acceptance_ratio <= 1.0);
      CHECK(r.profit == doctest::Approx(r.revenue - r.cost));
      if (r.vnr_count == 0) {
        CHECK(r.acceptance_ratio == 1.0);
        CHECK(r.revenue == 0.0);
        CHECK(r.cost == 0.0);
        CHECK(r.profit == 0.0);
        CHECK_FALSE(r.avg_path_hops);
        CHECK_FALSE(r.r_over_c);
      }
    }
  }
}

TEST_CASE("trials are independent of each other") {
  const auto three = run_experiment(small("bivne", 3));
  const auto five = run_experiment(small("bivne", 5));
  for (int n : {0, 4, 8})
    for (int t = 0; t < 3; ++t) CHECK(*three.row(n, t) == *five.row(n, t));
  const auto threaded = run_experiment(small("bivne", 5), {.keep_logs = false, .threads = 3});
  CHECK(threaded == five);
}

TEST_CASE("batches are prefixes of one request stream") {
  auto c = small("greedy_sp_ff", 2);
  const auto report = run_experiment(c);
  c.vnr_counts = {4};
  const auto alone = run_experiment(c);
  for (int t = 0; t < 2; ++t) CHECK(*alone.row(4, t) == *report.row(4, t));
}

TEST_CASE("export formats") {
  ExperimentReport empty;
  empty.algorithm = "bivne";
  const auto header = to_csv(empty);
  CHECK(header ==
        "algorithm,topology,seed,trial,vnr_count,accepted,acceptance_ratio,avg_path_hops,revenue,cost,r_over_c,"
        "profit\n");

  const auto report = run_experiment(small("lrc_sp_ff"));
  const auto csv = to_csv(report);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 3 * 3);
  CHECK(csv.find(",null,") != std::string::npos);
  CHECK(report_from_json(Json::parse(to_json(report).dump())) == report.quantized());
  CHECK(format_number(1.0 / 3.0) == "0.3333333333");
  CHECK(format_number(2.0) == "2");
}

TEST_CASE("profit is recomputable from the stored solutions") {
  const auto c = small("bivne", 2);
  const auto report = run_experiment(c, {.keep_logs = true});
  REQUIRE(report.logs.size() == 2);
  for (const auto& log : report.logs) {
    SubstrateNetwork net = log.initial;
    std::vector<Outcome> outcomes;
    for (std::size_t i = 0; i < log.solutions.size(); ++i) {
      const auto& s = log.solutions[i];
      const auto& vnr = log.requests[i];
      Outcome o{s.accepted};
      if (s.accepted) {
        o.revenue = revenue(vnr, c.prices);
        o.node_cost = node_cost(s.placements, net, vnr, c.prices);
        o.link_cost = link_cost(s.routes, net, vnr, c.prices, c.frag);
        allocate(net, vnr, s);
      }
      outcomes.push_back(o);
      if (static_cast<int>(i + 1) == 8) CHECK(profit(outcomes) == report.row(8, log.trial)->profit);
    }
  }
}

TEST_CASE("solution dumps replay cleanly") {
  const auto report = run_experiment(small("pl_ksp_ff", 2), {.keep_logs = true});
  auto dump = solution_dump(report);
  auto result = check_dump(dump);
  CHECK(result.checked == 16);
  CHECK(result.violations.empty());

  for (auto& e : dump["trials"][0]["entries"])
    if (e["solution"]["accepted"].get<bool>()) {
      e["solution"]["placements"][0] = e["solution"]["placements"][1];
      break;
    }
  result = check_dump(dump);
  CHECK_FALSE(result.violations.empty());
}

TEST_CASE("plot series average over trials") {
  std::vector<ExperimentReport> reports{run_experiment(small("bivne")), run_experiment(small("greedy_sp_ff"))};
  const auto series = plot_series(reports);
  CHECK(series.size() == 4);
  const auto& ar = series.at("acceptance_ratio.csv");
  CHECK(ar.rfind("vnr_count,bivne,greedy_sp_ff\n0,1,1\n", 0) == 0);
  double sum = 0.0;
  for (int t = 0; t < 3; ++t) sum += reports[0].row(8, t)->acceptance_ratio;
  CHECK(ar.find("\n8," + format_number(sum / 3) + ",") != std::string::npos);
}

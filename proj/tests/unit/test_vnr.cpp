#include "bivne/error.hpp"
#include "bivne/io.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace bivne;

TEST_CASE("candidate nodes") {
  auto net = fixtures::network(4, {{0, 1}, {1, 2}, {2, 3}});  // x = 0, 100, 200, 300
  VirtualNode vn{0, 1, 1, {0.0, 0.0}, 1e6};
  CHECK(candidate_nodes(net, vn) == std::vector<NodeId>{0, 1, 2, 3});

  vn.comp_demand = 101;
  CHECK(candidate_nodes(net, vn).empty());
  vn.comp_demand = 1;
  vn.chan_demand = 101;
  CHECK(candidate_nodes(net, vn).empty());

  vn.chan_demand = 1;
  vn.pref_radius = 200.0;  // node 2 sits exactly on the boundary
  CHECK(candidate_nodes(net, vn) == std::vector<NodeId>{0, 1, 2});
  vn.pref_radius = 199.999;
  CHECK(candidate_nodes(net, vn) == std::vector<NodeId>{0, 1});

  net.node(1).comp_used = 95;
  vn.comp_demand = 6;
  CHECK(candidate_nodes(net, vn) == std::vector<NodeId>{0});
}

TEST_CASE("request structure checks") {
  auto r = fixtures::request({{1, 1}, {1, 1}, {1, 1}}, {{0, 1}, {1, 2}}, 2);
  CHECK_NOTHROW(r.check());
  CHECK(r.degree(1) == 2);
  CHECK(r.neighbors(1) == std::vector<int>{0, 2});
  auto bad = r;
  bad.vlinks.push_back({1, 0});
  CHECK_THROWS_AS(bad.check(), ConfigError);
  bad = r;
  bad.vlinks.push_back({2, 2});
  CHECK_THROWS_AS(bad.check(), ConfigError);
  bad = r;
  bad.vlinks.push_back({0, 3});
  CHECK_THROWS_AS(bad.check(), ConfigError);
  bad = r;
  bad.slot_demand = 0;
  CHECK_THROWS_AS(bad.check(), ConfigError);
  bad = r;
  bad.vnodes[0].pref_radius = 0;
  CHECK_THROWS_AS(bad.check(), ConfigError);
}

TEST_CASE("generated requests follow the profile") {
  for (const auto& profile : {RequestProfile::dt14(), RequestProfile::rand50()}) {
    Rng rng(3);
    auto batch = generate_requests(300, profile, rng);
    int pairs = 0, links = 0;
    for (std::size_t i = 0; i < batch.size(); ++i) {
      const auto& r = batch[i];
      CHECK(r.id == static_cast<int>(i));
      CHECK_NOTHROW(r.check());
      const int k = static_cast<int>(r.vnodes.size());
      CHECK(profile.vnodes.contains(k));
      CHECK(profile.slots.contains(r.slot_demand));
      for (const auto& vn : r.vnodes) {
        CHECK(profile.comp.contains(vn.comp_demand));
        CHECK(profile.chan.contains(vn.chan_demand));
        CHECK(vn.pref_radius >= profile.radius.lo);
        CHECK(vn.pref_radius <= profile.radius.hi);
        CHECK(vn.pref_center.x >= 0.0);
        CHECK(vn.pref_center.x <= profile.side);
        CHECK(vn.pref_center.y >= 0.0);
        CHECK(vn.pref_center.y <= profile.side);
      }
      pairs += k * (k - 1) / 2;
      links += static_cast<int>(r.vlinks.size());
    }
    const double freq = static_cast<double>(links) / pairs;
    CHECK(freq == doctest::Approx(0.5).epsilon(0.1));
  }
  CHECK(RequestProfile::dt14().vnodes == IntRange{3, 4});
  CHECK(RequestProfile::dt14().comp == IntRange{1, 10});
  CHECK(RequestProfile::dt14().radius == IntRange{200, 300});
  CHECK(RequestProfile::rand50().vnodes == IntRange{3, 10});
  CHECK(RequestProfile::rand50().slots == IntRange{1, 20});
}

TEST_CASE("request generation is deterministic and prefix-stable") {
  Rng a(11), b(11), c(11);
  auto x = generate_requests(20, RequestProfile::dt14(), a);
  auto y = generate_requests(20, RequestProfile::dt14(), b);
  CHECK(x == y);
  auto prefix = generate_requests(7, RequestProfile::dt14(), c);
  CHECK(std::equal(prefix.begin(), prefix.end(), x.begin()));
  CHECK(requests_from_json(requests_to_json(x)) == x);
}

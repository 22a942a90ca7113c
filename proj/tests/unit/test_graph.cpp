#include "../oracles.hpp"
#include "bivne/graph.hpp"
#include "bivne/lower_solver.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace bivne;

namespace {

std::vector<oracle::Edge> edges_of(const WorkingGraph& g, const SubstrateNetwork& net) {
  std::vector<oracle::Edge> out;
  for (const auto& l : net.links())
    if (g.alive(l.id)) out.push_back({l.a, l.b, l.id});
  return out;
}

}  // namespace

TEST_CASE("shortest path basics") {
  // Square 0-1-3 / 0-2-3 plus a tail 3-4 and an isolated-by-removal node 5.
  auto net = fixtures::network(6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}});
  WorkingGraph g(net);
  auto p = shortest_path(g, 0, 1);
  REQUIRE(p);
  CHECK(p->hops() == 1);
  CHECK(p->links == std::vector<LinkId>{0});

  auto q = shortest_path(g, 0, 3);
  REQUIRE(q);
  CHECK(q->nodes == std::vector<NodeId>{0, 1, 3});
  CHECK(q->links == std::vector<LinkId>{0, 2});
  CHECK_FALSE(shortest_path(g, 2, 2));

  std::vector<bool> blocked_nodes(6, false);
  blocked_nodes[1] = true;
  CHECK(shortest_path(g, 0, 3, &blocked_nodes)->nodes == std::vector<NodeId>{0, 2, 3});
  std::vector<bool> blocked_links(6, false);
  blocked_links[3] = true;
  blocked_links[2] = true;
  CHECK_FALSE(shortest_path(g, 0, 3, nullptr, &blocked_links));

  g.remove_link(5);
  CHECK_FALSE(shortest_path(g, 0, 5));
  CHECK(hop_distances(g, 0)[5] == kUnreachable);
  CHECK(g.alive_link_count() == 5);
}

TEST_CASE("hop counts match Floyd-Warshall") {
  Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = uniform_int(rng, 2, 20);
    auto net = oracle::random_network(rng, n, uniform_int(rng, 0, n), 1, 4, 0.0);
    WorkingGraph g(net);
    for (LinkId l = 0; l < static_cast<LinkId>(net.link_count()); ++l)
      if (uniform01(rng) < 0.2) g.remove_link(l);
    const auto want = oracle::floyd_warshall(n, edges_of(g, net));
    REQUIRE(all_pairs_hops(g) == want);
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) {
        auto p = shortest_path(g, s, t);
        if (s == t || want[s][t] < 0) {
          CHECK_FALSE(p);
          continue;
        }
        REQUIRE(p);
        CHECK(p->hops() == want[s][t]);
        CHECK(p->source() == s);
        CHECK(p->target() == t);
      }
  }
}

TEST_CASE("k shortest paths match exhaustive enumeration") {
  Rng rng(8);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = uniform_int(rng, 2, 8);
    auto net = oracle::random_network(rng, n, uniform_int(rng, 0, 2 * n), 1, 2, 0.0);
    WorkingGraph g(net);
    const int s = uniform_int(rng, 0, n - 1), t = uniform_int(rng, 0, n - 1);
    const int k = uniform_int(rng, 1, 6);
    const auto all = oracle::simple_paths(n, edges_of(g, net), s, t);
    const auto got = k_shortest_paths(g, s, t, k);
    REQUIRE(got.size() == std::min<std::size_t>(k, all.size()));
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i].nodes == all[i].nodes);
      CHECK(got[i].links == all[i].links);
    }
  }
}

TEST_CASE("pruning by largest free run") {
  auto net = fixtures::network(4, {{0, 1, 6, {5}}, {1, 2, 6, {2, 5}}, {2, 3, 6, {1, 3, 5}}});
  auto g = prune_working_graph(net, 3);
  CHECK(g.alive(0));
  CHECK_FALSE(g.alive(1));
  CHECK_FALSE(g.alive(2));
  CHECK(prune_working_graph(net, 1).alive_link_count() == 3);

  auto full = fixtures::network(3, {{0, 1, 2, {0, 1}}, {1, 2, 2, {0, 1}}});
  auto none = prune_working_graph(full, 1);
  CHECK(none.alive_link_count() == 0);
  CHECK(none.node_count() == 3);
}

#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "bivne/substrate.hpp"
#include "bivne/vnr.hpp"

namespace fixtures {

using namespace bivne;

struct EdgeSpec {
  NodeId a;
  NodeId b;
  int slots = 16;
  std::vector<int> occupied = {};
};

// Nodes on a line 100 apart with uniform capacity; links as given.
inline SubstrateNetwork network(int n, const std::vector<EdgeSpec>& edges, int cap = 100) {
  std::vector<SubstrateNode> nodes;
  for (int i = 0; i < n; ++i) nodes.push_back({i, "n" + std::to_string(i), {100.0 * i, 0.0}, cap, 0, cap, 0});
  std::vector<OpticalLink> links;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    OpticalLink l{static_cast<LinkId>(i), e.a, e.b, SlotMask(e.slots, false)};
    for (int s : e.occupied) l.occupancy[s] = true;
    links.push_back(std::move(l));
  }
  return SubstrateNetwork(std::move(nodes), std::move(links));
}

inline SlotMask mask(const std::string& bits) {
  SlotMask m;
  for (char c : bits) m.push_back(c == '1');
  return m;
}

// Request whose vnodes accept any host (huge radius).
inline VirtualRequest request(std::vector<std::pair<int, int>> demands, std::vector<std::pair<int, int>> vlinks,
                              int slots, int id = 0) {
  VirtualRequest r;
  r.id = id;
  for (std::size_t i = 0; i < demands.size(); ++i)
    r.vnodes.push_back({static_cast<int>(i), demands[i].first, demands[i].second, {0.0, 0.0}, 1e9});
  r.vlinks = std::move(vlinks);
  r.slot_demand = slots;
  return r;
}

}  // namespace fixtures

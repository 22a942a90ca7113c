#pragma once

#include <utility>
#include <vector>

#include "bivne/rng.hpp"
#include "bivne/substrate.hpp"

namespace bivne {

struct VirtualNode {
  int id = 0;
  int comp_demand = 1;
  int chan_demand = 1;
  Point pref_center;
  double pref_radius = 1.0;

  bool operator==(const VirtualNode&) const = default;
};

// Transparent request: every virtual link asks for the same slot count.
struct VirtualRequest {
  int id = 0;
  std::vector<VirtualNode> vnodes;
  std::vector<std::pair<int, int>> vlinks;
  int slot_demand = 1;

  int degree(int vnode) const;
  std::vector<int> neighbors(int vnode) const;

  // Throws ConfigError on self-loops, duplicate or dangling vlinks,
  // non-positive demands or radius, or ids other than 0..k-1.
  void check() const;

  bool operator==(const VirtualRequest&) const = default;
};

// Hosts satisfying capacity (C3/C4) and preferred-area (C5) filters.
std::vector<NodeId> candidate_nodes(const SubstrateNetwork& net, const VirtualNode& vn);

struct IntRange {
  int lo = 0;
  int hi = 0;
  bool contains(int v) const { return v >= lo && v <= hi; }
  bool operator==(const IntRange&) const = default;
};

struct RequestProfile {
  IntRange vnodes{3, 4};
  IntRange comp{1, 10};
  IntRange chan{1, 10};
  IntRange slots{1, 10};
  IntRange radius{200, 300};
  double link_probability = 0.5;
  double side = 1000.0;

  void check() const;
  bool operator==(const RequestProfile&) const = default;

  static RequestProfile dt14() { return {}; }
  static RequestProfile rand50() { return {{3, 10}, {1, 20}, {1, 20}, {1, 20}, {200, 300}, 0.5, 1000.0}; }
};

// Sequential draws: the first k requests of a longer batch equal a batch of k.
std::vector<VirtualRequest> generate_requests(int count, const RequestProfile& profile, Rng& rng,
                                              int first_id = 0);
VirtualRequest generate_request(int id, const RequestProfile& profile, Rng& rng);

}  // namespace bivne

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace bivne {

using NodeId = int;
using LinkId = int;

// Per-link spectrum state, one flag per frequency slot (true = occupied).
using SlotMask = std::vector<bool>;

struct Point {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point&) const = default;
};

double distance(const Point& a, const Point& b);

struct SubstrateNode {
  NodeId id = 0;
  std::string name;
  Point loc;
  int comp_cap = 0;
  int comp_used = 0;
  int chan_cap = 0;
  int chan_used = 0;

  int comp_avail() const { return comp_cap - comp_used; }
  int chan_avail() const { return chan_cap - chan_used; }

  bool operator==(const SubstrateNode&) const = default;
};

struct OpticalLink {
  LinkId id = 0;
  NodeId a = 0;
  NodeId b = 0;
  SlotMask occupancy;

  int slot_count() const { return static_cast<int>(occupancy.size()); }
  int free_count() const;
  NodeId other(NodeId n) const { return n == a ? b : a; }
  bool joins(NodeId u, NodeId v) const { return (a == u && b == v) || (a == v && b == u); }

  bool operator==(const OpticalLink&) const = default;
};

// A maximal run of free slots [start, end].
struct FreeRun {
  int start = 0;
  int end = 0;

  int length() const { return end - start + 1; }
  // Free runs of a single slot are tracked but are not MACSBs.
  bool is_macsb() const { return length() >= 2; }
  bool contains(int slot) const { return slot >= start && slot <= end; }

  bool operator==(const FreeRun&) const = default;
};

std::vector<FreeRun> free_runs(const SlotMask& occupancy);
int largest_free_run(const SlotMask& occupancy);

// Element-wise OR of occupancy masks; a slot is free only if free everywhere.
SlotMask conjoin(const std::vector<const SlotMask*>& masks);

struct SubstratePath {
  std::vector<NodeId> nodes;
  std::vector<LinkId> links;

  int hops() const { return static_cast<int>(links.size()); }
  bool empty() const { return links.empty(); }
  NodeId source() const { return nodes.front(); }
  NodeId target() const { return nodes.back(); }
  bool uses(LinkId l) const;

  bool operator==(const SubstratePath&) const = default;
};

class SubstrateNetwork {
 public:
  SubstrateNetwork() = default;

  // Throws ConfigError when ids are not 0..n-1, endpoints are unknown, a
  // link is a self-loop or duplicate, a link has no slots, usage exceeds
  // capacity, or the graph is disconnected.
  SubstrateNetwork(std::vector<SubstrateNode> nodes, std::vector<OpticalLink> links);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t link_count() const { return links_.size(); }

  const std::vector<SubstrateNode>& nodes() const { return nodes_; }
  const std::vector<OpticalLink>& links() const { return links_; }

  const SubstrateNode& node(NodeId id) const;
  SubstrateNode& node(NodeId id);
  const OpticalLink& link(LinkId id) const;
  OpticalLink& link(LinkId id);

  // Attached link ids, sorted by the id of the opposite endpoint.
  const std::vector<LinkId>& attached(NodeId id) const;

  // Link joining u and v, or -1.
  LinkId find_link(NodeId u, NodeId v) const;

  bool has_node(NodeId id) const { return id >= 0 && id < static_cast<NodeId>(nodes_.size()); }
  bool has_link(LinkId id) const { return id >= 0 && id < static_cast<LinkId>(links_.size()); }

  bool operator==(const SubstrateNetwork& o) const { return nodes_ == o.nodes_ && links_ == o.links_; }

 private:
  std::vector<SubstrateNode> nodes_;
  std::vector<OpticalLink> links_;
  std::vector<std::vector<LinkId>> adjacency_;
};

bool is_connected(std::size_t node_count, const std::vector<std::pair<NodeId, NodeId>>& edges);

// Maximal runs free on every link of the path (spectrum continuity).
std::vector<FreeRun> path_free_runs(const SubstrateNetwork& net, const SubstratePath& path);

// min over path links of B(e); nominal path bandwidth.
int path_bandwidth(const SubstrateNetwork& net, const SubstratePath& path);

// Number of attached links whose largest free run can carry demand_slots.
int available_degree(const SubstrateNetwork& net, NodeId node, int demand_slots);

}  // namespace bivne

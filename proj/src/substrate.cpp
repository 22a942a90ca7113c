#include "bivne/substrate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <set>

#include "bivne/error.hpp"

namespace bivne {

double distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

int OpticalLink::free_count() const {
  return static_cast<int>(std::count(occupancy.begin(), occupancy.end(), false));
}

std::vector<FreeRun> free_runs(const SlotMask& occupancy) {
  std::vector<FreeRun> runs;
  const int n = static_cast<int>(occupancy.size());
  int i = 0;
  while (i < n) {
    if (occupancy[i]) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 < n && !occupancy[j + 1]) ++j;
    runs.push_back({i, j});
    i = j + 1;
  }
  return runs;
}

int largest_free_run(const SlotMask& occupancy) {
  int best = 0, cur = 0;
  for (bool used : occupancy) {
    cur = used ? 0 : cur + 1;
    best = std::max(best, cur);
  }
  return best;
}

SlotMask conjoin(const std::vector<const SlotMask*>& masks) {
  if (masks.empty()) return {};
  std::size_t n = masks.front()->size();
  for (const auto* m : masks) n = std::min(n, m->size());
  SlotMask out(n, false);
  for (const auto* m : masks)
    for (std::size_t i = 0; i < n; ++i) out[i] = out[i] || (*m)[i];
  return out;
}

bool SubstratePath::uses(LinkId l) const {
  return std::find(links.begin(), links.end(), l) != links.end();
}

bool is_connected(std::size_t node_count, const std::vector<std::pair<NodeId, NodeId>>& edges) {
  if (node_count == 0) return true;
  std::vector<int> parent(node_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = node_count;
  for (auto [u, v] : edges) {
    int ru = find(u), rv = find(v);
    if (ru != rv) {
      parent[ru] = rv;
      --components;
    }
  }
  return components == 1;
}

SubstrateNetwork::SubstrateNetwork(std::vector<SubstrateNode> nodes, std::vector<OpticalLink> links)
    : nodes_(std::move(nodes)), links_(std::move(links)) {
  std::sort(nodes_.begin(), nodes_.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  std::sort(links_.begin(), links_.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  if (nodes_.empty()) throw ConfigError("substrate: at least one node is required");
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const auto& n = nodes_[i];
    if (n.id != static_cast<NodeId>(i))
      throw ConfigError("substrate: node ids must be 0..n-1 without gaps (got " + std::to_string(n.id) + ")");
    if (n.comp_cap <= 0 || n.chan_cap <= 0)
      throw ConfigError("substrate: node " + std::to_string(n.id) + " needs positive capacities");
    if (n.comp_used < 0 || n.comp_used > n.comp_cap || n.chan_used < 0 || n.chan_used > n.chan_cap)
      throw ConfigError("substrate: node " + std::to_string(n.id) + " usage outside [0, capacity]");
  }
  adjacency_.assign(nodes_.size(), {});
  std::set<std::pair<NodeId, NodeId>> seen;
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (std::size_t i = 0; i < links_.size(); ++i) {
    const auto& l = links_[i];
    const auto tag = "substrate: link " + std::to_string(l.id);
    if (l.id != static_cast<LinkId>(i)) throw ConfigError("substrate: link ids must be 0..m-1 without gaps");
    if (!has_node(l.a) || !has_node(l.b)) throw ConfigError(tag + " references an unknown node");
    if (l.a == l.b) throw ConfigError(tag + " is a self-loop");
    if (l.slot_count() < 1) throw ConfigError(tag + " needs at least one slot");
    if (!seen.insert(std::minmax(l.a, l.b)).second) throw ConfigError(tag + " duplicates an existing link");
    adjacency_[l.a].push_back(l.id);
    adjacency_[l.b].push_back(l.id);
    edges.emplace_back(l.a, l.b);
  }
  for (std::size_t n = 0; n < adjacency_.size(); ++n) {
    auto& adj = adjacency_[n];
    std::sort(adj.begin(), adj.end(), [&](LinkId x, LinkId y) {
      return links_[x].other(static_cast<NodeId>(n)) < links_[y].other(static_cast<NodeId>(n));
    });
  }
  if (!is_connected(nodes_.size(), edges)) throw ConfigError("substrate: graph is not connected");
}

const SubstrateNode& SubstrateNetwork::node(NodeId id) const {
  if (!has_node(id)) throw InvalidIdError("unknown substrate node " + std::to_string(id));
  return nodes_[id];
}

SubstrateNode& SubstrateNetwork::node(NodeId id) {
  if (!has_node(id)) throw InvalidIdError("unknown substrate node " + std::to_string(id));
  return nodes_[id];
}

const OpticalLink& SubstrateNetwork::link(LinkId id) const {
  if (!has_link(id)) throw InvalidIdError("unknown substrate link " + std::to_string(id));
  return links_[id];
}

OpticalLink& SubstrateNetwork::link(LinkId id) {
  if (!has_link(id)) throw InvalidIdError("unknown substrate link " + std::to_string(id));
  return links_[id];
}

const std::vector<LinkId>& SubstrateNetwork::attached(NodeId id) const {
  if (!has_node(id)) throw InvalidIdError("unknown substrate node " + std::to_string(id));
  return adjacency_[id];
}

LinkId SubstrateNetwork::find_link(NodeId u, NodeId v) const {
  if (!has_node(u) || !has_node(v)) return -1;
  for (LinkId l : adjacency_[u])
    if (links_[l].other(u) == v) return l;
  return -1;
}

std::vector<FreeRun> path_free_runs(const SubstrateNetwork& net, const SubstratePath& path) {
  std::vector<const SlotMask*> masks;
  masks.reserve(path.links.size());
  for (LinkId l : path.links) masks.push_back(&net.link(l).occupancy);
  return free_runs(conjoin(masks));
}

int path_bandwidth(const SubstrateNetwork& net, const SubstratePath& path) {
  int b = 0;
  bool first = true;
  for (LinkId l : path.links) {
    int s = net.link(l).slot_count();
    b = first ? s : std::min(b, s);
    first = false;
  }
  return b;
}

int available_degree(const SubstrateNetwork& net, NodeId node, int demand_slots) {
  int degree = 0;
  for (LinkId l : net.attached(node))
    if (largest_free_run(net.link(l).occupancy) >= demand_slots) ++degree;
  return degree;
}

}  // namespace bivne

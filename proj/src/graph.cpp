#include "bivne/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace bivne {

WorkingGraph::WorkingGraph(const SubstrateNetwork& net)
    : adjacency_(net.node_count()), alive_(net.link_count(), true) {
  for (const auto& n : net.nodes())
    for (LinkId l : net.attached(n.id)) adjacency_[n.id].push_back({net.link(l).other(n.id), l});
}

int WorkingGraph::alive_link_count() const {
  return static_cast<int>(std::count(alive_.begin(), alive_.end(), true));
}

namespace {

std::vector<int> bfs(const WorkingGraph& g, NodeId src, const std::vector<bool>* blocked_nodes,
                     const std::vector<bool>* blocked_links) {
  std::vector<int> dist(g.node_count(), kUnreachable);
  std::deque<NodeId> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    for (const auto& arc : g.arcs(u)) {
      if (!g.alive(arc.link) || dist[arc.to] != kUnreachable) continue;
      if (blocked_links && (*blocked_links)[arc.link]) continue;
      if (blocked_nodes && (*blocked_nodes)[arc.to]) continue;
      dist[arc.to] = dist[u] + 1;
      queue.push_back(arc.to);
    }
  }
  return dist;
}

}  // namespace

std::vector<int> hop_distances(const WorkingGraph& g, NodeId src) { return bfs(g, src, nullptr, nullptr); }

std::vector<std::vector<int>> all_pairs_hops(const WorkingGraph& g) {
  std::vector<std::vector<int>> out;
  out.reserve(g.node_count());
  for (std::size_t s = 0; s < g.node_count(); ++s) out.push_back(hop_distances(g, static_cast<NodeId>(s)));
  return out;
}

std::optional<SubstratePath> shortest_path(const WorkingGraph& g, NodeId src, NodeId dst,
                                           const std::vector<bool>* blocked_nodes,
                                           const std::vector<bool>* blocked_links) {
  if (src == dst) return std::nullopt;
  // Distances to dst, then a greedy walk from src taking the smallest
  // neighbor that stays on a shortest path.
  const auto dist = bfs(g, dst, blocked_nodes, blocked_links);
  if (dist[src] == kUnreachable) return std::nullopt;
  SubstratePath p;
  p.nodes.push_back(src);
  NodeId u = src;
  while (u != dst) {
    for (const auto& arc : g.arcs(u)) {
      if (!g.alive(arc.link) || (blocked_links && (*blocked_links)[arc.link])) continue;
      if (dist[arc.to] != dist[u] - 1) continue;
      p.nodes.push_back(arc.to);
      p.links.push_back(arc.link);
      u = arc.to;
      break;
    }
  }
  return p;
}

bool path_less(const SubstratePath& a, const SubstratePath& b) {
  if (a.hops() != b.hops()) return a.hops() < b.hops();
  return a.nodes < b.nodes;
}

std::vector<SubstratePath> k_shortest_paths(const WorkingGraph& g, NodeId src, NodeId dst, int k) {
  std::vector<SubstratePath> found;
  if (k < 1) return found;
  auto first = shortest_path(g, src, dst);
  if (!first) return found;
  found.push_back(std::move(*first));

  std::set<SubstratePath, decltype(&path_less)> pending(&path_less);
  std::vector<bool> blocked_nodes(g.node_count());
  std::vector<bool> blocked_links;
  while (static_cast<int>(found.size()) < k) {
    const SubstratePath prev = found.back();
    for (std::size_t i = 0; i + 1 < prev.nodes.size(); ++i) {
      const NodeId spur = prev.nodes[i];
      std::fill(blocked_nodes.begin(), blocked_nodes.end(), false);
      blocked_links.assign(g.link_count(), false);
      for (const auto& p : found)
        if (p.nodes.size() > i + 1 && std::equal(p.nodes.begin(), p.nodes.begin() + i + 1, prev.nodes.begin()))
          blocked_links[p.links[i]] = true;
      for (std::size_t j = 0; j < i; ++j) blocked_nodes[prev.nodes[j]] = true;

      auto tail = shortest_path(g, spur, dst, &blocked_nodes, &blocked_links);
      if (!tail) continue;
      SubstratePath candidate;
      candidate.nodes.assign(prev.nodes.begin(), prev.nodes.begin() + i);
      candidate.links.assign(prev.links.begin(), prev.links.begin() + i);
      candidate.nodes.insert(candidate.nodes.end(), tail->nodes.begin(), tail->nodes.end());
      candidate.links.insert(candidate.links.end(), tail->links.begin(), tail->links.end());
      if (std::find(found.begin(), found.end(), candidate) == found.end()) pending.insert(std::move(candidate));
    }
    if (pending.empty()) break;
    found.push_back(*pending.begin());
    pending.erase(pending.begin());
  }
  return found;
}

}  // namespace bivne

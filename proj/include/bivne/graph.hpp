#pragma once

#include <optional>
#include <vector>

#include "bivne/substrate.hpp"

namespace bivne {

inline constexpr int kUnreachable = -1;

// A mutable view of the substrate topology: links can be removed without
// touching the network. Adjacency is sorted by neighbor id.
class WorkingGraph {
 public:
  struct Arc {
    NodeId to;
    LinkId link;
  };

  WorkingGraph() = default;
  explicit WorkingGraph(const SubstrateNetwork& net);

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t link_count() const { return alive_.size(); }
  const std::vector<Arc>& arcs(NodeId n) const { return adjacency_[n]; }
  bool alive(LinkId l) const { return alive_[l]; }
  int alive_link_count() const;

  void remove_link(LinkId l) { alive_[l] = false; }
  void remove_path(const SubstratePath& p) {
    for (LinkId l : p.links) remove_link(l);
  }

 private:
  std::vector<std::vector<Arc>> adjacency_;
  std::vector<bool> alive_;
};

// Minimum-hop path; among equal hop counts the lexicographically smallest
// node sequence (smallest next-node id at every step). Blocked nodes and
// links are ignored; src and dst must not be blocked.
std::optional<SubstratePath> shortest_path(const WorkingGraph& g, NodeId src, NodeId dst,
                                           const std::vector<bool>* blocked_nodes = nullptr,
                                           const std::vector<bool>* blocked_links = nullptr);

// BFS hop counts from src; kUnreachable where no path exists.
std::vector<int> hop_distances(const WorkingGraph& g, NodeId src);
std::vector<std::vector<int>> all_pairs_hops(const WorkingGraph& g);

// Order used for path enumeration: hop count, then node sequence.
bool path_less(const SubstratePath& a, const SubstratePath& b);

// Yen's algorithm: up to k loop-free paths in path_less order.
std::vector<SubstratePath> k_shortest_paths(const WorkingGraph& g, NodeId src, NodeId dst, int k);

}  // namespace bivne

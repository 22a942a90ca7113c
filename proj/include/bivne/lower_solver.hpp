#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bivne/embedding.hpp"
#include "bivne/fragcost.hpp"
#include "bivne/graph.hpp"

namespace bivne {

// Copy of the substrate keeping only links whose largest free run can
// carry demand_slots.
WorkingGraph prune_working_graph(const SubstrateNetwork& net, int demand_slots);

using SlotBlock = std::pair<int, int>;  // [start, end]

// Aligned block minimizing the fragment slots created along the path; ties
// go to the smaller total leftover in the host runs, then the lowest start.
std::optional<SlotBlock> exact_fit_slots(std::span<const SlotMask> occupancy, const SubstratePath& path, int demand,
                                         const FragConfig& cfg);
// Lowest-index aligned block.
std::optional<SlotBlock> first_fit_slots(std::span<const SlotMask> occupancy, const SubstratePath& path, int demand);

enum class SlotPolicy { kExactFit, kFirstFit };

struct LinkEmbedOptions {
  SlotPolicy slots = SlotPolicy::kExactFit;
  // Paths tried per vlink; 1 is single shortest path, more uses Yen's
  // enumeration and takes the first path with a feasible block.
  int k_paths = 1;
};

struct LinkEmbedding {
  bool ok = false;
  std::vector<RouteAssignment> routes;  // in processing order
  double cost = 0.0;                    // spectrum cost of routes, same order
  int failed_vlink = -1;
  std::string reason;
};

// Link embedding for a fixed node placement. Virtual links are processed in
// descending hop distance between their hosts (vlink id breaks ties); each
// gets a shortest path on the pruned working graph and an aligned block, and
// its path is then removed from the working graph. Any failure rejects the
// whole request. The network itself is never modified.
class LinkSolver {
 public:
  LinkSolver(const SubstrateNetwork& net, const VirtualRequest& vnr, const PriceTable& prices,
             const FragConfig& frag, LinkEmbedOptions options = {});

  LinkEmbedding solve(std::span<const NodeId> placements) const;

  const WorkingGraph& pruned() const { return pruned_; }
  // Hop counts on the pruned graph; kUnreachable where disconnected.
  int hops(NodeId a, NodeId b) const { return hops_[a][b]; }

  // Order in which vlinks are embedded for this placement.
  std::vector<int> vlink_order(std::span<const NodeId> placements) const;

 private:
  const SubstrateNetwork& net_;
  const VirtualRequest& vnr_;
  PriceTable prices_;
  FragConfig frag_;
  LinkEmbedOptions options_;
  WorkingGraph pruned_;
  std::vector<std::vector<int>> hops_;
  std::vector<SlotMask> occupancy_;
};

LinkEmbedding embed_links(const SubstrateNetwork& net, const VirtualRequest& vnr, std::span<const NodeId> placements,
                          const PriceTable& prices, const FragConfig& frag, LinkEmbedOptions options = {});

// Placement plus link embedding as a full solution; rejected when the links
// cannot be embedded.
EmbeddingSolution complete_solution(const SubstrateNetwork& net, const VirtualRequest& vnr,
                                    std::span<const NodeId> placements, const LinkEmbedding& links,
                                    const PriceTable& prices);

}  // namespace bivne

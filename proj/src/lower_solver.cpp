#include "bivne/lower_solver.hpp"

#include <algorithm>
#include <climits>
#include <tuple>

#include "bivne/error.hpp"

namespace bivne {

WorkingGraph prune_working_graph(const SubstrateNetwork& net, int demand_slots) {
  WorkingGraph g(net);
  for (const auto& l : net.links())
    if (largest_free_run(l.occupancy) < demand_slots) g.remove_link(l.id);
  return g;
}

namespace {

std::vector<FreeRun> aligned_runs(std::span<const SlotMask> occupancy, const SubstratePath& path) {
  std::vector<const SlotMask*> masks;
  masks.reserve(path.links.size());
  for (LinkId l : path.links) masks.push_back(&occupancy[l]);
  return free_runs(conjoin(masks));
}

// Length of the free run on occ that contains slot s.
int host_run_length(const SlotMask& occ, int start, int end) {
  const int n = static_cast<int>(occ.size());
  while (start > 0 && !occ[start - 1]) --start;
  while (end + 1 < n && !occ[end + 1]) ++end;
  return end - start + 1;
}

}  // namespace

std::optional<SlotBlock> exact_fit_slots(std::span<const SlotMask> occupancy, const SubstratePath& path, int demand,
                                         const FragConfig& cfg) {
  if (demand < 1 || path.empty()) return std::nullopt;
  std::optional<SlotBlock> best;
  std::tuple<int, int, int> best_key{INT_MAX, INT_MAX, INT_MAX};
  for (const auto& run : aligned_runs(occupancy, path)) {
    for (int s = run.start; s + demand - 1 <= run.end; ++s) {
      int fragments = 0, leftover = 0;
      for (LinkId l : path.links) {
        fragments += new_fragment_slots(occupancy[l], s, demand, cfg);
        leftover += host_run_length(occupancy[l], s, s + demand - 1) - demand;
      }
      const std::tuple<int, int, int> key{fragments, leftover, s};
      if (key < best_key) {
        best_key = key;
        best = SlotBlock{s, s + demand - 1};
      }
    }
  }
  return best;
}

std::optional<SlotBlock> first_fit_slots(std::span<const SlotMask> occupancy, const SubstratePath& path, int demand) {
  if (demand < 1 || path.empty()) return std::nullopt;
  for (const auto& run : aligned_runs(occupancy, path))
    if (run.length() >= demand) return SlotBlock{run.start, run.start + demand - 1};
  return std::nullopt;
}

LinkSolver::LinkSolver(const SubstrateNetwork& net, const VirtualRequest& vnr, const PriceTable& prices,
                       const FragConfig& frag, LinkEmbedOptions options)
    : net_(net),
      vnr_(vnr),
      prices_(prices),
      frag_(frag),
      options_(options),
      pruned_(prune_working_graph(net, vnr.slot_demand)),
      hops_(all_pairs_hops(pruned_)) {
  occupancy_.reserve(net.link_count());
  for (const auto& l : net.links()) occupancy_.push_back(l.occupancy);
}

std::vector<int> LinkSolver::vlink_order(std::span<const NodeId> placements) const {
  std::vector<int> order(vnr_.vlinks.size());
  std::vector<int> dist(order.size());
  for (std::size_t e = 0; e < order.size(); ++e) {
    order[e] = static_cast<int>(e);
    const auto [u, v] = vnr_.vlinks[e];
    const int h = hops_[placements[u]][placements[v]];
    dist[e] = h == kUnreachable ? INT_MAX : h;
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return dist[a] > dist[b]; });
  return order;
}

LinkEmbedding LinkSolver::solve(std::span<const NodeId> placements) const {
  if (placements.size() != vnr_.vnodes.size())
    throw DomainError("embed_links: placement count does not match the request");
  LinkEmbedding out;
  WorkingGraph graph = pruned_;
  std::vector<SlotMask> shadow;  // copied lazily, only needed between vlinks sharing links
  const int demand = vnr_.slot_demand;

  for (int e : vlink_order(placements)) {
    const auto [u, v] = vnr_.vlinks[e];
    const NodeId src = placements[u], dst = placements[v];
    std::vector<SubstratePath> paths;
    if (options_.k_paths <= 1) {
      if (auto p = shortest_path(graph, src, dst)) paths.push_back(std::move(*p));
    } else {
      paths = k_shortest_paths(graph, src, dst, options_.k_paths);
    }
    if (paths.empty()) {
      out.failed_vlink = e;
      out.reason = "no path for vlink " + std::to_string(e);
      out.routes.clear();
      out.cost = 0.0;
      return out;
    }
    std::span<const SlotMask> occ = shadow.empty() ? std::span<const SlotMask>(occupancy_) : shadow;
    std::optional<SlotBlock> block;
    const SubstratePath* chosen = nullptr;
    for (const auto& p : paths) {
      block = options_.slots == SlotPolicy::kExactFit ? exact_fit_slots(occ, p, demand, frag_)
                                                      : first_fit_slots(occ, p, demand);
      if (block) {
        chosen = &p;
        break;
      }
    }
    if (!block) {
      out.failed_vlink = e;
      out.reason = "no aligned slot block for vlink " + std::to_string(e);
      out.routes.clear();
      out.cost = 0.0;
      return out;
    }
    for (LinkId l : chosen->links) {
      const int xi = new_fragment_slots(occ[l], block->first, demand, frag_);
      out.cost += prices_.gamma_p * (demand + xi);
    }
    if (shadow.empty()) shadow = occupancy_;
    for (LinkId l : chosen->links)
      for (int s = block->first; s <= block->second; ++s) shadow[l][s] = true;
    graph.remove_path(*chosen);
    out.routes.push_back({e, *chosen, block->first, block->second});
  }
  out.ok = true;
  return out;
}

LinkEmbedding embed_links(const SubstrateNetwork& net, const VirtualRequest& vnr, std::span<const NodeId> placements,
                          const PriceTable& prices, const FragConfig& frag, LinkEmbedOptions options) {
  return LinkSolver(net, vnr, prices, frag, options).solve(placements);
}

EmbeddingSolution complete_solution(const SubstrateNetwork& net, const VirtualRequest& vnr,
                                    std::span<const NodeId> placements, const LinkEmbedding& links,
                                    const PriceTable& prices) {
  if (!links.ok) return EmbeddingSolution::rejected(vnr.id, links.reason);
  EmbeddingSolution s;
  s.vnr_id = vnr.id;
  s.accepted = true;
  s.placements.assign(placements.begin(), placements.end());
  s.routes = links.routes;
  s.fitness = node_cost(placements, net, vnr, prices) + links.cost;
  return s;
}

}  // namespace bivne

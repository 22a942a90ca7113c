#include "bivne/fragcost.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "bivne/error.hpp"

namespace bivne {

void PriceTable::check() const {
  for (double p : {alpha, kappa, gamma, alpha_p, kappa_p, gamma_p})
    if (!(p >= 0.0)) throw ConfigError("prices must be non-negative");
}

void FragConfig::check() const {
  if (xi_max < 1) throw ConfigError("frag.xi_max must be >= 1");
}

double loi_after(const SubstrateNode& node, int comp_add, int chan_add) {
  if (node.comp_cap <= 0 || node.chan_cap <= 0)
    throw DomainError("loi: node " + std::to_string(node.id) + " has zero capacity");
  const double c = static_cast<double>(node.comp_used + comp_add) / node.comp_cap;
  const double w = static_cast<double>(node.chan_used + chan_add) / node.chan_cap;
  return std::abs(c - w);
}

double loi(const SubstrateNode& node) { return loi_after(node, 0, 0); }

double loi_increase(const SubstrateNode& node, const VirtualNode& vn) {
  if (vn.comp_demand > node.comp_avail() || vn.chan_demand > node.chan_avail())
    throw DomainError("loi_increase: node " + std::to_string(node.id) + " cannot host virtual node " +
                      std::to_string(vn.id));
  const double delta = loi_after(node, vn.comp_demand, vn.chan_demand) - loi(node);
  return delta > 0.0 ? delta : 0.0;
}

int new_fragment_slots(const SlotMask& occupancy, int alloc_start, int alloc_len, const FragConfig& cfg) {
  const int n = static_cast<int>(occupancy.size());
  const int alloc_end = alloc_start + alloc_len - 1;
  if (alloc_len < 1 || alloc_start < 0 || alloc_end >= n)
    throw DomainError("new_fragment_slots: allocation outside the spectrum");
  for (int s = alloc_start; s <= alloc_end; ++s)
    if (occupancy[s]) throw DomainError("new_fragment_slots: allocation overlaps occupied slot " + std::to_string(s));

  int host_start = alloc_start, host_end = alloc_end;
  while (host_start > 0 && !occupancy[host_start - 1]) --host_start;
  while (host_end + 1 < n && !occupancy[host_end + 1]) ++host_end;
  if (cfg.is_fragment(host_end - host_start + 1)) return 0;

  int created = 0;
  for (int leftover : {alloc_start - host_start, host_end - alloc_end})
    if (cfg.is_fragment(leftover)) created += leftover;
  return created;
}

double revenue(const VirtualRequest& vnr, const PriceTable& prices) {
  double r = 0.0;
  for (const auto& vn : vnr.vnodes) r += prices.alpha * vn.comp_demand + prices.kappa * vn.chan_demand;
  for (std::size_t i = 0; i < vnr.vlinks.size(); ++i) r += prices.gamma * vnr.slot_demand;
  return r;
}

double node_cost_term(const SubstrateNode& host, const VirtualNode& vn, const PriceTable& prices) {
  return (1.0 + loi_increase(host, vn)) * (prices.alpha_p * vn.comp_demand + prices.kappa_p * vn.chan_demand);
}

double node_cost(std::span<const NodeId> placements, const SubstrateNetwork& net, const VirtualRequest& vnr,
                 const PriceTable& prices) {
  if (placements.empty()) return 0.0;
  if (placements.size() != vnr.vnodes.size())
    throw DomainError("node_cost: placement count does not match the request");
  std::set<NodeId> hosts;
  double cost = 0.0;
  for (std::size_t i = 0; i < placements.size(); ++i) {
    if (!hosts.insert(placements[i]).second)
      throw DomainError("node_cost: host " + std::to_string(placements[i]) + " used twice");
    cost += node_cost_term(net.node(placements[i]), vnr.vnodes[i], prices);
  }
  return cost;
}

double link_cost(std::span<const RouteAssignment> routes, const SubstrateNetwork& net, const VirtualRequest& vnr,
                 const PriceTable& prices, const FragConfig& cfg) {
  if (routes.empty()) return 0.0;
  std::vector<SlotMask> shadow;
  shadow.reserve(net.link_count());
  for (const auto& l : net.links()) shadow.push_back(l.occupancy);
  double cost = 0.0;
  for (const auto& r : routes) {
    if (r.slot_count() != vnr.slot_demand)
      throw DomainError("link_cost: vlink " + std::to_string(r.vlink) + " block size differs from slot demand");
    for (LinkId l : r.path.links) {
      auto& occ = shadow.at(static_cast<std::size_t>(net.link(l).id));
      const int xi = new_fragment_slots(occ, r.slot_start, r.slot_count(), cfg);
      cost += prices.gamma_p * (r.slot_count() + xi);
      for (int s = r.slot_start; s <= r.slot_end; ++s) occ[s] = true;
    }
  }
  return cost;
}

double fitness(const SubstrateNetwork& before, const VirtualRequest& vnr, const EmbeddingSolution& solution,
               const PriceTable& prices, const FragConfig& cfg) {
  if (!solution.accepted) return kInfeasible;
  return node_cost(solution.placements, before, vnr, prices) + link_cost(solution.routes, before, vnr, prices, cfg);
}

double profit(std::span<const Outcome> outcomes) {
  double p = 0.0;
  for (const auto& o : outcomes)
    if (o.accepted) p += o.revenue - o.node_cost - o.link_cost;
  return p;
}

}  // namespace bivne

#include "bivne/embedding.hpp"

#include <string>

#include "bivne/error.hpp"
#include "bivne/validator.hpp"

namespace bivne {

RawSolution expand(const EmbeddingSolution& solution) {
  RawSolution raw;
  raw.vnr_id = solution.vnr_id;
  raw.accepted = solution.accepted;
  raw.placements = solution.placements;
  for (const auto& r : solution.routes) {
    RawRoute rr;
    rr.vlink = r.vlink;
    rr.nodes = r.path.nodes;
    for (LinkId l : r.path.links) {
      LinkSlots ls{l, {}};
      for (int s = r.slot_start; s <= r.slot_end; ++s) ls.slots.push_back(s);
      rr.links.push_back(std::move(ls));
    }
    raw.routes.push_back(std::move(rr));
  }
  return raw;
}

void allocate(SubstrateNetwork& net, const VirtualRequest& vnr, const RawSolution& solution) {
  const auto violations = validate(net, vnr, solution);
  if (!violations.empty()) {
    auto names = violated_constraints(violations);
    std::string msg = "allocation of vnr " + std::to_string(vnr.id) + " rejected:";
    for (const auto& n : names) msg += " " + n;
    msg += " (" + violations.front().detail + ")";
    throw RejectionError(msg, std::move(names));
  }
  if (!solution.accepted) return;
  for (std::size_t i = 0; i < solution.placements.size(); ++i) {
    auto& n = net.node(solution.placements[i]);
    n.comp_used += vnr.vnodes[i].comp_demand;
    n.chan_used += vnr.vnodes[i].chan_demand;
  }
  for (const auto& r : solution.routes)
    for (const auto& ls : r.links)
      for (int s : ls.slots) net.link(ls.link).occupancy[s] = true;
}

void allocate(SubstrateNetwork& net, const VirtualRequest& vnr, const EmbeddingSolution& solution) {
  allocate(net, vnr, expand(solution));
}

void release(SubstrateNetwork& net, const VirtualRequest& vnr, const EmbeddingSolution& solution) {
  if (!solution.accepted) return;
  if (solution.placements.size() != vnr.vnodes.size())
    throw DomainError("release: placement count does not match the request");
  for (std::size_t i = 0; i < solution.placements.size(); ++i) {
    const auto& n = net.node(solution.placements[i]);
    if (n.comp_used < vnr.vnodes[i].comp_demand || n.chan_used < vnr.vnodes[i].chan_demand)
      throw DomainError("release: host " + std::to_string(n.id) + " does not hold the released demand");
  }
  for (const auto& r : solution.routes)
    for (LinkId l : r.path.links)
      for (int s = r.slot_start; s <= r.slot_end; ++s)
        if (!net.link(l).occupancy.at(s))
          throw DomainError("release: slot " + std::to_string(s) + " on link " + std::to_string(l) + " is free");

  for (std::size_t i = 0; i < solution.placements.size(); ++i) {
    auto& n = net.node(solution.placements[i]);
    n.comp_used -= vnr.vnodes[i].comp_demand;
    n.chan_used -= vnr.vnodes[i].chan_demand;
  }
  for (const auto& r : solution.routes)
    for (LinkId l : r.path.links)
      for (int s = r.slot_start; s <= r.slot_end; ++s) net.link(l).occupancy[s] = false;
}

}  // namespace bivne

#include "bivne/validator.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bivne {
namespace {

std::string str(int v) { return std::to_string(v); }

// Structural check of one route's node/link sequence; true when usable.
bool check_path(const SubstrateNetwork& net, const RawRoute& r, std::vector<Violation>& out) {
  const auto tag = "vlink " + str(r.vlink) + ": ";
  if (r.links.empty() || r.nodes.size() != r.links.size() + 1) {
    out.push_back({"C6", tag + "path must have at least one link and |nodes| = |links| + 1"});
    return false;
  }
  std::set<NodeId> seen;
  for (NodeId n : r.nodes) {
    if (!net.has_node(n)) {
      out.push_back({"C6", tag + "path visits unknown node " + str(n)});
      return false;
    }
    if (!seen.insert(n).second) {
      out.push_back({"C6", tag + "path repeats node " + str(n)});
      return false;
    }
  }
  for (std::size_t i = 0; i < r.links.size(); ++i) {
    const LinkId l = r.links[i].link;
    if (!net.has_link(l) || !net.link(l).joins(r.nodes[i], r.nodes[i + 1])) {
      out.push_back({"C6", tag + "link " + str(l) + " does not join consecutive path nodes"});
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Violation> validate(const SubstrateNetwork& before, const VirtualRequest& vnr,
                                const RawSolution& sol) {
  std::vector<Violation> out;
  if (!sol.accepted) {
    if (!sol.placements.empty() || !sol.routes.empty())
      out.push_back({"ACCEPT", "rejected solution carries placements or routes"});
    return out;
  }

  // C1-C5: node placement.
  const std::size_t k = vnr.vnodes.size();
  if (sol.placements.size() != k)
    out.push_back({"C1", "expected " + str(static_cast<int>(k)) + " placements, got " +
                             str(static_cast<int>(sol.placements.size()))});
  std::map<NodeId, int> host_use;
  std::vector<NodeId> host(k, -1);
  for (std::size_t i = 0; i < std::min(k, sol.placements.size()); ++i) {
    const NodeId h = sol.placements[i];
    if (!before.has_node(h)) {
      out.push_back({"C1", "virtual node " + str(static_cast<int>(i)) + " placed on unknown host " + str(h)});
      continue;
    }
    host[i] = h;
    if (++host_use[h] == 2) out.push_back({"C2", "host " + str(h) + " carries several virtual nodes"});
    const auto& n = before.node(h);
    const auto& vn = vnr.vnodes[i];
    if (n.comp_avail() < vn.comp_demand)
      out.push_back({"C3", "host " + str(h) + " lacks computing for virtual node " + str(vn.id)});
    if (n.chan_avail() < vn.chan_demand)
      out.push_back({"C4", "host " + str(h) + " lacks channels for virtual node " + str(vn.id)});
    if (distance(n.loc, vn.pref_center) > vn.pref_radius)
      out.push_back({"C5", "host " + str(h) + " outside preferred area of virtual node " + str(vn.id)});
  }

  // C6-C11: link embedding.
  std::vector<int> route_count(vnr.vlinks.size(), 0);
  std::map<std::pair<LinkId, int>, int> slot_owner;  // (link, slot) -> vlink
  for (const auto& r : sol.routes) {
    const auto tag = "vlink " + str(r.vlink) + ": ";
    if (r.vlink < 0 || r.vlink >= static_cast<int>(vnr.vlinks.size())) {
      out.push_back({"C6", "route for unknown vlink " + str(r.vlink)});
      continue;
    }
    ++route_count[r.vlink];
    if (!check_path(before, r, out)) continue;

    const auto [vs, vt] = vnr.vlinks[r.vlink];
    const NodeId hs = host[vs], ht = host[vt];
    const NodeId ps = r.nodes.front(), pt = r.nodes.back();
    if (!((ps == hs && pt == ht) || (ps == ht && pt == hs)))
      out.push_back({"C6", tag + "path endpoints do not host the vlink endpoints"});

    int bandwidth = before.link(r.links.front().link).slot_count();
    for (const auto& ls : r.links) bandwidth = std::min(bandwidth, before.link(ls.link).slot_count());
    if (bandwidth < vnr.slot_demand) out.push_back({"C7", tag + "path bandwidth below slot demand"});

    std::vector<int> reference;
    bool first = true;
    bool c10 = false;
    for (const auto& ls : r.links) {
      const auto& link = before.link(ls.link);
      std::vector<int> slots = ls.slots;
      std::sort(slots.begin(), slots.end());
      const bool distinct = std::adjacent_find(slots.begin(), slots.end()) == slots.end();
      const bool in_range = slots.empty() || (slots.front() >= 0 && slots.back() < link.slot_count());
      if (!distinct || !in_range || static_cast<int>(slots.size()) != vnr.slot_demand) {
        out.push_back({"C8", tag + "link " + str(ls.link) + " carries an invalid slot set"});
        continue;
      }
      if (slots.back() - slots.front() + 1 != static_cast<int>(slots.size()))
        out.push_back({"C9", tag + "slots on link " + str(ls.link) + " are not contiguous"});
      if (first) {
        reference = slots;
        first = false;
      } else if (slots != reference && !c10) {
        out.push_back({"C10", tag + "slot indices differ between path links"});
        c10 = true;
      }
      for (int s : slots) {
        if (link.occupancy[s]) {
          out.push_back({"C11", tag + "slot " + str(s) + " on link " + str(ls.link) + " already occupied"});
          continue;
        }
        auto [it, inserted] = slot_owner.try_emplace({ls.link, s}, r.vlink);
        if (!inserted)
          out.push_back({"C11", tag + "slot " + str(s) + " on link " + str(ls.link) + " overlaps vlink " +
                                    str(it->second)});
      }
    }
  }
  for (std::size_t e = 0; e < route_count.size(); ++e)
    if (route_count[e] != 1)
      out.push_back({"C6", "vlink " + str(static_cast<int>(e)) + " has " + str(route_count[e]) + " routes"});
  return out;
}

std::vector<Violation> validate(const SubstrateNetwork& before, const VirtualRequest& vnr,
                                const EmbeddingSolution& solution) {
  return validate(before, vnr, expand(solution));
}

std::vector<std::string> violated_constraints(const std::vector<Violation>& violations) {
  std::set<std::string> names;
  for (const auto& v : violations) names.insert(v.constraint);
  // Natural order so C10/C11 sort after C9.
  std::vector<std::string> out(names.begin(), names.end());
  std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

}  // namespace bivne

#include "bivne/vnr.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "bivne/error.hpp"

namespace bivne {

int VirtualRequest::degree(int vnode) const {
  int d = 0;
  for (auto [u, v] : vlinks) d += (u == vnode) + (v == vnode);
  return d;
}

std::vector<int> VirtualRequest::neighbors(int vnode) const {
  std::vector<int> out;
  for (auto [u, v] : vlinks) {
    if (u == vnode) out.push_back(v);
    if (v == vnode) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void VirtualRequest::check() const {
  const auto tag = "vnr " + std::to_string(id) + ": ";
  if (vnodes.empty()) throw ConfigError(tag + "needs at least one virtual node");
  if (slot_demand < 1) throw ConfigError(tag + "slot_demand must be >= 1");
  for (std::size_t i = 0; i < vnodes.size(); ++i) {
    const auto& vn = vnodes[i];
    if (vn.id != static_cast<int>(i)) throw ConfigError(tag + "virtual node ids must be 0..k-1 in order");
    if (vn.comp_demand < 1 || vn.chan_demand < 1) throw ConfigError(tag + "demands must be >= 1");
    if (!(vn.pref_radius > 0)) throw ConfigError(tag + "pref_radius must be > 0");
  }
  std::set<std::pair<int, int>> seen;
  const int k = static_cast<int>(vnodes.size());
  for (auto [u, v] : vlinks) {
    if (u < 0 || v < 0 || u >= k || v >= k) throw ConfigError(tag + "vlink references an unknown virtual node");
    if (u == v) throw ConfigError(tag + "vlink self-loop");
    if (!seen.insert(std::minmax(u, v)).second) throw ConfigError(tag + "duplicate vlink");
  }
}

std::vector<NodeId> candidate_nodes(const SubstrateNetwork& net, const VirtualNode& vn) {
  std::vector<NodeId> out;
  for (const auto& n : net.nodes()) {
    if (n.comp_avail() < vn.comp_demand || n.chan_avail() < vn.chan_demand) continue;
    if (distance(n.loc, vn.pref_center) > vn.pref_radius) continue;
    out.push_back(n.id);
  }
  return out;
}

void RequestProfile::check() const {
  auto range = [](const IntRange& r, int floor, const char* name) {
    if (r.lo < floor || r.hi < r.lo)
      throw ConfigError(std::string("profile: invalid range for ") + name);
  };
  range(vnodes, 1, "vnodes");
  range(comp, 1, "comp");
  range(chan, 1, "chan");
  range(slots, 1, "slots");
  range(radius, 1, "radius");
  if (!(link_probability >= 0.0 && link_probability <= 1.0))
    throw ConfigError("profile: link_probability must lie in [0, 1]");
  if (!(side > 0)) throw ConfigError("profile: side must be positive");
}

VirtualRequest generate_request(int id, const RequestProfile& p, Rng& rng) {
  VirtualRequest r;
  r.id = id;
  const int k = uniform_int(rng, p.vnodes.lo, p.vnodes.hi);
  std::uniform_real_distribution<double> coord(0.0, p.side);
  for (int i = 0; i < k; ++i) {
    VirtualNode vn;
    vn.id = i;
    vn.comp_demand = uniform_int(rng, p.comp.lo, p.comp.hi);
    vn.chan_demand = uniform_int(rng, p.chan.lo, p.chan.hi);
    vn.pref_radius = uniform_int(rng, p.radius.lo, p.radius.hi);
    vn.pref_center.x = coord(rng);
    vn.pref_center.y = coord(rng);
    r.vnodes.push_back(vn);
  }
  std::bernoulli_distribution edge(p.link_probability);
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v)
      if (edge(rng)) r.vlinks.emplace_back(u, v);
  r.slot_demand = uniform_int(rng, p.slots.lo, p.slots.hi);
  return r;
}

std::vector<VirtualRequest> generate_requests(int count, const RequestProfile& profile, Rng& rng,
                                              int first_id) {
  profile.check();
  if (count < 0) throw ConfigError("profile: request count must be >= 0");
  std::vector<VirtualRequest> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(generate_request(first_id + i, profile, rng));
  return out;
}

}  // namespace bivne

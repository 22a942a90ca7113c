#include "bivne/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "bivne/error.hpp"

namespace bivne {
namespace {

template <typename T>
T field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError(where + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ConfigError(where + ": field '" + key + "' has the wrong type");
  }
}

template <typename T>
T field_or(const Json& j, const char* key, T fallback, const std::string& where) {
  return j.contains(key) ? field<T>(j, key, where) : fallback;
}

}  // namespace

SubstrateNetwork load_topology(const Json& doc) {
  if (!doc.is_object()) throw ConfigError("topology: document must be an object");
  std::vector<SubstrateNode> nodes;
  for (const auto& jn : field<Json>(doc, "nodes", "topology")) {
    const std::string where = "topology.nodes[" + std::to_string(nodes.size()) + "]";
    SubstrateNode n;
    n.id = field<int>(jn, "id", where);
    n.name = field_or<std::string>(jn, "name", "", where);
    n.loc = {field<double>(jn, "x", where), field<double>(jn, "y", where)};
    n.comp_cap = field<int>(jn, "comp_cap", where);
    n.chan_cap = field<int>(jn, "chan_cap", where);
    n.comp_used = field_or<int>(jn, "comp_used", 0, where);
    n.chan_used = field_or<int>(jn, "chan_used", 0, where);
    nodes.push_back(std::move(n));
  }
  std::vector<OpticalLink> links;
  for (const auto& jl : field<Json>(doc, "links", "topology")) {
    const std::string where = "topology.links[" + std::to_string(links.size()) + "]";
    OpticalLink l;
    l.id = field<int>(jl, "id", where);
    l.a = field<int>(jl, "a", where);
    l.b = field<int>(jl, "b", where);
    const int slots = field<int>(jl, "slots", where);
    if (slots < 1) throw ConfigError(where + ": field 'slots' must be >= 1");
    l.occupancy.assign(slots, false);
    for (int s : field_or<std::vector<int>>(jl, "occupied", {}, where)) {
      if (s < 0 || s >= slots) throw ConfigError(where + ": occupied slot out of range");
      l.occupancy[s] = true;
    }
    links.push_back(std::move(l));
  }
  return SubstrateNetwork(std::move(nodes), std::move(links));
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

SubstrateNetwork load_topology_file(const std::filesystem::path& path) { return load_topology(read_json_file(path)); }

Json topology_to_json(const SubstrateNetwork& net, const std::string& name) {
  Json doc;
  doc["name"] = name;
  doc["nodes"] = Json::array();
  for (const auto& n : net.nodes()) {
    Json jn{{"id", n.id}, {"x", n.loc.x}, {"y", n.loc.y}, {"comp_cap", n.comp_cap}, {"chan_cap", n.chan_cap}};
    if (!n.name.empty()) jn["name"] = n.name;
    if (n.comp_used) jn["comp_used"] = n.comp_used;
    if (n.chan_used) jn["chan_used"] = n.chan_used;
    doc["nodes"].push_back(std::move(jn));
  }
  doc["links"] = Json::array();
  for (const auto& l : net.links()) {
    Json jl{{"id", l.id}, {"a", l.a}, {"b", l.b}, {"slots", l.slot_count()}};
    std::vector<int> occupied;
    for (int s = 0; s < l.slot_count(); ++s)
      if (l.occupancy[s]) occupied.push_back(s);
    if (!occupied.empty()) jl["occupied"] = occupied;
    doc["links"].push_back(std::move(jl));
  }
  return doc;
}

void RandomTopologyParams::check() const {
  if (nodes < 1) throw ConfigError("random topology: nodes must be >= 1");
  const long long max_links = static_cast<long long>(nodes) * (nodes - 1) / 2;
  if (links < nodes - 1 || links > max_links)
    throw ConfigError("random topology: links must lie in [n-1, n(n-1)/2]");
  for (const IntRange* r : {&comp_cap, &chan_cap, &slots})
    if (r->lo < 1 || r->hi < r->lo) throw ConfigError("random topology: invalid capacity range");
  if (!(side > 0)) throw ConfigError("random topology: side must be positive");
}

SubstrateNetwork generate_random(const RandomTopologyParams& p, Rng& rng) {
  p.check();
  std::uniform_real_distribution<double> coord(0.0, p.side);
  std::vector<SubstrateNode> nodes(p.nodes);
  for (int i = 0; i < p.nodes; ++i) {
    auto& n = nodes[i];
    n.id = i;
    n.loc = {coord(rng), coord(rng)};
    n.comp_cap = uniform_int(rng, p.comp_cap.lo, p.comp_cap.hi);
    n.chan_cap = uniform_int(rng, p.chan_cap.lo, p.chan_cap.hi);
  }

  std::vector<std::pair<NodeId, NodeId>> edges;
  std::vector<bool> adjacent(static_cast<std::size_t>(p.nodes) * p.nodes, false);
  auto connect = [&](NodeId u, NodeId v) {
    edges.emplace_back(std::min(u, v), std::max(u, v));
    adjacent[u * p.nodes + v] = adjacent[v * p.nodes + u] = true;
  };
  if (p.nodes > 1) {
    std::vector<bool> visited(p.nodes, false);
    NodeId current = uniform_int(rng, 0, p.nodes - 1);
    visited[current] = true;
    int reached = 1;
    while (reached < p.nodes) {
      NodeId next = uniform_int(rng, 0, p.nodes - 2);
      if (next >= current) ++next;
      if (!visited[next]) {
        visited[next] = true;
        ++reached;
        connect(current, next);
      }
      current = next;
    }
  }
  std::vector<std::pair<NodeId, NodeId>> spare;
  for (NodeId u = 0; u < p.nodes; ++u)
    for (NodeId v = u + 1; v < p.nodes; ++v)
      if (!adjacent[u * p.nodes + v]) spare.emplace_back(u, v);
  std::shuffle(spare.begin(), spare.end(), rng);
  for (std::size_t i = 0; static_cast<int>(edges.size()) < p.links; ++i) connect(spare[i].first, spare[i].second);

  std::vector<OpticalLink> links;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    OpticalLink l;
    l.id = static_cast<LinkId>(i);
    l.a = edges[i].first;
    l.b = edges[i].second;
    l.occupancy.assign(uniform_int(rng, p.slots.lo, p.slots.hi), false);
    links.push_back(std::move(l));
  }
  return SubstrateNetwork(std::move(nodes), std::move(links));
}

SubstrateNetwork redraw_capacities(const SubstrateNetwork& net, const IntRange& comp_cap, const IntRange& chan_cap,
                                   const IntRange& slots, Rng& rng) {
  auto nodes = net.nodes();
  for (auto& n : nodes) {
    n.comp_cap = uniform_int(rng, comp_cap.lo, comp_cap.hi);
    n.chan_cap = uniform_int(rng, chan_cap.lo, chan_cap.hi);
    n.comp_used = n.chan_used = 0;
  }
  auto links = net.links();
  for (auto& l : links) l.occupancy.assign(uniform_int(rng, slots.lo, slots.hi), false);
  return SubstrateNetwork(std::move(nodes), std::move(links));
}

Json request_to_json(const VirtualRequest& r) {
  Json j{{"id", r.id}, {"slot_demand", r.slot_demand}};
  j["vnodes"] = Json::array();
  for (const auto& vn : r.vnodes)
    j["vnodes"].push_back({{"id", vn.id},
                           {"comp", vn.comp_demand},
                           {"chan", vn.chan_demand},
                           {"x", vn.pref_center.x},
                           {"y", vn.pref_center.y},
                           {"radius", vn.pref_radius}});
  j["vlinks"] = Json::array();
  for (auto [u, v] : r.vlinks) j["vlinks"].push_back({u, v});
  return j;
}

VirtualRequest request_from_json(const Json& j) {
  VirtualRequest r;
  const std::string where = "request";
  r.id = field<int>(j, "id", where);
  r.slot_demand = field<int>(j, "slot_demand", where);
  for (const auto& jv : field<Json>(j, "vnodes", where)) {
    VirtualNode vn;
    const std::string w = where + " " + std::to_string(r.id) + " vnode";
    vn.id = field<int>(jv, "id", w);
    vn.comp_demand = field<int>(jv, "comp", w);
    vn.chan_demand = field<int>(jv, "chan", w);
    vn.pref_center = {field<double>(jv, "x", w), field<double>(jv, "y", w)};
    vn.pref_radius = field<double>(jv, "radius", w);
    r.vnodes.push_back(vn);
  }
  for (const auto& jl : field<Json>(j, "vlinks", where)) {
    if (!jl.is_array() || jl.size() != 2) throw ConfigError("request " + std::to_string(r.id) + ": vlink must be [u, v]");
    r.vlinks.emplace_back(jl[0].get<int>(), jl[1].get<int>());
  }
  r.check();
  return r;
}

Json requests_to_json(const std::vector<VirtualRequest>& rs) {
  Json doc{{"requests", Json::array()}};
  for (const auto& r : rs) doc["requests"].push_back(request_to_json(r));
  return doc;
}

std::vector<VirtualRequest> requests_from_json(const Json& doc) {
  std::vector<VirtualRequest> out;
  for (const auto& j : field<Json>(doc, "requests", "workload")) out.push_back(request_from_json(j));
  return out;
}

Json solution_to_json(const RawSolution& s) {
  Json j{{"vnr_id", s.vnr_id}, {"accepted", s.accepted}, {"placements", s.placements}};
  j["routes"] = Json::array();
  for (const auto& r : s.routes) {
    Json jr{{"vlink", r.vlink}, {"nodes", r.nodes}, {"links", Json::array()}};
    for (const auto& ls : r.links) jr["links"].push_back({{"link", ls.link}, {"slots", ls.slots}});
    j["routes"].push_back(std::move(jr));
  }
  return j;
}

RawSolution solution_from_json(const Json& j) {
  RawSolution s;
  const std::string where = "solution";
  s.vnr_id = field<int>(j, "vnr_id", where);
  s.accepted = field<bool>(j, "accepted", where);
  s.placements = field_or<std::vector<NodeId>>(j, "placements", {}, where);
  for (const auto& jr : field_or<Json>(j, "routes", Json::array(), where)) {
    RawRoute r;
    r.vlink = field<int>(jr, "vlink", where + ".route");
    r.nodes = field<std::vector<NodeId>>(jr, "nodes", where + ".route");
    for (const auto& jl : field<Json>(jr, "links", where + ".route"))
      r.links.push_back({field<int>(jl, "link", where + ".link"), field<std::vector<int>>(jl, "slots", where + ".link")});
    s.routes.push_back(std::move(r));
  }
  return s;
}

}  // namespace bivne

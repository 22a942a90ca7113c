#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "bivne/embedding.hpp"
#include "bivne/rng.hpp"
#include "bivne/substrate.hpp"
#include "bivne/vnr.hpp"

namespace bivne {

using Json = nlohmann::json;

// Topology document:
//   {"name": str,
//    "nodes": [{"id", "x", "y", "comp_cap", "chan_cap"[, "name", "comp_used", "chan_used"]}],
//    "links": [{"id", "a", "b", "slots"[, "occupied": [slot, ...]]}]}
SubstrateNetwork load_topology(const Json& doc);
SubstrateNetwork load_topology_file(const std::filesystem::path& path);
Json topology_to_json(const SubstrateNetwork& net, const std::string& name = "");

struct RandomTopologyParams {
  int nodes = 50;
  int links = 166;
  IntRange comp_cap{50, 100};
  IntRange chan_cap{50, 100};
  IntRange slots{50, 100};
  double side = 1000.0;

  void check() const;
  bool operator==(const RandomTopologyParams&) const = default;
};

// Uniform spanning tree (Aldous-Broder walk on the complete graph), then
// uniformly random extra edges without duplicates up to the link count.
SubstrateNetwork generate_random(const RandomTopologyParams& params, Rng& rng);

// Same topology and coordinates with capacities and slot counts redrawn
// uniformly from the ranges; all resources idle.
SubstrateNetwork redraw_capacities(const SubstrateNetwork& net, const IntRange& comp_cap, const IntRange& chan_cap,
                                   const IntRange& slots, Rng& rng);

// VNR batch document: {"requests": [{"id", "slot_demand",
//   "vnodes": [{"id", "comp", "chan", "x", "y", "radius"}], "vlinks": [[u, v], ...]}]}
Json request_to_json(const VirtualRequest& r);
VirtualRequest request_from_json(const Json& j);
Json requests_to_json(const std::vector<VirtualRequest>& rs);
std::vector<VirtualRequest> requests_from_json(const Json& doc);

// Slot-level solution: {"vnr_id", "accepted", "placements": [...],
//   "routes": [{"vlink", "nodes": [...], "links": [{"link", "slots": [...]}]}]}
Json solution_to_json(const RawSolution& s);
RawSolution solution_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace bivne

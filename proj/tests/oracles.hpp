#pragma once

// Brute-force reference implementations used by unit and acceptance tests.
// They only rely on the plain data types of the library.

#include <algorithm>
#include <climits>
#include <functional>
#include <limits>
#include <optional>
#include <tuple>
#include <vector>

#include "bivne/fragcost.hpp"
#include "bivne/rng.hpp"
#include "bivne/substrate.hpp"
#include "bivne/vnr.hpp"

namespace oracle {

using namespace bivne;

struct Edge {
  int a;
  int b;
  int id;
};

inline std::vector<std::vector<int>> floyd_warshall(int n, const std::vector<Edge>& edges) {
  const int inf = INT_MAX / 4;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& e : edges) d[e.a][e.b] = d[e.b][e.a] = std::min(d[e.a][e.b], 1);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& x : row)
      if (x >= inf) x = -1;
  return d;
}

struct Path {
  std::vector<int> nodes;
  std::vector<int> links;
};

// Every loop-free path from src to dst.
inline std::vector<Path> simple_paths(int n, const std::vector<Edge>& edges, int src, int dst) {
  std::vector<Path> out;
  if (src == dst) return out;
  std::vector<bool> seen(n, false);
  Path cur{{src}, {}};
  seen[src] = true;
  std::function<void(int)> dfs = [&](int u) {
    if (u == dst) {
      out.push_back(cur);
      return;
    }
    for (const auto& e : edges) {
      if (e.a != u && e.b != u) continue;
      const int v = e.a == u ? e.b : e.a;
      if (seen[v]) continue;
      seen[v] = true;
      cur.nodes.push_back(v);
      cur.links.push_back(e.id);
      dfs(v);
      cur.nodes.pop_back();
      cur.links.pop_back();
      seen[v] = false;
    }
  };
  dfs(src);
  std::sort(out.begin(), out.end(), [](const Path& x, const Path& y) {
    return std::make_pair(x.links.size(), x.nodes) < std::make_pair(y.links.size(), y.nodes);
  });
  return out;
}

// Slots in fragment-sized free runs that lie inside [lo, hi].
inline int fragment_census(const SlotMask& m, int lo, int hi, const FragConfig& cfg) {
  int total = 0;
  int i = lo;
  while (i <= hi) {
    if (m[i]) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 <= hi && !m[j + 1]) ++j;
    if (cfg.is_fragment(j - i + 1)) total += j - i + 1;
    i = j + 1;
  }
  return total;
}

inline std::pair<int, int> host_run(const SlotMask& m, int s, int len) {
  int lo = s, hi = s + len - 1;
  while (lo > 0 && !m[lo - 1]) --lo;
  while (hi + 1 < static_cast<int>(m.size()) && !m[hi + 1]) ++hi;
  return {lo, hi};
}

// Fragment slots created inside the host run, never negative.
inline int created_fragments(const SlotMask& m, int s, int len, const FragConfig& cfg) {
  const auto [lo, hi] = host_run(m, s, len);
  SlotMask after = m;
  for (int k = s; k < s + len; ++k) after[k] = true;
  return std::max(0, fragment_census(after, lo, hi, cfg) - fragment_census(m, lo, hi, cfg));
}

inline bool block_free(const SlotMask& m, int s, int len) {
  if (s < 0 || s + len > static_cast<int>(m.size())) return false;
  for (int k = s; k < s + len; ++k)
    if (m[k]) return false;
  return true;
}

// All aligned placements on the given links, best by (fragments, leftover, start).
inline std::optional<int> exact_fit(const std::vector<const SlotMask*>& masks, int len, const FragConfig& cfg) {
  int width = INT_MAX;
  for (const auto* m : masks) width = std::min(width, static_cast<int>(m->size()));
  std::optional<int> best;
  std::tuple<int, int, int> key{INT_MAX, INT_MAX, INT_MAX};
  for (int s = 0; s + len <= width; ++s) {
    bool ok = true;
    for (const auto* m : masks) ok = ok && block_free(*m, s, len);
    if (!ok) continue;
    int frag = 0, left = 0;
    for (const auto* m : masks) {
      frag += created_fragments(*m, s, len, cfg);
      const auto [lo, hi] = host_run(*m, s, len);
      left += hi - lo + 1 - len;
    }
    if (std::make_tuple(frag, left, s) < key) {
      key = {frag, left, s};
      best = s;
    }
  }
  return best;
}

struct LinkResult {
  bool ok = false;
  double cost = 0.0;
  std::vector<std::pair<Path, int>> routes;  // processing order, block start
};

inline int max_run(const SlotMask& m) {
  int best = 0, cur = 0;
  for (bool b : m) {
    cur = b ? 0 : cur + 1;
    best = std::max(best, cur);
  }
  return best;
}

// Vlinks in descending hop distance (unreachable first, id on ties); each
// takes the fewest-hop path with the smallest node sequence among the links
// still present, the best aligned block on it, and then loses that path's
// links.
inline LinkResult lower_level(const SubstrateNetwork& net, const VirtualRequest& vnr,
                              const std::vector<NodeId>& place, const PriceTable& prices, const FragConfig& cfg) {
  const int n = static_cast<int>(net.node_count());
  const int demand = vnr.slot_demand;
  std::vector<Edge> alive;
  for (const auto& l : net.links())
    if (max_run(l.occupancy) >= demand) alive.push_back({l.a, l.b, l.id});
  const auto dist = floyd_warshall(n, alive);

  std::vector<int> order(vnr.vlinks.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  auto key = [&](int e) {
    const int d = dist[place[vnr.vlinks[e].first]][place[vnr.vlinks[e].second]];
    return d < 0 ? INT_MAX : d;
  };
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key(a) > key(b); });

  std::vector<SlotMask> occ;
  for (const auto& l : net.links()) occ.push_back(l.occupancy);
  LinkResult out;
  for (int e : order) {
    const auto paths = simple_paths(n, alive, place[vnr.vlinks[e].first], place[vnr.vlinks[e].second]);
    if (paths.empty()) return {};
    const Path& p = paths.front();
    std::vector<const SlotMask*> masks;
    for (int l : p.links) masks.push_back(&occ[l]);
    const auto s = exact_fit(masks, demand, cfg);
    if (!s) return {};
    for (int l : p.links) out.cost += prices.gamma_p * (demand + created_fragments(occ[l], *s, demand, cfg));
    for (int l : p.links)
      for (int k = *s; k < *s + demand; ++k) occ[l][k] = true;
    std::erase_if(alive, [&](const Edge& x) { return std::find(p.links.begin(), p.links.end(), x.id) != p.links.end(); });
    out.routes.push_back({p, *s});
  }
  out.ok = true;
  return out;
}

// Joint optimum: every vlink may take any loop-free path and any aligned
// block, with the same one-vlink-per-link rule.
inline std::optional<double> joint_link_optimum(const SubstrateNetwork& net, const VirtualRequest& vnr,
                                                const std::vector<NodeId>& place, const PriceTable& prices,
                                                const FragConfig& cfg) {
  const int n = static_cast<int>(net.node_count());
  const int demand = vnr.slot_demand;
  std::vector<Edge> alive;
  for (const auto& l : net.links())
    if (max_run(l.occupancy) >= demand) alive.push_back({l.a, l.b, l.id});
  std::vector<SlotMask> occ;
  for (const auto& l : net.links()) occ.push_back(l.occupancy);
  std::optional<double> best;
  std::function<void(std::size_t, std::vector<Edge>, double)> rec = [&](std::size_t e, std::vector<Edge> g,
                                                                         double cost) {
    if (e == vnr.vlinks.size()) {
      if (!best || cost < *best) best = cost;
      return;
    }
    for (const auto& p : simple_paths(n, g, place[vnr.vlinks[e].first], place[vnr.vlinks[e].second])) {
      int width = INT_MAX;
      for (int l : p.links) width = std::min(width, static_cast<int>(occ[l].size()));
      for (int s = 0; s + demand <= width; ++s) {
        bool ok = true;
        for (int l : p.links) ok = ok && block_free(occ[l], s, demand);
        if (!ok) continue;
        double c = 0.0;
        for (int l : p.links) c += prices.gamma_p * (demand + created_fragments(occ[l], s, demand, cfg));
        auto saved = occ;
        for (int l : p.links)
          for (int k = s; k < s + demand; ++k) occ[l][k] = true;
        auto rest = g;
        std::erase_if(rest, [&](const Edge& x) { return std::find(p.links.begin(), p.links.end(), x.id) != p.links.end(); });
        rec(e + 1, std::move(rest), cost + c);
        occ = std::move(saved);
      }
    }
  };
  rec(0, alive, 0.0);
  return best;
}

// Connected graph on n nodes with `extra` additional edges and random
// per-link occupancy.
inline SubstrateNetwork random_network(Rng& rng, int n, int extra, int min_slots, int max_slots,
                                       double occupied_share) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.push_back({uniform_int(rng, 0, v - 1), v});
  for (int tries = 0; tries < 50 && extra > 0; ++tries) {
    int a = uniform_int(rng, 0, n - 1), b = uniform_int(rng, 0, n - 1);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end()) continue;
    edges.push_back({a, b});
    --extra;
  }
  std::vector<SubstrateNode> nodes;
  for (int i = 0; i < n; ++i) {
    const int c = uniform_int(rng, 20, 60), w = uniform_int(rng, 20, 60);
    nodes.push_back({i, "", {uniform01(rng) * 100, uniform01(rng) * 100}, c, uniform_int(rng, 0, c / 2), w,
                     uniform_int(rng, 0, w / 2)});
  }
  std::vector<OpticalLink> links;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    SlotMask m(uniform_int(rng, min_slots, max_slots));
    for (std::size_t k = 0; k < m.size(); ++k) m[k] = uniform01(rng) < occupied_share;
    links.push_back({static_cast<LinkId>(i), edges[i].first, edges[i].second, m});
  }
  return SubstrateNetwork(std::move(nodes), std::move(links));
}

// Request with k vnodes and up to max_vlinks random vlinks, unconstrained
// location.
inline VirtualRequest random_request(Rng& rng, int k, int max_vlinks, int max_slots) {
  VirtualRequest r;
  for (int i = 0; i < k; ++i) r.vnodes.push_back({i, uniform_int(rng, 1, 8), uniform_int(rng, 1, 8), {}, 1e9});
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) pairs.push_back({u, v});
  std::shuffle(pairs.begin(), pairs.end(), rng);
  const int m = std::min<int>(uniform_int(rng, 1, max_vlinks), static_cast<int>(pairs.size()));
  r.vlinks.assign(pairs.begin(), pairs.begin() + m);
  r.slot_demand = uniform_int(rng, 1, max_slots);
  return r;
}

}  // namespace oracle

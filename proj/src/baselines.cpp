#include "bivne/baselines.hpp"

#include <algorithm>
#include <functional>

#include "bivne/error.hpp"

namespace bivne {

void BaselineConfig::check() const {
  if (k_paths < 1) throw ConfigError("baseline.k_paths must be >= 1");
}

namespace {

using Score = std::function<double(const VirtualNode& vn, NodeId host, const std::vector<NodeId>& partial)>;

// Maps vnodes in `order`, each to the highest-scoring free candidate
// (lowest id on ties), then embeds the links.
EmbeddingSolution two_stage(const SubstrateNetwork& net, const VirtualRequest& vnr, const std::vector<int>& order,
                            const Score& score, const PriceTable& prices, const FragConfig& frag,
                            LinkEmbedOptions options) {
  std::vector<NodeId> placements(vnr.vnodes.size(), -1);
  std::vector<bool> taken(net.node_count(), false);
  for (int i : order) {
    const auto& vn = vnr.vnodes[i];
    NodeId best = -1;
    double best_score = 0.0;
    for (NodeId n : candidate_nodes(net, vn)) {
      if (taken[n]) continue;
      const double s = score(vn, n, placements);
      if (best == -1 || s > best_score) {
        best = n;
        best_score = s;
      }
    }
    if (best == -1) return EmbeddingSolution::rejected(vnr.id, "no candidate for virtual node " + std::to_string(i));
    placements[i] = best;
    taken[best] = true;
  }
  const auto links = embed_links(net, vnr, placements, prices, frag, options);
  return complete_solution(net, vnr, placements, links, prices);
}

std::vector<int> order_by(const VirtualRequest& vnr, const std::function<double(const VirtualNode&)>& key) {
  std::vector<int> order(vnr.vnodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return key(vnr.vnodes[a]) > key(vnr.vnodes[b]); });
  return order;
}

double demand(const VirtualNode& vn) { return vn.comp_demand + vn.chan_demand; }

double available(const SubstrateNode& n) { return n.comp_avail() + n.chan_avail(); }

}  // namespace

EmbeddingSolution greedy_sp_ff(const SubstrateNetwork& net, const VirtualRequest& vnr, const PriceTable& prices,
                               const FragConfig& frag) {
  const auto order = order_by(vnr, demand);
  const Score score = [&](const VirtualNode&, NodeId host, const std::vector<NodeId>&) {
    return available(net.node(host));
  };
  return two_stage(net, vnr, order, score, prices, frag, {SlotPolicy::kFirstFit, 1});
}

double local_resource_capacity(const SubstrateNetwork& net, NodeId n) {
  double free_slots = 0.0;
  for (LinkId l : net.attached(n)) free_slots += net.link(l).free_count();
  return available(net.node(n)) * free_slots;
}

EmbeddingSolution lrc_sp_ff(const SubstrateNetwork& net, const VirtualRequest& vnr, const PriceTable& prices,
                            const FragConfig& frag) {
  // Stable sort on C + W first so equal requirements fall back to it.
  auto order = order_by(vnr, demand);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    auto req = [&](int i) { return demand(vnr.vnodes[i]) * vnr.degree(i) * vnr.slot_demand; };
    return req(a) > req(b);
  });
  const Score score = [&](const VirtualNode&, NodeId host, const std::vector<NodeId>&) {
    return local_resource_capacity(net, host);
  };
  return two_stage(net, vnr, order, score, prices, frag, {SlotPolicy::kFirstFit, 1});
}

EmbeddingSolution pl_ksp_ff(const SubstrateNetwork& net, const VirtualRequest& vnr, const PriceTable& prices,
                            const FragConfig& frag, const BaselineConfig& cfg) {
  cfg.check();
  const auto hops = all_pairs_hops(prune_working_graph(net, vnr.slot_demand));
  const double unreachable_penalty = static_cast<double>(net.node_count());
  auto hop = [&](NodeId a, NodeId b) {
    const int h = hops[a][b];
    return h == kUnreachable ? unreachable_penalty : static_cast<double>(h);
  };
  const auto order = order_by(vnr, demand);
  const Score score = [&](const VirtualNode& vn, NodeId host, const std::vector<NodeId>& partial) {
    double total = 0.0;
    int count = 0;
    for (int nb : vnr.neighbors(vn.id))
      if (partial[nb] != -1) {
        total += hop(host, partial[nb]);
        ++count;
      }
    if (count == 0)
      for (NodeId placed : partial)
        if (placed != -1) {
          total += hop(host, placed);
          ++count;
        }
    const double mean = count ? total / count : 0.0;
    return available(net.node(host)) / (1.0 + mean);
  };
  return two_stage(net, vnr, order, score, prices, frag, {SlotPolicy::kFirstFit, cfg.k_paths});
}

std::string BaselineEmbedder::name() const {
  switch (kind_) {
    case Baseline::kGreedySpFf:
      return "greedy_sp_ff";
    case Baseline::kLrcSpFf:
      return "lrc_sp_ff";
    case Baseline::kPlKspFf:
      return "pl_ksp_ff";
  }
  return "unknown";
}

EmbeddingSolution BaselineEmbedder::embed(const SubstrateNetwork& net, const VirtualRequest& vnr, Rng&) {
  switch (kind_) {
    case Baseline::kGreedySpFf:
      return greedy_sp_ff(net, vnr, prices_, frag_);
    case Baseline::kLrcSpFf:
      return lrc_sp_ff(net, vnr, prices_, frag_);
    case Baseline::kPlKspFf:
      return pl_ksp_ff(net, vnr, prices_, frag_, cfg_);
  }
  return EmbeddingSolution::rejected(vnr.id, "unknown baseline");
}

}  // namespace bivne

#pragma once

#include <string>
#include <vector>

#include "bivne/embedder.hpp"
#include "bivne/fragcost.hpp"
#include "bivne/lower_solver.hpp"

namespace bivne {

// The comparison algorithms. Each is a two-stage heuristic: rank the
// virtual nodes, map each to the best-scoring capacity/location candidate
// not yet used by the request, then route the virtual links with the same
// pruning, atomicity and path-deletion rules as the BiVNE lower level but
// with first-fit slots. None of them consumes randomness.

struct BaselineConfig {
  int k_paths = 3;  // PL-KSP-FF path count
  void check() const;
  bool operator==(const BaselineConfig&) const = default;
};

// Vnodes by descending C + W; host with the most available C_a + W_a;
// single shortest path, first fit.
EmbeddingSolution greedy_sp_ff(const SubstrateNetwork& net, const VirtualRequest& vnr, const PriceTable& prices,
                               const FragConfig& frag);

// Local resource capacity LRC(n) = (C_a + W_a) * sum of free slots on the
// attached links. Vnodes by descending (C + W) * d(n^r) * B, then C + W.
EmbeddingSolution lrc_sp_ff(const SubstrateNetwork& net, const VirtualRequest& vnr, const PriceTable& prices,
                            const FragConfig& frag);
double local_resource_capacity(const SubstrateNetwork& net, NodeId n);

// Path-length aware: score = (C_a + W_a) / (1 + mean hop distance to the
// hosts of already-placed neighbors, or of all placed vnodes when no
// neighbor is placed yet). Links over k loop-free shortest paths with the
// first path holding a first-fit block winning.
EmbeddingSolution pl_ksp_ff(const SubstrateNetwork& net, const VirtualRequest& vnr, const PriceTable& prices,
                            const FragConfig& frag, const BaselineConfig& cfg);

enum class Baseline { kGreedySpFf, kLrcSpFf, kPlKspFf };

class BaselineEmbedder : public Embedder {
 public:
  BaselineEmbedder(Baseline kind, PriceTable prices, FragConfig frag, BaselineConfig cfg = {})
      : kind_(kind), prices_(prices), frag_(frag), cfg_(cfg) {}
  std::string name() const override;
  EmbeddingSolution embed(const SubstrateNetwork& net, const VirtualRequest& vnr, Rng& rng) override;

 private:
  Baseline kind_;
  PriceTable prices_;
  FragConfig frag_;
  BaselineConfig cfg_;
};

}  // namespace bivne

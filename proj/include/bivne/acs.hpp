#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "bivne/embedder.hpp"
#include "bivne/fragcost.hpp"
#include "bivne/lower_solver.hpp"

namespace bivne {

struct AcsParams {
  int colony_size = 10;
  int max_generations = 150;
  double beta = 2.0;
  double q0 = 0.9;
  double phi = 0.1;  // local decay
  double rho = 0.1;  // global decay
  // Initial pheromone; unset means 1 / (|N^s| * greedy cost) per request.
  std::optional<double> tau0;
  // Stop after this many generations without run-best improvement; 0 disables.
  int stagnation_limit = 0;

  void check() const;
  bool operator==(const AcsParams&) const = default;
};

// Pheromone over (virtual node, substrate node) pairs.
class PheromoneMatrix {
 public:
  PheromoneMatrix(std::size_t vnodes, std::size_t hosts, double tau0)
      : hosts_(hosts), tau0_(tau0), values_(vnodes * hosts, tau0) {}

  double operator()(int vn, NodeId host) const { return values_[vn * hosts_ + host]; }
  double& operator()(int vn, NodeId host) { return values_[vn * hosts_ + host]; }
  double tau0() const { return tau0_; }
  std::span<const double> values() const { return values_; }

 private:
  std::size_t hosts_;
  double tau0_;
  std::vector<double> values_;
};

void local_pheromone_update(PheromoneMatrix& tau, int vn, NodeId host, const AcsParams& params);
// Reinforces the pairs used by best; every other pair is left untouched.
void global_pheromone_update(PheromoneMatrix& tau, std::span<const NodeId> best, double best_fitness,
                             const AcsParams& params);

// Capacity/location candidates filtered by d_l(n^s) >= d(n^r) at the
// request's slot demand. An empty set means the request cannot be embedded.
std::vector<std::vector<NodeId>> reduce_candidates(const SubstrateNetwork& net, const VirtualRequest& vnr);

// Ascending candidate-set size, vnode id on ties.
std::vector<int> sorted_vnodes(const std::vector<std::vector<NodeId>>& candidates);

// Per-request state shared by all ants.
struct AcsContext {
  const SubstrateNetwork& net;
  const VirtualRequest& vnr;
  const PriceTable& prices;
  const FragConfig& frag;
  std::vector<std::vector<NodeId>> candidates;
  LinkSolver links;

  AcsContext(const SubstrateNetwork& net, const VirtualRequest& vnr, const PriceTable& prices, const FragConfig& frag);
  AcsContext(const AcsContext&) = delete;
  AcsContext& operator=(const AcsContext&) = delete;
};

inline constexpr int kUnplaced = -1;
// Used for eta when the cost increment is zero.
inline constexpr double kHeuristicSentinel = 1e12;

// eta = 1 / (node cost of vn on host + sum over placed neighbors of
// hops * B * gamma'). nullopt when a placed neighbor is unreachable.
std::optional<double> heuristic(const AcsContext& ctx, int vn, NodeId host, std::span<const NodeId> partial);

// tau * eta^beta normalized; falls back to uniform when weights degenerate.
std::vector<double> selection_probabilities(std::span<const double> weights);

// Pseudorandom proportional rule: argmax (lowest index on ties) when
// q <= q0, otherwise roulette-wheel over the normalized weights.
std::size_t choose_index(std::span<const double> weights, double q0, Rng& rng);

struct SelectionProbe {
  std::function<void(int vn, std::span<const NodeId> hosts, std::span<const double> probabilities)> on_select;
};

// Host for vn among its candidates not already used in partial; nullopt
// when none is eligible.
std::optional<NodeId> select_host(const AcsContext& ctx, int vn, const PheromoneMatrix& tau, const AcsParams& params,
                                  Rng& rng, std::span<const NodeId> partial, const SelectionProbe* probe = nullptr);

// One ant: places vnodes in the given order, applying the local pheromone
// update after each assignment.
std::optional<std::vector<NodeId>> construct_solution(const AcsContext& ctx, std::span<const int> order,
                                                      PheromoneMatrix& tau, const AcsParams& params, Rng& rng,
                                                      const SelectionProbe* probe = nullptr);

// Memoized lower-level evaluation of placements.
class PlacementEvaluator {
 public:
  explicit PlacementEvaluator(const AcsContext& ctx) : ctx_(ctx) {}
  const EmbeddingSolution& evaluate(const std::vector<NodeId>& placements);
  std::size_t lower_solves() const { return solves_; }

 private:
  const AcsContext& ctx_;
  std::map<std::vector<NodeId>, EmbeddingSolution> cache_;
  std::size_t solves_ = 0;
};

// Best-improvement pass over vnodes in sorted order, swapping in candidate
// hosts unused by the other vnodes. Never returns a worse solution.
EmbeddingSolution local_search(const AcsContext& ctx, const EmbeddingSolution& solution, PlacementEvaluator& eval);

struct BivneTrace {
  double tau0 = 0.0;
  std::vector<double> iteration_best;  // fitness per generation, kInfeasible when all ants failed
  std::vector<double> run_best;
  double min_tau = 0.0;
  double max_tau = 0.0;
  bool pheromone_within_bounds = true;
  int failed_ants = 0;
  std::size_t lower_solves = 0;
};

EmbeddingSolution bivne_embed(const SubstrateNetwork& net, const VirtualRequest& vnr, const AcsParams& params,
                              const PriceTable& prices, const FragConfig& frag, Rng& rng,
                              BivneTrace* trace = nullptr);

class BivneEmbedder : public Embedder {
 public:
  BivneEmbedder(AcsParams params, PriceTable prices, FragConfig frag)
      : params_(params), prices_(prices), frag_(frag) {}
  std::string name() const override { return "bivne"; }
  EmbeddingSolution embed(const SubstrateNetwork& net, const VirtualRequest& vnr, Rng& rng) override {
    return bivne_embed(net, vnr, params_, prices_, frag_, rng);
  }

 private:
  AcsParams params_;
  PriceTable prices_;
  FragConfig frag_;
};

}  // namespace bivne

#include "bivne/acs.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bivne/baselines.hpp"
#include "bivne/error.hpp"

namespace bivne {

void AcsParams::check() const {
  if (colony_size < 1) throw ConfigError("acs.colony_size must be >= 1");
  if (max_generations < 0) throw ConfigError("acs.max_generations must be >= 0");
  if (!(q0 >= 0.0 && q0 <= 1.0)) throw ConfigError("acs.q0 must lie in [0, 1]");
  if (!(phi > 0.0 && phi < 1.0)) throw ConfigError("acs.phi must lie in (0, 1)");
  if (!(rho > 0.0 && rho < 1.0)) throw ConfigError("acs.rho must lie in (0, 1)");
  if (!(beta >= 0.0)) throw ConfigError("acs.beta must be >= 0");
  if (tau0 && !(*tau0 > 0.0)) throw ConfigError("acs.tau0 must be > 0");
  if (stagnation_limit < 0) throw ConfigError("acs.stagnation_limit must be >= 0");
}

void local_pheromone_update(PheromoneMatrix& tau, int vn, NodeId host, const AcsParams& params) {
  tau(vn, host) = (1.0 - params.phi) * tau(vn, host) + params.phi * tau.tau0();
}

void global_pheromone_update(PheromoneMatrix& tau, std::span<const NodeId> best, double best_fitness,
                             const AcsParams& params) {
  if (!(best_fitness > 0.0) || !std::isfinite(best_fitness)) return;
  const double deposit = 1.0 / best_fitness;
  for (std::size_t vn = 0; vn < best.size(); ++vn) {
    double& t = tau(static_cast<int>(vn), best[vn]);
    t = (1.0 - params.rho) * t + params.rho * deposit;
  }
}

std::vector<std::vector<NodeId>> reduce_candidates(const SubstrateNetwork& net, const VirtualRequest& vnr) {
  std::vector<std::vector<NodeId>> out;
  out.reserve(vnr.vnodes.size());
  for (const auto& vn : vnr.vnodes) {
    const int degree = vnr.degree(vn.id);
    auto cands = candidate_nodes(net, vn);
    if (degree > 0)
      std::erase_if(cands, [&](NodeId n) { return available_degree(net, n, vnr.slot_demand) < degree; });
    out.push_back(std::move(cands));
  }
  return out;
}

std::vector<int> sorted_vnodes(const std::vector<std::vector<NodeId>>& candidates) {
  std::vector<int> order(candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return candidates[a].size() < candidates[b].size(); });
  return order;
}

AcsContext::AcsContext(const SubstrateNetwork& net_, const VirtualRequest& vnr_, const PriceTable& prices_,
                       const FragConfig& frag_)
    : net(net_),
      vnr(vnr_),
      prices(prices_),
      frag(frag_),
      candidates(reduce_candidates(net_, vnr_)),
      links(net_, vnr_, prices_, frag_) {}

std::optional<double> heuristic(const AcsContext& ctx, int vn, NodeId host, std::span<const NodeId> partial) {
  double increment = node_cost_term(ctx.net.node(host), ctx.vnr.vnodes[vn], ctx.prices);
  for (int nb : ctx.vnr.neighbors(vn)) {
    if (partial[nb] == kUnplaced) continue;
    const int h = ctx.links.hops(host, partial[nb]);
    if (h == kUnreachable) return std::nullopt;
    increment += h * ctx.vnr.slot_demand * ctx.prices.gamma_p;
  }
  return increment > 0.0 ? 1.0 / increment : kHeuristicSentinel;
}

std::vector<double> selection_probabilities(std::span<const double> weights) {
  std::vector<double> p(weights.begin(), weights.end());
  const double sum = std::accumulate(p.begin(), p.end(), 0.0);
  if (!(sum > 0.0) || !std::isfinite(sum)) {
    std::fill(p.begin(), p.end(), 1.0 / static_cast<double>(p.size()));
    return p;
  }
  for (double& x : p) x /= sum;
  return p;
}

std::size_t choose_index(std::span<const double> weights, double q0, Rng& rng) {
  const double q = uniform01(rng);
  if (q <= q0) return static_cast<std::size_t>(std::max_element(weights.begin(), weights.end()) - weights.begin());
  const auto p = selection_probabilities(weights);
  const double r = uniform01(rng);
  double cumulative = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    cumulative += p[i];
    if (r < cumulative) return i;
  }
  return p.size() - 1;
}

std::optional<NodeId> select_host(const AcsContext& ctx, int vn, const PheromoneMatrix& tau, const AcsParams& params,
                                  Rng& rng, std::span<const NodeId> partial, const SelectionProbe* probe) {
  std::vector<NodeId> hosts;
  std::vector<double> weights;
  for (NodeId n : ctx.candidates[vn]) {
    if (std::find(partial.begin(), partial.end(), n) != partial.end()) continue;
    const auto eta = heuristic(ctx, vn, n, partial);
    if (!eta) continue;
    hosts.push_back(n);
    weights.push_back(tau(vn, n) * std::pow(*eta, params.beta));
  }
  if (hosts.empty()) return std::nullopt;
  if (probe && probe->on_select) probe->on_select(vn, hosts, selection_probabilities(weights));
  return hosts[choose_index(weights, params.q0, rng)];
}

std::optional<std::vector<NodeId>> construct_solution(const AcsContext& ctx, std::span<const int> order,
                                                      PheromoneMatrix& tau, const AcsParams& params, Rng& rng,
                                                      const SelectionProbe* probe) {
  std::vector<NodeId> partial(ctx.vnr.vnodes.size(), kUnplaced);
  for (int vn : order) {
    const auto host = select_host(ctx, vn, tau, params, rng, partial, probe);
    if (!host) return std::nullopt;
    partial[vn] = *host;
    local_pheromone_update(tau, vn, *host, params);
  }
  return partial;
}

const EmbeddingSolution& PlacementEvaluator::evaluate(const std::vector<NodeId>& placements) {
  auto it = cache_.find(placements);
  if (it != cache_.end()) return it->second;
  ++solves_;
  const auto links = ctx_.links.solve(placements);
  return cache_.emplace(placements, complete_solution(ctx_.net, ctx_.vnr, placements, links, ctx_.prices))
      .first->second;
}

EmbeddingSolution local_search(const AcsContext& ctx, const EmbeddingSolution& solution, PlacementEvaluator& eval) {
  if (!solution.accepted) return solution;
  EmbeddingSolution current = solution;
  for (int vn : sorted_vnodes(ctx.candidates)) {
    const EmbeddingSolution* best = nullptr;
    double best_fitness = current.fitness;
    for (NodeId alt : ctx.candidates[vn]) {
      if (std::find(current.placements.begin(), current.placements.end(), alt) != current.placements.end()) continue;
      auto trial = current.placements;
      trial[vn] = alt;
      const auto& s = eval.evaluate(trial);
      if (s.accepted && s.fitness < best_fitness) {
        best = &s;
        best_fitness = s.fitness;
      }
    }
    if (best) current = *best;
  }
  return current;
}

EmbeddingSolution bivne_embed(const SubstrateNetwork& net, const VirtualRequest& vnr, const AcsParams& params,
                              const PriceTable& prices, const FragConfig& frag, Rng& rng, BivneTrace* trace) {
  params.check();
  AcsContext ctx(net, vnr, prices, frag);
  for (std::size_t i = 0; i < ctx.candidates.size(); ++i)
    if (ctx.candidates[i].empty())
      return EmbeddingSolution::rejected(vnr.id, "empty candidate set for virtual node " + std::to_string(i));

  double tau0 = 1.0;
  if (params.tau0) {
    tau0 = *params.tau0;
  } else {
    const auto greedy = greedy_sp_ff(net, vnr, prices, frag);
    const double cost = greedy.accepted ? greedy.fitness : revenue(vnr, prices);
    if (cost > 0.0) tau0 = 1.0 / (static_cast<double>(net.node_count()) * cost);
  }
  PheromoneMatrix tau(vnr.vnodes.size(), net.node_count(), tau0);
  if (trace) {
    *trace = {};
    trace->tau0 = trace->min_tau = trace->max_tau = tau0;
  }

  const auto order = sorted_vnodes(ctx.candidates);
  PlacementEvaluator eval(ctx);
  std::optional<EmbeddingSolution> run_best;
  int last_improvement = 0;

  for (int gen = 0; gen < params.max_generations; ++gen) {
    std::optional<EmbeddingSolution> iteration_best;
    for (int ant = 0; ant < params.colony_size; ++ant) {
      const auto placement = construct_solution(ctx, order, tau, params, rng);
      const EmbeddingSolution* s = placement ? &eval.evaluate(*placement) : nullptr;
      if (!s || !s->accepted) {
        if (trace) ++trace->failed_ants;
        continue;
      }
      if (!iteration_best || s->fitness < iteration_best->fitness) iteration_best = *s;
    }
    if (iteration_best) {
      iteration_best = local_search(ctx, *iteration_best, eval);
      global_pheromone_update(tau, iteration_best->placements, iteration_best->fitness, params);
      if (!run_best || iteration_best->fitness < run_best->fitness) {
        run_best = iteration_best;
        last_improvement = gen;
      }
    }
    if (trace) {
      trace->iteration_best.push_back(iteration_best ? iteration_best->fitness : kInfeasible);
      trace->run_best.push_back(run_best ? run_best->fitness : kInfeasible);
      const auto [lo, hi] = std::minmax_element(tau.values().begin(), tau.values().end());
      trace->min_tau = std::min(trace->min_tau, *lo);
      trace->max_tau = std::max(trace->max_tau, *hi);
      const double bound = std::max(tau0, run_best ? 1.0 / run_best->fitness : 0.0) + tau0;
      if (!(*lo > 0.0) || *hi > bound) trace->pheromone_within_bounds = false;
    }
    if (params.stagnation_limit > 0 && run_best && gen - last_improvement >= params.stagnation_limit) break;
  }
  if (trace) trace->lower_solves = eval.lower_solves();
  if (!run_best) return EmbeddingSolution::rejected(vnr.id, "no feasible ant");
  run_best->vnr_id = vnr.id;
  return *run_best;
}

}  // namespace bivne

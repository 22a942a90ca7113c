#pragma once

#include <span>
#include <vector>

#include "bivne/embedding.hpp"
#include "bivne/substrate.hpp"
#include "bivne/vnr.hpp"

namespace bivne {

struct PriceTable {
  double alpha = 3.0;    // revenue per computing unit
  double kappa = 3.0;    // revenue per wireless channel
  double gamma = 3.0;    // revenue per frequency slot
  double alpha_p = 1.0;  // cost per computing unit
  double kappa_p = 1.0;  // cost per wireless channel
  double gamma_p = 1.0;  // cost per frequency slot

  void check() const;
  bool operator==(const PriceTable&) const = default;
};

struct FragConfig {
  // Residual free runs no longer than this are spectral fragments.
  int xi_max = 2;
  // When false only MACSBs (length >= 2) can be fragments.
  bool count_single_slot = true;

  int min_fragment() const { return count_single_slot ? 1 : 2; }
  bool is_fragment(int run_length) const { return run_length >= min_fragment() && run_length <= xi_max; }

  void check() const;
  bool operator==(const FragConfig&) const = default;
};

// Level of imbalance |C_l/C - W_l/W|.
double loi(const SubstrateNode& node);
double loi_after(const SubstrateNode& node, int comp_add, int chan_add);
// max(loi_after - loi, 0); throws DomainError if the node cannot host vn.
double loi_increase(const SubstrateNode& node, const VirtualNode& vn);

// Slots of the leftover free runs beside [alloc_start, alloc_start+alloc_len-1]
// that become fragments. A host run that is already a fragment yields 0: its
// leftovers were fragment slots before the allocation.
int new_fragment_slots(const SlotMask& occupancy, int alloc_start, int alloc_len, const FragConfig& cfg);

double revenue(const VirtualRequest& vnr, const PriceTable& prices);

// One term of the node cost: (1 + loi increase) * (alpha' C + kappa' W).
double node_cost_term(const SubstrateNode& host, const VirtualNode& vn, const PriceTable& prices);

// placements[i] hosts vnode i; evaluated against the pre-embedding state.
double node_cost(std::span<const NodeId> placements, const SubstrateNetwork& net, const VirtualRequest& vnr,
                 const PriceTable& prices);

// Spectrum cost gamma' * (B + xi) per (route, traversed link), with routes
// evaluated in order on a shadow copy of the occupancy.
double link_cost(std::span<const RouteAssignment> routes, const SubstrateNetwork& net, const VirtualRequest& vnr,
                 const PriceTable& prices, const FragConfig& cfg);

double fitness(const SubstrateNetwork& before, const VirtualRequest& vnr, const EmbeddingSolution& solution,
               const PriceTable& prices, const FragConfig& cfg);

struct Outcome {
  bool accepted = false;
  double revenue = 0.0;
  double node_cost = 0.0;
  double link_cost = 0.0;
};

// Sum over accepted outcomes of (R - C_n - C_e), accumulated in order.
double profit(std::span<const Outcome> outcomes);

}  // namespace bivne

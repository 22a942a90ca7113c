#pragma once

#include <limits>
#include <string>
#include <vector>

#include "bivne/substrate.hpp"
#include "bivne/vnr.hpp"

namespace bivne {

inline constexpr double kInfeasible = std::numeric_limits<double>::infinity();

// One virtual link on one lightpath with an index-aligned slot block.
struct RouteAssignment {
  int vlink = 0;
  SubstratePath path;
  int slot_start = 0;
  int slot_end = 0;

  int slot_count() const { return slot_end - slot_start + 1; }
  bool operator==(const RouteAssignment&) const = default;
};

// Decision variables for one request: placements is x (vnode index -> host),
// routes carries y and z. Rejected solutions carry no placements or routes.
struct EmbeddingSolution {
  int vnr_id = 0;
  bool accepted = false;
  std::vector<NodeId> placements;
  std::vector<RouteAssignment> routes;
  double fitness = kInfeasible;
  std::string reason;

  static EmbeddingSolution rejected(int vnr_id, std::string reason) {
    EmbeddingSolution s;
    s.vnr_id = vnr_id;
    s.reason = std::move(reason);
    return s;
  }

  bool operator==(const EmbeddingSolution&) const = default;
};

// Slot-level form of a solution: each traversed link lists the slot indices
// assigned to the virtual link, so per-link blocks may disagree. This is
// what the validator and the solution dump operate on.
struct LinkSlots {
  LinkId link = 0;
  std::vector<int> slots;
  bool operator==(const LinkSlots&) const = default;
};

struct RawRoute {
  int vlink = 0;
  std::vector<NodeId> nodes;
  std::vector<LinkSlots> links;
  bool operator==(const RawRoute&) const = default;
};

struct RawSolution {
  int vnr_id = 0;
  bool accepted = false;
  std::vector<NodeId> placements;
  std::vector<RawRoute> routes;
  bool operator==(const RawSolution&) const = default;
};

RawSolution expand(const EmbeddingSolution& solution);

// Applies x/y/z to the network after running the C1-C11 validator against
// the current state. Throws RejectionError naming the violated constraints.
void allocate(SubstrateNetwork& net, const VirtualRequest& vnr, const EmbeddingSolution& solution);
void allocate(SubstrateNetwork& net, const VirtualRequest& vnr, const RawSolution& solution);

// Inverse of allocate. Throws DomainError if the solution's resources are
// not currently held.
void release(SubstrateNetwork& net, const VirtualRequest& vnr, const EmbeddingSolution& solution);

}  // namespace bivne

#pragma once

#include <string>
#include <vector>

#include "bivne/embedding.hpp"

namespace bivne {

struct Violation {
  std::string constraint;  // "C1" .. "C11", or "ACCEPT" for a rejected solution carrying state
  std::string detail;
  bool operator==(const Violation&) const = default;
};

// Checks C1-C11 independently against the network state before the request
// was embedded. Violations are data: the returned list is empty when valid.
std::vector<Violation> validate(const SubstrateNetwork& before, const VirtualRequest& vnr,
                                const RawSolution& solution);
std::vector<Violation> validate(const SubstrateNetwork& before, const VirtualRequest& vnr,
                                const EmbeddingSolution& solution);

// Sorted, de-duplicated constraint names.
std::vector<std::string> violated_constraints(const std::vector<Violation>& violations);

}  // namespace bivne

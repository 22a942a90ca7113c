#pragma once

#include <memory>
#include <string>

#include "bivne/embedding.hpp"
#include "bivne/rng.hpp"

namespace bivne {

// Common interface of BiVNE and the baselines. Implementations read the
// network and never modify it; the caller allocates accepted solutions.
class Embedder {
 public:
  virtual ~Embedder() = default;
  virtual std::string name() const = 0;
  virtual EmbeddingSolution embed(const SubstrateNetwork& net, const VirtualRequest& vnr, Rng& rng) = 0;
};

}  // namespace bivne

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>

namespace mgnn {

using NodeId = std::uint32_t;
using LayerId = std::uint32_t;

/// The copy of node `node` living in layer `layer`.
struct ReplicaId {
  NodeId node = 0;
  LayerId layer = 0;

  friend bool operator==(const ReplicaId&, const ReplicaId&) = default;
  friend auto operator<=>(const ReplicaId&, const ReplicaId&) = default;
};

/// Row index of a replica in supra-matrices and node-feature tensors.
/// Layer `l` occupies the contiguous block [l*N, (l+1)*N).
inline std::size_t flatten(ReplicaId r, std::size_t n_nodes) {
  return static_cast<std::size_t>(r.layer) * n_nodes + r.node;
}

inline ReplicaId unflatten(std::size_t index, std::size_t n_nodes) {
  if (n_nodes == 0) {
    throw std::invalid_argument("unflatten: n_nodes must be positive");
  }
  return ReplicaId{static_cast<NodeId>(index % n_nodes), static_cast<LayerId>(index / n_nodes)};
}

}  // namespace mgnn

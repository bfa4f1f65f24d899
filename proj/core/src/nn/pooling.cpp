#include "mgnn/nn/pooling.hpp"

#include <stdexcept>

namespace mgnn {

SoftAttentionPool::SoftAttentionPool(std::size_t in, std::size_t out, ParameterStore& store,
                                     const std::string& prefix, Rng& rng)
    : gate_(in, 1, store, prefix + ".gate", rng), transform_(in, out, store, prefix + ".transform", rng) {}

Tensor SoftAttentionPool::weights(const Tensor& h) const {
  if (h.rank() != 2 || h.rows() == 0) throw std::invalid_argument("SoftAttentionPool: need at least one row");
  const auto one_segment = make_index(std::vector<std::uint32_t>(h.rows(), 0));
  return segment_softmax(gate_.forward(h), one_segment, 1);
}

Tensor SoftAttentionPool::forward(const Tensor& h) const {
  return matmul(transpose(weights(h)), transform_.forward(h));
}

}  // namespace mgnn

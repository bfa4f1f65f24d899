#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "mgnn/tensor/tensor.hpp"

namespace mgnn {

/// Shared, immutable index list (edge endpoints, segment ids, ...). Ops keep
/// a reference for their backward pass.
using IndexArray = std::shared_ptr<const std::vector<std::uint32_t>>;

inline IndexArray make_index(std::vector<std::uint32_t> idx) {
  return std::make_shared<const std::vector<std::uint32_t>>(std::move(idx));
}

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Uniform index in [0, n), n > 0.
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  const auto k = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n));
  return k < n ? k : n - 1;
}

/// Fisher-Yates with uniform_index, so the permutation does not depend on
/// the standard library's distribution implementation.
template <class T>
void shuffle_in_place(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_index(rng, i)]);
}

// Linear algebra -------------------------------------------------------------

Tensor matmul(const Tensor& a, const Tensor& b);
Tensor transpose(const Tensor& a);

// Elementwise ----------------------------------------------------------------

Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& a, double s);
/// a[m x n] + bias broadcast over rows; bias has n elements (any rank).
Tensor add_row_vector(const Tensor& a, const Tensor& bias);

Tensor leaky_relu(const Tensor& x, double slope);
Tensor relu(const Tensor& x);
Tensor elu(const Tensor& x, double alpha = 1.0);
Tensor sigmoid(const Tensor& x);

/// Inverted dropout: zeroes entries with probability p and rescales the
/// survivors by 1/(1-p). Identity when !training or p == 0.
Tensor dropout(const Tensor& x, double p, Rng& rng, bool training);

// Reductions -----------------------------------------------------------------

Tensor sum(const Tensor& x);
Tensor mean(const Tensor& x);

// Structure ------------------------------------------------------------------

Tensor reshape(const Tensor& x, Shape shape);
Tensor concat_cols(const std::vector<Tensor>& parts);
Tensor concat_rows(const std::vector<Tensor>& parts);
Tensor slice_rows(const Tensor& x, std::size_t begin, std::size_t count);
Tensor slice_cols(const Tensor& x, std::size_t begin, std::size_t count);

/// out[e] = x[idx[e]] row-wise.
Tensor gather_rows(const Tensor& x, const IndexArray& idx);
/// out[idx[e]] += x[e] row-wise, out has n_out rows.
Tensor scatter_add_rows(const Tensor& x, const IndexArray& idx, std::size_t n_out);

/// Regroups replica rows [N*L x F] (layer-major) into node rows [N x L*F]
/// with the L replica vectors concatenated in layer order.
Tensor replicas_to_nodes(const Tensor& h, std::size_t n_nodes, std::size_t n_layers);

// Attention ------------------------------------------------------------------

/// Softmax of each column of scores [E x H] (or [E]) within groups of rows
/// sharing a segment id. Max-subtracted per segment.
Tensor segment_softmax(const Tensor& scores, const IndexArray& segment, std::size_t n_segments);

/// Per-head dot products: z [n x H*F], att [H x F] -> [n x H].
Tensor head_dot(const Tensor& z, const Tensor& att);

/// out[dst[e], h, :] += alpha[e, h] * z[src[e], h, :] with z viewed as
/// [n x H x F]; alpha is [E x H]; output [n_out x H*F].
Tensor attention_aggregate(const Tensor& alpha, const Tensor& z, const IndexArray& src,
                           const IndexArray& dst, std::size_t n_out);

/// Mean over heads: z [n x H*F] -> [n x F].
Tensor head_mean(const Tensor& z, std::size_t heads);

}  // namespace mgnn

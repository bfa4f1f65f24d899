#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mgnn/nn/aggregator.hpp"
#include "mgnn/nn/pooling.hpp"
#include "mgnn/nn/supra_layer.hpp"

namespace mgnn {

/// sigmoid(mlp([r_i || r_j])) row-wise; r_i, r_j are [P x F].
Tensor link_score(const Tensor& r_i, const Tensor& r_j, const Mlp& mlp);

/// Supra-layer stack, then the L replicas of every node concatenated into an
/// MLP producing class logits [N x classes].
class NodeClassifier {
 public:
  struct Config {
    SupraStackConfig stack;
    std::vector<std::size_t> readout_hidden;
    std::size_t n_classes = 2;
  };

  NodeClassifier(const Config& cfg, ParameterStore& store, Rng& rng);

  Tensor logits(const Tensor& x, const SupraGraphs& g, bool training, Rng& rng) const;

  const Config& config() const { return cfg_; }

 private:
  Config cfg_;
  SupraStack stack_;
  Aggregator readout_;
};

/// Supra-layer stack; a pair (i, j) of the target layer is scored from the
/// replica embeddings of i and j in that layer.
class LinkPredictor {
 public:
  struct Config {
    SupraStackConfig stack;
    std::vector<std::size_t> score_hidden;
  };

  LinkPredictor(const Config& cfg, ParameterStore& store, Rng& rng);

  Tensor embed(const Tensor& x, const SupraGraphs& g, bool training, Rng& rng) const;
  /// Pre-sigmoid scores [P x 1]; `rows_i`/`rows_j` index rows of `h`.
  Tensor pair_logits(const Tensor& h, const IndexArray& rows_i, const IndexArray& rows_j) const;

  const Mlp& scorer() const { return scorer_; }
  const Config& config() const { return cfg_; }

 private:
  Config cfg_;
  SupraStack stack_;
  Mlp scorer_;
};

/// Supra-layer stack, soft-attention pooling over all replicas, then a
/// linear map to one sigmoid output [1 x 1].
class GraphRegressor {
 public:
  struct Config {
    SupraStackConfig stack;
    std::size_t pool_width = 16;
  };

  GraphRegressor(const Config& cfg, ParameterStore& store, Rng& rng);

  Tensor predict(const Tensor& x, const SupraGraphs& g, bool training, Rng& rng) const;

  const Config& config() const { return cfg_; }

 private:
  Config cfg_;
  SupraStack stack_;
  SoftAttentionPool pool_;
  Linear head_;
};

}  // namespace mgnn

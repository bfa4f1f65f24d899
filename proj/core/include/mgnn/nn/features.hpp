#pragma once

#include <cstddef>
#include <string_view>

#include "mgnn/mlgraph/multilayer_network.hpp"
#include "mgnn/tensor/tensor.hpp"

namespace mgnn {

/*
  Replica input features.

    ones      x = 1 for every replica.
    degree    x = [1, ln(1+in), ln(1+out), ln(1+inter)], the intra in/out
              degree in the replica's own layer and its inter-layer degree.
    provided  the network's own feature matrix.

  Under softmax attention every aggregation is a convex combination, so with
  `ones` all replicas keep identical embeddings at every depth; `degree` is
  the smallest structural signal that breaks this symmetry.
*/
enum class InputFeatures { ones, degree, provided };

std::string_view to_string(InputFeatures f);
InputFeatures parse_input_features(std::string_view name);

std::size_t input_width(InputFeatures mode, const MultilayerNetwork& net);
/// [N*L x width], row flatten(r, N) for replica r.
Tensor input_features(const MultilayerNetwork& net, InputFeatures mode);

}  // namespace mgnn

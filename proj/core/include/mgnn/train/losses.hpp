#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mgnn/tensor/tensor.hpp"

namespace mgnn {

/*
  Class-weighted softmax cross-entropy over the rows of logits [n x C]:

    loss = sum_i w[y_i] * -log softmax(logits_i)[y_i]  /  sum_i w[y_i]

  Empty `class_weights` means unit weights (plain mean).
*/
Tensor weighted_cross_entropy(const Tensor& logits, std::span<const std::uint32_t> labels,
                              std::span<const double> class_weights = {});

/// n / (C * n_c) per class; classes absent from `labels` get 1.
std::vector<double> inverse_frequency_weights(std::span<const std::uint32_t> labels, std::size_t n_classes);

/// Mean squared error.
Tensor mse_loss(const Tensor& pred, std::span<const double> target);

/// Mean binary cross-entropy on probabilities in (0, 1).
Tensor bce_loss(const Tensor& prob, std::span<const double> target);

/// Same loss computed from pre-sigmoid scores, stable for large |z|.
Tensor bce_with_logits(const Tensor& logits, std::span<const double> target);

}  // namespace mgnn

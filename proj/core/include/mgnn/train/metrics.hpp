#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mgnn/tensor/tensor.hpp"

namespace mgnn {

/// Probability that a random positive outranks a random negative, ties
/// counted 1/2 (average ranks). Throws if either class is absent.
double roc_auc(std::span<const double> scores, std::span<const int> labels);

struct BinaryMetrics {
  double accuracy = 0.0;
  double auc = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

/// Labels in {0, 1}; a score >= threshold predicts 1. Precision (and F1) is
/// 0 when nothing is predicted positive.
BinaryMetrics binary_metrics(std::span<const double> scores, std::span<const int> labels, double threshold = 0.5);

struct MulticlassMetrics {
  double accuracy = 0.0;
  /// Unweighted mean of per-class F1 over classes that occur in either the
  /// labels or the predictions.
  double macro_f1 = 0.0;
};

MulticlassMetrics multiclass_metrics(std::span<const std::uint32_t> predicted, std::span<const std::uint32_t> labels,
                                     std::size_t n_classes);

/// Row-wise argmax of a rank-2 tensor (first maximum on ties).
std::vector<std::uint32_t> argmax_rows(const Tensor& logits);

}  // namespace mgnn

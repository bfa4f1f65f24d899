#include "mgnn/train/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mgnn {

double roc_auc(std::span<const double> scores, std::span<const int> labels) {
  if (scores.size() != labels.size()) throw std::invalid_argument("roc_auc: size mismatch");
  std::size_t n_pos = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != 0 && labels[i] != 1) throw std::invalid_argument("roc_auc: labels must be 0 or 1");
    if (std::isnan(scores[i])) throw std::invalid_argument("roc_auc: NaN score");
    n_pos += static_cast<std::size_t>(labels[i]);
  }
  const std::size_t n_neg = labels.size() - n_pos;
  if (n_pos == 0 || n_neg == 0) throw std::invalid_argument("roc_auc: undefined when one class is absent");

  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  double pos_rank_sum = 0.0;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && scores[order[j]] == scores[order[i]]) ++j;
    const double avg_rank = 0.5 * static_cast<double>(i + 1 + j);  // ranks i+1 .. j
    for (std::size_t k = i; k < j; ++k) {
      if (labels[order[k]] == 1) pos_rank_sum += avg_rank;
    }
    i = j;
  }
  const double p = static_cast<double>(n_pos);
  return (pos_rank_sum - p * (p + 1.0) / 2.0) / (p * static_cast<double>(n_neg));
}

BinaryMetrics binary_metrics(std::span<const double> scores, std::span<const int> labels, double threshold) {
  if (scores.size() != labels.size() || scores.empty()) throw std::invalid_argument("binary_metrics: bad input");
  double tp = 0, fp = 0, tn = 0, fn = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const bool pred = scores[i] >= threshold;
    if (labels[i] == 1) (pred ? tp : fn) += 1.0;
    else (pred ? fp : tn) += 1.0;
  }
  BinaryMetrics m;
  m.accuracy = (tp + tn) / static_cast<double>(scores.size());
  m.auc = roc_auc(scores, labels);
  m.precision = tp + fp > 0 ? tp / (tp + fp) : 0.0;
  m.recall = tp + fn > 0 ? tp / (tp + fn) : 0.0;
  m.f1 = m.precision + m.recall > 0 ? 2.0 * m.precision * m.recall / (m.precision + m.recall) : 0.0;
  return m;
}

MulticlassMetrics multiclass_metrics(std::span<const std::uint32_t> predicted, std::span<const std::uint32_t> labels,
                                     std::size_t n_classes) {
  if (predicted.size() != labels.size() || labels.empty()) {
    throw std::invalid_argument("multiclass_metrics: bad input");
  }
  std::vector<double> tp(n_classes, 0), fp(n_classes, 0), fn(n_classes, 0);
  double correct = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (predicted[i] >= n_classes || labels[i] >= n_classes) {
      throw std::out_of_range("multiclass_metrics: class id out of range");
    }
    if (predicted[i] == labels[i]) {
      correct += 1;
      tp[labels[i]] += 1;
    } else {
      fp[predicted[i]] += 1;
      fn[labels[i]] += 1;
    }
  }
  MulticlassMetrics m;
  m.accuracy = correct / static_cast<double>(labels.size());
  double f1_sum = 0.0;
  std::size_t seen = 0;
  for (std::size_t k = 0; k < n_classes; ++k) {
    if (tp[k] + fp[k] + fn[k] == 0) continue;
    ++seen;
    f1_sum += 2.0 * tp[k] / (2.0 * tp[k] + fp[k] + fn[k]);
  }
  m.macro_f1 = f1_sum / static_cast<double>(seen);
  return m;
}

std::vector<std::uint32_t> argmax_rows(const Tensor& logits) {
  const std::size_t n = logits.rows();
  const std::size_t c = logits.cols();
  auto v = logits.values();
  std::vector<std::uint32_t> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = v.data() + i * c;
    out[i] = static_cast<std::uint32_t>(std::max_element(row, row + c) - row);
  }
  return out;
}

}  // namespace mgnn
